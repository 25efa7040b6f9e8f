#include "scrollcurves/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "scrollcurves/chow.hpp"
#include "scrollcurves/cohom.hpp"
#include "scrollcurves/curves.hpp"
#include "scrollcurves/errors.hpp"
#include "scrollcurves/projection.hpp"
#include "scrollcurves/ruled_cubic.hpp"

namespace scrollcurves::cli {
namespace {

void require_bound(Int value, const char* name) {
  if (value < -kInputBound || value > kInputBound) {
    throw InvalidInput(std::string(name) + " = " + std::to_string(value) + " is outside [-" +
                       std::to_string(kInputBound) + ", " + std::to_string(kInputBound) + "]");
  }
}

ScrollSurface make_surface(Int a, Int b) {
  require_bound(a, "a");
  require_bound(b, "b");
  if (a < 1 || b < 1) throw InvalidInput("scroll S(a,b) needs a, b >= 1");
  return ScrollSurface(a, b);
}

Json class_json(DivisorClass D) { return Json::array({D.c, D.d}); }

Json invariants_json(const ProjectionInvariants& p) {
  return Json{{"deg_N2", p.deg_N2},
              {"genus_N2", p.genus_N2},
              {"triple_points", p.triple_points},
              {"pinch_points", p.pinch_points},
              {"surface_family_dim", p.surface_family_dim}};
}

ReportTable curve_table(const CurveTables& t) {
  ReportTable table{"curve", {"n", "h0_ideal", "h1_ideal", "h1_structure"}, {}};
  for (Int n = t.h0_ideal.n_min; n <= t.h0_ideal.n_max; ++n) {
    table.rows.push_back({n, t.h0_ideal.at(n), t.h1_ideal.at(n), t.h1_structure.at(n)});
  }
  return table;
}

bool table_all_zero(const FunctionTable& t) {
  for (Int v : t.values) {
    if (v != 0) return false;
  }
  return true;
}

Json apic_json(const cubic::APicClass& t) {
  return Json{{"class", t.to_string()},
              {"contains_preserved", cubic::contains_preserved(t)},
              {"effective", cubic::is_effective(t)}};
}

cubic::APicClass parse_apic(const std::string& text, const char* name) {
  cubic::APicClass t = cubic::APicClass::parse(text);
  require_bound(t.c, name);
  require_bound(t.d, name);
  return t;
}

}  // namespace

Report cmd_surface(Int a, Int b) {
  Report r;
  r.command = "surface";
  r.inputs = Json{{"a", a}, {"b", b}};
  ScrollSurface S = make_surface(a, b);
  if (S.degree() < 3) throw InvalidInput("S(1,1) is a quadric; its general projection is not birational onto a surface with a double curve");

  const ProjectionInvariants generic = generic_invariants(S);
  const ProjectionInvariants closed = closed_form_invariants(S.a(), S.b());
  if (!(generic == closed)) throw ConsistencyError("generic invariants disagree with the closed forms");

  r.results["deg_X"] = generic.deg_X;
  r.results["m2_class"] = class_json(generic.m2_class);
  r.results["deg_N2"] = generic.deg_N2;
  r.results["genus_N2"] = generic.genus_N2;
  r.results["triple_points"] = generic.triple_points;
  r.results["pinch_points"] = generic.pinch_points;
  r.results["surface_family_dim"] = generic.surface_family_dim;
  r.results["closed_form"] = invariants_json(closed);
  r.results["generic_equals_closed_form"] = true;
  return r;
}

Report cmd_cohomology(Int a, Int b, Int c, Int d) {
  Report r;
  r.command = "cohom";
  r.inputs = Json{{"a", a}, {"b", b}, {"c", c}, {"d", d}};
  ScrollSurface S = make_surface(a, b);
  require_bound(c, "c");
  require_bound(d, "d");
  const DivisorClass D{c, d};

  const CohomologyVector v = cohomology(S, D);
  r.results["h0"] = v.h0;
  r.results["h1"] = v.h1;
  r.results["h2"] = v.h2;
  r.results["chi"] = v.chi;
  r.results["riemann_roch_chi"] = riemann_roch_chi(S, D);
  const bool effective = is_effective(S, D);
  r.results["effective"] = effective;
  r.results["natural_cohomology"] = effective ? Json(has_natural_cohomology(S, D)) : Json();
  if (c >= 0 && c <= kOracleMaxC && d <= kOracleMaxD) {
    const Int oracle = h0_oracle(S, D);
    if (oracle != v.h0) throw ConsistencyError("monomial count disagrees with h0");
    r.results["oracle_h0"] = oracle;
    r.results["oracle_agrees"] = true;
  } else {
    r.results["oracle_h0"] = nullptr;
    r.results["oracle_agrees"] = nullptr;
    if (c >= 0) r.warnings.push_back("monomial oracle skipped: class beyond enumeration bounds");
  }
  return r;
}

Report cmd_curve(Int a, Int b, Int c, Int d, std::optional<Int> m, std::optional<Int> n_max) {
  Report r;
  r.command = "curve";
  r.inputs = Json{{"a", a}, {"b", b}, {"c", c}, {"d", d}};
  r.inputs["m"] = m ? Json(*m) : Json();
  r.inputs["nmax"] = n_max ? Json(*n_max) : Json();
  ScrollSurface S = make_surface(a, b);
  require_bound(c, "c");
  require_bound(d, "d");
  if (m) require_bound(*m, "m");
  if (n_max) {
    require_bound(*n_max, "nmax");
    if (*n_max < 0) throw InvalidInput("nmax must be >= 0");
  }
  const DivisorClass C{c, d};
  if (!smooth_class(S, C)) {
    throw PreconditionError("smooth class: " + C.to_string() + " contains no smooth irreducible curve on S(" +
                            std::to_string(S.a()) + "," + std::to_string(S.b()) + ")");
  }

  const Rational linkage = preserved_linkage_degree(S, C);
  Int m_used = 0;
  if (m) {
    m_used = *m;
    if (!(linkage == Rational(m_used))) {
      r.warnings.push_back("m = " + std::to_string(m_used) + " differs from the preserved linkage degree " +
                           linkage.to_string() + "; tables assume linkage by a surface of degree m");
    }
  } else {
    if (!linkage.is_integer() || linkage <= Rational(0)) {
      throw PreconditionError("linkage degree: 2 C.M2 / h.M2 = " + linkage.to_string() +
                              " is not a positive integer; pass --m");
    }
    m_used = linkage.to_integer();
  }
  const Int window = n_max ? *n_max : default_table_max(S, m_used);
  if (window < 0) throw PreconditionError("table window [0, " + std::to_string(window) + "] is empty");
  if (window >= kMaxTableRows) throw InvalidInput("table window exceeds " + std::to_string(kMaxTableRows) + " rows; pass a smaller --nmax");

  const CurveClass cc = CurveClass::of(S, C);
  const NormalBundleDims normal = normal_bundle_dims(S, C);
  const FamilyGap gap = family_gap(S, C);
  const CurveTables tables = curve_tables(S, C, m_used, window);

  r.results["degree"] = cc.degree;
  r.results["genus"] = cc.genus;
  r.results["m"] = m_used;
  r.results["m_source"] = m ? "given" : "linkage";
  r.results["linkage_degree"] = linkage.to_string();
  r.results["normal_h0"] = normal.h0;
  r.results["normal_h1"] = normal.h1;
  r.results["curve_family_dim"] = gap.curve_family_dim;
  r.results["family_gap"] = gap.gap;
  r.results["surface_family_dim"] = surface_family_dimension(S);
  r.results["rao_zero_on_window"] = table_all_zero(tables.h1_ideal);
  r.tables.push_back(curve_table(tables));

  if (c >= 4 && d >= checked::sub(checked::add(checked::mul(c, S.e()), checked::mul(4, S.a())), 1)) {
    const Int dim_linear_system = checked::sub(cohomology(S, C).h0, 1);
    const Int expected_h0 = checked::add(dim_linear_system, checked::sub(checked::mul(6, S.degree()), 3));
    if (normal.h0 != expected_h0) throw ConsistencyError("h0 of the normal bundle disagrees with dim|C| + 6a + 6b - 3");
    r.warnings.push_back("normal bundle: h0 = dim|C| + 6a + 6b - 3 and h1 = h0 - 4 deg C, as forced by chi(N) = 4 deg C");
  }
  return r;
}

Report cmd_cubic_scan(Int c_max, Int d_max, bool include_rulings) {
  Report r;
  r.command = "cubic scan";
  r.inputs = Json{{"cmax", c_max}, {"dmax", d_max}, {"rulings", include_rulings}};
  if (c_max < 0 || d_max < 0 || c_max > kMaxScanBound || d_max > kMaxScanBound) {
    throw InvalidInput("scan bounds must lie in [0, " + std::to_string(kMaxScanBound) + "]");
  }
  const std::vector<cubic::RankWitness> witnesses = cubic::maximal_rank_scan(c_max, d_max, include_rulings);

  Json classes = Json::array();
  Json acm = Json::array();
  ReportTable table{"witness", {"c", "d", "n", "h0_ideal", "h1_ideal", "h1_structure"}, {}};
  bool has_direct = false;
  for (const cubic::RankWitness& w : witnesses) {
    classes.push_back(class_json(w.cls));
    if (w.acm) acm.push_back(class_json(w.cls));
    has_direct = has_direct || w.direct_table;
    const CurveTables& t = w.tables;
    for (Int n = t.h0_ideal.n_min; n <= t.h0_ideal.n_max; ++n) {
      table.rows.push_back({w.cls.c, w.cls.d, n, t.h0_ideal.at(n), t.h1_ideal.at(n), t.h1_structure.at(n)});
    }
  }
  r.results["count"] = static_cast<Int>(witnesses.size());
  r.results["maximal_rank_classes"] = classes;
  r.results["acm_classes"] = acm;
  // N2 is not almost Cartier, so it has no (c,d,alpha) coordinates.
  r.results["special_classes"] = Json::array({"N2"});
  r.tables.push_back(std::move(table));
  if (has_direct) r.warnings.push_back("lines are tabulated directly instead of through linkage");
  return r;
}

Report cmd_cubic_apic(Int c, Int d, const std::vector<std::string>& alpha_entries) {
  Report r;
  r.command = "cubic apic";
  std::string joined;
  for (std::size_t i = 0; i < alpha_entries.size(); ++i) joined += (i ? "," : "") + alpha_entries[i];
  r.inputs = Json{{"c", c}, {"d", d}, {"alpha", joined}};
  require_bound(c, "c");
  require_bound(d, "d");
  cubic::APicClass t{c, d, cubic::PointDivisor::parse(joined)};
  if (!t.parity_ok()) {
    throw InvalidInput("parity: d = " + std::to_string(d) + " and deg alpha = " + std::to_string(t.alpha.degree()) +
                       " differ mod 2");
  }
  const cubic::PointDivisor reduced = cubic::reduce_alpha(t.alpha);
  r.results["class"] = t.to_string();
  r.results["parity_ok"] = true;
  r.results["alpha_reduced"] = reduced.to_string();
  r.results["alpha_reduced_degree"] = reduced.degree();
  r.results["effective"] = cubic::is_effective(t);
  r.results["contains_preserved"] = cubic::contains_preserved(t);
  return r;
}

Report cmd_cubic_link(const std::string& t1_text, const std::string& t2_text, Int m) {
  Report r;
  r.command = "cubic link";
  r.inputs = Json{{"t1", t1_text}, {"t2", t2_text}, {"m", m}};
  require_bound(m, "m");
  const cubic::APicClass t1 = parse_apic(t1_text, "t1");
  const cubic::APicClass t2 = parse_apic(t2_text, "t2");
  r.results["linked"] = cubic::are_linked(t1, t2, m);
  r.results["class_sum"] = class_json(DivisorClass{t1.c, t1.d} + DivisorClass{t2.c, t2.d});
  r.results["m_h"] = class_json(m * cubic::scroll().hyperplane());
  r.results["alpha_sum_reduced"] = cubic::reduce_alpha(t1.alpha + t2.alpha).to_string();
  r.results["t1"] = apic_json(t1);
  r.results["t2"] = apic_json(t2);
  return r;
}

Report cmd_cubic_residual(const std::string& t_text) {
  Report r;
  r.command = "cubic residual";
  r.inputs = Json{{"t", t_text}};
  const cubic::APicClass t = parse_apic(t_text, "t");
  const cubic::APicClass residual = cubic::preserved_link(t);
  r.results["m"] = t.d;
  r.results["residual"] = residual.to_string();
  r.results["linked"] = cubic::are_linked(t, residual, t.d);
  r.results["residual_effective"] = cubic::is_effective(residual);
  r.results["residual_contains_preserved"] = cubic::contains_preserved(residual);
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curves on rational normal scrolls and their general projections to P^3", "scrollcurves"};
  app.require_subcommand(1);
  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  std::function<Report()> action;

  Int a = 0, b = 0, c = 0, d = 0;
  auto* surface = app.add_subcommand("surface", "Invariants of a general projection of S(a,b) to P^3")->fallthrough();
  surface->add_option("a", a)->required();
  surface->add_option("b", b)->required();
  surface->callback([&] { action = [&] { return cmd_surface(a, b); }; });

  auto* cohom = app.add_subcommand("cohom", "Cohomology of O_S(c eta + d f) on S(a,b)")->fallthrough();
  for (auto [name, ref] : {std::pair{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}) cohom->add_option(name, *ref)->required();
  cohom->callback([&] { action = [&] { return cmd_cohomology(a, b, c, d); }; });

  std::optional<Int> m_opt;
  std::optional<Int> nmax_opt;
  auto* curve = app.add_subcommand("curve", "Projected curve of class c eta + d f on S(a,b)")->fallthrough();
  for (auto [name, ref] : {std::pair{"a", &a}, {"b", &b}, {"c", &c}, {"d", &d}}) curve->add_option(name, *ref)->required();
  curve->add_option("--m", m_opt, "Degree of the linking surface");
  curve->add_option("--nmax", nmax_opt, "Last n of the tables");
  curve->callback([&] { action = [&] { return cmd_curve(a, b, c, d, m_opt, nmax_opt); }; });

  auto* cubic_cmd = app.add_subcommand("cubic", "Almost-Cartier divisors on the ruled cubic surface")->fallthrough();
  cubic_cmd->require_subcommand(1);

  Int c_max = 8, d_max = 20;
  bool rulings = false;
  auto* scan = cubic_cmd->add_subcommand("scan", "Smooth classes on S(1,2) whose projections have maximal rank")->fallthrough();
  scan->add_option("--cmax", c_max)->capture_default_str();
  scan->add_option("--dmax", d_max)->capture_default_str();
  scan->add_flag("--rulings", rulings, "Include the ruling class (0,1)");
  scan->callback([&] { action = [&] { return cmd_cubic_scan(c_max, d_max, rulings); }; });

  std::vector<std::string> alpha;
  auto* apic = cubic_cmd->add_subcommand("apic", "Parity, reduction, effectiveness of a triple (c,d,alpha)")->fallthrough();
  apic->add_option("c", c)->required();
  apic->add_option("d", d)->required();
  apic->add_option("alpha", alpha, "Points of M2: integers, p/q, inf, (u); '-' negates a coefficient");
  apic->callback([&] { action = [&] { return cmd_cubic_apic(c, d, alpha); }; });

  std::string t1, t2;
  Int m_link = 0;
  auto* link = cubic_cmd->add_subcommand("link", "Check that two triples are linked by O_X(m)")->fallthrough();
  link->add_option("t1", t1)->required();
  link->add_option("t2", t2)->required();
  link->add_option("m", m_link)->required();
  link->callback([&] { action = [&] { return cmd_cubic_link(t1, t2, m_link); }; });

  auto* residual = cubic_cmd->add_subcommand("residual", "Preserved curve linked to a triple by O_X(d)")->fallthrough();
  residual->add_option("t", t1)->required();
  residual->callback([&] { action = [&] { return cmd_cubic_residual(t1); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  const Format format = format_name == "csv" ? Format::Csv : format_name == "json" ? Format::Json : Format::Text;
  try {
    out << render(action(), format);
    return kExitOk;
  } catch (const InvalidInput& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const OverflowError& e) {
    err << "error: overflow: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const PreconditionError& e) {
    err << "error: precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ConsistencyError& e) {
    err << "error: internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  }
}

}  // namespace scrollcurves::cli
