#include "scrollcurves/ruled_cubic.hpp"

#include <algorithm>
#include <cctype>

#include "scrollcurves/cohom.hpp"

namespace scrollcurves::cubic {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(' || s[i] == '{') ++depth;
    if (s[i] == ')' || s[i] == '}') --depth;
    if (s[i] == ',' && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

void require_parity(const APicClass& t) {
  if (!t.parity_ok()) {
    throw InvalidInput("parity violation: d = " + std::to_string(t.d) + " but deg alpha = " +
                       std::to_string(t.alpha.degree()) + " in " + t.to_string());
  }
}

CurveTables line_tables(Int n_max) {
  CurveTables t;
  for (FunctionTable* table : {&t.h0_ideal, &t.h1_ideal, &t.h1_structure}) {
    table->n_min = 0;
    table->n_max = n_max;
  }
  for (Int n = 0; n <= n_max; ++n) {
    // a line is cut out by two linear forms: h^0(O_L(n)) = n + 1, h^1(I_L(n)) = 0
    t.h0_ideal.values.push_back(checked::sub(h0_p3(n), n + 1));
    t.h1_ideal.values.push_back(0);
    t.h1_structure.values.push_back(0);
  }
  return t;
}

}  // namespace

ScrollSurface scroll() { return ScrollSurface(1, 2); }

// --- M2Point ---------------------------------------------------------------

const Rational& M2Point::parameter() const {
  if (infinite_) throw PreconditionError("the point at infinity has no finite parameter");
  return u_;
}

M2Point M2Point::involution() const { return infinite_ ? *this : at(-u_); }

std::string M2Point::to_string() const {
  if (infinite_) return "inf";
  if (u_ < Rational(0)) return "(" + u_.to_string() + ")";
  return u_.to_string();
}

M2Point M2Point::parse(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
    if (text == "inf" || text == "+inf" || text == "-inf") return infinity();
    return at(Rational::parse(text));
  }
  if (text == "inf") return infinity();
  if (text.empty() || text.front() == '-') {
    throw InvalidInput("malformed point of M2: '" + std::string(text) + "'");
  }
  return at(Rational::parse(text));
}

std::strong_ordering operator<=>(const M2Point& x, const M2Point& y) {
  if (x.infinite_ != y.infinite_) return x.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (x.infinite_) return std::strong_ordering::equal;
  return x.u_ <=> y.u_;
}

// --- PointDivisor ------------------------------------------------------------

PointDivisor::PointDivisor(std::initializer_list<M2Point> points) {
  for (const M2Point& p : points) add(p);
}

void PointDivisor::add(const M2Point& p, Int multiplicity) {
  if (multiplicity == 0) return;
  Int& slot = terms_[p];
  slot = checked::add(slot, multiplicity);
  if (slot == 0) terms_.erase(p);
}

Int PointDivisor::multiplicity(const M2Point& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

Int PointDivisor::degree() const {
  Int total = 0;
  for (const auto& [p, k] : terms_) total = checked::add(total, k);
  return total;
}

bool PointDivisor::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& term) { return term.second > 0; });
}

PointDivisor PointDivisor::involution() const {
  PointDivisor out;
  for (const auto& [p, k] : terms_) out.add(p.involution(), k);
  return out;
}

PointDivisor operator+(const PointDivisor& x, const PointDivisor& y) {
  PointDivisor out = x;
  for (const auto& [p, k] : y.terms_) out.add(p, k);
  return out;
}

std::string PointDivisor::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [p, k] : terms_) {
    const Int copies = k > 0 ? k : -k;
    for (Int i = 0; i < copies; ++i) {
      if (!first) out += ",";
      first = false;
      if (k < 0) out += "-";
      out += p.to_string();
    }
  }
  return out + "}";
}

PointDivisor PointDivisor::parse(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw InvalidInput("unbalanced braces in '" + std::string(text) + "'");
    text = trim(text.substr(1, text.size() - 2));
  }
  PointDivisor out;
  if (text.empty()) return out;
  for (std::string_view entry : split_commas(text)) {
    if (entry.empty()) throw InvalidInput("empty entry in point list");
    Int sign = 1;
    if (entry.front() == '-') {
      sign = -1;
      entry = trim(entry.substr(1));
    } else if (entry.front() == '+') {
      entry = trim(entry.substr(1));
    }
    out.add(M2Point::parse(entry), sign);
  }
  return out;
}

PointDivisor reduce_alpha(const PointDivisor& alpha) {
  std::map<M2Point, Int> positive;
  for (const auto& [p, k] : alpha.terms()) {
    if (k > 0) {
      positive[p] = checked::add(positive[p], k);
    } else {
      // -Q is equivalent to +sigma(Q) modulo the pullback of pi(Q)
      const M2Point q = p.involution();
      positive[q] = checked::add(positive[q], -k);
    }
  }
  PointDivisor reduced;
  for (const auto& [p, k] : positive) {
    if (p.is_fixed()) {
      reduced.add(p, k % 2);
      continue;
    }
    const M2Point partner = p.involution();
    auto it = positive.find(partner);
    const Int paired = it == positive.end() ? 0 : std::min(k, it->second);
    reduced.add(p, k - paired);
  }
  return reduced;
}

// --- APicClass ---------------------------------------------------------------

bool APicClass::parity_ok() const {
  const Int diff = checked::sub(d, alpha.degree());
  return diff % 2 == 0;
}

std::string APicClass::to_string() const {
  return "(" + std::to_string(c) + "," + std::to_string(d) + "," + alpha.to_string() + ")";
}

APicClass APicClass::parse(std::string_view text) {
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  const std::vector<std::string_view> parts = split_commas(text);
  if (parts.size() != 3 && parts.size() != 2) {
    throw InvalidInput("expected 'c,d,{alpha}', got '" + std::string(text) + "'");
  }
  auto parse_coordinate = [](std::string_view s) {
    const Rational r = Rational::parse(s);
    if (!r.is_integer()) throw InvalidInput("class coordinate must be an integer: '" + std::string(s) + "'");
    return r.num();
  };
  APicClass t;
  t.c = parse_coordinate(parts[0]);
  t.d = parse_coordinate(parts[1]);
  if (parts.size() == 3) t.alpha = PointDivisor::parse(parts[2]);
  return t;
}

bool is_effective(const APicClass& t) {
  require_parity(t);
  const PointDivisor reduced = reduce_alpha(t.alpha);
  if (t.c > 0 && t.d > 0) return true;
  if (t.d == 0 && reduced.is_zero() && t.c > 0) return true;
  return t.c == 0 && t.d > 0 && reduced.degree() <= t.d;
}

bool contains_preserved(const APicClass& t) {
  require_parity(t);
  const PointDivisor reduced = reduce_alpha(t.alpha);
  if (t.c > 0 && t.d > 0) return reduced.degree() == t.d;
  if (t.d == 0 && reduced.is_zero() && t.c > 0) return true;
  return t.c == 0 && t.d > 0 && reduced.degree() == t.d;
}

bool are_linked(const APicClass& t1, const APicClass& t2, Int m) {
  if (m <= 0) throw PreconditionError("linkage needs a positive degree m, got " + std::to_string(m));
  require_parity(t1);
  require_parity(t2);
  // h = eta + 2f on S(1,2)
  const DivisorClass total = DivisorClass{t1.c, t1.d} + DivisorClass{t2.c, t2.d};
  if (total != m * scroll().hyperplane()) return false;
  return reduce_alpha(t1.alpha + t2.alpha).is_zero();
}

APicClass preserved_link(const APicClass& t) {
  require_parity(t);
  const DivisorClass cls{t.c, t.d};
  if (cls == DivisorClass::eta()) {
    throw PreconditionError("the (-1)-curve eta is not linked to a preserved curve");
  }
  if (!smooth_class(scroll(), cls)) {
    throw PreconditionError("not a smooth curve class on S(1,2): " + cls.to_string());
  }
  if (!contains_preserved(t)) {
    throw PreconditionError("a smooth curve meets M2 in d points without involution pairs; " +
                            t.to_string() + " does not");
  }
  return APicClass{checked::sub(t.d, t.c), t.d, t.alpha.involution()};
}

// --- maximal rank ------------------------------------------------------------

Int classify_window_max(DivisorClass cls) { return checked::add(checked::add(cls.c, cls.d), 4); }

RankWitness maximal_rank_classify(Int c, Int d) {
  const ScrollSurface S = scroll();
  const DivisorClass cls{c, d};
  if (!smooth_class(S, cls)) {
    throw PreconditionError("not a smooth curve class on S(1,2): " + cls.to_string());
  }
  RankWitness w;
  w.cls = cls;
  const Int n_max = classify_window_max(cls);
  if (degree_in_p3(S, cls) == 1) {
    w.direct_table = true;
    w.tables = line_tables(n_max);
  } else {
    // C~.M2 = d and h.M2 = 2 on S(1,2), so a smooth curve is linked by O_X(d)
    w.m = preserved_linkage_degree(S, cls).to_integer();
    if (w.m != d) throw ConsistencyError("linkage degree of " + cls.to_string() + " is not d");
    w.tables = curve_tables(S, cls, w.m, n_max);
    const auto& rao = w.tables.h1_ideal.values;
    if (!std::all_of(rao.end() - 3, rao.end(), [](Int v) { return v == 0; })) {
      throw ConsistencyError("Rao function of " + cls.to_string() + " does not vanish at the window end");
    }
  }
  w.acm = true;
  for (Int n = 0; n <= n_max; ++n) {
    const Int h0 = w.tables.h0_ideal.at(n);
    const Int h1 = w.tables.h1_ideal.at(n);
    if (h1 != 0) w.acm = false;
    if (h0 != 0 && h1 != 0 && !w.first_failure) w.first_failure = n;
  }
  w.verdict = w.first_failure ? RankVerdict::NotMaximalRank : RankVerdict::MaximalRank;
  return w;
}

std::vector<RankWitness> maximal_rank_scan(Int c_max, Int d_max, bool include_rulings) {
  if (c_max < 0 || d_max < 0) throw PreconditionError("scan bounds must be nonnegative");
  const ScrollSurface S = scroll();
  std::vector<RankWitness> found;
  if (include_rulings && d_max >= 1) {
    RankWitness w = maximal_rank_classify(0, 1);
    if (w.verdict == RankVerdict::MaximalRank) found.push_back(std::move(w));
  }
  for (Int c = 1; c <= c_max; ++c) {
    for (Int d = 0; d <= d_max; ++d) {
      if (!smooth_class(S, {c, d})) continue;
      RankWitness w = maximal_rank_classify(c, d);
      if (w.verdict == RankVerdict::MaximalRank) found.push_back(std::move(w));
    }
  }
  return found;
}

std::vector<DivisorClass> classes_of(const std::vector<RankWitness>& witnesses) {
  std::vector<DivisorClass> out;
  out.reserve(witnesses.size());
  for (const RankWitness& w : witnesses) out.push_back(w.cls);
  return out;
}

}  // namespace scrollcurves::cubic
