#include "scrollcurves/curves.hpp"

#include <string>

#include "scrollcurves/cohom.hpp"

namespace scrollcurves {
namespace {

Int h0(const ScrollSurface& S, DivisorClass D) { return cohomology(S, D).h0; }

void require_vanishing_h1(const ScrollSurface& S, Int l, const char* who) {
  if (cohomology(S, l * S.hyperplane()).h1 != 0) {
    throw PreconditionError(std::string(who) + ": h^1(O_S(" + std::to_string(l) + "h)) != 0");
  }
}

std::string describe(DivisorClass C, Int m, Int n) {
  return "C=" + C.to_string() + " m=" + std::to_string(m) + " n=" + std::to_string(n);
}

}  // namespace

CurveClass CurveClass::of(const ScrollSurface& S, DivisorClass D) {
  return CurveClass{S, D, degree_in_p3(S, D), adjunction_genus(S, D), smooth_class(S, D)};
}

Int FunctionTable::at(Int n) const {
  if (n < n_min || n > n_max) {
    throw PreconditionError("table index " + std::to_string(n) + " outside [" + std::to_string(n_min) +
                            "," + std::to_string(n_max) + "]");
  }
  return values[static_cast<std::size_t>(n - n_min)];
}

Int h0_p3(Int m) {
  if (m < 0) return 0;
  const Wide x = m;
  return checked::exact_div((x + 1) * (x + 2) * (x + 3), 6, "h0(O_P3)");
}

bool smooth_class(const ScrollSurface& S, DivisorClass D) {
  if (D == DivisorClass::fiber() || D == DivisorClass::eta()) return true;
  if (D.c <= 0) return false;
  if (S.e() > 0) return static_cast<Wide>(D.d) >= static_cast<Wide>(D.c) * S.e();
  return D.d > 0;
}

Rational linkage_degree(const ScrollSurface& S, DivisorClass C, Int genus_of_image) {
  const DivisorClass m2 = S.m2();
  const Int h_m2 = intersect(S, S.hyperplane(), m2);
  if (h_m2 == 0) throw PreconditionError("linkage degree undefined: h.M2 = 0");
  const Wide numerator = 2 * static_cast<Wide>(intersect(S, C, m2)) -
                         2 * (static_cast<Wide>(genus_of_image) - adjunction_genus(S, C));
  return Rational(checked::narrow(numerator, "linkage degree"), h_m2);
}

Rational preserved_linkage_degree(const ScrollSurface& S, DivisorClass C) {
  return linkage_degree(S, C, adjunction_genus(S, C));
}

TransversalLinkageReport transversal_linkage_check(const ScrollSurface& S, DivisorClass C) {
  if (!is_effective(S, C)) {
    throw PreconditionError("transversal linkage needs an effective class, got " + C.to_string());
  }
  TransversalLinkageReport r;
  r.c_dot_m2 = intersect(S, C, S.m2());
  r.m = preserved_linkage_degree(S, C);
  r.m_positive_integer = r.m.is_integer() && r.m.num() > 0;
  if (r.m.is_integer()) {
    r.residual = r.m.num() * S.hyperplane() - C;
    r.residual_effective = is_effective(S, *r.residual);
    r.residual_h0 = h0(S, *r.residual);
  }
  r.hypothesis_satisfied = r.m_positive_integer && r.residual_effective && r.residual_h0 > r.c_dot_m2;
  return r;
}

Int specialty(const ScrollSurface& S, DivisorClass C, Int n) {
  require_vanishing_h1(S, n, "specialty");
  const DivisorClass nh = n * S.hyperplane();
  const Int value = checked::sub(cohomology(S, nh - C).h2, cohomology(S, nh).h2);
  if (value < 0) throw ConsistencyError("negative specialty for " + C.to_string());
  return value;
}

Int complete_intersection_h0_ideal(Int m, Int deg_X, Int n) {
  const Wide value = static_cast<Wide>(h0_p3(checked::sub(n, m))) + h0_p3(checked::sub(n, deg_X)) -
                     h0_p3(checked::sub(checked::sub(n, m), deg_X));
  return checked::narrow(value, "h0(I_T)");
}

Int hilbert_fn(const ScrollSurface& S, DivisorClass C, Int m, Int n) {
  const Int s = S.degree();
  require_vanishing_h1(S, checked::sub(checked::add(s, m), checked::add(n, 4)), "hilbert_fn");
  const DivisorClass h = S.hyperplane();
  const DivisorClass m2 = S.m2();
  const Wide value = static_cast<Wide>(complete_intersection_h0_ideal(m, s, n)) +
                     h0(S, n * h - C - m2) - h0(S, checked::sub(n, m) * h - m2);
  if (value < 0) {
    throw PreconditionError("negative h^0(I_C(n)): curve not linked as assumed (" + describe(C, m, n) + ")");
  }
  return checked::narrow(value, "h0(I_C)");
}

Int rao_fn(const ScrollSurface& S, DivisorClass C, Int m, Int n) {
  const Int s = S.degree();
  require_vanishing_h1(S, n, "rao_fn");
  require_vanishing_h1(S, checked::sub(checked::add(s, m), checked::add(n, 4)), "rao_fn");
  const DivisorClass h = S.hyperplane();
  const DivisorClass m2 = S.m2();
  const DivisorClass nh = n * h;
  const CohomologyVector residual = cohomology(S, nh - C);
  const Wide h0_structure_T =
      static_cast<Wide>(h0_p3(n)) - complete_intersection_h0_ideal(m, s, n);
  const Wide value = static_cast<Wide>(h0(S, nh)) - residual.h0 + residual.h1 - h0_structure_T +
                     h0(S, nh - C - m2) - h0(S, checked::sub(n, m) * h - m2);
  if (value < 0) {
    throw PreconditionError("negative h^1(I_C(n)): curve not linked as assumed (" + describe(C, m, n) + ")");
  }
  return checked::narrow(value, "h1(I_C)");
}

Int rao_in_big_space(const ScrollSurface& S, DivisorClass C, Int n) {
  return cohomology(S, n * S.hyperplane() - C).h1;
}

bool is_acm_in_big_space(const ScrollSurface& S, DivisorClass C) {
  if (S != ScrollSurface(1, 2)) {
    throw PreconditionError("the ACM criterion in P^4 is stated for S(1,2) only");
  }
  if (!is_effective(S, C)) {
    throw PreconditionError("ACM criterion needs an effective class, got " + C.to_string());
  }
  const Wide c = C.c;
  return 2 * c - 2 <= C.d && C.d <= 2 * c + 1;
}

NormalBundleDims normal_bundle_dims(const ScrollSurface& S, DivisorClass C) {
  if (!smooth_class(S, C)) {
    throw PreconditionError("normal bundle needs a smooth curve class, got " + C.to_string());
  }
  NormalBundleDims dims;
  dims.h1 = h0(S, C - 4 * S.hyperplane());
  dims.h0 = checked::add(checked::mul(4, degree_in_p3(S, C)), dims.h1);
  return dims;
}

FamilyGap family_gap(const ScrollSurface& S, DivisorClass C) {
  FamilyGap g;
  g.h0_normal = normal_bundle_dims(S, C).h0;
  const Wide linear_system_dim = static_cast<Wide>(h0(S, C)) - 1;
  const Wide surfaces = 5 * static_cast<Wide>(S.a()) + 3 * static_cast<Wide>(S.b()) + 2;
  g.curve_family_dim = checked::narrow(linear_system_dim + surfaces, "family dimension");
  g.gap = checked::sub(g.h0_normal, g.curve_family_dim);
  return g;
}

Int default_table_max(const ScrollSurface& S, Int m) {
  return checked::add(checked::add(m, S.degree()), 2);
}

CurveTables curve_tables(const ScrollSurface& S, DivisorClass C, Int m, Int n_max) {
  CurveTables t;
  for (FunctionTable* table : {&t.h0_ideal, &t.h1_ideal, &t.h1_structure}) {
    table->n_min = 0;
    table->n_max = n_max;
  }
  for (Int n = 0; n <= n_max; ++n) {
    t.h0_ideal.values.push_back(hilbert_fn(S, C, m, n));
    t.h1_ideal.values.push_back(rao_fn(S, C, m, n));
    t.h1_structure.values.push_back(specialty(S, C, n));
  }
  return t;
}

}  // namespace scrollcurves
