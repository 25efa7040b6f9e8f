#include "scrollcurves/projection.hpp"

#include <string>

#include "scrollcurves/cohom.hpp"

namespace scrollcurves {
namespace {

void require_not_quadric(const ScrollSurface& S) {
  if (S.degree() < 3) {
    throw PreconditionError("projection invariants need (a,b) != (1,1)");
  }
}

}  // namespace

ProjectionInvariants generic_invariants(const ScrollSurface& S) {
  require_not_quadric(S);
  const DivisorClass h = S.hyperplane();
  const DivisorClass c1 = S.c1();
  const Wide hh = intersect(S, h, h);
  const Wide hc1 = intersect(S, h, c1);
  const Wide c1c1 = intersect(S, c1, c1);
  const Wide c2 = ScrollSurface::c2_degree();

  ProjectionInvariants inv;
  inv.deg_X = checked::narrow(hh, "deg X");
  inv.m2_class = S.m2();

  inv.deg_N2 = checked::exact_div(hh * hh - 4 * hh + hc1, 2, "deg N2");
  // push-pull: f_*[M2] = 2[N2]
  if (2 * static_cast<Wide>(inv.deg_N2) != intersect(S, inv.m2_class, h)) {
    throw ConsistencyError("deg N2 disagrees with M2.h / 2");
  }

  // 12 g(N2) = 4 hh^3 - 36 hh^2 + 74 hh + 6 hh hc1 - 24 hc1 + c1.c1 + c2 + 12
  const Wide twelve_genus = 4 * hh * hh * hh - 36 * hh * hh + 74 * hh + 6 * hh * hc1 - 24 * hc1 +
                            c1c1 + c2 + 12;
  inv.genus_N2 = checked::exact_div(twelve_genus, 12, "g(N2)");

  const Wide deg_m3 = (hh * hh - 12 * hh + hc1 + 44) * hh + (2 * hh - 24) * hc1 + 4 * c1c1 - 2 * c2;
  inv.triple_points = checked::exact_div(deg_m3, 3, "triple points");

  inv.pinch_points = checked::narrow(6 * hh - 4 * hc1 + c1c1 - c2, "pinch points");
  inv.surface_family_dim = surface_family_dimension(S);
  return inv;
}

ProjectionInvariants closed_form_invariants(Int a, Int b) {
  const ScrollSurface S(a, b);
  require_not_quadric(S);
  const Wide s = S.degree();
  ProjectionInvariants inv;
  inv.deg_X = S.degree();
  inv.m2_class = {checked::narrow(s - 2, "M2"),
                  checked::narrow((s - 4) * S.b() + S.e() + 2, "M2")};
  inv.deg_N2 = checked::exact_div((s - 2) * (s - 1), 2, "deg N2");
  inv.genus_N2 = checked::exact_div((s - 3) * (s - 4) * (2 * s - 1), 6, "g(N2)");
  inv.triple_points = checked::exact_div((s - 2) * (s - 3) * (s - 4), 3, "triple points");
  inv.pinch_points = checked::narrow(2 * s - 4, "pinch points");
  inv.surface_family_dim = checked::narrow(5 * static_cast<Wide>(S.a()) + 3 * static_cast<Wide>(S.b()) + 2,
                                           "family dimension");
  return inv;
}

Int chi_p3(Int m) {
  const Wide x = m;
  return checked::exact_div((x + 1) * (x + 2) * (x + 3), 6, "chi(O_P3)");
}

bool chi_sequence_check(const ScrollSurface& S, Int n) {
  const ProjectionInvariants inv = generic_invariants(S);
  const Int s = S.degree();
  const Wide lhs = riemann_roch_chi(S, n * S.hyperplane());
  const Wide chi_x = static_cast<Wide>(chi_p3(n)) - chi_p3(checked::sub(n, s));
  const Wide twist = static_cast<Wide>(4) - s + n;
  const Wide chi_omega = twist * inv.deg_N2 + inv.genus_N2 - 1;
  return lhs == chi_x + chi_omega;
}

Int surface_family_dimension(const ScrollSurface& S) {
  const Wide s = S.degree();
  // centers of projection are P^{s-3} in P^{s+1}: G(k,n) has dim (k+1)(n-k)
  const Wide grassmannian = (s - 2) * 4;
  const Wide pgl4 = 15;
  const Wide automorphisms = static_cast<Wide>(S.e()) + 5;
  return checked::narrow(grassmannian + pgl4 - automorphisms, "family dimension");
}

}  // namespace scrollcurves
