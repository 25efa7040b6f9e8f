#include "scrollcurves/cohom.hpp"

#include <algorithm>
#include <string>

namespace scrollcurves {
namespace {

Wide floor_div(Wide num, Wide den) {
  Wide q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

// sum_{j=0}^{c} h^0(O_P1(d - j e)) for c >= 0, e >= 0
Wide pushforward_h0(Int c, Int d, Int e) {
  if (d < 0) return 0;
  if (e == 0) return static_cast<Wide>(c + 1) * (static_cast<Wide>(d) + 1);
  // terms d - j e + 1 are positive exactly for j <= d / e
  const Wide last = std::min<Wide>(c, floor_div(d, e));
  return (last + 1) * (static_cast<Wide>(d) + 1) - static_cast<Wide>(e) * last * (last + 1) / 2;
}

// sum_{j=0}^{c} chi(O_P1(d - j e))
Wide pushforward_chi(Int c, Int d, Int e) {
  const Wide terms = static_cast<Wide>(c) + 1;
  return terms * (static_cast<Wide>(d) + 1) - static_cast<Wide>(e) * c * terms / 2;
}

}  // namespace

Int h0_p1(Int m) { return m >= 0 ? checked::add(m, 1) : 0; }
Int h1_p1(Int m) { return m <= -2 ? checked::sub(checked::neg(m), 1) : 0; }

CohomologyVector cohomology(const ScrollSurface& S, DivisorClass D) {
  CohomologyVector v;
  if (D.c >= 0) {
    const Wide h0 = pushforward_h0(D.c, D.d, S.e());
    v.h0 = checked::narrow(h0, "h0");
    v.h1 = checked::narrow(h0 - pushforward_chi(D.c, D.d, S.e()), "h1");
    v.h2 = 0;
  } else if (D.c == -1) {
    // both direct images vanish
  } else {
    const CohomologyVector dual = cohomology(S, S.canonical() - D);
    v.h0 = dual.h2;
    v.h1 = dual.h1;
    v.h2 = dual.h0;
  }
  v.chi = checked::narrow(static_cast<Wide>(v.h0) - v.h1 + v.h2, "chi");
  if (v.chi != riemann_roch_chi(S, D)) {
    throw ConsistencyError("cohomology of " + D.to_string() + " disagrees with Riemann-Roch");
  }
  return v;
}

Int riemann_roch_chi(const ScrollSurface& S, DivisorClass D) {
  const Wide twice = static_cast<Wide>(intersect(S, D, D)) + intersect(S, D, S.c1());
  return checked::narrow(1 + checked::exact_div(twice, 2, "Riemann-Roch"), "Riemann-Roch");
}

bool is_effective(const ScrollSurface&, DivisorClass D) { return D.c >= 0 && D.d >= 0; }

bool is_nontrivial_effective(const ScrollSurface& S, DivisorClass D) {
  return is_effective(S, D) && D != DivisorClass{};
}

bool has_natural_cohomology(const ScrollSurface& S, DivisorClass D) {
  if (!is_effective(S, D)) {
    throw PreconditionError("natural cohomology is only defined for effective classes, got " +
                            D.to_string());
  }
  return static_cast<Wide>(D.d) >= static_cast<Wide>(D.c) * S.e() - 1;
}

Int h0_oracle(const ScrollSurface& S, DivisorClass D) {
  if (D.c < 0 || D.c > kOracleMaxC || D.d > kOracleMaxD) {
    throw PreconditionError("h0 oracle enumeration bound exceeded for " + D.to_string());
  }
  const Int c = D.c;
  const Int d = D.d;
  const Int e = S.e();
  Int count = 0;
  for (Int l = 0; l <= c; ++l) {
    const Int k = c - l;
    // the f-degree of u^i v^j w^k z^l is i + j + l e
    const Wide fiber_degree = static_cast<Wide>(d) - static_cast<Wide>(l) * e;
    for (Wide i = 0; i <= fiber_degree; ++i) {
      const Wide j = fiber_degree - i;
      if (k >= 0 && j >= 0) ++count;
    }
  }
  return count;
}

bool scroll_is_acm_check(const ScrollSurface& S, Int l_lo, Int l_hi) {
  for (Int l = l_lo; l <= l_hi; ++l) {
    if (cohomology(S, l * S.hyperplane()).h1 != 0) return false;
  }
  return true;
}

}  // namespace scrollcurves
