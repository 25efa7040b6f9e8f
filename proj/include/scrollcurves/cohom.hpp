#pragma once

// Cohomology of line bundles O_S(c,d) on the Hirzebruch surface of S(a,b).
// For c >= 0 the bundle pushes forward to Sym^c(O(a) + O(b)) (x) O(d - c b)
// on P^1 with no higher direct images, which splits as the sum of
// O_P1(d - j e), j = 0..c. The c = -1 case has vanishing direct images, and
// c <= -2 is reduced to c >= 0 by Serre duality with K = -c1.

#include "scrollcurves/chow.hpp"

namespace scrollcurves {

struct CohomologyVector {
  Int h0 = 0;
  Int h1 = 0;
  Int h2 = 0;
  Int chi = 0;

  friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;
};

/// h^0(O_P1(m)) and h^1(O_P1(m)).
Int h0_p1(Int m);
Int h1_p1(Int m);

/// h^0, h^1, h^2 of O_S(D) for any integral class. The Euler characteristic
/// is cross-checked against riemann_roch_chi; a mismatch throws
/// ConsistencyError.
CohomologyVector cohomology(const ScrollSurface& S, DivisorClass D);

/// chi(O_S(D)) = 1 + D.(D + c1)/2.
Int riemann_roch_chi(const ScrollSurface& S, DivisorClass D);

/// c >= 0 and d >= 0. The zero class (empty divisor) counts as effective.
bool is_effective(const ScrollSurface& S, DivisorClass D);
/// Effective and not the zero class.
bool is_nontrivial_effective(const ScrollSurface& S, DivisorClass D);

/// h^1 = h^2 = 0 for an effective class, i.e. d >= c e - 1.
/// Throws PreconditionError if D is not effective.
bool has_natural_cohomology(const ScrollSurface& S, DivisorClass D);

/// Enumeration bounds for h0_oracle.
inline constexpr Int kOracleMaxC = 64;
inline constexpr Int kOracleMaxD = 4096;

/// h^0 by brute-force enumeration of Cox-ring monomials u^i v^j w^k z^l of
/// class c eta + d f (u, v of class f; w of class eta; z of class eta + e f).
/// Requires 0 <= c <= kOracleMaxC and d <= kOracleMaxD, else PreconditionError.
Int h0_oracle(const ScrollSurface& S, DivisorClass D);

/// True iff h^1(O_S(l h)) = 0 for every l in [l_lo, l_hi].
bool scroll_is_acm_check(const ScrollSurface& S, Int l_lo, Int l_hi);

}  // namespace scrollcurves
