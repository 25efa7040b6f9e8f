#pragma once

// Enumerative invariants of a general linear projection S(a,b) -> P^3:
// double curve N2 (and its preimage M2), triple points N3, pinch points R1.

#include "scrollcurves/chow.hpp"

namespace scrollcurves {

struct ProjectionInvariants {
  Int deg_X = 0;
  DivisorClass m2_class;
  Int deg_N2 = 0;
  Int genus_N2 = 0;
  Int triple_points = 0;
  Int pinch_points = 0;
  Int surface_family_dim = 0;

  friend bool operator==(const ProjectionInvariants&, const ProjectionInvariants&) = default;
};

/// Multiple-point formulas evaluated through the intersection pairing with
/// c1.c1 = 8 and deg c2 = 4. Requires a + b >= 3 (PreconditionError);
/// an inexact division throws ConsistencyError.
ProjectionInvariants generic_invariants(const ScrollSurface& S);

/// The same invariants from the closed forms in a + b:
///   deg N2 = (a+b-2)(a+b-1)/2,  g(N2) = (a+b-3)(a+b-4)(2a+2b-1)/6,
///   #N3 = (a+b-2)(a+b-3)(a+b-4)/3,  #R1 = 2a+2b-4.
/// Requires a, b >= 1 and a + b >= 3.
ProjectionInvariants closed_form_invariants(Int a, Int b);

/// chi(O_P3(m)) = (m+1)(m+2)(m+3)/6 as a polynomial in m (valid for all m).
Int chi_p3(Int m);

/// Checks chi(O_S(n h)) = chi(O_X(n)) + chi(omega_N2(4 - h.h + n)), the
/// Euler-characteristic shadow of 0 -> O_X -> f_* O_S -> omega_N2(4 - h.h) -> 0.
/// Requires a + b >= 3.
bool chi_sequence_check(const ScrollSurface& S, Int n);

/// dim of the family of image surfaces: centers of projection (a projective
/// Grassmannian) plus PGL(4) minus Aut S(a,b); equals 5a + 3b + 2.
Int surface_family_dimension(const ScrollSurface& S);

}  // namespace scrollcurves
