#pragma once

// Invariants of a curve class C~ = c eta + d f on S(a,b) and of its image C
// under a general projection to P^3, computed on the scroll. The image
// surface X has degree h.h; C is assumed preserved (isomorphic to C~) and,
// for the Hilbert and Rao functions, linked on X to a preserved curve by a
// surface of degree m, so that h^0(I_C(n)) and h^1(I_C(n)) reduce to line
// bundle cohomology on S.

#include <optional>
#include <vector>

#include "scrollcurves/chow.hpp"
#include "scrollcurves/rational.hpp"

namespace scrollcurves {

struct CurveClass {
  ScrollSurface surface;
  DivisorClass cls;
  Int degree = 0;
  Int genus = 0;
  bool smooth = false;

  static CurveClass of(const ScrollSurface& S, DivisorClass D);
};

/// Values of an integer function on the window [n_min, n_max].
struct FunctionTable {
  Int n_min = 0;
  Int n_max = -1;
  std::vector<Int> values;

  Int at(Int n) const;
  bool empty() const { return values.empty(); }
  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
};

/// h^0(O_P3(m)) = C(m+3, 3) for m >= 0 and 0 otherwise.
Int h0_p3(Int m);

/// Whether |D| contains an irreducible nonsingular curve: a fiber, eta, or
/// c > 0 with d >= c e (e > 0) or d > 0 (e = 0).
bool smooth_class(const ScrollSurface& S, DivisorClass D);

/// (2 C.M2 - 2 (genus_of_image - g(C))) / h.M2 with g(C) from adjunction.
/// If C is linked to a preserved curve by a surface of degree n, then n is
/// this number. Throws PreconditionError when h.M2 = 0.
Rational linkage_degree(const ScrollSurface& S, DivisorClass C, Int genus_of_image);

/// linkage_degree for a preserved curve: genus_of_image = g(C~), so 2 C.M2 / h.M2.
Rational preserved_linkage_degree(const ScrollSurface& S, DivisorClass C);

struct TransversalLinkageReport {
  Rational m;
  bool m_positive_integer = false;
  /// m h - C, present only when m is an integer.
  std::optional<DivisorClass> residual;
  bool residual_effective = false;
  Int residual_h0 = 0;
  Int c_dot_m2 = 0;
  /// m a positive integer, m h - C effective and h^0(O_S(m h - C)) > C.M2.
  bool hypothesis_satisfied = false;
};

/// Sufficient conditions for an integral curve meeting M2 transversally to
/// be linked to another curve of S. Requires C effective.
TransversalLinkageReport transversal_linkage_check(const ScrollSurface& S, DivisorClass C);

/// h^1(O_C(n)) = h^2(O_S(n h - C~)) - h^2(O_S(n h)) for a preserved curve.
/// Requires h^1(O_S(n h)) = 0.
Int specialty(const ScrollSurface& S, DivisorClass C, Int n);

/// h^0(I_T(n)) for the complete intersection T of surfaces of degrees m and deg_X.
Int complete_intersection_h0_ideal(Int m, Int deg_X, Int n);

/// h^0(I_{C/P3}(n)) = h^0(I_T(n)) + h^0(O_S(n h - C~ - M2)) - h^0(O_S((n-m) h - M2)).
/// Requires h^1(O_S((h.h + m - n - 4) h)) = 0; a negative value means (C, m)
/// are not linked as assumed and throws PreconditionError.
Int hilbert_fn(const ScrollSurface& S, DivisorClass C, Int m, Int n);

/// h^1(I_{C/P3}(n)) = h^0(O_S(nh)) - h^0(O_S(nh - C~)) + h^1(O_S(nh - C~)) - h^0(O_T(n))
///                    + h^0(O_S(nh - C~ - M2)) - h^0(O_S((n-m)h - M2)).
/// Same hypotheses as hilbert_fn.
Int rao_fn(const ScrollSurface& S, DivisorClass C, Int m, Int n);

/// Rao function of C~ in the scroll's own embedding P^{a+b+1}: h^1(O_S(n h - C)).
Int rao_in_big_space(const ScrollSurface& S, DivisorClass C, Int n);

/// On the cubic scroll S(1,2) only: C is ACM in P^4 iff 2c - 2 <= d <= 2c + 1.
/// Throws PreconditionError for other scrolls or non-effective C.
bool is_acm_in_big_space(const ScrollSurface& S, DivisorClass C);

struct NormalBundleDims {
  Int h0 = 0;
  Int h1 = 0;
  friend bool operator==(const NormalBundleDims&, const NormalBundleDims&) = default;
};

/// h^1(N_{C/P3}) = h^0(O_S(C~ - 4h)) and h^0 = 4 deg C + h^1 (chi(N) = 4 deg C).
/// Requires smooth_class(C~).
NormalBundleDims normal_bundle_dims(const ScrollSurface& S, DivisorClass C);

struct FamilyGap {
  Int h0_normal = 0;
  Int curve_family_dim = 0;
  Int gap = 0;
};

/// Tangent-space dimension of the Hilbert scheme against the dimension
/// dim|C~| + 5a + 3b + 2 of the family of projected curves.
FamilyGap family_gap(const ScrollSurface& S, DivisorClass C);

struct CurveTables {
  FunctionTable h0_ideal;      // hilbert_fn
  FunctionTable h1_ideal;      // rao_fn
  FunctionTable h1_structure;  // specialty
};

/// Window end used when none is given: m + h.h + 2.
Int default_table_max(const ScrollSurface& S, Int m);

/// Tables of the three functions on [0, n_max].
CurveTables curve_tables(const ScrollSurface& S, DivisorClass C, Int m, Int n_max);

}  // namespace scrollcurves
