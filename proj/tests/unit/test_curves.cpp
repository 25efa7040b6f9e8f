#include <doctest.h>

#include "oracles.hpp"
#include "scrollcurves/cohom.hpp"
#include "scrollcurves/curves.hpp"
#include "scrollcurves/errors.hpp"

using namespace scrollcurves;

namespace {

const ScrollSurface kCubic(1, 2);

// h^0(O_C(n)) from Riemann-Roch on the curve plus the specialty.
Int h0_structure(const ScrollSurface& S, DivisorClass C, Int n) {
  const CurveClass cc = CurveClass::of(S, C);
  return n * cc.degree + 1 - cc.genus + specialty(S, C, n);
}

}  // namespace

TEST_CASE("curve class data") {
  const CurveClass cc = CurveClass::of(kCubic, {4, 8});
  CHECK(cc.degree == 12);
  CHECK(cc.genus == 15);
  CHECK(cc.smooth);
  CHECK(CurveClass::of(ScrollSurface(2, 5), {3, 4}).degree == 4 + 2 * 3);
}

TEST_CASE("h0 of O_P3(m)") {
  for (Int m = -5; m <= 40; ++m) CHECK(h0_p3(m) == oracle::h0_p3(m));
  CHECK(h0_p3(3) == 20);
}

TEST_CASE("smooth classes") {
  CHECK(smooth_class(kCubic, {1, 2}));
  CHECK(smooth_class(kCubic, {1, 0}));
  CHECK(smooth_class(kCubic, {0, 1}));
  CHECK_FALSE(smooth_class(kCubic, {0, 2}));
  CHECK_FALSE(smooth_class(kCubic, {2, 1}));
  CHECK_FALSE(smooth_class(ScrollSurface(1, 3), {2, 3}));
  CHECK(smooth_class(ScrollSurface(2, 2), {3, 1}));
  CHECK_FALSE(smooth_class(ScrollSurface(2, 2), {3, 0}));
  CHECK_FALSE(smooth_class(kCubic, {0, 0}));
  // Every smooth class is effective.
  for (Int a = 1; a <= 4; ++a) {
    for (Int b = a; b <= 4; ++b) {
      for (Int c = -3; c <= 8; ++c) {
        for (Int d = -3; d <= 20; ++d) {
          const ScrollSurface S(a, b);
          if (smooth_class(S, {c, d})) CHECK(is_effective(S, {c, d}));
        }
      }
    }
  }
}

TEST_CASE("linkage degree") {
  CHECK(linkage_degree(kCubic, {1, 2}, 0) == Rational(2));
  CHECK(linkage_degree(kCubic, {0, 1}, 0) == Rational(1));
  CHECK(linkage_degree(kCubic, {0, 0}, 1) == Rational(0));
  // S(2,3): M2 = (3,6), h.M2 = 12, (1,3).M2 = 12, f.M2 = 3.
  CHECK(preserved_linkage_degree(ScrollSurface(2, 3), {1, 3}) == Rational(2));
  CHECK(preserved_linkage_degree(ScrollSurface(2, 3), {0, 1}) == Rational(1, 2));
  // On the ruled cubic C.M2 = d and h.M2 = 2, so a preserved curve links in degree d.
  for (Int c = 0; c <= 10; ++c) {
    for (Int d = 0; d <= 20; ++d) CHECK(preserved_linkage_degree(kCubic, {c, d}) == Rational(d));
  }
}

TEST_CASE("transversal linkage hypotheses") {
  const TransversalLinkageReport r = transversal_linkage_check(kCubic, {1, 2});
  CHECK(r.m == Rational(2));
  CHECK(r.residual == DivisorClass{1, 2});
  CHECK(r.residual_h0 == 5);
  CHECK(r.c_dot_m2 == 2);
  CHECK(r.hypothesis_satisfied);

  const TransversalLinkageReport r2 = transversal_linkage_check(kCubic, {3, 3});
  CHECK(r2.m == Rational(3));
  CHECK(r2.residual == DivisorClass{0, 3});
  CHECK(r2.residual_h0 == 4);
  CHECK(r2.hypothesis_satisfied);

  CHECK_FALSE(transversal_linkage_check(kCubic, {0, 0}).hypothesis_satisfied);
  CHECK_THROWS_AS(transversal_linkage_check(kCubic, {-1, 0}), PreconditionError);
}

TEST_CASE("specialty") {
  CHECK(specialty(kCubic, {1, 2}, 0) == 0);
  CHECK(specialty(kCubic, {2, 4}, 1) == 0);
  // h^1(O_C) is the genus: (4,8) on S(2,3) has genus 15.
  const ScrollSurface S23(2, 3);
  CHECK(adjunction_genus(S23, {4, 8}) == 15);
  CHECK(specialty(S23, {4, 8}, 0) == 15);
  for (Int a = 1; a <= 4; ++a) {
    for (Int b = a; b <= 4; ++b) {
      const ScrollSurface S(a, b);
      for (Int c = 1; c <= 6; ++c) {
        for (Int d = c * S.e(); d <= c * S.e() + 8; ++d) {
          if (!smooth_class(S, {c, d})) continue;
          CHECK(specialty(S, {c, d}, 0) == adjunction_genus(S, {c, d}));
          // h^1(O_C(n)) = 0 once n deg C > 2g - 2.
          const CurveClass cc = CurveClass::of(S, {c, d});
          for (Int n = 0; n <= 12; ++n) {
            CHECK(specialty(S, {c, d}, n) >= 0);
            if (n * cc.degree > 2 * cc.genus - 2) CHECK(specialty(S, {c, d}, n) == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("complete intersections") {
  // A (2,3) complete intersection lies on one quadric and on 4 + 1 cubics.
  CHECK(complete_intersection_h0_ideal(2, 3, 1) == 0);
  CHECK(complete_intersection_h0_ideal(2, 3, 2) == 1);
  CHECK(complete_intersection_h0_ideal(2, 3, 3) == 5);
  CHECK(complete_intersection_h0_ideal(0, 3, 0) == 1);
}

TEST_CASE("Hilbert and Rao functions of the twisted cubic") {
  const DivisorClass C{1, 2};
  CHECK(hilbert_fn(kCubic, C, 2, 1) == 0);
  CHECK(hilbert_fn(kCubic, C, 2, 2) == 3);
  CHECK(hilbert_fn(kCubic, {0, 0}, 0, 0) == 1);
  for (Int n = 0; n <= 15; ++n) {
    CHECK(hilbert_fn(kCubic, C, 2, n) == oracle::h0_p3(n) - (3 * n + 1));
    CHECK(rao_fn(kCubic, C, 2, n) == 0);
  }
}

TEST_CASE("classical rational quartic and quintic") {
  // Rational quartic: one quadric, h^1(I(1)) = 1.
  CHECK(hilbert_fn(kCubic, {1, 3}, 3, 2) == 1);
  CHECK(rao_fn(kCubic, {1, 3}, 3, 1) == 1);
  CHECK(rao_fn(kCubic, {1, 3}, 3, 2) == 0);
  // Rational quintic: no quadric, four cubics, h^1(I(2)) = 1.
  CHECK(hilbert_fn(kCubic, {1, 4}, 4, 2) == 0);
  CHECK(hilbert_fn(kCubic, {1, 4}, 4, 3) == 4);
  CHECK(rao_fn(kCubic, {1, 4}, 4, 2) == 1);
}

TEST_CASE("curves that fail maximal rank in degree 3") {
  // (4,6): lies on the cubic X and h^1(I(3)) >= 3.
  CHECK(rao_fn(kCubic, {4, 6}, 6, 3) == 3);
  CHECK(hilbert_fn(kCubic, {4, 6}, 6, 3) == 1);
  // (1,5): lies on a second cubic.
  CHECK(hilbert_fn(kCubic, {1, 5}, 5, 3) == 2);
  CHECK(rao_fn(kCubic, {1, 5}, 5, 3) > 0);
}

TEST_CASE("property: Hilbert, Rao and specialty satisfy Riemann-Roch on the curve") {
  for (Int c = 1; c <= 6; ++c) {
    for (Int d = c; d <= 12; ++d) {
      const DivisorClass C{c, d};
      for (Int n = 0; n <= 20; ++n) {
        const Int h0i = hilbert_fn(kCubic, C, d, n);
        const Int h1i = rao_fn(kCubic, C, d, n);
        CHECK(h0i >= 0);
        CHECK(h1i >= 0);
        CHECK(h1i == h0_structure(kCubic, C, n) - oracle::h0_p3(n) + h0i);
      }
    }
  }
}

TEST_CASE("inconsistent linkage data is rejected") {
  // The twisted cubic is linked in degree 2, not 3: the Rao formula goes negative.
  CHECK_THROWS_AS(rao_fn(kCubic, {1, 2}, 3, 2), PreconditionError);
  CHECK_THROWS_AS(rao_fn(kCubic, {0, 0}, 1, 0), PreconditionError);
}

TEST_CASE("Rao function in the scroll embedding") {
  CHECK(rao_in_big_space(kCubic, {2, 6}, 2) == 1);
  CHECK(rao_in_big_space(kCubic, {5, 6}, 3) == 2);
  for (Int c = 0; c <= 10; ++c) {
    for (Int d = 0; d <= 25; ++d) CHECK(rao_in_big_space(kCubic, {c, d}, c - 1) == 0);
  }
  CHECK(is_acm_in_big_space(kCubic, {2, 3}));
  CHECK_FALSE(is_acm_in_big_space(kCubic, {2, 6}));
  CHECK(is_acm_in_big_space(kCubic, {1, 0}));
  CHECK_THROWS_AS(is_acm_in_big_space(ScrollSurface(1, 3), {1, 3}), PreconditionError);
  CHECK_THROWS_AS(is_acm_in_big_space(kCubic, {-1, 3}), PreconditionError);
}

TEST_CASE("normal bundle") {
  CHECK(normal_bundle_dims(kCubic, {4, 7}) == NormalBundleDims{44, 0});
  CHECK(normal_bundle_dims(kCubic, {4, 8}) == NormalBundleDims{49, 1});
  CHECK(normal_bundle_dims(kCubic, {1, 2}) == NormalBundleDims{12, 0});
  CHECK_THROWS_AS(normal_bundle_dims(kCubic, {2, 1}), PreconditionError);
}

TEST_CASE("family gap") {
  const FamilyGap g48 = family_gap(kCubic, {4, 8});
  CHECK(g48.curve_family_dim == 34 + 13);
  CHECK(g48.gap == 2);
  CHECK(family_gap(kCubic, {4, 7}).gap == 2);
  CHECK(family_gap(ScrollSurface(2, 3), {4, 11}).gap == 6);
}

TEST_CASE("tables") {
  const CurveTables t = curve_tables(kCubic, {1, 2}, 2, default_table_max(kCubic, 2));
  CHECK(t.h0_ideal.n_min == 0);
  CHECK(t.h0_ideal.n_max == 7);
  CHECK(t.h0_ideal.at(2) == 3);
  CHECK_THROWS_AS(t.h0_ideal.at(8), PreconditionError);
  CHECK_THROWS_AS(t.h0_ideal.at(-1), PreconditionError);
  CHECK(t.h1_structure.values == std::vector<Int>(8, 0));
}
