#include <doctest.h>

#include "oracles.hpp"
#include "scrollcurves/cohom.hpp"
#include "scrollcurves/errors.hpp"

using namespace scrollcurves;

namespace {

CohomologyVector expect(Int h0, Int h1, Int h2) { return {h0, h1, h2, h0 - h1 + h2}; }

}  // namespace

TEST_CASE("cohomology of line bundles on P^1") {
  CHECK(h0_p1(-1) == 0);
  CHECK(h0_p1(0) == 1);
  CHECK(h0_p1(4) == 5);
  CHECK(h1_p1(-1) == 0);
  CHECK(h1_p1(-2) == 1);
  CHECK(h1_p1(-5) == 4);
  CHECK(h1_p1(3) == 0);
}

TEST_CASE("cohomology examples") {
  CHECK(cohomology(ScrollSurface(1, 2), {1, 2}) == expect(5, 0, 0));
  CHECK(cohomology(ScrollSurface(1, 3), {2, 1}) == expect(2, 2, 0));
  CHECK(cohomology(ScrollSurface(1, 2), {0, 0}) == expect(1, 0, 0));
  // The canonical class has h^2 = 1 and nothing else.
  CHECK(cohomology(ScrollSurface(2, 5), {-2, -5}) == expect(0, 0, 1));
  // c = -1 kills all cohomology.
  for (Int d = -20; d <= 20; ++d) CHECK(cohomology(ScrollSurface(1, 4), {-1, d}) == expect(0, 0, 0));
  // O(-2f): h^1 = h^0(O_P1(-2)) pulled back.
  CHECK(cohomology(ScrollSurface(1, 2), {0, -2}) == expect(0, 1, 0));
}

TEST_CASE("effectiveness and natural cohomology") {
  const ScrollSurface S(1, 3);
  CHECK(is_effective(S, {0, 0}));
  CHECK_FALSE(is_nontrivial_effective(S, {0, 0}));
  CHECK(is_nontrivial_effective(S, {1, 0}));
  CHECK_FALSE(is_effective(S, {-1, 5}));
  CHECK_FALSE(is_effective(S, {2, -1}));
  CHECK(has_natural_cohomology(S, {2, 3}));
  CHECK_FALSE(has_natural_cohomology(S, {2, 2}));
  CHECK_THROWS_AS(has_natural_cohomology(S, {-1, 0}), PreconditionError);
}

TEST_CASE("monomial oracle bounds") {
  const ScrollSurface S(1, 2);
  CHECK(h0_oracle(S, {kOracleMaxC, 0}) == cohomology(S, {kOracleMaxC, 0}).h0);
  CHECK_THROWS_AS(h0_oracle(S, {kOracleMaxC + 1, 0}), PreconditionError);
  CHECK_THROWS_AS(h0_oracle(S, {1, kOracleMaxD + 1}), PreconditionError);
  CHECK_THROWS_AS(h0_oracle(S, {-1, 0}), PreconditionError);
}

TEST_CASE("scrolls are ACM") {
  for (Int a = 1; a <= 5; ++a) {
    for (Int b = a; b <= 5; ++b) CHECK(scroll_is_acm_check(ScrollSurface(a, b), -15, 15));
  }
}

TEST_CASE("property: cohomology agrees with the lattice-point oracle") {
  for (Int a = 1; a <= 5; ++a) {
    for (Int b = a; b <= 5; ++b) {
      const ScrollSurface S(a, b);
      for (Int c = -14; c <= 12; ++c) {
        for (Int d = -30; d <= 30; ++d) {
          const CohomologyVector v = cohomology(S, {c, d});
          const oracle::Cohomology o = oracle::cohomology(a, b, c, d);
          CHECK(v.h0 == o.h0);
          CHECK(v.h1 == o.h1);
          CHECK(v.h2 == o.h2);
          CHECK(v.h1 >= 0);
        }
      }
    }
  }
}

TEST_CASE("property: Serre duality and Riemann-Roch") {
  for (int trial = 0; trial < 5000; ++trial) {
    const ScrollSurface S(oracle::uniform(1, 20), oracle::uniform(1, 20));
    const DivisorClass D{oracle::uniform(-200, 200), oracle::uniform(-2000, 2000)};
    const CohomologyVector v = cohomology(S, D);
    const CohomologyVector dual = cohomology(S, S.canonical() - D);
    CHECK(v.h0 == dual.h2);
    CHECK(v.h1 == dual.h1);
    CHECK(v.h2 == dual.h0);
    CHECK(v.chi == riemann_roch_chi(S, D));
    CHECK(v.h0 - v.h1 + v.h2 == v.chi);
    if (is_effective(S, D)) {
      CHECK(has_natural_cohomology(S, D) == (v.h1 == 0 && v.h2 == 0));
    }
  }
}

TEST_CASE("large classes are handled in closed form") {
  const ScrollSurface S(1, 1'000'000);
  const CohomologyVector v = cohomology(S, {1'000'000, 1'000'000});
  CHECK(v.chi == riemann_roch_chi(S, {1'000'000, 1'000'000}));
  CHECK(v.h0 >= 0);
  CHECK(v.h1 >= 0);
}
