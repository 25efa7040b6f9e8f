#pragma once

// Almost-Cartier divisor classes on the ruled cubic surface X in P^3, the
// image of S(1,2). A class is a triple (c, d, alpha): (c, d) in Pic(S) and
// alpha a divisor on the double conic M2 = P^1, taken modulo pullbacks from
// the double line N2, subject to d = deg alpha (mod 2). The double cover
// M2 -> N2 is the quotient by the involution u -> -u with fixed points 0 and
// infinity (the two pinch points).

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scrollcurves/chow.hpp"
#include "scrollcurves/curves.hpp"
#include "scrollcurves/rational.hpp"

namespace scrollcurves::cubic {

/// S(1,2), the normalization of the ruled cubic.
ScrollSurface scroll();

/// A point of M2 = P^1: a rational parameter u, or infinity.
class M2Point {
 public:
  static M2Point at(Rational u) { return M2Point(false, u); }
  static M2Point infinity() { return M2Point(true, Rational(0)); }

  bool is_infinity() const { return infinite_; }
  /// Throws PreconditionError at infinity.
  const Rational& parameter() const;

  /// sigma(u) = -u, sigma(inf) = inf.
  M2Point involution() const;
  bool is_fixed() const { return infinite_ || u_ == Rational(0); }

  /// "inf", "u" for u >= 0, "(u)" for u < 0.
  std::string to_string() const;
  /// Inverse of to_string; also accepts "(inf)" and "(u)" for any u.
  static M2Point parse(std::string_view text);

  friend bool operator==(const M2Point&, const M2Point&) = default;
  friend std::strong_ordering operator<=>(const M2Point& x, const M2Point& y);

 private:
  M2Point(bool infinite, Rational u) : infinite_(infinite), u_(u) {}

  bool infinite_;
  Rational u_;
};

/// Finite formal integer combination of points of M2.
class PointDivisor {
 public:
  PointDivisor() = default;
  PointDivisor(std::initializer_list<M2Point> points);

  void add(const M2Point& p, Int multiplicity = 1);
  Int multiplicity(const M2Point& p) const;
  Int degree() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_effective() const;
  /// Applies sigma to every point, keeping multiplicities.
  PointDivisor involution() const;
  const std::map<M2Point, Int>& terms() const { return terms_; }

  friend PointDivisor operator+(const PointDivisor& x, const PointDivisor& y);
  friend bool operator==(const PointDivisor&, const PointDivisor&) = default;

  /// "{p1,p2,...}" with multiplicities expanded; a negative coefficient is
  /// written with a leading '-'.
  std::string to_string() const;

  /// Comma-separated entries, each an optional '-' (negative coefficient)
  /// followed by a point: an integer, p/q, inf, or a parenthesized signed
  /// value such as (-3). Repeated entries accumulate. Surrounding braces and
  /// blanks are ignored; the empty list is the zero divisor.
  static PointDivisor parse(std::string_view text);

 private:
  std::map<M2Point, Int> terms_;  // no zero multiplicities
};

/// The effective representative of least degree of alpha modulo pullbacks
/// from N2: negative points -Q become +sigma(Q), then every pair
/// P + sigma(P) is removed (a fixed point pairs with itself).
PointDivisor reduce_alpha(const PointDivisor& alpha);

struct APicClass {
  Int c = 0;
  Int d = 0;
  PointDivisor alpha;

  /// d = deg alpha (mod 2).
  bool parity_ok() const;
  /// "(c,d,{...})"
  std::string to_string() const;
  /// "c,d,{...}", optionally wrapped in parentheses.
  static APicClass parse(std::string_view text);

  friend bool operator==(const APicClass&, const APicClass&) = default;
};

/// Effectiveness: (c > 0, d > 0), or (d = 0, alpha reduces to 0, c > 0), or
/// (c = 0, d > 0, deg reduce(alpha) <= d). Throws InvalidInput on a parity
/// violation.
bool is_effective(const APicClass& t);

/// Whether the class contains a preserved curve: as is_effective with
/// d = deg reduce(alpha) in the first and third cases.
bool contains_preserved(const APicClass& t);

/// Linkage by O_X(m): classes sum to m h = (m, 2m) and alpha1 + alpha2
/// reduces to 0. Throws PreconditionError unless m > 0.
bool are_linked(const APicClass& t1, const APicClass& t2, Int m);

/// The preserved curve class linked to a smooth curve class by O_X(d):
/// (d - c, d, sigma(alpha)). Requires (c, d) smooth on S(1,2), t containing a
/// preserved curve, and t not the (-1)-curve (1, 0, 0).
APicClass preserved_link(const APicClass& t);

enum class RankVerdict { MaximalRank, NotMaximalRank };

struct RankWitness {
  DivisorClass cls;
  RankVerdict verdict = RankVerdict::NotMaximalRank;
  bool acm = false;
  /// Smallest n with h^0(I(n)) > 0 and h^1(I(n)) > 0.
  std::optional<Int> first_failure;
  /// The linkage degree used (0 for classes tabulated directly).
  Int m = 0;
  /// Lines are tabulated directly rather than through linkage.
  bool direct_table = false;
  CurveTables tables;
};

/// Window end for the witness tables of class (c, d): c + d + 4.
Int classify_window_max(DivisorClass cls);

/// Maximal rank test for a smooth class on S(1,2), computed at class level
/// with m = d. Throws PreconditionError if (c, d) is not a smooth class and
/// ConsistencyError if the Rao function does not vanish at the window end.
RankWitness maximal_rank_classify(Int c, Int d);

/// Every smooth class with 1 <= c <= c_max and 0 <= d <= d_max (and the
/// ruling (0,1) when include_rulings is set) that has maximal rank, sorted
/// by (c, d). Throws PreconditionError for negative bounds.
std::vector<RankWitness> maximal_rank_scan(Int c_max, Int d_max, bool include_rulings = false);

std::vector<DivisorClass> classes_of(const std::vector<RankWitness>& witnesses);

}  // namespace scrollcurves::cubic
