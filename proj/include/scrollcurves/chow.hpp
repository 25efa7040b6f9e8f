#pragma once

// Intersection theory on the Hirzebruch surface underlying the rational
// normal scroll S(a,b). Divisor classes are written c*eta + d*f, where eta is
// the unique curve of self-intersection -(b-a) and f is a fiber; the Chow ring
// is Z[f,eta]/(eta^2 + (b-a) f eta, f^2).

#include <iosfwd>
#include <string>

#include "scrollcurves/checked.hpp"

namespace scrollcurves {

/// c*eta + d*f in Pic(S) = Z eta + Z f.
struct DivisorClass {
  Int c = 0;
  Int d = 0;

  static constexpr DivisorClass eta() { return {1, 0}; }
  static constexpr DivisorClass fiber() { return {0, 1}; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;

  friend DivisorClass operator+(DivisorClass x, DivisorClass y) {
    return {checked::add(x.c, y.c), checked::add(x.d, y.d)};
  }
  friend DivisorClass operator-(DivisorClass x, DivisorClass y) {
    return {checked::sub(x.c, y.c), checked::sub(x.d, y.d)};
  }
  friend DivisorClass operator*(Int k, DivisorClass x) {
    return {checked::mul(k, x.c), checked::mul(k, x.d)};
  }
  DivisorClass operator-() const { return {checked::neg(c), checked::neg(d)}; }

  /// "(c,d)"
  std::string to_string() const;
};

std::ostream& operator<<(std::ostream& os, const DivisorClass& D);

/// The scroll S(a,b) with 1 <= a <= b. Construction swaps a and b when given
/// in the other order, since S(a,b) and S(b,a) are the same surface.
class ScrollSurface {
 public:
  /// Throws PreconditionError unless a, b >= 1.
  ScrollSurface(Int a, Int b);

  Int a() const { return a_; }
  Int b() const { return b_; }
  /// e = b - a >= 0, the Hirzebruch invariant.
  Int e() const { return b_ - a_; }
  /// h.h = a + b, the degree of the image surface.
  Int degree() const { return a_ + b_; }

  /// Hyperplane class h = eta + b f.
  DivisorClass hyperplane() const { return {1, b_}; }
  /// First Chern class c1 = 2 eta + (e + 2) f.
  DivisorClass c1() const { return {2, e() + 2}; }
  /// Canonical class K = -c1.
  DivisorClass canonical() const { return -c1(); }
  /// deg c2 = 4 (c2 = 4 eta f, and eta.f = 1).
  static constexpr Int c2_degree() { return 4; }
  /// Source double curve of a general projection to P^3: (h.h - 4) h + c1.
  DivisorClass m2() const;

  friend bool operator==(const ScrollSurface&, const ScrollSurface&) = default;

 private:
  Int a_;
  Int b_;
};

/// Intersection number (c1 eta + d1 f).(c2 eta + d2 f) = c1 d2 + c2 d1 - e c1 c2.
Int intersect(const ScrollSurface& S, DivisorClass D1, DivisorClass D2);

/// Arithmetic genus from adjunction: 2g - 2 = D.(D - c1).
Int adjunction_genus(const ScrollSurface& S, DivisorClass D);

/// Degree of the image of D under the projection, D.h = d + a c.
Int degree_in_p3(const ScrollSurface& S, DivisorClass D);

}  // namespace scrollcurves
