#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "scrollcurves/checked.hpp"

namespace scrollcurves {

/// Exact rational number over checked 64-bit integers, always stored in
/// lowest terms with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int value) : num_(value) {}  // NOLINT: implicit from integers is intended
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  /// Integer value; throws ConsistencyError if not an integer.
  Int to_integer() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  /// Accepts "p", "-p", "p/q", "-p/q" with q != 0; throws InvalidInput.
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(Wide num, Wide den);

  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace scrollcurves
