#include "scrollcurves/rational.hpp"

#include <charconv>
#include <ostream>

namespace scrollcurves {
namespace {

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int parse_int(std::string_view text) {
  Int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range) {
    throw InvalidInput("integer out of range: '" + std::string(text) + "'");
  }
  if (ec != std::errc() || ptr != last || first == last) {
    throw InvalidInput("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(Int num, Int den) { *this = from_wide(num, den); }

Rational Rational::from_wide(Wide num, Wide den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd_wide(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = checked::narrow(num, "rational numerator");
  r.den_ = checked::narrow(den, "rational denominator");
  return r;
}

Int Rational::to_integer() const {
  if (den_ != 1) throw ConsistencyError("rational " + to_string() + " is not an integer");
  return num_;
}

Rational Rational::operator-() const { return from_wide(-static_cast<Wide>(num_), den_); }

Rational operator+(const Rational& x, const Rational& y) {
  return Rational::from_wide(static_cast<Wide>(x.num_) * y.den_ + static_cast<Wide>(y.num_) * x.den_,
                             static_cast<Wide>(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  return Rational::from_wide(static_cast<Wide>(x.num_) * y.num_, static_cast<Wide>(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw ConsistencyError("division by zero rational");
  return Rational::from_wide(static_cast<Wide>(x.num_) * y.den_, static_cast<Wide>(x.den_) * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  Wide lhs = static_cast<Wide>(x.num_) * y.den_;
  Wide rhs = static_cast<Wide>(y.num_) * x.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace scrollcurves
