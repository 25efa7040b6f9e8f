#include "scrollcurves/chow.hpp"

#include <ostream>
#include <utility>

namespace scrollcurves {

std::string DivisorClass::to_string() const {
  return "(" + std::to_string(c) + "," + std::to_string(d) + ")";
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& D) { return os << D.to_string(); }

ScrollSurface::ScrollSurface(Int a, Int b) : a_(a), b_(b) {
  if (a < 1 || b < 1) {
    throw PreconditionError("scroll S(" + std::to_string(a) + "," + std::to_string(b) +
                            ") needs a, b >= 1");
  }
  if (a_ > b_) std::swap(a_, b_);
  // keep a + b and the M2 coefficients inside the checked range
  checked::add(a_, b_);
}

DivisorClass ScrollSurface::m2() const {
  const DivisorClass h = hyperplane();
  const Int hh = intersect(*this, h, h);
  return checked::sub(hh, 4) * h + c1();
}

Int intersect(const ScrollSurface& S, DivisorClass D1, DivisorClass D2) {
  const Wide value = static_cast<Wide>(D1.c) * D2.d + static_cast<Wide>(D2.c) * D1.d -
                     static_cast<Wide>(S.e()) * D1.c * D2.c;
  return checked::narrow(value, "intersection number");
}

Int adjunction_genus(const ScrollSurface& S, DivisorClass D) {
  const Wide twice = static_cast<Wide>(intersect(S, D, D)) - intersect(S, D, S.c1());
  // D.D - D.c1 is even for every integral class
  return checked::narrow(1 + checked::exact_div(twice, 2, "adjunction genus"), "adjunction genus");
}

Int degree_in_p3(const ScrollSurface& S, DivisorClass D) { return intersect(S, D, S.hyperplane()); }

}  // namespace scrollcurves
