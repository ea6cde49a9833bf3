#include "dynzsig/proj_point.hpp"

#include <stdexcept>

namespace dynzsig {

ProjPoint::ProjPoint(const BigInt& x, const BigInt& y) : x_(x), y_(y) {
  if (sgn(x_) == 0 && sgn(y_) == 0) throw std::invalid_argument("ProjPoint: [0 : 0] is not a point");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), x_.get_mpz_t(), y_.get_mpz_t());
  x_ /= g;
  y_ /= g;
  if (sgn(y_) < 0 || (sgn(y_) == 0 && sgn(x_) < 0)) {
    x_ = -x_;
    y_ = -y_;
  }
}

std::string ProjPoint::str() const { return "[" + to_decimal(x_) + " : " + to_decimal(y_) + "]"; }

}  // namespace dynzsig
