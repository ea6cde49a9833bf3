#include "dynzsig/rational_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynzsig {

RationalMap::RationalMap(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw std::invalid_argument("RationalMap: zero denominator");
  const Polynomial g = gcd(numerator, denominator);
  Polynomial n = numerator.is_zero() ? numerator : divmod(numerator, g).first;
  Polynomial d = numerator.is_zero() ? Polynomial::constant(1) : divmod(denominator, g).first;

  BigInt scale = 1;
  for (const auto* p : {&n, &d}) {
    const BigInt l = p->denominator_lcm();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), l.get_mpz_t());
  }
  BigInt content = 0;
  for (const auto* p : {&n, &d}) {
    for (const auto& c : p->coefficients()) {
      const BigInt v = c.num() * (scale / c.den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
  }
  Rational factor(scale, content);
  if (d.leading().sign() < 0) factor = -factor;
  num_ = factor * n;
  den_ = factor * d;
}

int RationalMap::degree() const { return std::max(num_.degree(), den_.degree()); }

std::vector<BigInt> RationalMap::coefficient_vector() const {
  std::vector<BigInt> out;
  for (const auto* p : {&num_, &den_})
    for (const auto& c : p->coefficients()) out.push_back(c.num());
  return out;
}

std::string RationalMap::str() const {
  if (den_ == Polynomial::constant(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RationalMap reverse_map(const Polynomial& psi) {
  const int d = psi.degree();
  if (d < 1) throw std::invalid_argument("reverse_map: degree must be >= 1");
  std::vector<Rational> rev(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) rev[static_cast<std::size_t>(d - i)] = psi.coeff(static_cast<std::size_t>(i));
  return RationalMap(Polynomial::monomial(1, static_cast<unsigned>(d)), Polynomial(std::move(rev)));
}

}  // namespace dynzsig
