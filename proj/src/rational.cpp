#include "dynzsig/rational.hpp"

#include <stdexcept>

namespace dynzsig {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("signed denominator in '" + std::string(text) + "'");
  return Rational(num, parse_bigint(den_text));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("Rational: zero to a negative power");
    return Rational(den(), num()).pow(-exponent);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
  if (is_integer()) return to_decimal(num());
  return to_decimal(num()) + "/" + to_decimal(den());
}

}  // namespace dynzsig
