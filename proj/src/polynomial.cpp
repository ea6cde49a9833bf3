#include "dynzsig/polynomial.hpp"

#include <stdexcept>

namespace dynzsig {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::z() { return monomial(1, 1); }

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational();
}

Rational Polynomial::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

BigInt Polynomial::denominator_lcm() const {
  BigInt l = 1;
  for (const auto& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  return l;
}

bool Polynomial::has_integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (!c.is_integer()) return false;
  return true;
}

Rational Polynomial::operator()(const Rational& x) const {
  if (coeffs_.empty()) return Rational();
  // Scale to integer coefficients and evaluate homogeneously in (a, b) so the
  // result is reduced once instead of at every Horner step.
  const BigInt scale = denominator_lcm();
  const std::size_t d = coeffs_.size() - 1;
  std::vector<BigInt> ints(coeffs_.size());
  for (std::size_t i = 0; i <= d; ++i) ints[i] = coeffs_[i].num() * (scale / coeffs_[i].den());

  const BigInt& a = x.num();
  const BigInt& b = x.den();
  BigInt acc = ints[d];
  if (b == 1) {
    for (std::size_t i = d; i-- > 0;) acc = acc * a + ints[i];
    return Rational(acc, scale);
  }
  BigInt bpow = 1;
  for (std::size_t i = d; i-- > 0;) {
    bpow *= b;
    acc = acc * a + ints[i] * bpow;
  }
  return Rational(acc, scale * bpow);
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator*(const Rational& c, const Polynomial& a) { return Polynomial::constant(c) * a; }

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::compose(const Polynomial& g) const {
  Polynomial acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * g + constant(coeffs_[i]);
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Rational inv = Rational(1) / leading();
  return inv * *this;
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = c.abs();
    const bool unit = mag == Rational(1);
    if (k == 0) {
      out += mag.str();
    } else {
      if (!unit) out += mag.str() + "*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Rational poly_eval(const Polynomial& f, const Rational& x) { return f(x); }

Polynomial derivative(const Polynomial& f) {
  if (f.degree() < 1) return {};
  std::vector<Rational> v(static_cast<std::size_t>(f.degree()));
  for (std::size_t i = 1; i <= v.size(); ++i) v[i - 1] = f.coeff(i) * Rational(static_cast<long>(i));
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(a.coefficients().begin(), a.coefficients().end());
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead_inv = Rational(1) / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] * lead_inv;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(static_cast<std::size_t>(j));
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial conjugate(const Polynomial& phi, const Rational& alpha) {
  if (phi.degree() < 1) throw std::invalid_argument("conjugate: degree must be >= 1");
  const Polynomial shift({alpha, Rational(1)});
  return phi.compose(shift) - Polynomial::constant(alpha);
}

Polynomial SquarefreeDecomposition::reconstruct() const {
  Polynomial out = Polynomial::constant(unit);
  for (const auto& [f, m] : factors) out = out * f.pow(m);
  return out;
}

SquarefreeDecomposition squarefree_decomposition(const Polynomial& f) {
  if (f.degree() < 1) throw std::invalid_argument("squarefree_decomposition: degree must be >= 1");
  SquarefreeDecomposition out{f.leading(), {}};
  const Polynomial monic_f = f.monic();
  const Polynomial df = derivative(monic_f);
  Polynomial a = gcd(monic_f, df);
  Polynomial b = divmod(monic_f, a).first;
  Polynomial c = divmod(df, a).first;
  Polynomial d = c - derivative(b);
  unsigned i = 1;
  while (b.degree() >= 1) {
    Polynomial g = gcd(b, d);
    if (g.degree() >= 1) out.factors.push_back({g, i});
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - derivative(b);
    ++i;
  }
  return out;
}

bool is_powerful(const Polynomial& f) {
  if (f.degree() < 2) return false;
  for (const auto& part : squarefree_decomposition(f).factors)
    if (part.multiplicity < 2) return false;
  return true;
}

}  // namespace dynzsig
