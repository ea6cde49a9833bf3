#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dynzsig/rational.hpp"

namespace dynzsig {

/// Dense univariate polynomial over Q in the variable z.
///
/// Coefficients are stored from degree 0 upward with no trailing zeros, so
/// the zero polynomial has an empty coefficient list and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, unsigned degree);
  /// The identity map z.
  static Polynomial z();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of z^i (zero beyond the degree).
  Rational coeff(std::size_t i) const;
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial pow(unsigned exponent) const;
  /// this(g(z)).
  Polynomial compose(const Polynomial& g) const;
  Polynomial monic() const;

  bool has_integer_coefficients() const;
  /// Least common multiple of the coefficient denominators (1 for zero).
  BigInt denominator_lcm() const;

  /// Parseable text form, highest degree first, e.g. "3/2*z^2 - z + 1".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Rational poly_eval(const Polynomial& f, const Rational& x);

Polynomial derivative(const Polynomial& f);

/// Euclidean division over Q; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// psi(z) = phi(z + alpha) - alpha. Requires deg phi >= 1.
Polynomial conjugate(const Polynomial& phi, const Rational& alpha);

struct SquarefreeFactor {
  Polynomial factor;  // monic, squarefree
  unsigned multiplicity;
};

struct SquarefreeDecomposition {
  Rational unit;  // leading coefficient of f
  std::vector<SquarefreeFactor> factors;  // increasing multiplicity

  Polynomial reconstruct() const;
};

/// Yun's gcd-with-derivative cascade. Requires deg f >= 1.
SquarefreeDecomposition squarefree_decomposition(const Polynomial& f);

/// deg f >= 2 and every squarefree part occurs with multiplicity >= 2.
bool is_powerful(const Polynomial& f);

}  // namespace dynzsig
