#pragma once

#include <string>
#include <vector>

#include "dynzsig/polynomial.hpp"

namespace dynzsig {

/// numerator(z) / denominator(z), stored reduced.
///
/// Normal form: the two coefficient lists together form a primitive integer
/// vector and the denominator's leading coefficient is positive. Equality is
/// therefore structural.
class RationalMap {
 public:
  /// Throws std::invalid_argument if both are zero or the denominator is zero.
  RationalMap(const Polynomial& numerator, const Polynomial& denominator);
  explicit RationalMap(const Polynomial& p) : RationalMap(p, Polynomial::constant(1)) {}

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  int degree() const;

  /// Joint integer coefficient vector (numerator then denominator, low to high).
  std::vector<BigInt> coefficient_vector() const;

  friend bool operator==(const RationalMap& a, const RationalMap& b) = default;
  std::string str() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

/// The conjugate of psi by sigma(z) = 1/z, i.e. z^d / (z^d psi(1/z)).
RationalMap reverse_map(const Polynomial& psi);

}  // namespace dynzsig
