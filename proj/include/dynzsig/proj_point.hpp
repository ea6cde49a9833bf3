#pragma once

#include <string>

#include "dynzsig/rational.hpp"

namespace dynzsig {

/// A point [x : y] of P^1(Q) with coprime integer coordinates.
///
/// Sign normal form: y >= 0, and x > 0 when y == 0. Infinity is [1 : 0]; the
/// affine coordinate of [x : y] is x / y.
class ProjPoint {
 public:
  /// Throws std::invalid_argument for (0, 0).
  ProjPoint(const BigInt& x, const BigInt& y);

  static ProjPoint infinity() { return {1, 0}; }
  /// The point whose affine coordinate is z, i.e. [num : den].
  static ProjPoint affine(const Rational& z) { return {z.num(), z.den()}; }
  /// The point [1 : r], i.e. sigma(r) with sigma(z) = 1/z.
  static ProjPoint one_over(const Rational& r) { return {r.den(), r.num()}; }

  const BigInt& x() const { return x_; }
  const BigInt& y() const { return y_; }
  bool is_infinity() const { return sgn(y_) == 0; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
  std::string str() const;

 private:
  BigInt x_;
  BigInt y_;
};

}  // namespace dynzsig
