#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "dynzsig/bigint.hpp"

namespace dynzsig {

/// Reduced fraction num/den with den >= 1. Immutable value type.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// "a" or "a/b", optionally signed.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return q_.get_num(); }
  const BigInt& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (domain_error on 0^-k).
  Rational pow(long exponent) const;
  Rational abs() const;

  std::string str() const;
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

}  // namespace dynzsig
