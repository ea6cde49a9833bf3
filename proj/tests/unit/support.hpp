#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dynzsig/parse.hpp"
#include "dynzsig/polynomial.hpp"

namespace testing {

using dynzsig::BigInt;
using dynzsig::Polynomial;
using dynzsig::Rational;

inline Polynomial P(const std::string& text) { return dynzsig::parse_poly(text).poly; }

/// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 9, long max_den = 6) {
    return Rational(BigInt(integer(-bound, bound)), BigInt(integer(1, max_den)));
  }

  Rational nonzero_rational(long bound = 9, long max_den = 6) {
    Rational r;
    while (r.is_zero()) r = rational(bound, max_den);
    return r;
  }

  /// Degree exactly `deg`, integer coefficients in [lo, hi].
  Polynomial int_poly(int deg, long lo, long hi) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(integer(lo, hi));
    while (c.back().is_zero()) c.back() = Rational(integer(lo, hi));
    return Polynomial(std::move(c));
  }

  Polynomial rat_poly(int deg) {
    std::vector<Rational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rational());
    while (c.back().is_zero()) c.back() = rational();
    return Polynomial(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Independent oracles on raw mpq_class coefficient vectors (low degree first).

using QVec = std::vector<mpq_class>;

inline QVec qvec(const Polynomial& f) {
  QVec out;
  for (const auto& c : f.coefficients()) out.push_back(c.raw());
  return out;
}

inline QVec qmul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline mpq_class qeval(const QVec& a, const mpq_class& x) {
  mpq_class acc = 0, xp = 1;
  for (const auto& c : a) {
    acc += c * xp;
    xp *= x;
  }
  return acc;
}

inline bool qeq(const QVec& a, const Polynomial& f) {
  QVec b = qvec(f);
  QVec a2 = a;
  while (!a2.empty() && a2.back() == 0) a2.pop_back();
  return a2 == b;
}

}  // namespace testing
