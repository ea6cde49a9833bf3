#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dynzsig/bigint.hpp"

namespace dynzsig {

struct Factorization;

/// Persistent store consulted by factor(). Only complete factorizations are
/// ever served from it.
class FactorMemo {
 public:
  virtual ~FactorMemo() = default;
  virtual const Factorization* lookup(const BigInt& n) = 0;
  virtual void store(const BigInt& n, const Factorization& f) = 0;
};

/// Effort limits for factor(). Results are a deterministic function of the
/// input and these fields.
struct FactorBudget {
  std::uint64_t trial_bound = 1'000'000;   // trial division by every prime <= this
  std::uint64_t rho_iterations = 1'000'000;  // Pollard-Brent steps per composite
  std::uint64_t seed = 0x5eed;
  /// Remainders longer than this (decimal digits) are left unfactored after
  /// trial division: neither primality testing nor rho is attempted.
  std::size_t max_digits = 300;
  FactorMemo* memo = nullptr;
};

struct Factorization {
  std::map<BigInt, unsigned> factors;
  /// Product of the parts left unfactored; 1 when the factorization is complete.
  BigInt cofactor = 1;

  bool complete() const { return cofactor == 1; }
  /// prod p^e * cofactor; equals the factored magnitude.
  BigInt product() const;
};

/// Miller-Rabin on the first 13 prime bases, deterministic below 3.3e24.
/// Larger inputs additionally pass GMP's BPSW test, which is probabilistic.
bool is_probable_prime(const BigInt& n);

/// Factors |n| (n != 0). Incompleteness is reported through the cofactor.
Factorization factor(const BigInt& n, const FactorBudget& budget = {});

/// Pollard rho (Brent variant) on an odd composite n. Returns a nontrivial
/// divisor, or 0 when the iteration budget runs out.
BigInt pollard_brent(const BigInt& n, std::uint64_t iterations, std::uint64_t seed);

}  // namespace dynzsig
