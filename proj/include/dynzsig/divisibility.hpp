#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dynzsig/factor.hpp"
#include "dynzsig/place.hpp"
#include "dynzsig/rational.hpp"

namespace dynzsig {

/// Coprime integers (A, B) with x = +-A / B; over Q these are the integral
/// ideals of the numerator and denominator.
struct IdealPair {
  BigInt A;
  BigInt B = 1;
};

IdealPair ideal_pair(const Rational& x);

/// Largest e with p^e | n. Requires n >= 1 and p >= 2.
unsigned long valuation(const BigInt& n, const BigInt& p);

/// A with every prime of S divided out. Requires A >= 1.
BigInt prime_to_s_norm(const BigInt& a, const PlaceSet& places);

/// a_n = primitive_part * nonprimitive_part, split without factoring.
struct PrimitiveSplit {
  BigInt primitive_part = 1;
  BigInt nonprimitive_part = 1;
};

/// Strips from a_n the full power of every prime it shares with an earlier
/// term by repeated gcds. Requires a_n >= 1 and every history term >= 1.
PrimitiveSplit primitive_split(const BigInt& a_n, std::span<const BigInt> history);

bool has_primitive_divisor(const BigInt& a_n, std::span<const BigInt> history);

/// Factor refinement: pairwise coprime integers > 1 such that every input is
/// a product of powers of them. Output is sorted ascending.
std::vector<BigInt> coprime_base(std::span<const BigInt> values);

/// One prime, or a composite block whose prime factors all share the same
/// valuation pattern across the sequence (up to a constant multiple).
struct ValuationAtom {
  BigInt base;
  bool prime = false;
  std::vector<unsigned long> ord;  // ord[n - 1] = exponent of base in term n
  /// Least index with a positive exponent, 0 if none.
  std::size_t rank() const;
};

/// Splits each term into explicit primes (budgeted factorization) and
/// coprime-base blocks for whatever factorization left over.
std::vector<ValuationAtom> valuation_atoms(std::span<const BigInt> terms, const FactorBudget& budget);

struct RigidViolation {
  BigInt prime;
  bool composite_block = false;
  int condition = 0;  // 1: gcd condition, 2: valuation stability
  std::vector<std::size_t> indices;
  std::vector<unsigned long> valuations;
};

struct RigidReport {
  bool verified = false;
  std::size_t checked_pairs = 0;
  std::vector<BigInt> tested_primes;
  /// Composite remainders not split into primes. Their prime factors are
  /// still checked together as blocks, and block violations are reported.
  std::vector<BigInt> untested_primes;
  std::vector<RigidViolation> violations;
};

/// Checks both S-rigid divisibility conditions for every prime outside S
/// exposed by factoring the terms. Requires every term >= 1.
RigidReport rigid_check(std::span<const BigInt> sequence, const PlaceSet& places,
                        const FactorBudget& budget = {});

/// N_S(N_n) <= N_S(prod_{i | n, i < n} P_i), with splits[i - 1] for index i.
bool nonprimitive_bound_check(std::size_t n, std::span<const PrimitiveSplit> splits, const PlaceSet& places);

}  // namespace dynzsig
