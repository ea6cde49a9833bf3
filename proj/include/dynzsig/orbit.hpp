#pragma once

#include <cstddef>
#include <vector>

#include "dynzsig/divisibility.hpp"
#include "dynzsig/polynomial.hpp"

namespace dynzsig {

struct OrbitRecord {
  std::size_t n = 0;
  Rational value;  // psi^n(0) = phi^n(alpha) - alpha
  IdealPair ideal;
  PrimitiveSplit split;
  bool primitive = false;
};

enum class OrbitStop {
  Complete,             // all N records built
  Preperiodic,          // a value repeated or returned to 0; records stop before it
  DigitBudgetExceeded,  // an iterate grew past the digit budget; partial records
};

const char* to_string(OrbitStop stop);

struct OrbitOptions {
  /// An iterate whose numerator or denominator has more decimal digits than
  /// this is kept but not iterated further.
  std::size_t digit_budget = 100'000;
};

/// The sequence A_n of numerators of phi^n(alpha) - alpha, built by iterating
/// psi(z) = phi(z + alpha) - alpha at 0.
struct OrbitSequence {
  Polynomial phi;
  Rational alpha;
  Polynomial psi;
  std::vector<OrbitRecord> records;  // records[n - 1]
  OrbitStop stop = OrbitStop::Complete;
  /// Index at which a preperiodic repeat was detected (0 if none).
  std::size_t repeat_index = 0;

  std::size_t size() const { return records.size(); }
  /// Throws std::out_of_range when n is outside 1..size().
  const OrbitRecord& at(std::size_t n) const;
  std::vector<BigInt> numerators() const;
  std::vector<PrimitiveSplit> splits() const;
  int degree() const { return phi.degree(); }
};

/// Requires deg phi >= 2 and n_max >= 1.
OrbitSequence build_sequence(const Polynomial& phi, const Rational& alpha, std::size_t n_max,
                             const OrbitOptions& options = {});

/// Indices n <= n_max whose term has no primitive divisor.
std::vector<std::size_t> zsigmondy_set(const OrbitSequence& seq, std::size_t n_max);

enum class WanderingVerdict { Wandering, Preperiodic, Unknown };

const char* to_string(WanderingVerdict v);

/// Exact repeat search over `probe` iterations, then a canonical height test.
WanderingVerdict wandering_verdict(const Polynomial& phi, const Rational& alpha, std::size_t probe, double tol,
                                   std::size_t digit_budget = 100'000);

}  // namespace dynzsig
