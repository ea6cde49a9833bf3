#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dynzsig/divisibility.hpp"
#include "dynzsig/errors.hpp"
#include "dynzsig/orbit.hpp"
#include "dynzsig/polynomial.hpp"

namespace dynzsig {

/// {infinity} together with every prime dividing a coefficient denominator of
/// one of the factors. Integer-coefficient factors give {infinity}.
PlaceSet s_integer_places(std::span<const Polynomial> factors);

/// One factor (z f(z) + a)^e of the product family.
struct FamilyFactor {
  Polynomial f;  // integer coefficients
  BigInt a;
  unsigned e = 2;

  Polynomial base() const;  // z f(z) + a
};

struct FamilySpec {
  std::vector<FamilyFactor> factors;

  std::size_t m() const { return factors.size(); }
  unsigned max_exponent() const;  // E
  BigInt max_abs_a() const;
};

/// Splits a factored form prod base_i^{e_i} into family factors, reading
/// a_i = base_i(0) and f_i = (base_i - a_i) / z. Throws HypothesisViolated when
/// a base does not have integer coefficients.
FamilySpec family_spec_from_factors(std::span<const std::pair<Polynomial, unsigned>> factored);

struct FamilyPolynomial {
  Polynomial expanded;
  FamilySpec spec;
};

/// Checks the family hypotheses and expands the product. Throws
/// HypothesisViolated naming the first failed condition.
FamilyPolynomial family_build(const FamilySpec& spec);

/// True when some f has a root in Z (tested over the divisors of f(0)).
bool has_integer_root(const Polynomial& f);

enum class FamilyOrbit { Fixed, Wandering };

const char* to_string(FamilyOrbit o);

/// 0 is fixed iff phi(0) = prod a_i^{e_i} = 0, and wandering otherwise.
FamilyOrbit fixed_or_wandering(const FamilySpec& spec);

/// alpha_n = (2^n (m-1) m^(n-1) + 2m) / (2m - 1) as an exact fraction.
Rational growth_exponent(std::size_t m, std::size_t n);

struct GrowthStep {
  std::size_t n = 0;
  bool square_growth = false;  // |phi^n(0)| > |phi^{n-1}(0)|^2 (n >= 2)
  Rational alpha_n;
  bool exponent_floor = false;  // |phi^n(0)| >= max_j |a_j|^alpha_n
  bool bit_shadow = false;      // bits(A_n) > 2 bits(A_{n-1}) - 2 (n >= 2)
};

struct GrowthReport {
  bool passed = false;
  bool base_ok = false;  // |phi(0)|^2 >= 4
  std::size_t computed = 0;
  bool truncated = false;  // digit budget stopped the orbit before N
  std::vector<GrowthStep> steps;
};

/// Requires 0 to be wandering for the family.
GrowthReport growth_check(const FamilySpec& spec, std::size_t n_max, std::size_t digit_budget = 100'000);

struct StabilityFailure {
  BigInt base;
  bool composite_block = false;
  std::size_t rank = 0;
  std::size_t index = 0;
  unsigned long expected = 0;
  unsigned long found = 0;
};

struct StabilityReport {
  std::size_t computed = 0;
  unsigned E = 0;
  std::vector<ValuationAtom> atoms;
  std::vector<StabilityFailure> failures;
  /// Indices n where prime-to-S(phi^n(0)) does not divide phi'(phi^{n-1}(0))^E.
  std::vector<std::size_t> divisibility_failures;
  /// Prime factors that could not be placed in any atom. Always empty: every
  /// leftover composite lands in a coprime-base block.
  std::vector<BigInt> untestable;
  bool truncated = false;

  bool passed() const { return failures.empty() && divisibility_failures.empty(); }
};

/// For every prime (or coprime block) outside S dividing some phi^n(0),
/// n <= N, with r its first index: the exponent at jr equals the exponent at
/// r, and is zero at indices not divisible by r. Requires phi powerful.
StabilityReport valuation_stability_check(const Polynomial& phi, const PlaceSet& places, std::size_t n_max,
                                          const FactorBudget& budget = {}, std::size_t digit_budget = 100'000);

}  // namespace dynzsig
