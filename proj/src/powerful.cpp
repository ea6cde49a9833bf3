#include "dynzsig/powerful.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "dynzsig/factor.hpp"

namespace dynzsig {

PlaceSet s_integer_places(std::span<const Polynomial> factors) {
  if (factors.empty()) throw std::invalid_argument("s_integer_places: no factors");
  std::map<BigInt, bool> primes;
  for (const auto& f : factors) {
    for (const auto& c : f.coefficients()) {
      if (c.den() == 1) continue;
      for (const auto& [p, e] : factor(c.den()).factors) primes[p] = true;
    }
  }
  PlaceSet s;
  for (const auto& [p, unused] : primes) s.insert(Place::finite(p));
  return s;
}

Polynomial FamilyFactor::base() const { return Polynomial::z() * f + Polynomial::constant(Rational(a)); }

unsigned FamilySpec::max_exponent() const {
  unsigned e = 0;
  for (const auto& fac : factors) e = std::max(e, fac.e);
  return e;
}

BigInt FamilySpec::max_abs_a() const {
  BigInt best = 0;
  for (const auto& fac : factors)
    if (cmpabs(fac.a, best) > 0) best = abs_value(fac.a);
  return best;
}

FamilySpec family_spec_from_factors(std::span<const std::pair<Polynomial, unsigned>> factored) {
  FamilySpec spec;
  for (const auto& [base, e] : factored) {
    if (base.degree() < 1) throw HypothesisViolated("constant factor " + base.str());
    if (!base.has_integer_coefficients()) throw HypothesisViolated("factor " + base.str() + " is not in Z[z]");
    const Rational a = base.coeff(0);
    std::vector<Rational> shifted;
    for (std::size_t i = 1; i < base.coefficients().size(); ++i) shifted.push_back(base.coeff(i));
    spec.factors.push_back({Polynomial(std::move(shifted)), a.num(), e});
  }
  return spec;
}

bool has_integer_root(const Polynomial& f) {
  if (f.is_zero()) return true;
  if (f.degree() < 1) return false;
  if (!f.has_integer_coefficients()) {
    // Same roots as the integer multiple.
    return has_integer_root(Rational(f.denominator_lcm()) * f);
  }
  const BigInt c0 = f.coeff(0).num();
  if (sgn(c0) == 0) return true;
  const Factorization fac = factor(c0);
  if (!fac.complete()) throw std::runtime_error("has_integer_root: cannot factor f(0) = " + to_decimal(c0));
  // Enumerate every divisor of |f(0)|.
  std::vector<BigInt> divisors{1};
  for (const auto& [p, e] : fac.factors) {
    const std::size_t count = divisors.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  for (const auto& dv : divisors) {
    if (f(Rational(dv)).is_zero() || f(Rational(BigInt(-dv))).is_zero()) return true;
  }
  return false;
}

FamilyPolynomial family_build(const FamilySpec& spec) {
  if (spec.m() < 2) throw HypothesisViolated("m < 2");
  for (std::size_t i = 0; i < spec.m(); ++i) {
    const auto& fac = spec.factors[i];
    const std::string tag = "factor " + std::to_string(i + 1);
    if (fac.e < 2) throw HypothesisViolated(tag + ": e < 2");
    if (!fac.f.has_integer_coefficients()) throw HypothesisViolated(tag + ": f is not in Z[z]");
  }
  if (cmpabs(spec.max_abs_a(), 2) < 0) throw HypothesisViolated("all |a_i| <= 1");
  for (std::size_t i = 0; i < spec.m(); ++i) {
    if (has_integer_root(spec.factors[i].f))
      throw HypothesisViolated("factor " + std::to_string(i + 1) + ": f has an integer root");
  }
  Polynomial product = Polynomial::constant(1);
  for (const auto& fac : spec.factors) product = product * fac.base().pow(fac.e);
  return {product, spec};
}

const char* to_string(FamilyOrbit o) { return o == FamilyOrbit::Fixed ? "fixed" : "wandering"; }

FamilyOrbit fixed_or_wandering(const FamilySpec& spec) {
  for (const auto& fac : spec.factors)
    if (sgn(fac.a) == 0) return FamilyOrbit::Fixed;
  return FamilyOrbit::Wandering;
}

Rational growth_exponent(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("growth_exponent: m, n must be >= 1");
  BigInt two_n, m_pow;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, n);
  mpz_ui_pow_ui(m_pow.get_mpz_t(), m, n - 1);
  const BigInt mm(static_cast<unsigned long>(m));
  return Rational(two_n * (mm - 1) * m_pow + 2 * mm, 2 * mm - 1);
}

namespace {

/// |x| >= a^(p/q) exactly, i.e. |x|^q >= a^p, with a log pre-check.
bool at_least_power(const BigInt& x, const BigInt& a, const Rational& exponent) {
  if (a <= 1) return cmpabs(x, 1) >= 0;
  const double lhs = log_abs(x);
  const double rhs = exponent.to_double() * log_abs(a);
  const double margin = 1e-9 * std::max(1.0, std::fabs(rhs));
  if (lhs > rhs + margin) return true;
  if (lhs < rhs - margin) return false;
  BigInt left, right;
  mpz_pow_ui(left.get_mpz_t(), abs_value(x).get_mpz_t(), exponent.den().get_ui());
  mpz_pow_ui(right.get_mpz_t(), a.get_mpz_t(), exponent.num().get_ui());
  return left >= right;
}

}  // namespace

GrowthReport growth_check(const FamilySpec& spec, std::size_t n_max, std::size_t digit_budget) {
  const FamilyPolynomial fam = family_build(spec);
  if (fixed_or_wandering(spec) != FamilyOrbit::Wandering)
    throw HypothesisViolated("0 is a fixed point; growth_check needs a wandering orbit");
  OrbitOptions opts;
  opts.digit_budget = digit_budget;
  const OrbitSequence seq = build_sequence(fam.expanded, Rational(), n_max, opts);

  GrowthReport report;
  report.computed = seq.size();
  report.truncated = seq.size() < n_max;
  const BigInt a_max = spec.max_abs_a();
  const BigInt phi0 = seq.at(1).value.num();
  report.base_ok = cmpabs(phi0 * phi0, 4) >= 0;
  bool ok = report.base_ok && !report.truncated;
  for (std::size_t n = 1; n <= seq.size(); ++n) {
    const BigInt& v = seq.at(n).value.num();
    GrowthStep step;
    step.n = n;
    step.alpha_n = growth_exponent(spec.m(), n);
    step.exponent_floor = at_least_power(v, a_max, step.alpha_n);
    if (n >= 2) {
      const BigInt& prev = seq.at(n - 1).value.num();
      step.square_growth = cmpabs(v, prev * prev) > 0;
      const auto bits = mpz_sizeinbase(v.get_mpz_t(), 2);
      const auto prev_bits = mpz_sizeinbase(prev.get_mpz_t(), 2);
      step.bit_shadow = bits + 2 > 2 * prev_bits;
    } else {
      step.square_growth = true;
      step.bit_shadow = true;
    }
    ok = ok && step.square_growth && step.exponent_floor && step.bit_shadow;
    report.steps.push_back(std::move(step));
  }
  report.passed = ok;
  return report;
}

StabilityReport valuation_stability_check(const Polynomial& phi, const PlaceSet& places, std::size_t n_max,
                                          const FactorBudget& budget, std::size_t digit_budget) {
  if (!is_powerful(phi)) throw HypothesisViolated("phi is not powerful");
  OrbitOptions opts;
  opts.digit_budget = digit_budget;
  const OrbitSequence seq = build_sequence(phi, Rational(), n_max, opts);
  if (seq.stop == OrbitStop::Preperiodic) throw HypothesisViolated("0 is preperiodic");

  StabilityReport report;
  report.computed = seq.size();
  report.truncated = seq.size() < n_max;
  for (const auto& part : squarefree_decomposition(phi).factors) report.E = std::max(report.E, part.multiplicity);

  std::vector<BigInt> terms;
  for (const auto& rec : seq.records) terms.push_back(prime_to_s_norm(rec.ideal.A, places));
  report.atoms = valuation_atoms(terms, budget);

  for (const auto& atom : report.atoms) {
    const std::size_t r = atom.rank();
    if (r == 0) continue;
    for (std::size_t k = 1; k <= terms.size(); ++k) {
      const unsigned long expected = (k % r == 0) ? atom.ord[r - 1] : 0;
      if (atom.ord[k - 1] != expected)
        report.failures.push_back({atom.base, !atom.prime, r, k, expected, atom.ord[k - 1]});
    }
  }

  // phi^n(0) | phi'(phi^{n-1}(0))^E in the S-integers, checked as a modular
  // power so the E-th power is never formed.
  const Polynomial dphi = derivative(phi);
  Rational prev;  // phi^0(0)
  for (std::size_t n = 1; n <= terms.size(); ++n) {
    const Rational slope = dphi(prev);
    const BigInt& modulus = terms[n - 1];
    if (modulus > 1) {
      BigInt residue;
      const BigInt numer = abs_value(slope.num());
      mpz_powm_ui(residue.get_mpz_t(), numer.get_mpz_t(), report.E, modulus.get_mpz_t());
      // The slope's denominator only involves primes of S when phi is S-integral.
      BigInt den_part;
      mpz_gcd(den_part.get_mpz_t(), slope.den().get_mpz_t(), modulus.get_mpz_t());
      if (sgn(residue) != 0 || den_part != 1) report.divisibility_failures.push_back(n);
    }
    prev = seq.at(n).value;
  }
  return report;
}

}  // namespace dynzsig
