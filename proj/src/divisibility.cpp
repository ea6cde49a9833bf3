#include "dynzsig/divisibility.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dynzsig {

IdealPair ideal_pair(const Rational& x) { return {abs_value(x.num()), x.den()}; }

unsigned long valuation(const BigInt& n, const BigInt& p) {
  if (sgn(n) <= 0) throw std::invalid_argument("valuation: n must be >= 1");
  if (p < 2) throw std::invalid_argument("valuation: p must be >= 2");
  BigInt rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

BigInt prime_to_s_norm(const BigInt& a, const PlaceSet& places) {
  if (sgn(a) <= 0) throw std::invalid_argument("prime_to_s_norm: A must be >= 1");
  BigInt out = a;
  for (const auto& p : places.finite_primes()) mpz_remove(out.get_mpz_t(), out.get_mpz_t(), p.get_mpz_t());
  return out;
}

PrimitiveSplit primitive_split(const BigInt& a_n, std::span<const BigInt> history) {
  if (sgn(a_n) <= 0) throw std::invalid_argument("primitive_split: A_n must be >= 1");
  BigInt current = a_n;
  BigInt g;
  for (const auto& h : history) {
    if (sgn(h) <= 0) throw std::invalid_argument("primitive_split: history terms must be >= 1");
    if (current == 1) break;
    mpz_gcd(g.get_mpz_t(), current.get_mpz_t(), h.get_mpz_t());
    while (g != 1) {
      mpz_divexact(current.get_mpz_t(), current.get_mpz_t(), g.get_mpz_t());
      mpz_gcd(g.get_mpz_t(), current.get_mpz_t(), g.get_mpz_t());
    }
  }
  PrimitiveSplit out;
  out.primitive_part = current;
  mpz_divexact(out.nonprimitive_part.get_mpz_t(), a_n.get_mpz_t(), current.get_mpz_t());
  return out;
}

bool has_primitive_divisor(const BigInt& a_n, std::span<const BigInt> history) {
  return primitive_split(a_n, history).primitive_part > 1;
}

std::vector<BigInt> coprime_base(std::span<const BigInt> values) {
  std::vector<BigInt> base;
  for (const auto& v : values)
    if (abs_value(v) > 1) base.push_back(abs_value(v));

  BigInt g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        mpz_gcd(g.get_mpz_t(), base[i].get_mpz_t(), base[j].get_mpz_t());
        if (g == 1) continue;
        // a, b -> a/g, g, b/g; the product strictly drops so this terminates.
        BigInt a = base[i] / g;
        BigInt b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto* x : {&a, &g, &b})
          if (*x > 1) base.push_back(*x);
        changed = true;
      }
    }
  }
  std::sort(base.begin(), base.end());
  return base;
}

std::size_t ValuationAtom::rank() const {
  for (std::size_t i = 0; i < ord.size(); ++i)
    if (ord[i] > 0) return i + 1;
  return 0;
}

std::vector<ValuationAtom> valuation_atoms(std::span<const BigInt> terms, const FactorBudget& budget) {
  std::vector<Factorization> parts;
  parts.reserve(terms.size());
  std::map<BigInt, bool> primes;
  for (const auto& t : terms) {
    if (sgn(t) <= 0) throw std::invalid_argument("valuation_atoms: terms must be >= 1");
    parts.push_back(factor(t, budget));
    for (const auto& [p, e] : parts.back().factors) primes[p] = true;
  }
  // A prime found in one term may still hide in another term's cofactor.
  std::vector<BigInt> leftovers;
  for (auto& f : parts) {
    for (const auto& [p, unused] : primes) {
      if (f.cofactor == 1) break;
      const auto e = mpz_remove(f.cofactor.get_mpz_t(), f.cofactor.get_mpz_t(), p.get_mpz_t());
      if (e > 0) f.factors[p] += static_cast<unsigned>(e);
    }
    if (f.cofactor > 1) leftovers.push_back(f.cofactor);
  }

  std::vector<ValuationAtom> atoms;
  for (const auto& [p, unused] : primes) {
    ValuationAtom a{p, true, {}};
    for (const auto& f : parts) {
      const auto it = f.factors.find(p);
      a.ord.push_back(it == f.factors.end() ? 0 : it->second);
    }
    atoms.push_back(std::move(a));
  }
  for (const auto& q : coprime_base(leftovers)) {
    ValuationAtom a{q, false, {}};
    BigInt rest;
    for (const auto& f : parts)
      a.ord.push_back(f.cofactor == 1 ? 0 : mpz_remove(rest.get_mpz_t(), f.cofactor.get_mpz_t(), q.get_mpz_t()));
    atoms.push_back(std::move(a));
  }
  return atoms;
}

RigidReport rigid_check(std::span<const BigInt> sequence, const PlaceSet& places, const FactorBudget& budget) {
  std::vector<BigInt> terms;
  terms.reserve(sequence.size());
  for (const auto& t : sequence) terms.push_back(prime_to_s_norm(t, places));

  RigidReport report;
  const std::size_t n_terms = terms.size();
  for (const auto& atom : valuation_atoms(terms, budget)) {
    (atom.prime ? report.tested_primes : report.untested_primes).push_back(atom.base);
    std::vector<std::size_t> support;
    for (std::size_t i = 1; i <= n_terms; ++i)
      if (atom.ord[i - 1] > 0) support.push_back(i);

    // (1) p | a_m and p | a_n imply p | a_gcd(m, n).
    for (std::size_t x = 0; x < support.size(); ++x) {
      for (std::size_t y = x; y < support.size(); ++y) {
        ++report.checked_pairs;
        const std::size_t m = support[x];
        const std::size_t n = support[y];
        const std::size_t g = std::gcd(m, n);
        if (atom.ord[g - 1] == 0) {
          report.violations.push_back({atom.base, !atom.prime, 1, {m, n, g},
                                       {atom.ord[m - 1], atom.ord[n - 1], atom.ord[g - 1]}});
        }
      }
    }
    // (2) ord(a_km) = ord(a_m) whenever ord(a_m) > 0.
    for (const std::size_t m : support) {
      for (std::size_t km = 2 * m; km <= n_terms; km += m) {
        if (atom.ord[km - 1] != atom.ord[m - 1]) {
          report.violations.push_back(
              {atom.base, !atom.prime, 2, {m, km}, {atom.ord[m - 1], atom.ord[km - 1]}});
        }
      }
    }
  }
  report.verified = report.violations.empty();
  return report;
}

bool nonprimitive_bound_check(std::size_t n, std::span<const PrimitiveSplit> splits, const PlaceSet& places) {
  if (n < 2 || n > splits.size()) throw std::invalid_argument("nonprimitive_bound_check: index out of range");
  BigInt divisor_product = 1;
  for (std::size_t i = 1; i < n; ++i)
    if (n % i == 0) divisor_product *= splits[i - 1].primitive_part;
  return prime_to_s_norm(splits[n - 1].nonprimitive_part, places) <= prime_to_s_norm(divisor_product, places);
}

}  // namespace dynzsig
