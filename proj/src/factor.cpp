#include "dynzsig/factor.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <vector>

namespace dynzsig {
namespace {

constexpr std::array<unsigned long, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const BigInt& n, unsigned long base) {
  const BigInt n_minus_1 = n - 1;
  BigInt d = n_minus_1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt x;
  const BigInt a(base);
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == n_minus_1) return true;
    if (x == 1) return false;
  }
  return false;
}

/// Primes up to a bound grouped into chunks whose products are used for
/// gcd-based trial division.
struct PrimeTable {
  std::vector<unsigned long> primes;
  std::vector<std::size_t> chunk_begin;
  std::vector<BigInt> chunk_product;
};

constexpr std::size_t kChunk = 256;

std::shared_ptr<const PrimeTable> prime_table(std::uint64_t bound) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const PrimeTable>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(bound); it != cache.end()) return it->second;

  auto table = std::make_shared<PrimeTable>();
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    table->primes.push_back(static_cast<unsigned long>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  for (std::size_t i = 0; i < table->primes.size(); i += kChunk) {
    table->chunk_begin.push_back(i);
    BigInt prod = 1;
    for (std::size_t j = i; j < std::min(i + kChunk, table->primes.size()); ++j) prod *= table->primes[j];
    table->chunk_product.push_back(std::move(prod));
  }
  cache.emplace(bound, table);
  return table;
}

void add_factor(Factorization& f, const BigInt& p, unsigned e) {
  if (e > 0) f.factors[p] += e;
}

/// n = root^k for the smallest k >= 2, if any. The root may itself be a
/// perfect power; callers recurse.
bool perfect_power(const BigInt& n, BigInt& root, unsigned& k) {
  if (mpz_perfect_power_p(n.get_mpz_t()) == 0) return false;
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned e = 2; e <= bits; ++e) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
      k = e;
      return true;
    }
  }
  return false;
}

}  // namespace

BigInt Factorization::product() const {
  BigInt out = cofactor;
  for (const auto& [p, e] : factors) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    out *= pe;
  }
  return out;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  for (unsigned long p : kWitnesses) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  for (unsigned long p : kWitnesses)
    if (!miller_rabin(n, p)) return false;
  static const BigInt kDeterministicLimit("3317044064679887385961981", 10);
  if (n < kDeterministicLimit) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 10) != 0;
}

BigInt pollard_brent(const BigInt& n, std::uint64_t iterations, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t spent = 0;
  const std::uint64_t m = 128;
  BigInt c, y, x, ys, q, g, diff;
  auto step = [&](BigInt& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  auto pick = [&](BigInt& out) {
    const BigInt r(std::to_string(rng()), 10);
    out = r % (n - 3) + 1;
  };
  while (spent < iterations) {
    pick(c);
    pick(y);
    g = 1;
    q = 1;
    std::uint64_t r = 1;
    while (g == 1 && spent < iterations) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) step(y);
      spent += r;
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        const std::uint64_t lim = std::min(m, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          step(y);
          diff = x - y;
          q *= diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        spent += lim;
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n || g == 0) {
      // Batched product collapsed; replay one step at a time.
      do {
        step(ys);
        diff = x - ys;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        ++spent;
      } while (g == 1);
    }
    if (g != n && g != 1 && g != 0) return g;
  }
  return 0;
}

namespace {

Factorization factor_uncached(const BigInt& n, const FactorBudget& budget) {
  Factorization out;
  BigInt m = abs_value(n);

  // Trial division via gcd against chunk products.
  if (budget.trial_bound >= 2 && m > 1) {
    const auto table = prime_table(budget.trial_bound);
    BigInt g;
    for (std::size_t c = 0; c < table->chunk_product.size() && m > 1; ++c) {
      mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), table->chunk_product[c].get_mpz_t());
      if (g == 1) {
        // Remaining m has no prime factor <= the last prime of this chunk.
        const std::size_t last = std::min(table->chunk_begin[c] + kChunk, table->primes.size()) - 1;
        const BigInt p_last(table->primes[last]);
        if (m < p_last * p_last) break;
        continue;
      }
      const std::size_t end = std::min(table->chunk_begin[c] + kChunk, table->primes.size());
      for (std::size_t i = table->chunk_begin[c]; i < end; ++i) {
        const unsigned long p = table->primes[i];
        if (!mpz_divisible_ui_p(g.get_mpz_t(), p)) continue;
        const BigInt bp(p);
        const auto e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), bp.get_mpz_t());
        add_factor(out, bp, static_cast<unsigned>(e));
      }
    }
    if (m > 1) {
      const BigInt last_prime(table->primes.empty() ? 1UL : table->primes.back());
      if (m < last_prime * last_prime) {
        add_factor(out, m, 1);
        m = 1;
      }
    }
  }
  if (m == 1) return out;
  if (approx_decimal_digits(m) > budget.max_digits) {
    out.cofactor = m;
    return out;
  }

  std::vector<std::pair<BigInt, unsigned>> work{{m, 1}};
  std::uint64_t attempt = 0;
  while (!work.empty()) {
    auto [q, mult] = work.back();
    work.pop_back();
    if (q == 1) continue;
    if (is_probable_prime(q)) {
      add_factor(out, q, mult);
      continue;
    }
    BigInt root;
    unsigned k = 0;
    if (perfect_power(q, root, k)) {
      work.emplace_back(root, mult * k);
      continue;
    }
    const BigInt d = pollard_brent(q, budget.rho_iterations, budget.seed + attempt++);
    if (d == 0) {
      BigInt qe;
      mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), mult);
      out.cofactor *= qe;
      continue;
    }
    // Split d out completely so both parts are coprime.
    BigInt rest = q;
    const auto e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), d.get_mpz_t());
    work.emplace_back(d, mult * static_cast<unsigned>(e));
    if (rest > 1) work.emplace_back(rest, mult);
  }
  return out;
}

}  // namespace

Factorization factor(const BigInt& n, const FactorBudget& budget) {
  if (sgn(n) == 0) throw std::invalid_argument("factor: zero has no factorization");
  if (budget.memo == nullptr) return factor_uncached(n, budget);
  const BigInt m = abs_value(n);
  if (const Factorization* hit = budget.memo->lookup(m)) return *hit;
  Factorization out = factor_uncached(m, budget);
  if (m > 1) budget.memo->store(m, out);
  return out;
}

}  // namespace dynzsig
