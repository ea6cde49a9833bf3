// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dynzsig/bound.hpp"
#include "dynzsig/commands.hpp"
#include "dynzsig/divisibility.hpp"
#include "dynzsig/factor.hpp"
#include "dynzsig/heights.hpp"
#include "dynzsig/orbit.hpp"
#include "dynzsig/parse.hpp"
#include "dynzsig/powerful.hpp"

using namespace dynzsig;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    } else if (!cond) {
      detail += "; " + what;
    }
  }
};

Polynomial P(const std::string& s) { return parse_poly(s).poly; }

const char* kFamilyA = "(z+2)^2*(z+3)^2";
const char* kFamilyB = "(z*(z^2+2)+3)^2*(z+5)^3";

FamilySpec family(const std::string& text) { return family_spec_from_factors(*parse_poly(text).factored); }

PlaceSet family_places(const FamilySpec& spec) {
  std::vector<Polynomial> bases;
  for (const auto& f : spec.factors) bases.push_back(f.base());
  return s_integer_places(bases);
}

// Split of A_n from complete factorizations of A_1..A_n.
PrimitiveSplit oracle_split(const std::vector<Factorization>& facs, std::size_t n) {
  PrimitiveSplit s;
  for (const auto& [p, e] : facs[n - 1].factors) {
    bool seen = false;
    for (std::size_t i = 0; i + 1 < n && !seen; ++i) seen = facs[i].factors.count(p) > 0;
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    (seen ? s.nonprimitive_part : s.primitive_part) *= pe;
  }
  return s;
}

bool is_composite_index(std::size_t n) {
  for (std::size_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return true;
  return false;
}

Outcome criterion1() {
  Outcome o;
  const OrbitSequence seq = build_sequence(P("z^2+1"), Rational(), 8);
  o.require(seq.size() == 8, "orbit stopped early");
  o.require(zsigmondy_set(seq, 8) == std::vector<std::size_t>{1}, "zsigmondy set is not {1}");
  for (std::size_t n = 2; n <= seq.size(); ++n)
    o.require(seq.at(n).split.primitive_part > 1, "no primitive part at n=" + std::to_string(n));
  const BigInt limit("1000000000000");
  std::vector<Factorization> facs;
  std::size_t crosschecked = 0;
  for (std::size_t n = 1; n <= seq.size() && abs(seq.at(n).ideal.A) < limit; ++n) {
    facs.push_back(factor(abs(seq.at(n).ideal.A)));
    o.require(facs.back().complete(), "factorization incomplete at n=" + std::to_string(n));
    const PrimitiveSplit s = oracle_split(facs, n);
    o.require(s.primitive_part == seq.at(n).split.primitive_part &&
                  s.nonprimitive_part == seq.at(n).split.nonprimitive_part,
              "split disagrees with factorization at n=" + std::to_string(n));
    ++crosschecked;
  }
  o.require(crosschecked == 7, "expected 7 terms below 10^12");
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const char* text : {kFamilyA, kFamilyB}) {
    const FamilySpec spec = family(text);
    const FamilyPolynomial fam = family_build(spec);
    o.require(fixed_or_wandering(spec) == FamilyOrbit::Wandering, std::string(text) + ": orbit of 0 not wandering");
    const OrbitSequence seq = build_sequence(fam.expanded, Rational(), 6);
    o.require(seq.size() == 6, std::string(text) + ": only " + std::to_string(seq.size()) + " terms");
    o.require(zsigmondy_set(seq, 6).empty(), std::string(text) + ": zsigmondy set not empty");
    const GrowthReport g = growth_check(spec, 6);
    o.require(g.passed && g.computed == 6 && !g.truncated, std::string(text) + ": growth check failed");
    for (const auto& s : g.steps)
      o.require(s.square_growth && s.bit_shadow && s.exponent_floor,
                std::string(text) + ": growth step failed at n=" + std::to_string(s.n));
    // Independent check of the square growth on the raw numerators.
    for (std::size_t n = 2; n <= seq.size(); ++n) {
      const BigInt a = abs(seq.at(n).value.num()), b = abs(seq.at(n - 1).value.num());
      o.require(a > b * b, std::string(text) + ": |A_n| <= |A_{n-1}|^2 at n=" + std::to_string(n));
    }
  }
  return o;
}

const std::vector<const char*> kRigidPolys{"z^2+1", "z^2+2", "z^2-3"};

Outcome criterion3() {
  Outcome o;
  for (const char* f : kRigidPolys) {
    const OrbitSequence seq = build_sequence(P(f), Rational(), 7);
    o.require(seq.size() == 7, std::string(f) + ": orbit stopped early");
    const std::vector<BigInt> nums = seq.numerators();
    const RigidReport r = rigid_check(nums, PlaceSet{});
    o.require(r.verified, std::string(f) + ": not verified");
    o.require(r.violations.empty(), std::string(f) + ": violations");
    o.require(r.untested_primes.empty(), std::string(f) + ": untested primes");
  }
  return o;
}

Outcome criterion4(std::string& coverage) {
  Outcome o;
  struct Seq {
    std::string name;
    Polynomial phi;
    PlaceSet places;
  };
  std::vector<Seq> seqs;
  for (const char* f : {"z^2+1", "z^2+2", "z^2-3"}) seqs.push_back({f, P(f), PlaceSet{}});
  for (const char* text : {kFamilyA, kFamilyB}) {
    const FamilySpec spec = family(text);
    seqs.push_back({text, family_build(spec).expanded, family_places(spec)});
  }
  for (const auto& s : seqs) {
    const OrbitSequence seq = build_sequence(s.phi, Rational(), 8);
    const std::vector<PrimitiveSplit> splits = seq.splits();
    std::size_t checked = 0;
    for (std::size_t n = 4; n <= seq.size(); ++n) {
      if (!is_composite_index(n)) continue;
      o.require(nonprimitive_bound_check(n, splits, s.places), s.name + ": fails at n=" + std::to_string(n));
      ++checked;
    }
    coverage += (coverage.empty() ? "" : ", ") + s.name + " n<=" + std::to_string(seq.size());
    o.require(checked > 0, s.name + ": no composite index computed");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const HeightEstimate h = canonical_height(P("z^2"), Rational(2L), 1e-9);
  o.require(std::fabs(h.value - std::log(2.0)) <= 1e-9, "h(z^2, 2) off log 2");
  std::mt19937_64 rng(5);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  for (int i = 0; i < 50; ++i) {
    const int d = static_cast<int>(pick(2, 3));
    std::vector<Rational> c;
    for (int k = 0; k <= d; ++k) c.emplace_back(pick(-5, 5));
    if (c.back().is_zero()) c.back() = Rational(pick(0, 1) ? 1L : -1L);
    const Polynomial phi(c);
    const Rational x(BigInt(pick(-5, 5)), BigInt(pick(1, 4)));
    const double tol = 1e-7;
    const HeightEstimate hx = canonical_height(phi, x, tol);
    const HeightEstimate hpx = canonical_height(phi, phi(x), tol);
    o.require(std::fabs(hpx.value - d * hx.value) <= hpx.error_bound + d * hx.error_bound + 1e-12,
              "functional equation fails for " + phi.str());
    const Rational alpha(pick(-3, 3));
    const HeightEstimate hc = canonical_height(conjugate(phi, alpha), x - alpha, tol);
    o.require(std::fabs(hc.value - hx.value) <= hc.error_bound + hx.error_bound + 1e-12,
              "conjugation invariance fails for " + phi.str());
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(6);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const std::vector<long> pool{2, 3, 5, 7, 11, 13, 17};
  for (int i = 0; i < 200; ++i) {
    BigInt a = pick(-100000, 100000);
    if (a == 0) a = 1;
    const Rational beta(a, BigInt(pick(1, 100000)));
    PlaceSet S;
    for (long p : pool)
      if (pick(0, 1)) S.insert(Place::finite(p));
    // Height split: h = log N_S(den) + sum_{p in S} log^+|beta|_p + log^+|beta|_inf.
    BigInt rebuilt = prime_to_s_norm(beta.den(), S);
    double finite = 0.0;
    for (const auto& p : S.finite_primes()) {
      const unsigned long e = valuation(beta.den(), p);
      BigInt pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
      rebuilt *= pe;
      finite += local_height(beta, Place::finite(p));
    }
    o.require(rebuilt == beta.den(), "integer parts do not rebuild the denominator");
    const double lhs = weil_height(beta);
    const double rhs = log_abs(prime_to_s_norm(beta.den(), S)) + finite + local_height(beta, Place::infinity());
    o.require(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, lhs), "height split off for " + beta.str());

    // Weil height bounded by the local distances to infinity over all places
    // dividing numerator and denominator.
    std::vector<BigInt> primes;
    for (const BigInt& v : {BigInt(abs(beta.num())), beta.den()})
      if (v > 1)
        for (const auto& [p, e] : factor(v).factors) primes.push_back(p);
    const ProjPoint pt = ProjPoint::affine(beta);
    const double total = sum_local_at_infinity(pt, PlaceSet::from_primes(primes));
    o.require(weil_height(pt) <= total + 1e-12 * std::max(1.0, total), "local-sum inequality fails for " + beta.str());
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const char* f : {"z^3+1", "z^3+2"}) {
    const Polynomial phi = P(f);
    const OrbitSequence seq = build_sequence(phi, Rational(), 8);
    o.require(seq.size() == 8, std::string(f) + ": orbit stopped early");
    const double B = height_comparison_bound(seq.psi);
    const HeightEstimate hhat = canonical_height(seq.psi, Rational(), 1e-9);
    const PlaceSet S;
    std::size_t last_member = 0;
    for (std::size_t n = 1; n <= seq.size(); ++n) {
      o.require(height_upper_check(seq, n, B, hhat).holds(), std::string(f) + ": height upper fails n=" + std::to_string(n));
      o.require(norm_lower_check(seq, n, S, B, hhat).holds(), std::string(f) + ": norm lower fails n=" + std::to_string(n));
      const JMembership j = j_membership(seq, n, S, hhat);
      if (j.member || j.ambiguous) last_member = n;
    }
    o.require(last_member < 8, std::string(f) + ": J membership not eventually false");
  }
  return o;
}

Outcome criterion8() {
  Outcome o;
  BoundInputs in;
  in.d = 3;
  in.B = 1;
  in.hhat0 = 1;
  in.h_psi_tilde = 1;
  in.gamma = 1;
  in.s_size = 1;
  const double expected = 1.0 + std::log(8.0) / std::log(3.0) + 4.0 + 4.0 + std::log(2.0) / std::log(3.0);
  o.require(std::fabs(bound_M(in).M - expected) <= 1e-6, "M differs from direct arithmetic");
  o.require(std::fabs(bound_M(in).M - 11.5237) <= 1e-4, "M not ~11.5237");
  for (int d : {3, 4, 5}) {
    for (double B : {0.0, 0.1, 1.0, 2.5, 10.0}) {
      for (double h : {0.05, 0.5, 1.0, 4.0}) {
        const XEnumeration X = enumerate_X(d, B, h);
        const IEnumeration I = enumerate_I(d, B, h, 40);
        for (std::size_t n = 1; n <= 40; ++n) {
          const long double dn = std::pow(static_cast<long double>(d), static_cast<long double>(n));
          const long double x_gap = static_cast<long double>(8.0 * B / h) - dn;
          const long double i_gap = (static_cast<long double>(n) - 1) * B + h * (dn - d) / (d - 1) - 0.75L * h * dn;
          const bool in_x = std::find(X.members.begin(), X.members.end(), n) != X.members.end();
          const bool in_i = std::find(I.members.begin(), I.members.end(), n) != I.members.end();
          const long double tiny = 1e-9L * dn;
          if (std::fabs(x_gap) > tiny) o.require(in_x == (x_gap >= 0), "X predicate mismatch");
          if (std::fabs(i_gap) > tiny) o.require(in_i == (i_gap >= 0), "I predicate mismatch");
        }
      }
    }
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  for (const char* text : {kFamilyA, kFamilyB}) {
    const FamilySpec spec = family(text);
    const StabilityReport r = valuation_stability_check(family_build(spec).expanded, family_places(spec), 6);
    o.require(r.computed == 6 && !r.truncated, std::string(text) + ": orbit truncated");
    o.require(r.failures.empty() && r.divisibility_failures.empty(), std::string(text) + ": stability failures");
    o.require(r.untestable.empty(), std::string(text) + ": untestable blocks");
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  const std::vector<std::vector<std::string>> cmds{
      {"orbit", "--poly", "z^2+1", "--n", "8"},
      {"zsigmondy", "--poly", "z^2+1", "--n", "8"},
      {"rigid-check", "--poly", "z^2-3", "--n", "7"},
      {"heights", "--poly", "z^3+1", "--places", "2,3"},
      {"bound", "--d", "3", "--B", "1", "--hhat", "1", "--htilde", "1", "--gamma", "1", "--s-size", "1"},
      {"bound", "--poly", "z^3+2", "--n", "8"},
      {"powerful-check", "--factors", kFamilyB},
      {"family-check", "--factors", kFamilyA, "--n", "6"},
  };
  for (const auto& c : cmds) {
    std::string runs[2];
    int codes[2];
    for (int k = 0; k < 2; ++k) {
      std::ostringstream out, err;
      codes[k] = run_cli(c, out, err);
      runs[k] = out.str();
    }
    o.require(codes[0] == kExitOk && codes[1] == kExitOk, c[0] + ": nonzero exit");
    o.require(runs[0] == runs[1] && !runs[0].empty(), c[0] + ": reports differ");
  }
  return o;
}

}  // namespace

int main() {
  std::string coverage4;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"zsigmondy set of z^2+1 is {1}, splits match factorization", criterion1},
      {"family instances: empty zsigmondy set, growth and bit shadow", criterion2},
      {"rigid divisibility for z^2+c, c in {1,2,-3}", criterion3},
      {"non-primitive norm bound at composite indices", [&] { return criterion4(coverage4); }},
      {"canonical height accuracy, functional equation, conjugation", criterion5},
      {"height split identity and local-sum inequality", criterion6},
      {"height upper/norm lower checks and J membership for z^3+1, z^3+2", criterion7},
      {"bound M worked value and X/I predicate sweep", criterion8},
      {"valuation stability for family instances", criterion9},
      {"byte-identical reports across runs", criterion10},
  };
  const double limits[] = {5.0, 30.0, 0, 0, 0, 0, 0, 0, 0, 0};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limits[i] > 0 && secs >= limits[i]) o.require(false, "runtime over " + std::to_string(limits[i]) + " s");
    std::printf("%s criterion %zu: %s (%.2f s)", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs);
    if (i == 3 && !coverage4.empty()) std::printf(" [%s]", coverage4.c_str());
    if (!o.ok) std::printf(" -- %s", o.detail.c_str());
    std::printf("\n");
    failed += o.ok ? 0 : 1;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
