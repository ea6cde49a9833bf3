#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "dynzsig/divisibility.hpp"
#include "dynzsig/heights.hpp"
#include "dynzsig/orbit.hpp"
#include "support.hpp"

using namespace dynzsig;
using testing::P;

namespace {

ProjPoint pt(long x, long y) { return ProjPoint(BigInt(x), BigInt(y)); }

unsigned long ord(BigInt n, long p) {
  unsigned long e = 0;
  n = abs(n);
  while (n != 0 && n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

}  // namespace

TEST_CASE("weil_height examples") {
  CHECK(weil_height(pt(2, 3)) == doctest::Approx(std::log(3.0)));
  CHECK(weil_height(ProjPoint::infinity()) == 0.0);
  CHECK(weil_height(pt(26, 1)) == doctest::Approx(std::log(26.0)));
  CHECK(weil_height(pt(4, 6)) == doctest::Approx(std::log(3.0)));
  CHECK(weil_height(Rational(BigInt(-7), BigInt(5))) == doctest::Approx(std::log(7.0)));
}

TEST_CASE("map_height examples") {
  CHECK(map_height(P("z^2+3")) == doctest::Approx(std::log(3.0)));
  CHECK(map_height(P("z^2")) == 0.0);
  CHECK(map_height(P("1/2*z^2+1/3")) == doctest::Approx(std::log(6.0)));
  CHECK(map_height(RationalMap(P("z^2"), P("3*z^2+1"))) == doctest::Approx(std::log(3.0)));
}

TEST_CASE("chordal_metric examples") {
  const Place inf = Place::infinity();
  CHECK(chordal_metric(pt(1, 1), ProjPoint::infinity(), inf) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(chordal_metric(pt(3, 7), pt(3, 7), inf) == 0.0);
  CHECK(chordal_metric(pt(3, 7), pt(3, 7), Place::finite(5)) == 0.0);
  for (long p : {2L, 3L, 101L}) {
    CHECK(chordal_metric(pt(1, p), ProjPoint::infinity(), Place::finite(p)) == doctest::Approx(1.0 / p));
  }
}

TEST_CASE("local_log_distance examples") {
  CHECK(local_log_distance(pt(1, 1), ProjPoint::infinity(), Place::infinity()) ==
        doctest::Approx(0.5 * std::log(2.0)));
  for (long y : {1L, 12L, 18L, 250L, 7L}) {
    for (long p : {2L, 3L, 5L}) {
      const double expected = static_cast<double>(ord(BigInt(y), p)) * std::log(static_cast<double>(p));
      CHECK(local_log_distance(pt(1, y), ProjPoint::infinity(), Place::finite(p)) == doctest::Approx(expected));
    }
  }
  CHECK(std::isinf(local_log_distance(pt(2, 9), pt(2, 9), Place::infinity())));
  CHECK(std::isinf(local_log_distance(pt(2, 9), pt(2, 9), Place::finite(3))));
}

TEST_CASE("sum_local_at_infinity examples") {
  CHECK(sum_local_at_infinity(pt(1, 2), PlaceSet{}) == doctest::Approx(std::log(std::sqrt(5.0) / 2)));
  CHECK(sum_local_at_infinity(pt(1, 2), PlaceSet{2}) == doctest::Approx(std::log(std::sqrt(5.0) / 2) + std::log(2.0)));
  CHECK(sum_local_at_infinity(pt(1, 1), PlaceSet{3}) == doctest::Approx(0.5 * std::log(2.0)));
  CHECK_THROWS_AS(sum_local_at_infinity(ProjPoint::infinity(), PlaceSet{}), std::invalid_argument);
}

TEST_CASE("height_comparison_bound examples") {
  for (const char* f : {"z^2", "z^3", "z^5"}) {
    const double B = height_comparison_bound(P(f));
    CHECK(std::isfinite(B));
    CHECK(B >= 0.0);
  }
  const Polynomial phi = P("z^2+1");
  const double B = height_comparison_bound(phi);
  for (long x : {0L, 1L, 2L, 5L, 26L}) {
    const HeightEstimate est = canonical_height(phi, Rational(x), 1e-9);
    CHECK(std::fabs(est.value - weil_height(Rational(x))) <= B + est.error_bound);
  }
  CHECK_THROWS_AS(height_comparison_bound(P("z+1")), std::invalid_argument);
}

TEST_CASE("height_comparison_bound grows at most linearly in the map height") {
  const double B1 = height_comparison_bound(P("z^2+1"));
  for (long c : {10L, 100L, 1000L, 1000000L}) {
    const Polynomial phi = P("z^2") + Polynomial::constant(Rational(c));
    const double B = height_comparison_bound(phi);
    CHECK(B <= (B1 + 1.0) * (1.0 + map_height(phi)));
  }
}

TEST_CASE("canonical_height examples") {
  const HeightEstimate a = canonical_height(P("z^2"), Rational(2L), 1e-9);
  CHECK(std::fabs(a.value - std::log(2.0)) <= 1e-9);
  CHECK(a.error_bound <= 1e-9);
  CHECK_FALSE(a.truncated);

  const HeightEstimate b = canonical_height(P("z^2"), Rational(1L), 1e-9);
  CHECK(b.value == 0.0);

  const Polynomial phi = P("z^2+1");
  const HeightEstimate h0 = canonical_height(phi, Rational(), 1e-6);
  const HeightEstimate h1 = canonical_height(phi, Rational(1L), 1e-6);
  CHECK(std::fabs(2 * h0.value - h1.value) <= 3e-6);
  CHECK(h0.value == doctest::Approx(0.2037).epsilon(1e-3));

  CHECK_THROWS_AS(canonical_height(P("z+1"), Rational(), 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(canonical_height(phi, Rational(), 0.0), std::invalid_argument);
}

TEST_CASE("canonical_height reports truncation at the digit budget") {
  CanonicalHeightOptions opts;
  opts.digit_budget = 50;
  const HeightEstimate est = canonical_height(P("z^2+1"), Rational(), 1e-12, opts);
  CHECK(est.truncated);
  CHECK(est.error_bound > 1e-12);
  CHECK(std::fabs(est.value - 0.2037) <= est.error_bound + 1e-4);
}

TEST_CASE("canonical_height honours an overridden bound") {
  CanonicalHeightOptions opts;
  opts.bound_override = 100.0;
  const HeightEstimate est = canonical_height(P("z^2+1"), Rational(), 1e-3, opts);
  CHECK(est.error_bound <= 1e-3);
  CHECK(std::ldexp(100.0, -static_cast<int>(est.iterations)) <= 1e-3);
}

TEST_CASE("property: weil height at most the full sum of local distances") {
  testing::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    const Rational beta(BigInt(g.integer(-5000, 5000)), BigInt(g.integer(1, 5000)));
    const ProjPoint p = ProjPoint::affine(beta);
    std::vector<BigInt> primes;
    for (const auto& [q, e] : factor(p.y() == 0 ? BigInt(1) : p.y()).factors) primes.push_back(q);
    const PlaceSet S = PlaceSet::from_primes(primes);
    const double sum = sum_local_at_infinity(p, S);
    CHECK(weil_height(p) <= sum + 1e-12 * std::max(1.0, sum));
    if (p.y() == 1 && abs(p.x()) <= 1) CHECK(sum >= weil_height(p));
  }
}

TEST_CASE("property: chordal metric symmetric and bounded") {
  testing::Gen g(12);
  const std::vector<Place> places{Place::infinity(), Place::finite(2), Place::finite(3), Place::finite(7)};
  for (int i = 0; i < 300; ++i) {
    const ProjPoint a = ProjPoint::affine(g.rational(40, 40));
    const ProjPoint b = g.integer(0, 9) == 0 ? ProjPoint::infinity() : ProjPoint::affine(g.rational(40, 40));
    for (const auto& v : places) {
      const double r = chordal_metric(a, b, v);
      CHECK(r >= 0.0);
      CHECK(r <= 1.0 + 1e-15);
      CHECK(r == doctest::Approx(chordal_metric(b, a, v)));
      CHECK((r == 0.0) == (a == b));
    }
  }
}

TEST_CASE("property: height split identity") {
  testing::Gen g(13);
  const std::vector<long> pool{2, 3, 5, 7, 11, 13};
  for (int i = 0; i < 200; ++i) {
    BigInt a = g.integer(-3000, 3000);
    if (a == 0) a = 1;
    const Rational beta(a, BigInt(g.integer(1, 3000)));
    PlaceSet S;
    for (long p : pool)
      if (g.integer(0, 1) == 1) S.insert(Place::finite(p));
    // Finite parts, exactly: b = N_S(b) * prod_{p in S} p^{ord_p b}.
    BigInt rebuilt = prime_to_s_norm(beta.den(), S);
    double finite_sum = 0.0;
    for (const auto& p : S.finite_primes()) {
      const auto e = valuation(beta.den(), p);
      BigInt pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
      rebuilt *= pe;
      CHECK(local_height(beta, Place::finite(p)) == doctest::Approx(e * std::log(p.get_d())));
      finite_sum += local_height(beta, Place::finite(p));
    }
    CHECK(rebuilt == beta.den());
    const double lhs = weil_height(beta);
    const double rhs = log_abs(prime_to_s_norm(beta.den(), S)) + finite_sum + local_height(beta, Place::infinity());
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, lhs));
  }
}

TEST_CASE("property: functional equation and conjugation invariance") {
  testing::Gen g(14);
  for (int i = 0; i < 40; ++i) {
    const Polynomial phi = g.int_poly(static_cast<int>(g.integer(2, 3)), -5, 5);
    const Rational x(g.integer(-5, 5));
    const HeightEstimate h = canonical_height(phi, x, 1e-6);
    const HeightEstimate hphi = canonical_height(phi, phi(x), 1e-6);
    CHECK(std::fabs(hphi.value - phi.degree() * h.value) <= hphi.error_bound + phi.degree() * h.error_bound + 1e-9);

    const Rational alpha(g.integer(-3, 3));
    const Polynomial psi = conjugate(phi, alpha);
    const HeightEstimate hpsi = canonical_height(psi, x - alpha, 1e-6);
    CHECK(std::fabs(hpsi.value - h.value) <= hpsi.error_bound + h.error_bound + 1e-9);
  }
}

TEST_CASE("property: positivity separates wandering and preperiodic points") {
  // z^2 - 1 has the 2-cycle {0, -1}; z^2 - 2 sends 2 to the fixed point 2.
  CHECK(canonical_height(P("z^2-1"), Rational(), 1e-6).value <= 1e-6);
  CHECK(canonical_height(P("z^2-2"), Rational(-2L), 1e-6).value <= 1e-6);
  CHECK(wandering_verdict(P("z^2-1"), Rational(), 20, 1e-6) == WanderingVerdict::Preperiodic);
  for (const char* f : {"z^2+1", "z^3+1", "z^3+2", "z^2+2"}) {
    const HeightEstimate est = canonical_height(P(f), Rational(), 1e-6);
    CHECK(est.value - est.error_bound > 0.0);
    CHECK(wandering_verdict(P(f), Rational(), 20, 1e-6) == WanderingVerdict::Wandering);
  }
}
