#include "dynzsig/heights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dynzsig {
namespace {

double log_max_abs(const BigInt& x, const BigInt& y) {
  return cmpabs(x, y) >= 0 ? log_abs(x) : log_abs(y);
}

/// 0.5 * log(x^2 + y^2) for (x, y) != (0, 0).
double half_log_norm2(const BigInt& x, const BigInt& y) {
  const BigInt n = x * x + y * y;
  return 0.5 * log_abs(n);
}

BigInt cross(const ProjPoint& p, const ProjPoint& q) { return p.x() * q.y() - q.x() * p.y(); }

}  // namespace

double weil_height(const ProjPoint& p) { return log_max_abs(p.x(), p.y()); }

double weil_height(const Rational& z) { return log_max_abs(z.num(), z.den()); }

double map_height(const RationalMap& phi) {
  BigInt best = 0;
  for (const auto& c : phi.coefficient_vector())
    if (cmpabs(c, best) > 0) best = abs_value(c);
  return log_abs(best);
}

double map_height(const Polynomial& phi) { return map_height(RationalMap(phi)); }

double local_log_distance(const ProjPoint& p, const ProjPoint& q, const Place& v) {
  const BigInt det = cross(p, q);
  if (sgn(det) == 0) return std::numeric_limits<double>::infinity();
  if (v.is_archimedean()) {
    const double value = half_log_norm2(p.x(), p.y()) + half_log_norm2(q.x(), q.y()) - log_abs(det);
    return std::max(0.0, value);
  }
  // Reduced coordinates have max(|x|_p, |y|_p) = 1.
  BigInt rest = det;
  const auto e = mpz_remove(rest.get_mpz_t(), det.get_mpz_t(), v.prime().get_mpz_t());
  return static_cast<double>(e) * log_abs(v.prime());
}

double chordal_metric(const ProjPoint& p, const ProjPoint& q, const Place& v) {
  const double lambda = local_log_distance(p, q, v);
  if (std::isinf(lambda)) return 0.0;
  return std::clamp(std::exp(-lambda), 0.0, 1.0);
}

double sum_local_at_infinity(const ProjPoint& p, const PlaceSet& places) {
  if (p.is_infinity()) throw std::invalid_argument("sum_local_at_infinity: point is infinity");
  const ProjPoint inf = ProjPoint::infinity();
  double total = 0.0;
  for (const auto& v : places) total += local_log_distance(p, inf, v);
  return total;
}

double local_height(const Rational& beta, const Place& v) {
  if (beta.is_zero()) return 0.0;
  if (v.is_archimedean()) return cmpabs(beta.num(), beta.den()) > 0 ? log_abs(beta.num()) - log_abs(beta.den()) : 0.0;
  BigInt rest = beta.den();
  const auto e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), v.prime().get_mpz_t());
  return static_cast<double>(e) * log_abs(v.prime());
}

double height_comparison_bound(const Polynomial& phi) {
  const int d = phi.degree();
  if (d < 2) throw std::invalid_argument("height_comparison_bound: degree must be >= 2");

  // F_i = scale * phi_i, G = scale * Y^d, divided by the joint content.
  const RationalMap lifted(phi);
  const auto& num = lifted.numerator();
  const BigInt g = lifted.denominator().coeff(0).num();
  std::vector<BigInt> coeffs(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) coeffs[static_cast<std::size_t>(i)] = num.coeff(static_cast<std::size_t>(i)).num();
  const BigInt& lead = coeffs.back();

  BigInt sum_all = 0;
  BigInt sum_lower = 0;
  for (int i = 0; i <= d; ++i) {
    sum_all += abs_value(coeffs[static_cast<std::size_t>(i)]);
    if (i < d) sum_lower += abs_value(coeffs[static_cast<std::size_t>(i)]);
  }
  const double upper = log_abs(cmpabs(sum_all, g) >= 0 ? sum_all : g);

  const double log_g = log_abs(g);
  const double log_lead = log_abs(lead);
  double arch_low;
  if (sgn(sum_lower) == 0) {
    arch_low = std::min(log_g, log_lead);
  } else {
    // log of s|F_d| / sum_{i<d}|F_i|, before the cap at 1.
    const double log_ratio = log_lead - log_abs(sum_lower);
    arch_low = -std::numeric_limits<double>::infinity();
    constexpr int kSteps = 1000;
    for (int k = 1; k < kSteps; ++k) {
      const double s = static_cast<double>(k) / kSteps;
      const double log_t = std::min(0.0, std::log(s) + log_ratio);
      const double candidate = std::min(log_g + d * log_t, std::log1p(-s) + log_lead);
      arch_low = std::max(arch_low, candidate);
    }
  }
  const double lower = arch_low - log_g - d * log_lead;
  const double one_step = std::max(upper, -lower);
  return std::max(0.0, one_step) / (d - 1);
}

HeightEstimate canonical_height(const Polynomial& phi, const Rational& point, double tol,
                                const CanonicalHeightOptions& options) {
  const int d = phi.degree();
  if (d < 2) throw std::invalid_argument("canonical_height: degree must be >= 2");
  if (!(tol > 0.0)) throw std::invalid_argument("canonical_height: tolerance must be positive");
  const double bound = options.bound_override.value_or(height_comparison_bound(phi));
  if (bound < 0.0) throw std::invalid_argument("canonical_height: bound must be nonnegative");

  HeightEstimate est;
  Rational x = point;
  double scale = 1.0;  // d^N
  std::size_t n = 0;
  while (bound / scale > tol) {
    if (std::max(approx_decimal_digits(x.num()), approx_decimal_digits(x.den())) > options.digit_budget) {
      est.truncated = true;
      break;
    }
    x = phi(x);
    scale *= d;
    ++n;
  }
  est.iterations = n;
  est.value = weil_height(x) / scale;
  est.error_bound = bound / scale;
  return est;
}

}  // namespace dynzsig
