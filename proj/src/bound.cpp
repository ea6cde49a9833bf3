#include "dynzsig/bound.hpp"

#include <cmath>
#include <stdexcept>

#include "dynzsig/errors.hpp"

namespace dynzsig {
namespace {

// Slack for comparisons between double-precision logs.
constexpr double kFloatSlack = 1e-12;

double pow_d(int d, std::size_t n) { return std::pow(static_cast<double>(d), static_cast<double>(n)); }

double log_norm(const BigInt& a) { return a == 1 ? 0.0 : log_abs(a); }

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Ambiguous: return "ambiguous";
    case Verdict::Vacuous: return "vacuous";
  }
  return "?";
}

double log_plus(double x, int d) { return x <= 1.0 ? 0.0 : std::log(x) / std::log(static_cast<double>(d)); }

XEnumeration enumerate_X(int d, double B, double hhat0) {
  if (d < 2) throw std::invalid_argument("enumerate_X: d must be >= 2");
  if (!(hhat0 > 0.0)) throw std::invalid_argument("enumerate_X: canonical height must be positive");
  XEnumeration out;
  out.threshold = log_plus(8.0 * B / hhat0, d);
  for (std::size_t n = 1; static_cast<double>(n) <= out.threshold; ++n) out.members.push_back(n);
  out.zero_member = 0.0 <= out.threshold;
  return out;
}

double i_ratio(int d, double B, double hhat0, std::size_t n) {
  // ((n-1)B + hhat (d^n - d)/(d - 1)) / ((3/4) hhat d^n), written with d^-n so
  // large n underflows to the limit instead of overflowing.
  const double inv = std::pow(static_cast<double>(d), -static_cast<double>(n));
  const double nm1 = static_cast<double>(n) - 1.0;
  return (nm1 * B * inv + hhat0 * (1.0 - d * inv) / (d - 1)) / (0.75 * hhat0);
}

IEnumeration enumerate_I(int d, double B, double hhat0, std::size_t n_max) {
  if (d < 3) throw HypothesisViolated("enumerate_I: d must be >= 3");
  if (!(hhat0 > 0.0)) throw std::invalid_argument("enumerate_I: canonical height must be positive");
  IEnumeration out;
  out.cardinality_bound = 1.0 + 8.0 * B / ((3.0 * d - 7.0) * hhat0);
  for (std::size_t n = 1; n <= n_max; ++n)
    if (i_ratio(d, B, hhat0, n) >= 1.0) out.members.push_back(n);
  out.window_saturated = n_max >= 1 && i_ratio(d, B, hhat0, n_max) >= 1.0;
  out.zero_member = i_ratio(d, B, hhat0, 0) >= 1.0;
  return out;
}

BoundBreakdown bound_M(const BoundInputs& in, std::size_t i_scan_limit) {
  if (in.d < 3) throw HypothesisViolated("bound_M: degree must be >= 3");
  if (!(in.hhat0 > 0.0)) throw HypothesisViolated("bound_M: canonical height of 0 must be positive (wandering)");
  if (in.s_size < 1) throw std::invalid_argument("bound_M: #S must be >= 1");
  if (in.B < 0.0 || in.gamma < 0.0 || in.h_psi_tilde < 0.0)
    throw std::invalid_argument("bound_M: B, gamma and h(psi~) must be nonnegative");
  const double d = in.d;
  BoundBreakdown out;
  out.x_term = log_plus(8.0 * in.B / in.hhat0, in.d);
  out.i_term = 8.0 * in.B / ((3.0 * d - 7.0) * in.hhat0);
  out.j_term = std::pow(4.0, in.s_size) * in.gamma + std::log(in.h_psi_tilde / in.hhat0 + 1.0) / std::log(d);
  out.M = out.constant_term + out.x_term + out.i_term + out.j_term;
  out.x_set = enumerate_X(in.d, in.B, in.hhat0).members;
  const IEnumeration i = enumerate_I(in.d, in.B, in.hhat0, i_scan_limit);
  out.i_set = i.members;
  out.i_window_saturated = i.window_saturated;
  return out;
}

JMembership j_membership(const OrbitSequence& seq, std::size_t n, const PlaceSet& places,
                         const HeightEstimate& hhat0) {
  const OrbitRecord& rec = seq.at(n);
  const ProjPoint q = ProjPoint::one_over(rec.value);
  JMembership out;
  out.local_sum = sum_local_at_infinity(q, places);
  const double dn = pow_d(seq.degree(), n);
  out.threshold = dn * hhat0.value / 8.0;
  const double lo = dn * (hhat0.value - hhat0.error_bound) / 8.0;
  const double hi = dn * (hhat0.value + hhat0.error_bound) / 8.0;
  const double slack = kFloatSlack * std::max(1.0, std::fabs(out.local_sum));
  if (out.local_sum >= hi + slack) {
    out.member = true;
  } else if (out.local_sum < lo - slack) {
    out.member = false;
  } else {
    out.member = true;
    out.ambiguous = true;
  }
  return out;
}

CheckResult height_upper_check(const OrbitSequence& seq, std::size_t n, double B, const HeightEstimate& hhat0) {
  const OrbitRecord& rec = seq.at(n);
  const double dn = pow_d(seq.degree(), n);
  CheckResult out;
  out.lhs = log_norm(rec.ideal.A);
  out.rhs = dn * hhat0.value + B;
  const double slack = kFloatSlack * std::max(1.0, out.lhs);
  const double worst = dn * (hhat0.value - hhat0.error_bound) + B;
  const double best = dn * (hhat0.value + hhat0.error_bound) + B;
  if (out.lhs <= worst - slack) {
    out.verdict = Verdict::Holds;
  } else if (out.lhs > best + slack) {
    out.verdict = Verdict::Fails;
  } else {
    out.verdict = Verdict::Ambiguous;
  }
  return out;
}

CheckResult norm_lower_check(const OrbitSequence& seq, std::size_t n, const PlaceSet& places, double B,
                             const HeightEstimate& hhat0, bool use_empirical_j) {
  const OrbitRecord& rec = seq.at(n);
  const int d = seq.degree();
  CheckResult out;
  out.lhs = 0.75 * hhat0.value * pow_d(d, n);
  out.rhs = log_norm(prime_to_s_norm(rec.ideal.A, places));

  // Membership in X grows as hhat shrinks, so the lower end of the interval
  // gives the largest X the estimate allows.
  const double hhat_low = hhat0.value - hhat0.error_bound;
  const bool in_x = !(hhat_low > 0.0) || static_cast<double>(n) <= log_plus(8.0 * B / hhat_low, d);
  const bool in_j = use_empirical_j && j_membership(seq, n, places, hhat0).member;
  if (in_x || in_j) {
    out.verdict = Verdict::Vacuous;
    return out;
  }
  const double worst_lhs = 0.75 * (hhat0.value + hhat0.error_bound) * pow_d(d, n);
  const double best_lhs = 0.75 * hhat_low * pow_d(d, n);
  const double slack = kFloatSlack * std::max(1.0, out.rhs);
  if (worst_lhs < out.rhs - slack) {
    out.verdict = Verdict::Holds;
  } else if (best_lhs >= out.rhs + slack) {
    out.verdict = Verdict::Fails;
  } else {
    out.verdict = Verdict::Ambiguous;
  }
  return out;
}

}  // namespace dynzsig
