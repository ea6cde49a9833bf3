#pragma once

#include <cstddef>
#include <vector>

#include "dynzsig/heights.hpp"
#include "dynzsig/orbit.hpp"

namespace dynzsig {

/// Inputs of the Zsigmondy-set size bound. `B` stands for c3(d) + c4(d) h(psi)
/// and `gamma` for the counting constant of the J set; neither has a closed
/// form, so both are supplied by the caller.
struct BoundInputs {
  int d = 3;
  double h_psi = 0.0;
  double h_psi_tilde = 0.0;
  double hhat0 = 1.0;
  double B = 0.0;
  double gamma = 1.0;
  int s_size = 1;
};

/// Sizes for the individual index sets and M as their sum.
struct BoundBreakdown {
  double constant_term = 1.0;
  double x_term = 0.0;  // log_d^+(8B / hhat)
  double i_term = 0.0;  // 8B / ((3d - 7) hhat)
  double j_term = 0.0;  // 4^#S gamma + log_d(h(psi~)/hhat + 1)
  double M = 0.0;
  std::vector<std::size_t> x_set;
  std::vector<std::size_t> i_set;
  bool i_window_saturated = false;
};

/// Throws HypothesisViolated when d < 3 or an input is out of range.
BoundBreakdown bound_M(const BoundInputs& in, std::size_t i_scan_limit = 256);

/// log_d max(1, x).
double log_plus(double x, int d);

struct XEnumeration {
  double threshold = 0.0;  // log_d^+(8B / hhat)
  std::vector<std::size_t> members;  // 1 <= n <= threshold
  bool zero_member = true;  // the n = 0 predicate, reported separately
};

/// Requires d >= 2 and hhat0 > 0.
XEnumeration enumerate_X(int d, double B, double hhat0);

/// Left-hand side of the I(psi) predicate at index n (member iff >= 1).
double i_ratio(int d, double B, double hhat0, std::size_t n);

struct IEnumeration {
  std::vector<std::size_t> members;  // 1 <= n <= n_max
  double cardinality_bound = 0.0;  // 1 + 8B / ((3d - 7) hhat)
  bool window_saturated = false;  // predicate still true at n_max
  bool zero_member = false;
};

/// Requires d >= 3 and hhat0 > 0.
IEnumeration enumerate_I(int d, double B, double hhat0, std::size_t n_max);

struct JMembership {
  bool member = false;
  bool ambiguous = false;  // within the height error; reported as a member
  double local_sum = 0.0;  // sum_{v in S'} lambda_v(Q_n, infinity)
  double threshold = 0.0;  // d^n hhat / 8 at the central estimate
};

/// Q_n = [1 : psi^n(0)] lies in J(S', psi) iff its local distance to infinity
/// over S' is at least d^n hhat_psi(0) / 8.
JMembership j_membership(const OrbitSequence& seq, std::size_t n, const PlaceSet& places,
                         const HeightEstimate& hhat0);

enum class Verdict { Holds, Fails, Ambiguous, Vacuous };

const char* to_string(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::Ambiguous;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds() const { return verdict == Verdict::Holds || verdict == Verdict::Vacuous; }
};

/// log A_n <= d^n hhat_psi(0) + B. Holds only if true for every canonical
/// height inside the estimate's error interval.
CheckResult height_upper_check(const OrbitSequence& seq, std::size_t n, double B, const HeightEstimate& hhat0);

/// For n outside X and (empirical) J: (3/4) hhat d^n < log N_{S'}(A_n).
/// With use_empirical_j == false, J is not consulted and every n outside X is
/// tested. Indices whose X/J membership is ambiguous are treated as members.
CheckResult norm_lower_check(const OrbitSequence& seq, std::size_t n, const PlaceSet& places, double B,
                             const HeightEstimate& hhat0, bool use_empirical_j = true);

}  // namespace dynzsig
