#pragma once

#include <cstddef>
#include <optional>

#include "dynzsig/place.hpp"
#include "dynzsig/polynomial.hpp"
#include "dynzsig/proj_point.hpp"
#include "dynzsig/rational_map.hpp"

namespace dynzsig {

/// Absolute logarithmic height log max(|x|, |y|) of a reduced point.
double weil_height(const ProjPoint& p);
/// Height of the affine point z = a/b, i.e. log max(|a|, b).
double weil_height(const Rational& z);

/// log of the largest entry of the joint primitive coefficient vector.
double map_height(const RationalMap& phi);
double map_height(const Polynomial& phi);

/// v-adic chordal distance, in [0, 1].
double chordal_metric(const ProjPoint& p, const ProjPoint& q, const Place& v);

/// -log chordal_metric; +infinity exactly when p == q.
double local_log_distance(const ProjPoint& p, const ProjPoint& q, const Place& v);

/// Sum over v in places of lambda_v(p, infinity). Throws for p == infinity.
double sum_local_at_infinity(const ProjPoint& p, const PlaceSet& places);

/// log max{1, |beta|_v}; 0 for beta = 0.
double local_height(const Rational& beta, const Place& v);

/// A certified constant B with |canonical height - Weil height| <= B at every
/// algebraic point. Requires deg phi >= 2.
///
/// With (F, G) the homogeneous lift scaled to a primitive integer vector, one
/// step of the map changes h by d*h plus an error in [L, U]:
///   U = log max(sum |F_i|, |G_d|)                       (triangle inequality)
///   L = log min(|G_d| t^d, (1 - s)|F_d|) - log|G_d| - d log|F_d|
/// where the archimedean split point t = min(1, s|F_d| / sum_{i<d}|F_i|) is
/// tuned over s in (0, 1) and the p-adic places contribute the final two
/// terms. Telescoping gives B = max(U, -L) / (d - 1).
double height_comparison_bound(const Polynomial& phi);

struct HeightEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t iterations = 0;  // N in h(phi^N(P)) / d^N
  bool truncated = false;      // digit budget hit before error_bound <= tol
};

struct CanonicalHeightOptions {
  /// An orbit point larger than this (decimal digits of numerator or
  /// denominator) is not iterated further.
  std::size_t digit_budget = 100'000;
  /// Replaces height_comparison_bound(phi) when set.
  std::optional<double> bound_override;
};

/// Estimate of the canonical height with |value - hhat(P)| <= error_bound.
/// Requires deg phi >= 2 and tol > 0.
HeightEstimate canonical_height(const Polynomial& phi, const Rational& point, double tol,
                                const CanonicalHeightOptions& options = {});

}  // namespace dynzsig
