#include "dynzsig/orbit.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "dynzsig/heights.hpp"

namespace dynzsig {
namespace {

bool over_budget(const Rational& x, std::size_t budget) {
  return std::max(approx_decimal_digits(x.num()), approx_decimal_digits(x.den())) > budget;
}

}  // namespace

const char* to_string(OrbitStop stop) {
  switch (stop) {
    case OrbitStop::Complete: return "complete";
    case OrbitStop::Preperiodic: return "preperiodic";
    case OrbitStop::DigitBudgetExceeded: return "digit_budget_exceeded";
  }
  return "?";
}

const char* to_string(WanderingVerdict v) {
  switch (v) {
    case WanderingVerdict::Wandering: return "wandering";
    case WanderingVerdict::Preperiodic: return "preperiodic";
    case WanderingVerdict::Unknown: return "unknown";
  }
  return "?";
}

const OrbitRecord& OrbitSequence::at(std::size_t n) const {
  if (n < 1 || n > records.size()) throw std::out_of_range("orbit record " + std::to_string(n) + " not computed");
  return records[n - 1];
}

std::vector<BigInt> OrbitSequence::numerators() const {
  std::vector<BigInt> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.ideal.A);
  return out;
}

std::vector<PrimitiveSplit> OrbitSequence::splits() const {
  std::vector<PrimitiveSplit> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.split);
  return out;
}

OrbitSequence build_sequence(const Polynomial& phi, const Rational& alpha, std::size_t n_max,
                             const OrbitOptions& options) {
  if (phi.degree() < 2) throw std::invalid_argument("build_sequence: degree must be >= 2");
  if (n_max < 1) throw std::invalid_argument("build_sequence: N must be >= 1");

  OrbitSequence seq{phi, alpha, conjugate(phi, alpha), {}, OrbitStop::Complete, 0};
  std::set<Rational> seen{Rational()};
  std::vector<BigInt> history;
  Rational x;  // psi^0(0)
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (n > 1 && over_budget(x, options.digit_budget)) {
      seq.stop = OrbitStop::DigitBudgetExceeded;
      break;
    }
    x = seq.psi(x);
    if (!seen.insert(x).second) {
      seq.stop = OrbitStop::Preperiodic;
      seq.repeat_index = n;
      break;
    }
    OrbitRecord rec;
    rec.n = n;
    rec.value = x;
    rec.ideal = ideal_pair(x);
    rec.split = primitive_split(rec.ideal.A, history);
    rec.primitive = rec.split.primitive_part > 1;
    history.push_back(rec.ideal.A);
    seq.records.push_back(std::move(rec));
  }
  return seq;
}

std::vector<std::size_t> zsigmondy_set(const OrbitSequence& seq, std::size_t n_max) {
  if (n_max > seq.size()) throw std::out_of_range("zsigmondy_set: sequence has fewer than N records");
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n <= n_max; ++n)
    if (!seq.at(n).primitive) out.push_back(n);
  return out;
}

WanderingVerdict wandering_verdict(const Polynomial& phi, const Rational& alpha, std::size_t probe, double tol,
                                   std::size_t digit_budget) {
  if (phi.degree() < 2) throw std::invalid_argument("wandering_verdict: degree must be >= 2");
  std::set<Rational> seen{alpha};
  Rational x = alpha;
  for (std::size_t i = 0; i < probe; ++i) {
    if (over_budget(x, digit_budget)) break;
    x = phi(x);
    if (!seen.insert(x).second) return WanderingVerdict::Preperiodic;
  }
  CanonicalHeightOptions opts;
  opts.digit_budget = digit_budget;
  const HeightEstimate est = canonical_height(phi, alpha, tol, opts);
  if (est.value - est.error_bound > 0.0) return WanderingVerdict::Wandering;
  return WanderingVerdict::Unknown;
}

}  // namespace dynzsig
