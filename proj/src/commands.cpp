#include "dynzsig/commands.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynzsig/bound.hpp"
#include "dynzsig/cache.hpp"
#include "dynzsig/errors.hpp"
#include "dynzsig/heights.hpp"
#include "dynzsig/orbit.hpp"
#include "dynzsig/parse.hpp"
#include "dynzsig/powerful.hpp"

namespace dynzsig {

using nlohmann::json;

void RunConfig::validate() const {
  if (trial_bound == 0) throw ConfigError("--trial-bound must be positive");
  if (rho_budget == 0) throw ConfigError("--rho-budget must be positive");
  if (digit_budget == 0) throw ConfigError("--digit-budget must be positive");
  if (!(tol > 0.0 && tol < 1.0)) throw ConfigError("--tol must lie in (0, 1)");
  if (format != "json" && format != "csv" && format != "text") throw ConfigError("--format must be json, csv or text");
}

FactorBudget RunConfig::factor_budget() const {
  FactorBudget b;
  b.trial_bound = trial_bound;
  b.rho_iterations = rho_budget;
  b.seed = seed;
  return b;
}

namespace {

/// 12 significant digits; the JSON writer then prints the shortest form that
/// round-trips, which never exceeds those 12 digits.
json real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json big(const BigInt& n) { return to_decimal(n); }

json place_list(const PlaceSet& s) {
  json out = json::array();
  for (const auto& v : s) out.push_back(v.str());
  return out;
}

json index_list(const std::vector<std::size_t>& v) {
  json out = json::array();
  for (auto i : v) out.push_back(i);
  return out;
}

struct Inputs {
  std::string poly;
  std::string factors;
  std::string alpha = "0";
  std::string places;
  std::size_t n = 8;
  double B = 0, gamma = 1, hhat = 0, htilde = 0;
  int d = 0, s_size = 0;
};

struct Outcome {
  json result = json::object();
  std::vector<std::string> warnings;
  int exit_code = kExitOk;
  std::optional<OrbitSequence> table;
};

Polynomial parse_or_config(const std::string& text, const char* flag, std::optional<FactoredForm>* factored = nullptr) {
  if (text.empty()) throw ConfigError(std::string(flag) + " is required");
  try {
    ParsedPoly p = parse_poly(text);
    if (factored != nullptr) *factored = std::move(p.factored);
    return p.poly;
  } catch (const ParseError& e) {
    throw ConfigError(std::string(flag) + ": " + e.what());
  }
}

Rational alpha_of(const Inputs& in) {
  try {
    return parse_rational_literal(in.alpha);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("--alpha: ") + e.what());
  }
}

PlaceSet places_of(const Inputs& in) {
  try {
    return PlaceSet::parse(in.places);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("--places: ") + e.what());
  }
}

OrbitOptions orbit_options(const RunConfig& cfg) {
  OrbitOptions o;
  o.digit_budget = cfg.digit_budget;
  return o;
}

void note_truncation(const OrbitSequence& seq, std::size_t n, Outcome& out) {
  if (seq.stop != OrbitStop::DigitBudgetExceeded) return;
  out.warnings.push_back("digit budget reached: " + std::to_string(seq.size()) + " of " + std::to_string(n) +
                         " terms computed");
  out.exit_code = kExitBudget;
}

Outcome cmd_orbit(const Inputs& in, const RunConfig& cfg) {
  const Polynomial phi = parse_or_config(in.poly, "--poly");
  const OrbitSequence seq = build_sequence(phi, alpha_of(in), in.n, orbit_options(cfg));
  Outcome out;
  json records = json::array();
  for (const auto& r : seq.records) {
    records.push_back({{"n", r.n},
                       {"value", r.value.str()},
                       {"A", big(r.ideal.A)},
                       {"B", big(r.ideal.B)},
                       {"A_digits", decimal_digits(r.ideal.A)},
                       {"primitive", r.primitive},
                       {"primitive_part", big(r.split.primitive_part)},
                       {"nonprimitive_part", big(r.split.nonprimitive_part)}});
  }
  out.result = {{"phi", phi.str()},   {"alpha", seq.alpha.str()},  {"psi", seq.psi.str()},
                {"stop", to_string(seq.stop)}, {"repeat_index", seq.repeat_index}, {"records", records}};
  note_truncation(seq, in.n, out);
  out.table = seq;
  return out;
}

Outcome cmd_zsigmondy(const Inputs& in, const RunConfig& cfg) {
  const Polynomial phi = parse_or_config(in.poly, "--poly");
  const OrbitSequence seq = build_sequence(phi, alpha_of(in), in.n, orbit_options(cfg));
  if (seq.stop == OrbitStop::Preperiodic)
    throw HypothesisViolated("alpha is preperiodic (repeat at n = " + std::to_string(seq.repeat_index) + ")");
  Outcome out;
  json splits = json::array();
  for (const auto& r : seq.records) {
    splits.push_back({{"n", r.n},
                      {"A_digits", decimal_digits(r.ideal.A)},
                      {"primitive", r.primitive},
                      {"primitive_part", big(r.split.primitive_part)},
                      {"nonprimitive_part", big(r.split.nonprimitive_part)}});
  }
  out.result = {{"phi", phi.str()},
                {"alpha", seq.alpha.str()},
                {"n_computed", seq.size()},
                {"zsigmondy_set", index_list(zsigmondy_set(seq, seq.size()))},
                {"splits", splits}};
  note_truncation(seq, in.n, out);
  out.table = seq;
  return out;
}

Outcome cmd_rigid(const Inputs& in, const RunConfig& cfg, const FactorBudget& budget) {
  const Polynomial phi = parse_or_config(in.poly, "--poly");
  const PlaceSet S = places_of(in);
  const OrbitSequence seq = build_sequence(phi, alpha_of(in), in.n, orbit_options(cfg));
  const auto terms = seq.numerators();
  const RigidReport rep = rigid_check(terms, S, budget);
  Outcome out;
  json tested = json::array(), untested = json::array(), violations = json::array();
  for (const auto& p : rep.tested_primes) tested.push_back(big(p));
  for (const auto& p : rep.untested_primes) untested.push_back(big(p));
  for (const auto& v : rep.violations) {
    violations.push_back({{"prime", big(v.prime)},
                          {"composite_block", v.composite_block},
                          {"condition", v.condition},
                          {"indices", index_list(v.indices)},
                          {"valuations", v.valuations}});
  }
  const auto splits = seq.splits();
  json nonprim = json::array();
  bool nonprim_ok = true;
  for (std::size_t n = 4; n <= seq.size(); ++n) {
    bool composite = false;
    for (std::size_t k = 2; k * k <= n; ++k) composite = composite || n % k == 0;
    if (!composite) continue;
    const bool ok = nonprimitive_bound_check(n, splits, S);
    nonprim_ok = nonprim_ok && ok;
    nonprim.push_back({{"n", n}, {"holds", ok}});
  }
  out.result = {{"phi", phi.str()},
                {"alpha", seq.alpha.str()},
                {"places", place_list(S)},
                {"n_computed", seq.size()},
                {"verified", rep.verified},
                {"checked_pairs", rep.checked_pairs},
                {"tested_primes", tested},
                {"untested_primes", untested},
                {"violations", violations},
                {"nonprimitive_bound", nonprim},
                {"nonprimitive_bound_holds", nonprim_ok}};
  note_truncation(seq, in.n, out);
  if (!rep.untested_primes.empty()) {
    out.warnings.push_back(std::to_string(rep.untested_primes.size()) +
                           " composite block(s) left unfactored; checked as blocks");
    out.exit_code = kExitBudget;
  }
  out.table = seq;
  return out;
}

json estimate_json(const HeightEstimate& e) {
  return {{"value", real(e.value)},
          {"error_bound", real(e.error_bound)},
          {"iterations", e.iterations},
          {"truncated", e.truncated}};
}

Outcome cmd_heights(const Inputs& in, const RunConfig& cfg) {
  const Polynomial phi = parse_or_config(in.poly, "--poly");
  if (phi.degree() < 2) throw HypothesisViolated("deg phi must be >= 2");
  const Rational P = alpha_of(in);
  const PlaceSet S = places_of(in);
  CanonicalHeightOptions opts;
  opts.digit_budget = cfg.digit_budget;
  const HeightEstimate est = canonical_height(phi, P, cfg.tol, opts);
  const ProjPoint pt = ProjPoint::affine(P);
  json local = json::object();
  for (const auto& v : S) local[v.str()] = real(local_log_distance(pt, ProjPoint::infinity(), v));
  Outcome out;
  out.result = {{"phi", phi.str()},
                {"point", P.str()},
                {"places", place_list(S)},
                {"weil_height", real(weil_height(P))},
                {"map_height", real(map_height(phi))},
                {"comparison_bound", real(height_comparison_bound(phi))},
                {"canonical_height", estimate_json(est)},
                {"local_at_infinity", local},
                {"local_sum", real(sum_local_at_infinity(pt, S))}};
  if (est.truncated) {
    out.warnings.push_back("digit budget reached before the requested tolerance");
    out.exit_code = kExitBudget;
  }
  return out;
}

Outcome cmd_bound(const Inputs& in, const RunConfig& cfg, const CLI::App& sub) {
  const auto given = [&](const char* flag) { return sub.count(flag) > 0; };
  BoundInputs bi;
  bi.gamma = in.gamma;
  std::optional<OrbitSequence> seq;
  std::optional<HeightEstimate> est;
  PlaceSet S = places_of(in);
  Outcome out;
  if (!in.poly.empty()) {
    const Polynomial phi = parse_or_config(in.poly, "--poly");
    seq = build_sequence(phi, alpha_of(in), in.n, orbit_options(cfg));
    if (seq->stop == OrbitStop::Preperiodic) throw HypothesisViolated("alpha is preperiodic");
    CanonicalHeightOptions opts;
    opts.digit_budget = cfg.digit_budget;
    est = canonical_height(seq->psi, Rational(), cfg.tol, opts);
    bi.d = phi.degree();
    bi.h_psi = map_height(seq->psi);
    bi.h_psi_tilde = map_height(reverse_map(seq->psi));
    bi.hhat0 = est->value;
    bi.B = height_comparison_bound(seq->psi);
    bi.s_size = static_cast<int>(S.size());
    if (est->truncated) {
      out.warnings.push_back("canonical height truncated by the digit budget");
      out.exit_code = kExitBudget;
    }
    note_truncation(*seq, in.n, out);
  } else {
    for (const char* flag : {"--d", "--B", "--hhat", "--htilde"})
      if (!given(flag)) throw ConfigError(std::string(flag) + " is required without --poly");
    bi.s_size = static_cast<int>(S.size());
  }
  if (given("--d")) bi.d = in.d;
  if (given("--B")) bi.B = in.B;
  if (given("--hhat")) bi.hhat0 = in.hhat;
  if (given("--htilde")) bi.h_psi_tilde = in.htilde;
  if (given("--s-size")) bi.s_size = in.s_size;

  const BoundBreakdown br = bound_M(bi);
  const XEnumeration X = enumerate_X(bi.d, bi.B, bi.hhat0);
  const IEnumeration I = enumerate_I(bi.d, bi.B, bi.hhat0, 256);
  out.result = {{"inputs",
                 {{"d", bi.d},
                  {"B", real(bi.B)},
                  {"hhat", real(bi.hhat0)},
                  {"h_psi", real(bi.h_psi)},
                  {"htilde", real(bi.h_psi_tilde)},
                  {"gamma", real(bi.gamma)},
                  {"s_size", bi.s_size}}},
                {"M", real(br.M)},
                {"summands",
                 {{"constant", real(br.constant_term)},
                  {"x_term", real(br.x_term)},
                  {"i_term", real(br.i_term)},
                  {"j_term", real(br.j_term)}}},
                {"X", {{"members", index_list(X.members)}, {"threshold", real(X.threshold)}, {"n0", X.zero_member}}},
                {"I",
                 {{"members", index_list(I.members)},
                  {"cardinality_bound", real(I.cardinality_bound)},
                  {"window_saturated", I.window_saturated},
                  {"n0", I.zero_member}}}};
  if (seq) {
    json per_n = json::array();
    for (std::size_t n = 1; n <= seq->size(); ++n) {
      const JMembership j = j_membership(*seq, n, S, *est);
      const CheckResult up = height_upper_check(*seq, n, bi.B, *est);
      const CheckResult low = norm_lower_check(*seq, n, S, bi.B, *est);
      per_n.push_back({{"n", n},
                       {"J_member", j.member},
                       {"J_ambiguous", j.ambiguous},
                       {"local_sum", real(j.local_sum)},
                       {"J_threshold", real(j.threshold)},
                       {"height_upper", to_string(up.verdict)},
                       {"norm_lower", to_string(low.verdict)}});
    }
    out.result["canonical_height"] = estimate_json(*est);
    out.result["orbit"] = per_n;
    out.result["places"] = place_list(S);
  }
  return out;
}

Outcome cmd_powerful(const Inputs& in) {
  std::optional<FactoredForm> factored;
  const bool from_factors = !in.factors.empty();
  const Polynomial phi = parse_or_config(from_factors ? in.factors : in.poly, "--poly/--factors", &factored);
  std::vector<Polynomial> bases;
  if (factored) {
    for (const auto& [b, e] : *factored)
      if (b.degree() >= 1) bases.push_back(b);
  }
  if (bases.empty()) bases.push_back(phi);
  Outcome out;
  json parts = json::array();
  bool powerful = false;
  if (phi.degree() >= 1) {
    const SquarefreeDecomposition sq = squarefree_decomposition(phi);
    for (const auto& f : sq.factors) parts.push_back({{"factor", f.factor.str()}, {"multiplicity", f.multiplicity}});
    powerful = is_powerful(phi);
    out.result["unit"] = sq.unit.str();
  }
  out.result["phi"] = phi.str();
  out.result["powerful"] = powerful;
  out.result["squarefree"] = parts;
  out.result["place_set"] = place_list(s_integer_places(bases));
  out.result["place_set_source"] = factored ? "factored form" : "expanded polynomial";
  return out;
}

json growth_json(const GrowthReport& g) {
  json steps = json::array();
  for (const auto& s : g.steps) {
    steps.push_back({{"n", s.n},
                     {"alpha_n", s.alpha_n.str()},
                     {"square_growth", s.square_growth},
                     {"exponent_floor", s.exponent_floor},
                     {"bit_shadow", s.bit_shadow}});
  }
  return {{"passed", g.passed},
          {"base_ok", g.base_ok},
          {"computed", g.computed},
          {"truncated", g.truncated},
          {"steps", steps}};
}

json stability_json(const StabilityReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"base", big(f.base)},
                        {"composite_block", f.composite_block},
                        {"rank", f.rank},
                        {"index", f.index},
                        {"expected", f.expected},
                        {"found", f.found}});
  }
  std::size_t blocks = 0;
  for (const auto& a : r.atoms) blocks += a.prime ? 0 : 1;
  json untestable = json::array();
  for (const auto& p : r.untestable) untestable.push_back(big(p));
  return {{"passed", r.passed()},
          {"computed", r.computed},
          {"E", r.E},
          {"atoms", r.atoms.size()},
          {"composite_blocks", blocks},
          {"failures", failures},
          {"divisibility_failures", index_list(r.divisibility_failures)},
          {"untestable", untestable},
          {"truncated", r.truncated}};
}

Outcome cmd_family(const Inputs& in, const RunConfig& cfg, const FactorBudget& budget) {
  std::optional<FactoredForm> factored;
  const std::string& text = in.factors.empty() ? in.poly : in.factors;
  parse_or_config(text, "--factors", &factored);
  if (!factored) throw ConfigError("--factors must be a product of powers, e.g. \"(z+2)^2*(z+3)^2\"");
  const FamilySpec spec = family_spec_from_factors(*factored);
  const FamilyPolynomial fam = family_build(spec);
  std::vector<Polynomial> bases;
  for (const auto& f : spec.factors) bases.push_back(f.base());
  const PlaceSet S = s_integer_places(bases);

  Outcome out;
  json factors = json::array();
  for (const auto& f : spec.factors) factors.push_back({{"f", f.f.str()}, {"a", big(f.a)}, {"e", f.e}});
  const FamilyOrbit orbit = fixed_or_wandering(spec);
  out.result = {{"expanded", fam.expanded.str()},
                {"factors", factors},
                {"m", spec.m()},
                {"E", spec.max_exponent()},
                {"places", place_list(S)},
                {"orbit_of_zero", to_string(orbit)}};
  if (orbit == FamilyOrbit::Fixed) {
    out.warnings.push_back("0 is fixed; growth and valuation checks do not apply");
    return out;
  }
  const GrowthReport growth = growth_check(spec, in.n, cfg.digit_budget);
  const StabilityReport stab = valuation_stability_check(fam.expanded, S, in.n, budget, cfg.digit_budget);
  const OrbitSequence seq = build_sequence(fam.expanded, Rational(), in.n, orbit_options(cfg));
  out.result["growth"] = growth_json(growth);
  out.result["valuation_stability"] = stability_json(stab);
  out.result["zsigmondy_set"] = index_list(zsigmondy_set(seq, seq.size()));
  note_truncation(seq, in.n, out);
  out.table = seq;
  return out;
}

void write_csv(const OrbitSequence& seq, std::ostream& os) {
  os << "n,value_digits,A_digits,primitive,P_digits,N_digits\n";
  for (const auto& r : seq.records) {
    const std::size_t value_digits = std::max(decimal_digits(r.value.num()), decimal_digits(r.value.den()));
    os << r.n << ',' << value_digits << ',' << decimal_digits(r.ideal.A) << ',' << (r.primitive ? 1 : 0) << ','
       << decimal_digits(r.split.primitive_part) << ',' << decimal_digits(r.split.nonprimitive_part) << '\n';
  }
}

void write_text(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) write_text(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) write_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

json config_json(const RunConfig& cfg, const Inputs& in, const CLI::App& sub) {
  json c = {{"trial_bound", cfg.trial_bound},
            {"rho_budget", cfg.rho_budget},
            {"digit_budget", cfg.digit_budget},
            {"tol", real(cfg.tol)},
            {"seed", cfg.seed},
            {"format", cfg.format},
            {"cache", cfg.cache_path.empty() ? json(nullptr) : json(cfg.cache_path)}};
  for (const auto* opt : sub.get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    std::string key = opt->get_name();
    key.erase(0, key.find_first_not_of('-'));
    c[key] = opt->as<std::string>();
  }
  (void)in;
  return c;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive divisors in orbits of polynomial maps over Q", "dynzsig"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv(kCacheEnvVar)) cfg.cache_path = env;
  app.add_option("--trial-bound", cfg.trial_bound, "Trial division bound");
  app.add_option("--rho-budget", cfg.rho_budget, "Pollard-Brent iterations per composite");
  app.add_option("--digit-budget", cfg.digit_budget, "Largest iterate (decimal digits) that is iterated further");
  app.add_option("--tol", cfg.tol, "Canonical height tolerance");
  app.add_option("--seed", cfg.seed, "Seed for Pollard-Brent");
  app.add_option("--cache", cfg.cache_path, std::string("Factor cache file (default $") + kCacheEnvVar + ")");
  app.add_option("--format", cfg.format, "json | csv | text");

  Inputs in;
  const auto add_poly = [&](CLI::App* s) { s->add_option("--poly", in.poly, "Polynomial in z"); };
  const auto add_alpha = [&](CLI::App* s, const char* what) { s->add_option("--alpha", in.alpha, what); };
  const auto add_n = [&](CLI::App* s) {
    s->add_option("--n", in.n, "Number of orbit terms")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  };
  const auto add_places = [&](CLI::App* s) { s->add_option("--places", in.places, "Finite primes of S, e.g. \"2,3\""); };

  auto* orbit = app.add_subcommand("orbit", "Dump the orbit sequence");
  auto* zsig = app.add_subcommand("zsigmondy", "Zsigmondy set and per-n primitive splits");
  auto* rigid = app.add_subcommand("rigid-check", "Check rigid divisibility of the orbit numerators");
  auto* heights = app.add_subcommand("heights", "Weil, map, canonical and local heights");
  auto* bound = app.add_subcommand("bound", "Bound on the Zsigmondy set size and its index sets");
  auto* powerful = app.add_subcommand("powerful-check", "Powerful test and S-integer place set");
  auto* family = app.add_subcommand("family-check", "Check a product family (z f(z) + a)^e");
  for (auto* s : {orbit, zsig, rigid, heights, bound, powerful, family}) s->fallthrough();

  for (auto* s : {orbit, zsig, rigid}) {
    add_poly(s);
    add_alpha(s, "Base point alpha");
    add_n(s);
  }
  add_places(rigid);
  add_poly(heights);
  add_alpha(heights, "Point P");
  add_places(heights);
  add_poly(bound);
  add_alpha(bound, "Base point alpha");
  add_n(bound);
  add_places(bound);
  bound->add_option("--d", in.d, "Degree");
  bound->add_option("--B", in.B, "Height comparison constant");
  bound->add_option("--hhat", in.hhat, "Canonical height of 0 under psi");
  bound->add_option("--htilde", in.htilde, "Height of the reversed map");
  bound->add_option("--gamma", in.gamma, "Counting constant");
  bound->add_option("--s-size", in.s_size, "#S");
  add_poly(powerful);
  powerful->add_option("--factors", in.factors, "Factored form, e.g. \"(z+2)^2*(z+3)^2\"");
  family->add_option("--factors", in.factors, "Product of (z f(z) + a)^e");
  add_poly(family);
  add_n(family);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (const auto* nopt = sub->get_option_no_throw("--n"); nopt != nullptr && nopt->count() == 0)
    in.n = sub == family ? 6 : 8;
  json report;
  report["command"] = name;
  try {
    cfg.validate();
    report["config"] = config_json(cfg, in, *sub);
    std::unique_ptr<FactorCache> cache;
    FactorBudget budget = cfg.factor_budget();
    if (!cfg.cache_path.empty()) {
      cache = std::make_unique<FactorCache>(cfg.cache_path);
      budget.memo = cache.get();
    }

    Outcome res;
    if (sub == orbit) {
      res = cmd_orbit(in, cfg);
    } else if (sub == zsig) {
      res = cmd_zsigmondy(in, cfg);
    } else if (sub == rigid) {
      res = cmd_rigid(in, cfg, budget);
    } else if (sub == heights) {
      res = cmd_heights(in, cfg);
    } else if (sub == bound) {
      res = cmd_bound(in, cfg, *sub);
    } else if (sub == powerful) {
      res = cmd_powerful(in);
    } else {
      res = cmd_family(in, cfg, budget);
    }
    if (cache) {
      for (const auto& w : cache->warnings()) res.warnings.push_back(w);
      err << "cache: " << cache->hits() << " hit(s), " << cache->appended() << " appended\n";
    }
    for (const auto& w : res.warnings) err << "warning: " << w << '\n';

    report["result"] = res.result;
    report["warnings"] = res.warnings;
    if (cfg.format == "csv") {
      if (!res.table) throw ConfigError("--format csv is only available for subcommands with an orbit table");
      write_csv(*res.table, out);
    } else if (cfg.format == "text") {
      write_text(report, "", out);
    } else {
      out << report.dump(2) << '\n';
    }
    return res.exit_code;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    // HypothesisViolated and the library's own precondition failures.
    err << "hypothesis violated: " << e.what() << '\n';
    report["config"] = config_json(cfg, in, *sub);
    report["result"] = {{"status", "hypothesis_violated"}, {"reason", e.what()}};
    report["warnings"] = json::array();
    if (cfg.format == "json") {
      out << report.dump(2) << '\n';
    } else if (cfg.format == "text") {
      write_text(report, "", out);
    }
    return kExitHypothesis;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace dynzsig
