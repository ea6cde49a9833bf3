#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dynzsig/bound.hpp"
#include "dynzsig/commands.hpp"
#include "dynzsig/divisibility.hpp"
#include "dynzsig/factor.hpp"
#include "dynzsig/heights.hpp"
#include "dynzsig/orbit.hpp"
#include "dynzsig/parse.hpp"
#include "dynzsig/powerful.hpp"

namespace py = pybind11;
using namespace dynzsig;

namespace {

py::int_ to_py(const BigInt& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(n.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& n) { return BigInt(py::str(n).cast<std::string>()); }

Rational rational_arg(const py::object& x) {
  if (py::isinstance<py::int_>(x)) return Rational(from_py(x.cast<py::int_>()));
  return parse_rational_literal(x.cast<std::string>());
}

py::object rational_to_py(const Rational& r) {
  if (r.is_integer()) return to_py(r.num());
  return py::module_::import("fractions").attr("Fraction")(to_py(r.num()), to_py(r.den()));
}

PlaceSet places_arg(const std::string& text) { return text.empty() ? PlaceSet{} : PlaceSet::parse(text); }

py::dict split_dict(const PrimitiveSplit& s) {
  py::dict d;
  d["primitive_part"] = to_py(s.primitive_part);
  d["nonprimitive_part"] = to_py(s.nonprimitive_part);
  return d;
}

py::dict orbit(const std::string& poly, const py::object& alpha, std::size_t n, std::size_t digit_budget) {
  OrbitOptions opts;
  opts.digit_budget = digit_budget;
  const OrbitSequence seq = build_sequence(parse_poly(poly).poly, rational_arg(alpha), n, opts);
  py::list records;
  for (const auto& r : seq.records) {
    py::dict rec = split_dict(r.split);
    rec["n"] = r.n;
    rec["value"] = rational_to_py(r.value);
    rec["A"] = to_py(r.ideal.A);
    rec["B"] = to_py(r.ideal.B);
    rec["primitive"] = r.primitive;
    records.append(rec);
  }
  py::dict out;
  out["psi"] = seq.psi.str();
  out["records"] = records;
  out["stop"] = to_string(seq.stop);
  out["zsigmondy_set"] = zsigmondy_set(seq, seq.size());
  return out;
}

py::dict factor_py(const py::int_& n, unsigned long trial_bound, unsigned long rho_iterations, unsigned long seed) {
  FactorBudget b;
  b.trial_bound = trial_bound;
  b.rho_iterations = rho_iterations;
  b.seed = seed;
  const Factorization f = factor(from_py(n), b);
  py::dict factors;
  for (const auto& [p, e] : f.factors) factors[to_py(p)] = e;
  py::dict out;
  out["factors"] = factors;
  out["cofactor"] = to_py(f.cofactor);
  out["complete"] = f.complete();
  return out;
}

py::dict canonical_height_py(const std::string& poly, const py::object& point, double tol, std::size_t digit_budget) {
  CanonicalHeightOptions opts;
  opts.digit_budget = digit_budget;
  const HeightEstimate h = canonical_height(parse_poly(poly).poly, rational_arg(point), tol, opts);
  py::dict out;
  out["value"] = h.value;
  out["error_bound"] = h.error_bound;
  out["iterations"] = h.iterations;
  out["truncated"] = h.truncated;
  return out;
}

py::dict rigid_check_py(const std::string& poly, const py::object& alpha, std::size_t n, const std::string& places) {
  const OrbitSequence seq = build_sequence(parse_poly(poly).poly, rational_arg(alpha), n);
  const std::vector<BigInt> nums = seq.numerators();
  const RigidReport r = rigid_check(nums, places_arg(places));
  py::list violations;
  for (const auto& v : r.violations) {
    py::dict d;
    d["prime"] = to_py(v.prime);
    d["composite_block"] = v.composite_block;
    d["condition"] = v.condition;
    d["indices"] = v.indices;
    d["valuations"] = v.valuations;
    violations.append(d);
  }
  py::list untested;
  for (const auto& u : r.untested_primes) untested.append(to_py(u));
  py::dict out;
  out["verified"] = r.verified;
  out["checked_pairs"] = r.checked_pairs;
  out["untested_primes"] = untested;
  out["violations"] = violations;
  return out;
}

py::dict bound_py(int d, double B, double hhat, double htilde, double gamma, int s_size) {
  BoundInputs in;
  in.d = d;
  in.B = B;
  in.hhat0 = hhat;
  in.h_psi_tilde = htilde;
  in.gamma = gamma;
  in.s_size = s_size;
  const BoundBreakdown b = bound_M(in);
  py::dict out;
  out["M"] = b.M;
  out["constant"] = b.constant_term;
  out["x_term"] = b.x_term;
  out["i_term"] = b.i_term;
  out["j_term"] = b.j_term;
  out["X"] = b.x_set;
  out["I"] = b.i_set;
  return out;
}

py::dict family_check_py(const std::string& factors, std::size_t n, std::size_t digit_budget) {
  const ParsedPoly parsed = parse_poly(factors);
  if (!parsed.factored) throw std::invalid_argument("expected a product of powers");
  const FamilySpec spec = family_spec_from_factors(*parsed.factored);
  const FamilyPolynomial fam = family_build(spec);
  std::vector<Polynomial> bases;
  for (const auto& f : spec.factors) bases.push_back(f.base());
  const PlaceSet S = s_integer_places(bases);
  py::dict out;
  out["expanded"] = fam.expanded.str();
  out["orbit_of_zero"] = to_string(fixed_or_wandering(spec));
  if (fixed_or_wandering(spec) == FamilyOrbit::Fixed) return out;
  const GrowthReport g = growth_check(spec, n, digit_budget);
  const StabilityReport s = valuation_stability_check(fam.expanded, S, n, {}, digit_budget);
  OrbitOptions opts;
  opts.digit_budget = digit_budget;
  const OrbitSequence seq = build_sequence(fam.expanded, Rational(), n, opts);
  out["growth_passed"] = g.passed;
  out["stability_passed"] = s.passed();
  out["E"] = s.E;
  out["zsigmondy_set"] = zsigmondy_set(seq, seq.size());
  return out;
}

py::tuple run_py(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Primitive divisors in polynomial dynamical orbits over Q";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<HypothesisViolated>(m, "HypothesisViolated", PyExc_ValueError);

  m.def("normalize_poly", [](const std::string& s) { return parse_poly(s).poly.str(); }, py::arg("poly"));
  m.def("is_powerful", [](const std::string& s) { return is_powerful(parse_poly(s).poly); }, py::arg("poly"));
  m.def("conjugate",
        [](const std::string& s, const py::object& a) { return conjugate(parse_poly(s).poly, rational_arg(a)).str(); },
        py::arg("poly"), py::arg("alpha"));
  m.def("orbit", &orbit, py::arg("poly"), py::arg("alpha") = py::int_(0), py::arg("n") = 8,
        py::arg("digit_budget") = 100000);
  m.def("factor", &factor_py, py::arg("n"), py::arg("trial_bound") = 1000000, py::arg("rho_iterations") = 1000000,
        py::arg("seed") = 0x5eed);
  m.def("is_probable_prime", [](const py::int_& n) { return is_probable_prime(from_py(n)); }, py::arg("n"));
  m.def("weil_height", [](const py::object& x) { return weil_height(rational_arg(x)); }, py::arg("x"));
  m.def("map_height", [](const std::string& s) { return map_height(parse_poly(s).poly); }, py::arg("poly"));
  m.def("canonical_height", &canonical_height_py, py::arg("poly"), py::arg("point"), py::arg("tol") = 1e-6,
        py::arg("digit_budget") = 100000);
  m.def("rigid_check", &rigid_check_py, py::arg("poly"), py::arg("alpha") = py::int_(0), py::arg("n") = 8,
        py::arg("places") = "");
  m.def("bound_M", &bound_py, py::arg("d"), py::arg("B"), py::arg("hhat"), py::arg("htilde"), py::arg("gamma") = 1.0,
        py::arg("s_size") = 1);
  m.def("family_check", &family_check_py, py::arg("factors"), py::arg("n") = 6, py::arg("digit_budget") = 100000);
  m.def("run", &run_py, py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
