// pybind11 module: the library's main operations with exact arithmetic
// surfaced as fractions.Fraction / arbitrary-precision int.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "gapshift/census.hpp"
#include "gapshift/counting.hpp"
#include "gapshift/errors.hpp"
#include "gapshift/glue.hpp"
#include "gapshift/measures.hpp"
#include "gapshift/metric.hpp"
#include "gapshift/observable.hpp"
#include "gapshift/optimize.hpp"
#include "gapshift/schedule.hpp"
#include "gapshift/transport.hpp"

namespace py = pybind11;
using namespace gapshift;

namespace {

py::object fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(rat_str(r));
}

py::object big(const BigInt& x) {
  static py::object Int = py::module_::import("builtins").attr("int");
  return Int(x.str());
}

Rational rational_arg(const py::object& v) {
  if (py::isinstance<py::int_>(v))
    return Rational(v.cast<long long>());
  std::string s = py::str(v).cast<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

Observable observable_arg(const Word& word, const py::object& scale,
                          const py::object& offset) {
  return affine(indicator(word), rational_arg(scale), rational_arg(offset));
}

py::dict census_dict(const PeriodicCensus& c) {
  py::dict out;
  out["n"] = c.n;
  out["count"] = big(c.count);
  py::list orbits;
  for (const auto& o : c.orbits) {
    py::dict row;
    row["rep"] = o.rep;
    row["period"] = o.period;
    row["zero_density"] = fraction(o.zero_density);
    orbits.append(row);
  }
  out["orbits"] = orbits;
  return out;
}

py::dict glue_dict(const GlueResult& res) {
  py::dict out;
  out["word"] = res.prefix;
  out["periodic"] = res.cycle.has_value();
  if (res.cycle) out["period_word"] = res.cycle->period;
  out["admissible"] = res.report.admissible;
  out["all_pass"] = res.report.all_pass;
  py::list checks;
  for (const auto& c : res.report.checks) {
    py::dict row;
    row["segment"] = c.segment;
    row["position"] = c.position;
    row["lo"] = fraction(c.lo);
    row["hi"] = fraction(c.hi);
    row["bound"] = fraction(c.bound);
    row["pass"] = c.pass;
    checks.append(row);
  }
  out["checks"] = checks;
  return out;
}

py::dict optimum_dict(const OptimizationResult& res) {
  py::dict out;
  out["best"] = fraction(res.best);
  out["argmax"] = res.argmax;
  out["argmax_set"] = res.argmax_set;
  out["zero_free_best"] =
      res.zero_free_best ? fraction(*res.zero_free_best) : py::object(py::none());
  out["zero_containing_best"] = res.zero_containing_best
                                    ? fraction(*res.zero_containing_best)
                                    : py::object(py::none());
  py::list table;
  for (const auto& row : res.table) {
    if (!row.best) continue;
    py::dict r;
    r["period"] = row.period;
    r["best"] = fraction(*row.best);
    r["argmax"] = *row.argmax;
    table.append(r);
  }
  out["table"] = table;
  return out;
}

}  // namespace

PYBIND11_MODULE(_gapshift, m) {
  m.doc() = "gap-constrained subshifts: exact language, shadowing and "
            "optimization routines";

  py::register_exception<ConfigError>(m, "ConfigError");
  py::register_exception<InfeasibleError>(m, "InfeasibleError");
  py::register_exception<ResourceCapError>(m, "ResourceCapError");

  py::class_<BaseSubshiftSpec>(m, "BaseSubshift")
      .def_property_readonly("alphabet_size", &BaseSubshiftSpec::alphabet_size);

  py::class_<GappedSubshiftSpec>(m, "GappedSubshift")
      .def_property_readonly("tau",
                             [](const GappedSubshiftSpec& s) { return fraction(s.tau); })
      .def_property_readonly("ambient_alphabet_size",
                             &GappedSubshiftSpec::ambient_alphabet_size);

  m.def("full_shift", &make_full_shift, py::arg("alphabet_size"));
  m.def("sft", &make_sft, py::arg("alphabet_size"), py::arg("forbidden"));
  m.def("substitution", &make_substitution, py::arg("alphabet_size"),
        py::arg("rules"), py::arg("seed") = 0);
  m.def("union_of_copies", &make_union_of_copies, py::arg("base"), py::arg("copies"));
  m.def(
      "gapped",
      [](const BaseSubshiftSpec& base, const py::object& tau) {
        return make_gapped(base, rational_arg(tau));
      },
      py::arg("base"), py::arg("tau"));

  m.def(
      "contains",
      [](const GappedSubshiftSpec& s, const Word& w) { return contains_word(s, w); },
      py::arg("spec"), py::arg("word"));
  m.def(
      "cyclic_admissible",
      [](const GappedSubshiftSpec& s, const Word& w) { return cyclic_admissible(s, w); },
      py::arg("spec"), py::arg("word"));
  m.def(
      "language_count",
      [](const GappedSubshiftSpec& s, long long n) { return big(language_count(s, n)); },
      py::arg("spec"), py::arg("n"));
  m.def(
      "enumerate_language",
      [](const GappedSubshiftSpec& s, std::size_t n) { return enumerate_language(s, n); },
      py::arg("spec"), py::arg("n"));
  m.def(
      "required_zero_run",
      [](const GappedSubshiftSpec& s, long long run) { return required_zero_run(s, run); },
      py::arg("spec"), py::arg("run"));
  m.def(
      "gap_function",
      [](const GappedSubshiftSpec& s, long long n, int m) { return gap_function(s, n, m); },
      py::arg("spec"), py::arg("n"), py::arg("m"));

  m.def(
      "periodic_points",
      [](const GappedSubshiftSpec& s, long long n, int threads) {
        return census_dict(periodic_points(s, n, {}, threads));
      },
      py::arg("spec"), py::arg("n"), py::arg("threads") = 1);

  m.def(
      "glue",
      [](const GappedSubshiftSpec& s, const std::vector<Word>& words, int m,
         bool periodic) {
        auto req = default_layout(s, words, m,
                                  periodic ? Closure::Periodic : Closure::OpenEnd);
        return glue_dict(gapshift::glue(s, req));
      },
      py::arg("spec"), py::arg("segments"), py::arg("m") = 0,
      py::arg("periodic") = false,
      "glue the segments at the canonical gap-function spacing");
  m.def(
      "min_gap_witness",
      [](const GappedSubshiftSpec& s, const Word& u, const Word& v, int m,
         long long gap) -> py::object {
        auto w = min_gap_witness_search(s, u, v, m, gap);
        return w ? py::cast(*w) : py::object(py::none());
      },
      py::arg("spec"), py::arg("u"), py::arg("v"), py::arg("m"), py::arg("gap"));

  m.def(
      "zero_density",
      [](const Word& w) { return fraction(zero_density(CyclicWord(w))); },
      py::arg("orbit"));
  m.def(
      "ergodic_optimum",
      [](const GappedSubshiftSpec& s, const Word& word, const py::object& scale,
         const py::object& offset, long long max_period, int threads) {
        return optimum_dict(ergodic_optimum(s, observable_arg(word, scale, offset),
                                            max_period, {}, threads));
      },
      py::arg("spec"), py::arg("word"), py::arg("scale"), py::arg("offset"),
      py::arg("max_period"), py::arg("threads") = 1,
      "maximize the (scale * chi_[word] + offset)-average over periodic orbits");

  m.def(
      "birkhoff_average",
      [](const Word& x, const Word& word, const py::object& scale,
         const py::object& offset, long long n) {
        return fraction(birkhoff_average(x, observable_arg(word, scale, offset), n));
      },
      py::arg("x"), py::arg("word"), py::arg("scale"), py::arg("offset"), py::arg("n"));
  m.def(
      "oscillating_point",
      [](const GappedSubshiftSpec& s, const Word& w, long long factor, int phases,
         long long length) {
        auto sched = make_geometric_schedule(w, factor, phases);
        if (length == 0) length = sched.total_length();
        py::dict out;
        out["word"] = build_oscillating_point(s, sched, length);
        out["checkpoints"] = sched.checkpoints();
        return out;
      },
      py::arg("spec"), py::arg("word"), py::arg("factor") = 4, py::arg("phases") = 4,
      py::arg("length") = 0);
  m.def(
      "oscillation",
      [](const Word& x, const Word& word, const py::object& scale,
         const py::object& offset, const std::vector<long long>& checkpoints) {
        auto r = gapshift::oscillation(x, observable_arg(word, scale, offset), checkpoints);
        return py::make_tuple(fraction(r.min_avg), fraction(r.max_avg), fraction(r.gap));
      },
      py::arg("x"), py::arg("word"), py::arg("scale"), py::arg("offset"),
      py::arg("checkpoints"));

  m.def(
      "wasserstein_uniform",
      [](const std::vector<Word>& xs, const std::vector<Word>& ys) {
        auto w = wasserstein(uniform_measure(xs), uniform_measure(ys));
        return py::make_tuple(fraction(w.lo), fraction(w.hi));
      },
      py::arg("xs"), py::arg("ys"),
      "certified [lo, hi] for the transport distance between uniform measures");
}
