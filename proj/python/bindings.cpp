#include "wittsupport/catalog.hpp"
#include "wittsupport/cli.hpp"
#include "wittsupport/descriptor.hpp"
#include "wittsupport/report.hpp"
#include "wittsupport/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace witt;

namespace {

std::vector<LatticeVector> points_of(const std::vector<std::vector<std::int64_t>>& pts) {
  std::vector<LatticeVector> out;
  for (const auto& p : pts) out.emplace_back(p);
  return out;
}

std::string classify(const std::string& descriptor, std::vector<std::string> checks, std::optional<std::int64_t> box,
                     std::optional<std::pair<std::int64_t, std::int64_t>> radii) {
  ClassifyOptions o;
  if (!checks.empty()) o.checks = std::move(checks);
  o.box = box;
  o.radii = radii;
  return classify_family(Json::parse(descriptor), o).report.dump();
}

std::pair<bool, std::vector<std::string>> validate(const std::string& report) {
  Validation v = validate_report(Json::parse(report));
  return {v.ok, v.problems};
}

std::string verify(const std::vector<std::string>& suites, std::uint64_t seed, bool inject_negative) {
  SuiteOptions o;
  o.seed = seed;
  o.inject_negative = inject_negative;
  py::gil_scoped_release release;
  return verify_report(suites, o).dump();
}

std::string catalog() {
  Json arr = Json::array();
  for (const auto& e : family_catalog()) arr.push_back(Json{{"descriptor", e.descriptor}, {"expected", e.expected}});
  return arr.dump();
}

std::string bracket_json(const std::string& x, const std::string& y, std::size_t n) {
  return to_json(bracket(witt_from_json(Json::parse(x), n), witt_from_json(Json::parse(y), n))).dump();
}

std::string semigroup(const std::vector<std::int64_t>& beta, const std::vector<std::string>& a) {
  SemigroupGenerators g = semigroup_generators_for(LatticeVector(beta), rational_vector_from_json(Json(a)));
  Json plus = Json::array(), minus = Json::array();
  for (const auto& x : g.plus) plus.push_back(to_json(x));
  for (const auto& x : g.minus) minus.push_back(to_json(x));
  return Json{{"plus", plus}, {"minus", minus}, {"k_plus", g.k_plus}, {"k_minus", g.k_minus}}.dump();
}

std::string monoid(const std::vector<std::vector<std::int64_t>>& s, std::int64_t bound) {
  MonoidResult r = generates_monoid(points_of(s), bound);
  Json w = Json::array();
  for (const auto& x : r.witnesses) w.push_back(Json{{"target", to_json(x.target)}, {"counts", x.counts}, {"length", x.length}});
  Json j{{"status", to_string(r.status)}, {"witnesses", w}};
  j["separating_functional"] = r.separating_functional ? to_json(*r.separating_functional) : Json(nullptr);
  return j.dump();
}

std::string separate(const std::vector<std::vector<std::int64_t>>& a,
                                                 const std::vector<std::int64_t>& mu) {
  auto h = separating_hyperplane(points_of(a), LatticeVector(mu));
  return h ? to_json(*h).dump() : "null";
}

std::vector<std::size_t> weight_dims(const std::string& descriptor, const std::vector<std::vector<std::int64_t>>& offsets) {
  auto m = build_module(parse_descriptor(Json::parse(descriptor)));
  std::vector<std::size_t> out;
  for (const auto& x : offsets) {
    LatticeVector mu(x);
    if (!m->valid_offset(mu)) throw std::out_of_range("offset " + mu.to_string() + " lies outside the truncation");
    out.push_back(m->weight_dim(mu));
  }
  return out;
}

std::string csv(const std::string& descriptor, std::optional<std::int64_t> box) {
  ClassifyOptions o;
  o.checks = {};
  o.box = box;
  return window_csv(classify_family(Json::parse(descriptor), o).window);
}

std::tuple<int, std::string, std::string> run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "wittsupport");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  auto [cfg, early] = cli::parse_args(static_cast<int>(argv.size()), argv.data());
  cli::RunOutput r = cfg ? cli::dispatch(*cfg) : early;
  return {r.exit_code, r.text, r.diagnostics};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Witt-algebra weight-module supports (JSON-string interface)";
  m.attr("REPORT_SCHEMA") = kReportSchema;
  m.attr("VERIFY_SCHEMA") = kVerifySchema;
  m.def("classify", &classify, py::arg("descriptor"), py::arg("checks") = std::vector<std::string>{},
        py::arg("box") = py::none(), py::arg("radii") = py::none());
  m.def("validate_report", &validate, py::arg("report"));
  m.def("verify", &verify, py::arg("suites") = std::vector<std::string>{}, py::arg("seed") = 7,
        py::arg("inject_negative") = false);
  m.def("suite_names", &suite_names);
  m.def("catalog", &catalog);
  m.def("bracket", &bracket_json, py::arg("x"), py::arg("y"), py::arg("n"));
  m.def("semigroup_generators_for", &semigroup, py::arg("beta"), py::arg("a"));
  m.def("generates_monoid", &monoid, py::arg("s"), py::arg("search_bound"));
  m.def("separating_hyperplane_json", &separate, py::arg("points"), py::arg("mu"));
  m.def("convex_hull_contains",
        [](const std::vector<std::vector<std::int64_t>>& p, const std::vector<std::int64_t>& q) {
          return convex_hull_contains(points_of(p), LatticeVector(q));
        },
        py::arg("points"), py::arg("q"));
  m.def("weight_dims", &weight_dims, py::arg("descriptor"), py::arg("offsets"));
  m.def("window_csv", &csv, py::arg("descriptor"), py::arg("box") = py::none());
  m.def("run_cli", &run_cli, py::arg("args"));
}
