#include "wittsupport/cli.hpp"

#include "wittsupport/catalog.hpp"
#include "wittsupport/report.hpp"
#include "wittsupport/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace witt::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json load_json(const std::string& source) {
  std::size_t i = source.find_first_not_of(" \t\r\n");
  const bool inline_json = i != std::string::npos && (source[i] == '{' || source[i] == '[');
  const std::string text = inline_json ? source : read_file(source);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

RunOutput input_error(const std::string& what) { return {1, "", "error: " + what + "\n"}; }

}  // namespace

RunOutput cmd_classify(const RunConfig& c) {
  if (c.family.empty()) return input_error("classify needs --family");
  if (c.format != "json" && c.format != "csv") return input_error("unknown format '" + c.format + "'");
  ClassifyOptions opts;
  if (!c.checks.empty()) opts.checks = c.checks;
  opts.box = c.box;
  opts.radii = c.radii;
  ClassifyOutcome out;
  try {
    out = classify_family(load_json(c.family), opts);
  } catch (const std::exception& e) {
    return input_error(e.what());
  }
  RunOutput r;
  r.text = c.format == "csv" ? window_csv(out.window) : dump(out.report);
  if (!out.checks_pass) {
    r.exit_code = 2;
    for (const auto& ch : out.report.at("checks"))
      if (!ch.at("pass").get<bool>())
        r.diagnostics += "check '" + ch.at("name").get<std::string>() + "' reported " +
                         std::to_string(ch.at("violations").size()) + " violation(s)\n";
  }
  return r;
}

RunOutput cmd_verify(const RunConfig& c) {
  SuiteOptions opts;
  opts.seed = c.seed;
  opts.inject_negative = c.inject_negative;
  Json rep;
  try {
    rep = verify_report(c.checks, opts);
  } catch (const std::invalid_argument& e) {
    return input_error(e.what());
  }
  RunOutput r;
  r.text = dump(rep);
  if (!rep.at("pass").get<bool>()) {
    r.exit_code = 2;
    for (const auto& s : rep.at("suites"))
      if (!s.at("pass").get<bool>()) {
        r.diagnostics += "suite '" + s.at("name").get<std::string>() + "' failed";
        if (!s.at("failures").empty()) r.diagnostics += ": " + s.at("failures")[0].get<std::string>();
        r.diagnostics += "\n";
      }
  }
  return r;
}

RunOutput cmd_catalog(const RunConfig&) {
  Json arr = Json::array();
  for (const auto& e : family_catalog()) arr.push_back(Json{{"descriptor", e.descriptor}, {"expected", e.expected}});
  return {0, dump(arr), ""};
}

RunOutput cmd_check_report(const RunConfig& c) {
  if (c.reports.empty()) return input_error("check-report needs at least one report file");
  RunOutput r;
  Json results = Json::array();
  for (const auto& path : c.reports) {
    Json rep;
    try {
      rep = load_json(path);
    } catch (const std::exception& e) {
      return input_error(e.what());
    }
    Validation v = validate_report(rep);
    results.push_back(Json{{"report", path}, {"ok", v.ok}, {"problems", v.problems}});
    if (!v.ok) {
      r.exit_code = 2;
      for (const auto& p : v.problems) r.diagnostics += path + ": " + p + "\n";
    }
  }
  r.text = dump(results);
  return r;
}

RunOutput dispatch(const RunConfig& c) {
  if (c.command == "classify") return cmd_classify(c);
  if (c.command == "verify") return cmd_verify(c);
  if (c.command == "catalog") return cmd_catalog(c);
  if (c.command == "check-report") return cmd_check_report(c);
  return input_error("unknown command '" + c.command + "'");
}

std::pair<std::optional<RunConfig>, RunOutput> parse_args(int argc, const char* const* argv) {
  CLI::App app{"Weight-module support scanner and classifier for Witt algebras", "wittsupport"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<std::int64_t> box;
  std::string radii;
  std::vector<std::string> checks;

  auto* classify = app.add_subcommand("classify", "Scan a family window, classify it and run checks");
  classify->add_option("--family", cfg.family, "Descriptor file or inline JSON")->required();
  classify->add_option("--box", box, "Cube radius of the scan window");
  classify->add_option("--radii", radii, "Truncation radii B1,B2 for the mixed check");
  classify->add_option("--checks", checks, "convexity, upset, rays, mixed")->delimiter(',');
  classify->add_option("--out", cfg.out, "Output file");
  classify->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--checks,--suites", checks, "Suite names (default: all)")->delimiter(',');
  verify->add_option("suite", checks, "Suite names");
  verify->add_option("--seed", cfg.seed, "Seed for randomized suites");
  verify->add_option("--out", cfg.out, "Output file");
  verify->add_flag("--inject-negative", cfg.inject_negative, "Feed the convexity negative control in as a must-pass window");

  auto* catalog = app.add_subcommand("catalog", "Print the shipped family catalog");
  catalog->add_option("--out", cfg.out, "Output file");

  auto* check = app.add_subcommand("check-report", "Re-validate emitted reports");
  check->add_option("reports", cfg.reports, "Report files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    return {std::nullopt, RunOutput{code == 0 ? 0 : 1, out.str(), err.str()}};
  }
  for (auto* sub : {classify, verify, catalog, check})
    if (sub->parsed()) cfg.command = sub->get_name();
  cfg.box = box;
  cfg.checks = checks;
  if (!radii.empty()) {
    std::int64_t a = 0, b = 0;
    char comma = 0;
    std::istringstream is(radii);
    if (!(is >> a >> comma >> b) || comma != ',' || !is.eof())
      return {std::nullopt, input_error("--radii expects B1,B2")};
    cfg.radii = std::make_pair(a, b);
  }
  return {cfg, RunOutput{}};
}

int main(int argc, const char* const* argv) {
  auto [cfg, early] = parse_args(argc, argv);
  RunOutput r = cfg ? dispatch(*cfg) : early;
  if (cfg && !cfg->out.empty() && !r.text.empty()) {
    std::ofstream os(cfg->out, std::ios::binary);
    if (!os) {
      std::cerr << "error: cannot write '" << cfg->out << "'\n";
      return 1;
    }
    os << r.text;
  } else {
    std::cout << r.text;
  }
  std::cerr << r.diagnostics;
  return r.exit_code;
}

}  // namespace witt::cli
