#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace witt::cli {

struct RunConfig {
  std::string command;  // classify, verify, catalog, check-report
  std::string family;   // descriptor path or inline JSON
  std::optional<std::int64_t> box;
  std::optional<std::pair<std::int64_t, std::int64_t>> radii;
  std::vector<std::string> checks;  // classify checks, or suite names for verify
  std::uint64_t seed = 7;
  std::string out;
  std::string format = "json";
  bool inject_negative = false;
  std::vector<std::string> reports;  // check-report inputs
};

struct RunOutput {
  int exit_code = 0;
  std::string text;         // report body
  std::string diagnostics;  // for stderr
};

RunOutput cmd_classify(const RunConfig& c);
RunOutput cmd_verify(const RunConfig& c);
RunOutput cmd_catalog(const RunConfig& c);
RunOutput cmd_check_report(const RunConfig& c);
RunOutput dispatch(const RunConfig& c);

/// Parses argv. Help and usage errors come back as a finished RunOutput.
std::pair<std::optional<RunConfig>, RunOutput> parse_args(int argc, const char* const* argv);

/// Full command-line entry point: parse, run, write --out or stdout, report diagnostics.
int main(int argc, const char* const* argv);

}  // namespace witt::cli
