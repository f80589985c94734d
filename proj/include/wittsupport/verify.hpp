#pragma once

#include "wittsupport/serialize.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace witt {

inline constexpr const char* kVerifySchema = "witt-verify-report/1";

struct SuiteOptions {
  std::uint64_t seed = 7;
  bool inject_negative = false;  // feed the convexity negative control in as a must-pass window
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // first few counterexamples
  Json details = Json::object();
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

Json to_json(const SuiteResult& r);
/// Report over the named suites (all suites when empty), run concurrently, assembled in order.
Json verify_report(const std::vector<std::string>& names, const SuiteOptions& opts);

/// Uniform integer in [lo, hi] by rejection sampling, identical on every platform.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

}  // namespace witt
