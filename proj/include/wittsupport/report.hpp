#pragma once

#include "wittsupport/descriptor.hpp"
#include "wittsupport/ghw.hpp"
#include "wittsupport/serialize.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace witt {

inline constexpr const char* kReportSchema = "witt-support-report/1";

/// Known checks: convexity, upset, rays, mixed.
struct ClassifyOptions {
  std::vector<std::string> checks{"convexity"};
  std::optional<std::int64_t> box;
  std::optional<std::pair<std::int64_t, std::int64_t>> radii;
};

struct ClassifyOutcome {
  Json report;
  SupportWindow window;
  Classification classification;
  bool checks_pass = true;
};

/// Builds the module, scans its window, classifies it and runs the selected checks.
/// Throws DescriptorError for bad input and std::invalid_argument for unknown checks.
ClassifyOutcome classify_family(const Json& descriptor, const ClassifyOptions& opts = {});

std::vector<CheckResult> run_checks(const FamilyDescriptor& d, const WeightModule& m, const SupportWindow& w,
                                    const ClassifyOptions& opts, Json* mixed_section);

struct Validation {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Parses a report, re-verifies its certificate and GHW witness against the window and the
/// rebuilt module, and checks that regeneration reproduces it exactly.
Validation validate_report(const Json& report);

/// One row per box offset: coordinates, dim, boundary flag.
std::string window_csv(const SupportWindow& w);

}  // namespace witt
