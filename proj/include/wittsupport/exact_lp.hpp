#pragma once

#include "wittsupport/rational.hpp"

#include <optional>
#include <vector>

namespace witt::lp {

enum class Relation { Leq, Eq, Geq };

struct Constraint {
  RationalVector coeffs;
  Relation rel;
  Rational rhs;
};

/// Feasibility problem over Q: variables flagged free or nonnegative.
struct Problem {
  std::size_t num_vars = 0;
  std::vector<bool> free;  // empty means all nonnegative
  std::vector<Constraint> constraints;

  void add(RationalVector coeffs, Relation rel, Rational rhs) {
    constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

/// Exact phase-one simplex with Bland's rule. Returns a feasible point or nullopt.
std::optional<RationalVector> find_feasible(const Problem& p);

}  // namespace witt::lp
