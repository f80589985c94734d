#pragma once

// Independent reference computations used to cross-check the library. Nothing here depends on
// the wittsupport implementation.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

namespace witt::oracle {

using Exponent = std::vector<long>;
using LaurentPolynomial = std::map<Exponent, mpq_class>;

/// Derivation t^alpha d_u with d_u = sum u_i t_i d/dt_i, applied by differentiating each monomial.
LaurentPolynomial apply_derivation(const Exponent& alpha, const std::vector<mpq_class>& u, const LaurentPolynomial& f);

/// Sum of derivations sum_k t^alpha_k d_{u_k}.
struct Derivation {
  std::vector<std::pair<Exponent, std::vector<mpq_class>>> terms;
  LaurentPolynomial operator()(const LaurentPolynomial& f) const;
};

LaurentPolynomial subtract(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Partition numbers p(0..m) from Euler's pentagonal recurrence.
std::vector<std::uint64_t> partition_numbers(int m);

/// All partitions of d into parts at most k (nonincreasing part lists), by brute recursion.
std::vector<std::vector<int>> partitions(int d, int k);

/// Whether q is a convex combination of points with all weights of common denominator <= max_den.
bool hull_contains_bruteforce(const std::vector<std::vector<long>>& points, const std::vector<long>& q, int max_den);

}  // namespace witt::oracle
