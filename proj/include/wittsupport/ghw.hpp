#pragma once

#include "wittsupport/supports.hpp"
#include "wittsupport/wmod.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace witt {

/// N + sum |beta_i| + 1.
std::int64_t ghw_propagate_bound(std::int64_t N, const LatticeVector& beta);

/// Rows (k+1)e_1 + e_2, k e_1 + e_2, then e'_1 + e_j. Requires n >= 2, k >= 0.
UnimodularBasis lemma1_basis(std::int64_t k, std::size_t n);
/// Rows (p+1, p, ..., p), (p+2, p+1, p, ..., p), then e'_1 + e_i. Requires n >= 2, p >= 1.
UnimodularBasis lemma5_basis(std::int64_t p, std::size_t n);

/// Least N such that every grade alpha with basis coordinates in (N, R]^n annihilates v
/// (inexact actions count as failures). Tensor families are decided symbolically and ignore R.
/// Throws std::invalid_argument for v = 0.
std::optional<std::int64_t> is_ghw(const WeightModule& V, const LatticeVector& mu, const ScalarVector& v,
                                   std::int64_t radius, const std::optional<UnimodularBasis>& basis = std::nullopt);

/// True when is_ghw on tensor families is decided without a window.
bool ghw_is_symbolic(const WeightModule& V);

struct GhwWitness {
  LatticeVector offset;
  ScalarVector vector;
  std::int64_t N = 0;
  UnimodularBasis basis = UnimodularBasis::identity(1);
  std::string scope;  // "symbolic" or "window"
  std::int64_t radius = 0;
};

struct GhwSearch {
  std::int64_t radius = 0;      // 0: the window's largest half-extent
  std::size_t max_dim = 256;    // offsets with larger weight spaces are skipped
};

/// Scans window offsets in descending lexicographic order under the identity basis, then
/// lemma1_basis(k) for k = 1..3, for a nonzero common kernel of the grade-e'_i generators.
std::optional<GhwWitness> find_ghw_vector(const WeightModule& V, const Box& window, const GhwSearch& opts = {});

/// Window rebased at `top` and rewritten in lemma5_basis(m + 2), where UpBounded(m) is the ray
/// profile from `top` along (1, ..., 1). Throws std::invalid_argument if that ray is not UpBounded.
SupportWindow lemma5_normalized(const SupportWindow& w, const LatticeVector& top, std::int64_t* p_used = nullptr);

}  // namespace witt
