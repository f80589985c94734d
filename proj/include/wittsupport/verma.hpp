#pragma once

#include "wittsupport/wmod.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace witt {

enum class VermaXKind { Trivial, CosetTensor };

/// Level module X over a_G: the trivial module with weight lambda, or the tensor family
/// F(lambda, b) restricted to lambda + G.
struct VermaX {
  VermaXKind kind = VermaXKind::Trivial;
  ScalarVector lambda;
  Scalar b;
};

struct VermaParams {
  std::vector<LatticeVector> G;  // n-1 vectors
  LatticeVector beta;
  VermaX X;
  std::int64_t K = 1;  // depth bound
  std::int64_t B = 1;  // radius in G-coordinates
};

/// M(G, beta, X) truncated to generators t^(g - k beta) d_j with |g|_G <= B, 1 <= k <= K.
///
/// Offsets are stored in coordinates y = (c, -d) with respect to the rows [G..., beta]; d is the
/// depth. Valid offsets have d <= K and |c| <= B; all offsets with d < 0 are zero.
class TruncatedVerma final : public WeightModule {
 public:
  using Monomial = std::vector<std::uint32_t>;  // generator ids, weakly decreasing
  struct BasisElement {
    Monomial m;
    LatticeVector gamma;  // G-coordinates of the X basis vector (zero for trivial X)
    auto operator<=>(const BasisElement&) const = default;
  };
  struct Generator {
    std::int64_t k;
    LatticeVector c;  // G-coordinates
    std::size_t j;
    LatticeVector grade;  // standard coordinates
  };
  struct Coordinates {
    LatticeVector c;
    std::int64_t depth;
  };

  /// Throws std::invalid_argument for a non-complementary (G, beta), bad box or bad X.
  explicit TruncatedVerma(VermaParams p);

  const VermaParams& params() const { return p_; }
  const UnimodularBasis& frame() const { return frame_; }
  Coordinates coordinates(const LatticeVector& mu) const;
  LatticeVector offset_of(const LatticeVector& c, std::int64_t depth) const;

  std::size_t num_generators() const { return gens_.size(); }
  const Generator& generator(std::uint32_t id) const { return gens_.at(id); }

  std::string family() const override { return "verma"; }
  std::size_t weight_dim(const LatticeVector& mu) const override;
  ActionResult act(const LatticeVector& alpha, std::size_t j, const LatticeVector& mu) const override;
  VectorResult apply(const LatticeVector& alpha, std::size_t j, const LatticeVector& mu,
                     const ScalarVector& v) const override;
  bool valid_offset(const LatticeVector& mu) const override;
  bool boundary_offset(const LatticeVector& mu) const override;
  std::optional<HalfSpaceSpec> analytic_cut() const override;
  Box default_window() const override { return window_; }

  /// PBW basis of V_mu in deterministic order (valid offsets only).
  const std::vector<BasisElement>& basis(const LatticeVector& mu) const;

 private:
  using Comb = std::map<BasisElement, Scalar>;
  using MonoComb = std::map<Monomial, Scalar>;
  struct Straightened {
    MonoComb terms;
    bool exact = true;
  };
  struct Acted {
    Comb terms;
    bool exact = true;
  };

  std::optional<std::uint32_t> generator_id(std::int64_t k, const LatticeVector& c, std::size_t j) const;
  bool in_radius(const LatticeVector& c) const;
  void compute_counts();
  std::uint64_t count(const LatticeVector& c, std::int64_t d) const;
  const std::map<BasisElement, std::size_t>& index(const LatticeVector& mu) const;

  Straightened left_mul(std::uint32_t y, const Monomial& m) const;
  /// [gen_y, gen_z] in generator coordinates; exact is false when terms left the truncation.
  std::pair<std::vector<std::pair<std::uint32_t, Scalar>>, bool> gen_bracket(std::uint32_t y, std::uint32_t z) const;
  Acted act_element(const LatticeVector& alpha, std::size_t j, const BasisElement& e) const;
  Acted act_on_x(const LatticeVector& alpha, std::size_t j, const LatticeVector& gamma) const;
  ActionResult zero_action(const LatticeVector& alpha, const LatticeVector& mu, bool& handled) const;

  VermaParams p_;
  UnimodularBasis frame_;
  std::size_t h_;
  std::vector<Generator> gens_;
  std::int64_t sum_radius_ = 0;
  std::vector<std::uint64_t> counts_;  // (depth, mixed-radix sum) -> monomial count
  Box window_;

  mutable std::mutex mu_;
  mutable std::map<std::pair<std::uint32_t, Monomial>, Straightened> left_cache_;
  mutable std::map<std::tuple<LatticeVector, std::size_t, BasisElement>, Acted> act_cache_;
  mutable std::map<LatticeVector, std::vector<BasisElement>> basis_cache_;
  mutable std::map<LatticeVector, std::map<BasisElement, std::size_t>> index_cache_;
};

std::shared_ptr<TruncatedVerma> build_truncated_verma(const VermaParams& p);

}  // namespace witt
