#pragma once

#include "wittsupport/lattice.hpp"
#include "wittsupport/matrix.hpp"
#include "wittsupport/witt.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace witt {

/// Axis-aligned box lo <= x <= hi in Z^n.
struct Box {
  LatticeVector lo, hi;

  static Box cube(std::size_t n, std::int64_t r);
  std::size_t dim() const { return lo.size(); }
  bool contains(const LatticeVector& x) const;
  std::size_t size() const;
  /// All points in lexicographic order.
  std::vector<LatticeVector> points() const;
  bool operator==(const Box&) const = default;
};

struct ActionResult {
  Matrix matrix;
  bool exact = true;  // false when truncation discarded terms
};

struct VectorResult {
  ScalarVector vector;
  bool exact = true;
};

/// Weight module on the coset lambda + Z^n; weights are written as offsets mu from lambda.
class WeightModule {
 public:
  virtual ~WeightModule() = default;

  std::size_t rank() const { return lambda_.size(); }
  const ScalarVector& coset_rep() const { return lambda_; }
  /// mu_0 with lambda + mu_0 = 0, present iff lambda is an integer vector.
  std::optional<LatticeVector> zero_weight_offset() const;

  virtual std::string family() const = 0;
  virtual std::size_t weight_dim(const LatticeVector& mu) const = 0;
  /// Matrix of t^alpha d_j : V_mu -> V_{mu+alpha} in the stored bases (j zero-based).
  virtual ActionResult act(const LatticeVector& alpha, std::size_t j, const LatticeVector& mu) const = 0;
  /// t^alpha d_j applied to a vector of V_mu.
  virtual VectorResult apply(const LatticeVector& alpha, std::size_t j, const LatticeVector& mu,
                             const ScalarVector& v) const;

  /// Offsets where the stored data is meaningful (always true for untruncated families).
  virtual bool valid_offset(const LatticeVector&) const { return true; }
  /// Offsets whose dimension may be understated by truncation.
  virtual bool boundary_offset(const LatticeVector&) const { return false; }
  /// Global cut certificate provided by the construction.
  virtual std::optional<HalfSpaceSpec> analytic_cut() const { return std::nullopt; }
  /// Largest natural window for scans.
  virtual Box default_window() const = 0;

 protected:
  explicit WeightModule(ScalarVector lambda) : lambda_(std::move(lambda)) {}
  ScalarVector lambda_;
};

enum class TensorVariant { Full, QuotientByTrivial, PuncturedSubmodule };
std::string to_string(TensorVariant v);
TensorVariant parse_tensor_variant(const std::string& s);

struct TensorFamily {
  ScalarVector lambda;
  Scalar b;
  TensorVariant variant = TensorVariant::Full;
};

/// u.(lambda + mu) + b (u.alpha): the action of t^alpha d_u on w_mu.
Scalar tensor_action_coefficient(const ScalarVector& lambda, const Scalar& b, const LatticeVector& alpha,
                                 const ScalarVector& u, const LatticeVector& mu);

/// F(lambda, b) = span{w_mu}, or its punctured quotient / submodule.
class TensorModule final : public WeightModule {
 public:
  /// Throws std::invalid_argument when the variant constraints fail. Punctured variants shift an
  /// integral lambda to 0.
  explicit TensorModule(TensorFamily fam, std::int64_t window = 6);

  const TensorFamily& params() const { return fam_; }
  std::string family() const override { return "tensor"; }
  std::size_t weight_dim(const LatticeVector& mu) const override;
  ActionResult act(const LatticeVector& alpha, std::size_t j, const LatticeVector& mu) const override;
  Box default_window() const override { return Box::cube(rank(), window_); }

 private:
  TensorFamily fam_;
  std::int64_t window_;
};

std::shared_ptr<TensorModule> build_tensor_module(const TensorFamily& fam, std::int64_t window = 6);

/// Matrix of a homogeneous element x : V_mu -> V_{mu+grade}. Throws for non-homogeneous x.
ActionResult action_matrix(const WeightModule& v, const WittElement& x, const LatticeVector& mu);

/// Common kernel in V_mu of the listed homogeneous elements. Inexact matrices are included as
/// computed; `exact` reports whether all were exact.
struct KernelResult {
  std::vector<ScalarVector> basis;
  bool exact = true;
};
KernelResult action_kernel(const WeightModule& v, const LatticeVector& mu, const std::vector<WittElement>& xs);

bool is_integer_vector(const ScalarVector& v);
LatticeVector to_lattice(const ScalarVector& v);

}  // namespace witt
