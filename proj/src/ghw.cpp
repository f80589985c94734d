#include "wittsupport/ghw.hpp"

#include <algorithm>
#include <stdexcept>

namespace witt {

std::int64_t ghw_propagate_bound(std::int64_t N, const LatticeVector& beta) {
  if (N < 0) throw std::invalid_argument("ghw_propagate_bound: N must be nonnegative");
  return N + beta.l1_norm() + 1;
}

UnimodularBasis lemma1_basis(std::int64_t k, std::size_t n) {
  if (n < 2) throw std::invalid_argument("lemma1_basis: n must be at least 2");
  if (k < 0) throw std::invalid_argument("lemma1_basis: k must be nonnegative");
  std::vector<LatticeVector> rows;
  LatticeVector e1 = LatticeVector::unit(n, 0) * (k + 1) + LatticeVector::unit(n, 1);
  rows.push_back(e1);
  rows.push_back(LatticeVector::unit(n, 0) * k + LatticeVector::unit(n, 1));
  for (std::size_t j = 2; j < n; ++j) rows.push_back(e1 + LatticeVector::unit(n, j));
  return UnimodularBasis(std::move(rows));
}

UnimodularBasis lemma5_basis(std::int64_t p, std::size_t n) {
  if (n < 2) throw std::invalid_argument("lemma5_basis: n must be at least 2");
  if (p < 1) throw std::invalid_argument("lemma5_basis: p must be at least 1");
  LatticeVector e1(n), e2(n);
  for (std::size_t i = 0; i < n; ++i) e1[i] = e2[i] = p;
  e1[0] = p + 1;
  e2[0] = p + 2;
  e2[1] = p + 1;
  std::vector<LatticeVector> rows{e1, e2};
  for (std::size_t i = 2; i < n; ++i) rows.push_back(e1 + LatticeVector::unit(n, i));
  return UnimodularBasis(std::move(rows));
}

bool ghw_is_symbolic(const WeightModule& V) { return dynamic_cast<const TensorModule*>(&V) != nullptr; }

std::optional<std::int64_t> is_ghw(const WeightModule& V, const LatticeVector& mu, const ScalarVector& v,
                                   std::int64_t radius, const std::optional<UnimodularBasis>& basis) {
  if (is_zero(v)) throw std::invalid_argument("is_ghw: v must be nonzero");
  if (v.size() != V.weight_dim(mu)) throw std::invalid_argument("is_ghw: vector size does not match the weight space");
  const std::size_t n = V.rank();
  if (auto t = dynamic_cast<const TensorModule*>(&V)) {
    // t^alpha d_j w_mu = (lambda_j + mu_j + b alpha_j) w_{mu+alpha}; vanishing on a full cone of
    // alpha forces b = 0 and lambda + mu = 0.
    const auto& fam = t->params();
    if (!fam.b.is_zero()) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
      if (!(fam.lambda[i] + Scalar(static_cast<long>(mu[i]))).is_zero()) return std::nullopt;
    return 0;
  }
  if (radius < 1) throw std::invalid_argument("is_ghw: window radius must be positive");
  const UnimodularBasis frame = basis ? *basis : UnimodularBasis::identity(n);
  require_same_dim(frame.dim(), n, "is_ghw basis");
  Box grades{LatticeVector(n), LatticeVector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    grades.lo[i] = 1;
    grades.hi[i] = radius;
  }
  std::int64_t N = 0;
  for (const auto& y : grades.points()) {
    std::int64_t floor_y = *std::min_element(y.begin(), y.end());
    if (floor_y <= N) continue;  // already excluded by a larger failure
    LatticeVector alpha = frame.to_standard(y);
    for (std::size_t j = 0; j < n; ++j) {
      VectorResult r = V.apply(alpha, j, mu, v);
      if (!r.exact || !is_zero(r.vector)) {
        N = std::max(N, floor_y);
        break;
      }
    }
  }
  if (N >= radius) return std::nullopt;
  return N;
}

std::optional<GhwWitness> find_ghw_vector(const WeightModule& V, const Box& window, const GhwSearch& opts) {
  const std::size_t n = V.rank();
  auto offsets = window.points();
  std::reverse(offsets.begin(), offsets.end());

  if (auto t = dynamic_cast<const TensorModule*>(&V)) {
    for (const auto& mu : offsets) {
      if (V.weight_dim(mu) == 0) continue;
      ScalarVector v{Scalar(1)};
      if (auto N = is_ghw(*t, mu, v, 1)) return GhwWitness{mu, v, *N, UnimodularBasis::identity(n), "symbolic", 0};
    }
    return std::nullopt;
  }

  std::int64_t radius = opts.radius;
  if (radius <= 0)
    for (std::size_t i = 0; i < n; ++i) radius = std::max({radius, window.hi[i], -window.lo[i]});
  if (radius < 1) radius = 1;

  std::vector<UnimodularBasis> frames{UnimodularBasis::identity(n)};
  if (n >= 2)
    for (std::int64_t k = 1; k <= 3; ++k) frames.push_back(lemma1_basis(k, n));

  for (const auto& frame : frames) {
    for (const auto& mu : offsets) {
      if (!V.valid_offset(mu)) continue;
      const std::size_t d = V.weight_dim(mu);
      if (d == 0 || d > opts.max_dim) continue;
      Matrix stacked(0, d);
      for (const auto& row : frame.rows())
        for (std::size_t j = 0; j < n; ++j) {
          ActionResult a = V.act(row, j, mu);
          if (a.exact) stacked = stacked.stacked(a.matrix);
        }
      std::vector<ScalarVector> ker;
      if (stacked.rows() == 0) {
        ScalarVector e(d);
        e[0] = 1;
        ker.push_back(e);
      } else {
        ker = stacked.kernel_basis();
      }
      for (const auto& v : ker)
        if (auto N = is_ghw(V, mu, v, radius, frame)) return GhwWitness{mu, v, *N, frame, "window", radius};
    }
  }
  return std::nullopt;
}

SupportWindow lemma5_normalized(const SupportWindow& w, const LatticeVector& top, std::int64_t* p_used) {
  const std::size_t n = w.dim();
  LatticeVector ones(n);
  for (std::size_t i = 0; i < n; ++i) ones[i] = 1;
  RayProfile r = ray_profile(w, top, ones);
  if (r.kind != RayKind::UpBounded)
    throw std::invalid_argument("lemma5_normalized: the diagonal ray from " + top.to_string() + " is " +
                                to_string(r.kind));
  const std::int64_t p = r.m + 2;
  if (p_used) *p_used = p;
  return transform_window(rebase(w, top), lemma5_basis(p, n));
}

}  // namespace witt
