#include "wittsupport/wmod.hpp"

#include <stdexcept>

namespace witt {

Box Box::cube(std::size_t n, std::int64_t r) {
  if (r < 0) throw std::invalid_argument("box radius must be nonnegative");
  LatticeVector lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = -r;
    hi[i] = r;
  }
  return {lo, hi};
}

bool Box::contains(const LatticeVector& x) const {
  require_same_dim(x.size(), dim(), "box membership");
  for (std::size_t i = 0; i < dim(); ++i)
    if (x[i] < lo[i] || x[i] > hi[i]) return false;
  return true;
}

std::size_t Box::size() const {
  std::size_t s = 1;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (hi[i] < lo[i]) return 0;
    s *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  }
  return s;
}

std::vector<LatticeVector> Box::points() const {
  std::vector<LatticeVector> out;
  if (size() == 0) return out;
  out.reserve(size());
  LatticeVector cur = lo;
  while (true) {
    out.push_back(cur);
    std::size_t i = dim();
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return out;
    }
  }
}

std::optional<LatticeVector> WeightModule::zero_weight_offset() const {
  if (!is_integer_vector(lambda_)) return std::nullopt;
  return -to_lattice(lambda_);
}

VectorResult WeightModule::apply(const LatticeVector& alpha, std::size_t j, const LatticeVector& mu,
                                 const ScalarVector& v) const {
  ActionResult a = act(alpha, j, mu);
  return {a.matrix.apply(v), a.exact};
}

bool is_integer_vector(const ScalarVector& v) {
  for (const auto& s : v)
    if (!s.is_rational() || !is_integer(s.rational())) return false;
  return true;
}

LatticeVector to_lattice(const ScalarVector& v) {
  LatticeVector x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x[i] = to_int64(v[i].rational());
  return x;
}

std::string to_string(TensorVariant v) {
  switch (v) {
    case TensorVariant::Full: return "full";
    case TensorVariant::QuotientByTrivial: return "quotient_by_trivial";
    case TensorVariant::PuncturedSubmodule: return "punctured_submodule";
  }
  return "?";
}

TensorVariant parse_tensor_variant(const std::string& s) {
  if (s == "full") return TensorVariant::Full;
  if (s == "quotient_by_trivial") return TensorVariant::QuotientByTrivial;
  if (s == "punctured_submodule") return TensorVariant::PuncturedSubmodule;
  throw std::invalid_argument("unknown tensor variant '" + s + "'");
}

Scalar tensor_action_coefficient(const ScalarVector& lambda, const Scalar& b, const LatticeVector& alpha,
                                 const ScalarVector& u, const LatticeVector& mu) {
  require_same_dim(lambda.size(), mu.size(), "tensor coefficient");
  ScalarVector shifted(lambda);
  for (std::size_t i = 0; i < mu.size(); ++i) shifted[i] += Scalar(static_cast<long>(mu[i]));
  return dot(u, shifted) + b * dot(u, alpha);
}

TensorModule::TensorModule(TensorFamily fam, std::int64_t window)
    : WeightModule(fam.lambda), fam_(std::move(fam)), window_(window) {
  if (fam_.lambda.empty()) throw std::invalid_argument("tensor family needs n >= 1");
  if (window_ < 0) throw std::invalid_argument("tensor window radius must be nonnegative");
  if (fam_.variant != TensorVariant::Full) {
    if (!is_integer_vector(fam_.lambda))
      throw std::invalid_argument(to_string(fam_.variant) + " requires an integral lambda");
    Scalar want = fam_.variant == TensorVariant::QuotientByTrivial ? Scalar(0) : Scalar(1);
    if (fam_.b != want)
      throw std::invalid_argument(to_string(fam_.variant) + " requires b = " + want.to_string());
    fam_.lambda = ScalarVector(fam_.lambda.size());
    lambda_ = fam_.lambda;
  }
}

std::size_t TensorModule::weight_dim(const LatticeVector& mu) const {
  require_same_dim(mu.size(), rank(), "tensor weight");
  if (fam_.variant != TensorVariant::Full && mu.is_zero()) return 0;
  return 1;
}

ActionResult TensorModule::act(const LatticeVector& alpha, std::size_t j, const LatticeVector& mu) const {
  require_same_dim(alpha.size(), rank(), "tensor action grade");
  if (j >= rank()) throw std::out_of_range("derivation index out of range");
  std::size_t src = weight_dim(mu), dst = weight_dim(mu + alpha);
  Matrix m(dst, src);
  if (src && dst) {
    ScalarVector u(rank());
    u[j] = 1;
    m(0, 0) = tensor_action_coefficient(fam_.lambda, fam_.b, alpha, u, mu);
  }
  return {std::move(m), true};
}

std::shared_ptr<TensorModule> build_tensor_module(const TensorFamily& fam, std::int64_t window) {
  return std::make_shared<TensorModule>(fam, window);
}

ActionResult action_matrix(const WeightModule& v, const WittElement& x, const LatticeVector& mu) {
  auto g = x.grade();
  if (!g) {
    if (x.is_zero()) throw std::invalid_argument("action_matrix: zero element has no grade");
    throw std::invalid_argument("action_matrix: element is not homogeneous");
  }
  const ScalarVector& u = x.terms().begin()->second;
  ActionResult out{Matrix(v.weight_dim(mu + *g), v.weight_dim(mu)), true};
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j].is_zero()) continue;
    ActionResult a = v.act(*g, j, mu);
    out.matrix = out.matrix + a.matrix.scaled(u[j]);
    out.exact = out.exact && a.exact;
  }
  return out;
}

KernelResult action_kernel(const WeightModule& v, const LatticeVector& mu, const std::vector<WittElement>& xs) {
  const std::size_t d = v.weight_dim(mu);
  Matrix stacked(0, d);
  bool exact = true;
  for (const auto& x : xs) {
    ActionResult a = action_matrix(v, x, mu);
    exact = exact && a.exact;
    stacked = stacked.stacked(a.matrix);
  }
  if (stacked.rows() == 0) {
    KernelResult all{{}, exact};
    for (std::size_t i = 0; i < d; ++i) {
      ScalarVector e(d);
      e[i] = 1;
      all.basis.push_back(std::move(e));
    }
    return all;
  }
  return {stacked.kernel_basis(), exact};
}

}  // namespace witt
