#include "wittsupport/verma.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace witt {

namespace {

UnimodularBasis make_frame(const VermaParams& p) {
  const std::size_t n = p.beta.size();
  if (n == 0) throw std::invalid_argument("verma: beta must be nonempty");
  if (p.G.size() + 1 != n)
    throw std::invalid_argument("verma: G needs exactly n-1 = " + std::to_string(n - 1) + " basis vectors");
  std::vector<LatticeVector> rows = p.G;
  rows.push_back(p.beta);
  for (const auto& r : rows) require_same_dim(r.size(), n, "verma frame");
  try {
    return UnimodularBasis(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("verma: Z^n is not G + Z beta: ") + e.what());
  }
}

std::int64_t ipow(std::int64_t b, std::size_t e) {
  std::int64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TruncatedVerma::TruncatedVerma(VermaParams p)
    : WeightModule(p.X.lambda), p_(std::move(p)), frame_(make_frame(p_)), h_(p_.G.size()) {
  const std::size_t n = p_.beta.size();
  if (p_.K < 1) throw std::invalid_argument("verma: depth bound K must be at least 1");
  if (h_ > 0 && p_.B < 1) throw std::invalid_argument("verma: radius B must be at least 1");
  if (h_ == 0) p_.B = 0;
  if (p_.X.lambda.empty()) p_.X.lambda = ScalarVector(n);
  require_same_dim(p_.X.lambda.size(), n, "verma lambda");
  if (p_.X.kind == VermaXKind::Trivial) {
    if (h_ > 0 && !is_zero(p_.X.lambda))
      throw std::invalid_argument("verma: a trivial level module over a_G forces lambda = 0 when G != 0");
    if (!p_.X.b.is_zero()) throw std::invalid_argument("verma: b is only meaningful for a tensor level module");
  }
  lambda_ = p_.X.lambda;

  const std::int64_t R = 2 * p_.B + 1;
  const std::int64_t per_k = ipow(R, h_);
  for (std::int64_t k = 1; k <= p_.K; ++k)
    for (std::int64_t ci = 0; ci < per_k; ++ci) {
      LatticeVector c(h_);
      std::int64_t rem = ci;
      for (std::size_t i = h_; i > 0; --i) {
        c[i - 1] = rem % R - p_.B;
        rem /= R;
      }
      for (std::size_t j = 0; j < n; ++j) gens_.push_back({k, c, j, offset_of(c, k)});
    }
  compute_counts();

  // Greedy symmetric window: the valid region is convex, so checking corners suffices.
  auto box_valid = [&](const std::vector<std::int64_t>& r) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      LatticeVector x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = (mask >> i & 1) ? r[i] : -r[i];
      if (!valid_offset(x)) return false;
    }
    return true;
  };
  const std::int64_t cap = 4 * std::max(p_.K, p_.B) + 4;
  std::vector<std::int64_t> r(n, 0);
  while (r[0] < cap) {
    std::vector<std::int64_t> t(n, r[0] + 1);
    if (!box_valid(t)) break;
    r = t;
  }
  for (std::size_t i = 0; i < n; ++i)
    while (r[i] < cap) {
      auto t = r;
      ++t[i];
      if (!box_valid(t)) break;
      r = t;
    }
  window_.lo = LatticeVector(n);
  window_.hi = LatticeVector(n);
  for (std::size_t i = 0; i < n; ++i) {
    window_.lo[i] = -r[i];
    window_.hi[i] = r[i];
  }
}

TruncatedVerma::Coordinates TruncatedVerma::coordinates(const LatticeVector& mu) const {
  LatticeVector y = frame_.apply(mu);
  LatticeVector c(h_);
  for (std::size_t i = 0; i < h_; ++i) c[i] = y[i];
  return {c, -y[h_]};
}

LatticeVector TruncatedVerma::offset_of(const LatticeVector& c, std::int64_t depth) const {
  LatticeVector y(h_ + 1);
  for (std::size_t i = 0; i < h_; ++i) y[i] = c[i];
  y[h_] = -depth;
  return frame_.to_standard(y);
}

bool TruncatedVerma::in_radius(const LatticeVector& c) const { return c.linf_norm() <= p_.B; }

std::optional<std::uint32_t> TruncatedVerma::generator_id(std::int64_t k, const LatticeVector& c,
                                                          std::size_t j) const {
  if (k < 1 || k > p_.K || !in_radius(c)) return std::nullopt;
  const std::int64_t R = 2 * p_.B + 1;
  std::int64_t ci = 0;
  for (std::size_t i = 0; i < h_; ++i) ci = ci * R + (c[i] + p_.B);
  const auto n = static_cast<std::int64_t>(p_.beta.size());
  return static_cast<std::uint32_t>(((k - 1) * ipow(R, h_) + ci) * n + static_cast<std::int64_t>(j));
}

void TruncatedVerma::compute_counts() {
  sum_radius_ = p_.K * p_.B;
  const std::int64_t S = 2 * sum_radius_ + 1;
  const std::int64_t states = ipow(S, h_);
  const double work = static_cast<double>(gens_.size()) * static_cast<double>(states) *
                      static_cast<double>(p_.K + 1);
  if (work > 4e8) throw std::length_error("verma: truncation too large for dimension counting");
  counts_.assign(static_cast<std::size_t>(states * (p_.K + 1)), 0);
  std::vector<LatticeVector> coords(static_cast<std::size_t>(states), LatticeVector(h_));
  for (std::int64_t s = 0; s < states; ++s) {
    std::int64_t rem = s;
    for (std::size_t i = h_; i > 0; --i) {
      coords[s][i - 1] = rem % S - sum_radius_;
      rem /= S;
    }
  }
  auto sidx = [&](const LatticeVector& c) -> std::int64_t {
    std::int64_t r = 0;
    for (std::size_t i = 0; i < h_; ++i) {
      if (c[i] < -sum_radius_ || c[i] > sum_radius_) return -1;
      r = r * S + (c[i] + sum_radius_);
    }
    return r;
  };
  counts_[static_cast<std::size_t>(sidx(LatticeVector(h_)))] = 1;
  for (const auto& g : gens_) {
    for (std::int64_t d = 0; d + g.k <= p_.K; ++d)
      for (std::int64_t s = 0; s < states; ++s) {
        std::uint64_t v = counts_[static_cast<std::size_t>(d * states + s)];
        if (v == 0) continue;
        std::int64_t t = sidx(coords[s] + g.c);
        if (t < 0) continue;
        auto& dst = counts_[static_cast<std::size_t>((d + g.k) * states + t)];
        if (__builtin_add_overflow(dst, v, &dst)) throw std::overflow_error("verma: dimension count overflow");
      }
  }
}

std::uint64_t TruncatedVerma::count(const LatticeVector& c, std::int64_t d) const {
  if (d < 0 || d > p_.K) return 0;
  const std::int64_t S = 2 * sum_radius_ + 1;
  std::int64_t r = 0;
  for (std::size_t i = 0; i < h_; ++i) {
    if (c[i] < -sum_radius_ || c[i] > sum_radius_) return 0;
    r = r * S + (c[i] + sum_radius_);
  }
  return counts_[static_cast<std::size_t>(d * ipow(S, h_) + r)];
}

bool TruncatedVerma::valid_offset(const LatticeVector& mu) const {
  auto co = coordinates(mu);
  return co.depth <= p_.K && in_radius(co.c);
}

bool TruncatedVerma::boundary_offset(const LatticeVector& mu) const {
  if (h_ == 0 || !valid_offset(mu)) return false;
  auto co = coordinates(mu);
  return co.depth >= (p_.X.kind == VermaXKind::Trivial ? 2 : 1);
}

std::size_t TruncatedVerma::weight_dim(const LatticeVector& mu) const {
  require_same_dim(mu.size(), rank(), "verma weight");
  if (!valid_offset(mu)) throw std::out_of_range("verma: offset " + mu.to_string() + " is outside the truncation");
  auto co = coordinates(mu);
  if (co.depth < 0) return 0;
  if (p_.X.kind == VermaXKind::Trivial) return static_cast<std::size_t>(count(co.c, co.depth));
  std::uint64_t total = 0;
  Box radius{LatticeVector(h_), LatticeVector(h_)};
  for (std::size_t i = 0; i < h_; ++i) {
    radius.lo[i] = -p_.B;
    radius.hi[i] = p_.B;
  }
  if (h_ == 0) return static_cast<std::size_t>(count(co.c, co.depth));
  for (const auto& g : radius.points()) total += count(co.c - g, co.depth);
  return static_cast<std::size_t>(total);
}

const std::vector<TruncatedVerma::BasisElement>& TruncatedVerma::basis(const LatticeVector& mu) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = basis_cache_.find(mu);
    if (it != basis_cache_.end()) return it->second;
  }
  const std::size_t expected = weight_dim(mu);
  auto co = coordinates(mu);
  std::vector<BasisElement> out;
  if (co.depth >= 0) {
    std::vector<LatticeVector> gammas;
    if (p_.X.kind == VermaXKind::Trivial || h_ == 0) {
      gammas.push_back(LatticeVector(h_));
    } else {
      Box radius{LatticeVector(h_), LatticeVector(h_)};
      for (std::size_t i = 0; i < h_; ++i) {
        radius.lo[i] = -p_.B;
        radius.hi[i] = p_.B;
      }
      gammas = radius.points();
    }
    const std::int64_t block = static_cast<std::int64_t>(gens_.size()) / p_.K;  // ids per depth
    Monomial cur;
    std::function<void(std::int64_t, std::int64_t, const LatticeVector&, const LatticeVector&)> rec =
        [&](std::int64_t max_id, std::int64_t rem_depth, const LatticeVector& rem_sum, const LatticeVector& gamma) {
          if (rem_depth == 0) {
            if (rem_sum.is_zero()) out.push_back({cur, gamma});
            return;
          }
          std::int64_t top = std::min(max_id, rem_depth * block - 1);
          for (std::int64_t id = top; id >= 0; --id) {
            const auto& g = gens_[static_cast<std::size_t>(id)];
            LatticeVector r = rem_sum - g.c;
            if (r.linf_norm() > (rem_depth - g.k) * p_.B) continue;
            cur.push_back(static_cast<std::uint32_t>(id));
            rec(id, rem_depth - g.k, r, gamma);
            cur.pop_back();
          }
        };
    for (const auto& gamma : gammas) rec(static_cast<std::int64_t>(gens_.size()) - 1, co.depth, co.c - gamma, gamma);
  }
  if (out.size() != expected)
    throw std::logic_error("verma: basis enumeration (" + std::to_string(out.size()) +
                           ") disagrees with dimension count (" + std::to_string(expected) + ")");
  std::lock_guard<std::mutex> lock(mu_);
  return basis_cache_.emplace(mu, std::move(out)).first->second;
}

const std::map<TruncatedVerma::BasisElement, std::size_t>& TruncatedVerma::index(const LatticeVector& mu) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_cache_.find(mu);
    if (it != index_cache_.end()) return it->second;
  }
  const auto& b = basis(mu);
  std::map<BasisElement, std::size_t> idx;
  for (std::size_t i = 0; i < b.size(); ++i) idx.emplace(b[i], i);
  std::lock_guard<std::mutex> lock(mu_);
  return index_cache_.emplace(mu, std::move(idx)).first->second;
}

std::pair<std::vector<std::pair<std::uint32_t, Scalar>>, bool> TruncatedVerma::gen_bracket(std::uint32_t y,
                                                                                           std::uint32_t z) const {
  const auto& gy = gens_[y];
  const auto& gz = gens_[z];
  // [t^a d_i, t^a' d_j] = t^(a+a') (a'_i d_j - a_j d_i)
  Scalar cj(static_cast<long>(gz.grade[gy.j]));
  Scalar ci(-static_cast<long>(gy.grade[gz.j]));
  std::vector<std::pair<std::uint32_t, Scalar>> out;
  if (gy.j == gz.j) {
    cj += ci;
    ci = 0;
  }
  if (cj.is_zero() && ci.is_zero()) return {out, true};
  auto wj = generator_id(gy.k + gz.k, gy.c + gz.c, gz.j);
  auto wi = generator_id(gy.k + gz.k, gy.c + gz.c, gy.j);
  if (!wj) return {out, false};
  if (!cj.is_zero()) out.emplace_back(*wj, cj);
  if (!ci.is_zero()) out.emplace_back(*wi, ci);
  return {out, true};
}

TruncatedVerma::Straightened TruncatedVerma::left_mul(std::uint32_t y, const Monomial& m) const {
  if (m.empty() || y >= m.front()) {
    Monomial r;
    r.reserve(m.size() + 1);
    r.push_back(y);
    r.insert(r.end(), m.begin(), m.end());
    Straightened s;
    s.terms.emplace(std::move(r), Scalar(1));
    return s;
  }
  auto key = std::make_pair(y, m);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = left_cache_.find(key);
    if (it != left_cache_.end()) return it->second;
  }
  const std::uint32_t z = m.front();
  Monomial rest(m.begin() + 1, m.end());
  Straightened out;
  auto add = [&](const Straightened& s, const Scalar& c) {
    out.exact = out.exact && s.exact;
    for (const auto& [mono, v] : s.terms) {
      auto [it, fresh] = out.terms.try_emplace(mono, v * c);
      if (!fresh) {
        it->second += v * c;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  };
  // y z rest = z (y rest) + [y, z] rest
  Straightened a = left_mul(y, rest);
  out.exact = a.exact;
  for (const auto& [mono, c] : a.terms) add(left_mul(z, mono), c);
  auto [br, br_exact] = gen_bracket(y, z);
  out.exact = out.exact && br_exact;
  for (const auto& [w, c] : br) add(left_mul(w, rest), c);
  std::lock_guard<std::mutex> lock(mu_);
  left_cache_.emplace(std::move(key), out);
  return out;
}

TruncatedVerma::Acted TruncatedVerma::act_on_x(const LatticeVector& alpha, std::size_t j,
                                               const LatticeVector& gamma) const {
  auto co = coordinates(alpha);
  Acted out;
  if (co.depth != 0) return out;  // n+ kills X
  if (p_.X.kind == VermaXKind::Trivial) {
    if (alpha.is_zero() && !p_.X.lambda[j].is_zero()) out.terms.emplace(BasisElement{{}, gamma}, p_.X.lambda[j]);
    return out;
  }
  LatticeVector gstd = offset_of(gamma, 0);
  Scalar coef = p_.X.lambda[j] + Scalar(static_cast<long>(gstd[j])) + p_.X.b * Scalar(static_cast<long>(alpha[j]));
  if (coef.is_zero()) return out;
  LatticeVector g2 = gamma + co.c;
  if (!in_radius(g2)) {
    out.exact = false;
    return out;
  }
  out.terms.emplace(BasisElement{{}, g2}, coef);
  return out;
}

TruncatedVerma::Acted TruncatedVerma::act_element(const LatticeVector& alpha, std::size_t j,
                                                  const BasisElement& e) const {
  auto key = std::make_tuple(alpha, j, e);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = act_cache_.find(key);
    if (it != act_cache_.end()) return it->second;
  }
  Acted out;
  auto add = [&](const Acted& a, const Scalar& c) {
    out.exact = out.exact && a.exact;
    for (const auto& [be, v] : a.terms) {
      auto [it, fresh] = out.terms.try_emplace(be, v * c);
      if (!fresh) {
        it->second += v * c;
        if (it->second.is_zero()) out.terms.erase(it);
      }
    }
  };
  auto co = coordinates(alpha);
  if (co.depth >= 1) {
    auto id = generator_id(co.depth, co.c, j);
    if (!id) {
      out.exact = false;
    } else {
      Straightened s = left_mul(*id, e.m);
      out.exact = s.exact;
      for (const auto& [mono, c] : s.terms) out.terms.emplace(BasisElement{mono, e.gamma}, c);
    }
  } else if (e.m.empty()) {
    out = act_on_x(alpha, j, e.gamma);
  } else {
    // x y1 rest = y1 (x rest) + [x, y1] rest
    const std::uint32_t y1 = e.m.front();
    BasisElement rest{Monomial(e.m.begin() + 1, e.m.end()), e.gamma};
    Acted r = act_element(alpha, j, rest);
    out.exact = r.exact;
    for (const auto& [be, c] : r.terms) {
      Straightened s = left_mul(y1, be.m);
      Acted lifted;
      lifted.exact = s.exact;
      for (const auto& [mono, v] : s.terms) lifted.terms.emplace(BasisElement{mono, be.gamma}, v);
      add(lifted, c);
    }
    const auto& g1 = gens_[y1];
    // [t^a d_j, t^a1 d_i1] = t^(a+a1) (a1_j d_i1 - a_i1 d_j)
    LatticeVector sum = alpha + g1.grade;
    if (g1.grade[j] != 0) add(act_element(sum, g1.j, rest), Scalar(static_cast<long>(g1.grade[j])));
    if (alpha[g1.j] != 0) add(act_element(sum, j, rest), Scalar(-static_cast<long>(alpha[g1.j])));
  }
  std::lock_guard<std::mutex> lock(mu_);
  act_cache_.emplace(std::move(key), out);
  return out;
}

ActionResult TruncatedVerma::act(const LatticeVector& alpha, std::size_t j, const LatticeVector& mu) const {
  require_same_dim(alpha.size(), rank(), "verma action grade");
  if (j >= rank()) throw std::out_of_range("derivation index out of range");
  const std::size_t src = weight_dim(mu);
  const LatticeVector target = mu + alpha;
  auto tc = coordinates(target);
  if (tc.depth < 0) return {Matrix(0, src), true};
  if (!valid_offset(target)) return {Matrix(0, src), src == 0};
  const auto& sb = basis(mu);
  const auto& tidx = index(target);
  ActionResult out{Matrix(tidx.size(), src), true};
  for (std::size_t i = 0; i < sb.size(); ++i) {
    Acted a = act_element(alpha, j, sb[i]);
    out.exact = out.exact && a.exact;
    for (const auto& [be, c] : a.terms) out.matrix(tidx.at(be), i) = c;
  }
  return out;
}

VectorResult TruncatedVerma::apply(const LatticeVector& alpha, std::size_t j, const LatticeVector& mu,
                                   const ScalarVector& v) const {
  require_same_dim(alpha.size(), rank(), "verma action grade");
  if (j >= rank()) throw std::out_of_range("derivation index out of range");
  const auto& sb = basis(mu);
  if (v.size() != sb.size()) throw std::invalid_argument("verma apply: vector size mismatch");
  const LatticeVector target = mu + alpha;
  auto tc = coordinates(target);
  if (tc.depth < 0) return {{}, true};
  if (!valid_offset(target)) return {{}, is_zero(v)};
  const auto& tidx = index(target);
  VectorResult out{ScalarVector(tidx.size()), true};
  for (std::size_t i = 0; i < sb.size(); ++i) {
    if (v[i].is_zero()) continue;
    Acted a = act_element(alpha, j, sb[i]);
    out.exact = out.exact && a.exact;
    for (const auto& [be, c] : a.terms) out.vector[tidx.at(be)] += c * v[i];
  }
  return out;
}

std::optional<HalfSpaceSpec> TruncatedVerma::analytic_cut() const {
  // a = column h of the inverse frame, so a.mu is the beta-coordinate (= -depth).
  const UnimodularBasis inverse = frame_.inverse();
  const auto& inv = inverse.rows();
  RationalVector a;
  for (std::size_t i = 0; i < rank(); ++i) a.emplace_back(static_cast<long>(inv[i][h_]));
  return HalfSpaceSpec{a, LatticeVector(rank())};
}

std::shared_ptr<TruncatedVerma> build_truncated_verma(const VermaParams& p) {
  return std::make_shared<TruncatedVerma>(p);
}

}  // namespace witt
