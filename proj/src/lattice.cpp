#include "wittsupport/lattice.hpp"

#include "wittsupport/exact_lp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace witt {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("lattice coordinate overflow");
  return r;
}

}  // namespace

LatticeVector LatticeVector::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("unit vector index out of range");
  LatticeVector e(n);
  e[i] = 1;
  return e;
}

bool LatticeVector::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](auto c) { return c == 0; });
}

LatticeVector::value_type LatticeVector::l1_norm() const {
  value_type s = 0;
  for (auto c : v_) s = checked_add(s, c < 0 ? -c : c);
  return s;
}

LatticeVector::value_type LatticeVector::linf_norm() const {
  value_type s = 0;
  for (auto c : v_) s = std::max(s, c < 0 ? -c : c);
  return s;
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  require_same_dim(size(), o.size(), "lattice addition");
  LatticeVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked_add(v_[i], o[i]);
  return r;
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const { return *this + (-o); }

LatticeVector LatticeVector::operator-() const {
  LatticeVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked_mul(v_[i], -1);
  return r;
}

LatticeVector LatticeVector::operator*(value_type k) const {
  LatticeVector r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = checked_mul(v_[i], k);
  return r;
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << v_[i];
  os << ')';
  return os.str();
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
}

Rational dot(const RationalVector& a, const LatticeVector& x) {
  require_same_dim(a.size(), x.size(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (x[i] != 0) s += a[i] * Rational(static_cast<long>(x[i]));
  return s;
}

Rational dot(const RationalVector& a, const RationalVector& x) {
  require_same_dim(a.size(), x.size(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

RationalVector to_rational(const LatticeVector& x) {
  RationalVector r;
  r.reserve(x.size());
  for (auto c : x) r.emplace_back(static_cast<long>(c));
  return r;
}

Side halfspace_classify(const RationalVector& a, const LatticeVector& x) {
  if (std::all_of(a.begin(), a.end(), [](const Rational& q) { return q == 0; }))
    throw std::invalid_argument("halfspace_classify: degenerate normal a = 0");
  int s = sgn(dot(a, x));
  return s < 0 ? Side::Negative : (s > 0 ? Side::Positive : Side::Zero);
}

std::string to_string(Order o) {
  switch (o) {
    case Order::Gt: return "gt";
    case Order::Geq: return "geq";
    case Order::Eq: return "eq";
    case Order::Lt: return "lt";
    case Order::Leq: return "leq";
    case Order::Incomparable: return "incomparable";
  }
  return "?";
}

Order componentwise_order(const LatticeVector& x, const LatticeVector& y) {
  require_same_dim(x.size(), y.size(), "componentwise_order");
  bool all_gt = true, all_ge = true, all_lt = true, all_le = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    all_gt &= x[i] > y[i];
    all_ge &= x[i] >= y[i];
    all_lt &= x[i] < y[i];
    all_le &= x[i] <= y[i];
  }
  if (all_ge && all_le) return Order::Eq;
  if (all_gt) return Order::Gt;
  if (all_ge) return Order::Geq;
  if (all_lt) return Order::Lt;
  if (all_le) return Order::Leq;
  return Order::Incomparable;
}

bool leq(const LatticeVector& x, const LatticeVector& y) {
  require_same_dim(x.size(), y.size(), "leq");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > y[i]) return false;
  return true;
}

Integer integer_determinant(const std::vector<LatticeVector>& rows) {
  const std::size_t n = rows.size();
  std::vector<std::vector<Rational>> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    require_same_dim(rows[i].size(), n, "determinant");
    m[i] = to_rational(rows[i]);
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det.get_num();
}

namespace {

// Rows of M^{-1} for a unimodular M via exact Gauss-Jordan.
std::vector<LatticeVector> integer_inverse(const std::vector<LatticeVector>& rows) {
  const std::size_t n = rows.size();
  std::vector<RationalVector> a(n, RationalVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(rows[i][j]));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("singular matrix");
    std::swap(a[p], a[c]);
    Rational piv = a[c][c];
    for (auto& v : a[c]) v /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<LatticeVector> inv(n, LatticeVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = to_int64(a[i][n + j]);
  return inv;
}

}  // namespace

UnimodularBasis::UnimodularBasis(std::vector<LatticeVector> rows) : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  if (n == 0) throw std::invalid_argument("unimodular basis needs at least one row");
  for (const auto& r : rows_) require_same_dim(r.size(), n, "unimodular basis row");
  Integer d = integer_determinant(rows_);
  if (d != 1 && d != -1)
    throw std::invalid_argument("basis is not unimodular (det = " + d.get_str() + ")");
  det_ = static_cast<int>(d.get_si());
  inv_ = integer_inverse(rows_);
}

UnimodularBasis UnimodularBasis::identity(std::size_t n) {
  std::vector<LatticeVector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(LatticeVector::unit(n, i));
  return UnimodularBasis(std::move(rows));
}

LatticeVector UnimodularBasis::apply(const LatticeVector& x) const {
  // x = M^T y, so y = (M^{-1})^T x, i.e. y_j = sum_i x_i (M^{-1})_{ij}.
  require_same_dim(x.size(), dim(), "apply_basis");
  LatticeVector y(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (x[i] != 0) y[j] = checked_add(y[j], checked_mul(x[i], inv_[i][j]));
  return y;
}

LatticeVector UnimodularBasis::to_standard(const LatticeVector& y) const {
  require_same_dim(y.size(), dim(), "to_standard");
  LatticeVector x(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (y[i] != 0) x += rows_[i] * y[i];
  return x;
}

UnimodularBasis UnimodularBasis::inverse() const { return UnimodularBasis(inv_, rows_, det_); }

LatticeVector apply_basis(const UnimodularBasis& m, const LatticeVector& x) { return m.apply(x); }

std::int64_t SemigroupGenerators::max_k() const {
  std::int64_t k = 0;
  for (auto v : k_plus) k = std::max(k, v);
  for (auto v : k_minus) k = std::max(k, v);
  return k;
}

std::vector<LatticeVector> SemigroupGenerators::with_beta(const LatticeVector& beta) const {
  std::vector<LatticeVector> s{beta};
  for (std::size_t i = 0; i < plus.size(); ++i) {
    s.push_back(plus[i]);
    s.push_back(minus[i]);
  }
  return s;
}

SemigroupGenerators semigroup_generators_for(const LatticeVector& beta, const RationalVector& a) {
  require_same_dim(beta.size(), a.size(), "semigroup_generators_for");
  const Rational ab = dot(a, beta);
  if (ab >= 0)
    throw std::invalid_argument("semigroup_generators_for: requires a·beta < 0, got " +
                                to_string(ab));
  const Rational s = -ab;
  const std::size_t n = beta.size();
  SemigroupGenerators out;
  auto minimal_k = [&](const LatticeVector& e) -> std::int64_t {
    // smallest k >= 0 with a·e + k s > 0
    Rational t = -dot(a, e) / s;
    if (t < 0) return 0;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    if (!fl.fits_slong_p()) throw std::overflow_error("semigroup_generators_for: k too large");
    return fl.get_si() + 1;
  };
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e = LatticeVector::unit(n, i);
    std::int64_t kp = minimal_k(e), km = minimal_k(-e);
    out.k_plus.push_back(kp);
    out.k_minus.push_back(km);
    out.plus.push_back(e - beta * kp);
    out.minus.push_back(-e - beta * km);
  }
  return out;
}

std::string to_string(MonoidStatus s) {
  switch (s) {
    case MonoidStatus::Generated: return "generated";
    case MonoidStatus::ProvenImpossible: return "proven-impossible";
    case MonoidStatus::BoundExhausted: return "bound-exhausted";
  }
  return "?";
}

std::vector<LatticeVector> small_primitive_vectors(std::size_t n, int r) {
  std::vector<LatticeVector> out;
  std::vector<std::int64_t> cur(n, -r);
  while (true) {
    LatticeVector cand(cur);
    if (!cand.is_zero()) {
      std::int64_t g = 0;
      for (auto c : cur) g = std::gcd(g, c < 0 ? -c : c);
      if (g == 1) out.push_back(cand);
    }
    std::size_t i = 0;
    while (i < n && cur[i] == r) cur[i++] = -r;
    if (i == n) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end(), [](const LatticeVector& x, const LatticeVector& y) {
    if (x.l1_norm() != y.l1_norm()) return x.l1_norm() < y.l1_norm();
    return x > y;
  });
  return out;
}

namespace {

// Some a with a·s >= 0 for all s and a·target < 0, if target lies outside cone(S).
std::optional<RationalVector> cone_separator(const std::vector<LatticeVector>& s,
                                             const LatticeVector& target) {
  const std::size_t n = target.size();
  for (const auto& cand : small_primitive_vectors(n, 2)) {
    RationalVector a = to_rational(cand);
    if (dot(a, target) >= 0) continue;
    if (std::all_of(s.begin(), s.end(), [&](const auto& x) { return dot(a, x) >= 0; })) return a;
  }
  lp::Problem p;
  p.num_vars = n;
  p.free.assign(n, true);
  for (const auto& x : s) p.add(to_rational(x), lp::Relation::Geq, 0);
  p.add(to_rational(target), lp::Relation::Leq, -1);
  auto sol = lp::find_feasible(p);
  if (!sol) return std::nullopt;
  return primitive_integer_multiple(*sol);
}

// Does the subgroup generated by S equal Z^n? Decided by the gcd of maximal minors via
// Hermite-style row reduction over Z.
bool spans_full_lattice(const std::vector<LatticeVector>& s, std::size_t n) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& x : s) {
    std::vector<Integer> r;
    for (auto c : x) r.emplace_back(static_cast<long>(c));
    rows.push_back(std::move(r));
  }
  std::size_t top = 0;
  Integer prod = 1;
  for (std::size_t c = 0; c < n; ++c) {
    // Euclid on column c among rows [top, end).
    while (true) {
      std::size_t piv = SIZE_MAX;
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][c] != 0 && (piv == SIZE_MAX || abs(rows[r][c]) < abs(rows[piv][c]))) piv = r;
      if (piv == SIZE_MAX) return false;
      std::swap(rows[piv], rows[top]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c] == 0) continue;
        Integer q = rows[r][c] / rows[top][c];
        for (std::size_t k = c; k < n; ++k) rows[r][k] -= q * rows[top][k];
        if (rows[r][c] != 0) done = false;
      }
      if (done) break;
    }
    prod *= abs(rows[top][c]);
    ++top;
  }
  return prod == 1;
}

}  // namespace

MonoidResult generates_monoid(const std::vector<LatticeVector>& s, std::int64_t search_bound) {
  if (s.empty()) throw std::invalid_argument("generates_monoid: empty generating set");
  if (search_bound <= 0) throw std::invalid_argument("generates_monoid: search bound must be positive");
  const std::size_t n = s.front().size();
  for (const auto& x : s) require_same_dim(x.size(), n, "generates_monoid");

  std::vector<LatticeVector> targets;
  for (std::size_t i = 0; i < n; ++i) {
    targets.push_back(LatticeVector::unit(n, i));
    targets.push_back(-LatticeVector::unit(n, i));
  }

  MonoidResult res;
  for (const auto& t : targets) {
    if (auto a = cone_separator(s, t)) {
      res.status = MonoidStatus::ProvenImpossible;
      res.unreachable = t;
      res.separating_functional = *a;
      return res;
    }
  }
  if (!spans_full_lattice(s, n)) {
    res.status = MonoidStatus::ProvenImpossible;
    res.proper_sublattice = true;
    return res;
  }

  // Breadth-first search over reached points; parents give the witness words.
  struct Node {
    std::size_t parent;
    std::size_t gen;
  };
  std::map<LatticeVector, std::size_t> seen;
  std::vector<LatticeVector> points{LatticeVector::zero(n)};
  std::vector<Node> nodes{{SIZE_MAX, SIZE_MAX}};
  seen.emplace(points[0], 0);
  std::map<LatticeVector, std::size_t> found;
  std::size_t frontier_begin = 0;
  for (std::int64_t len = 1; len <= search_bound && found.size() < targets.size(); ++len) {
    std::size_t frontier_end = points.size();
    for (std::size_t idx = frontier_begin; idx < frontier_end; ++idx) {
      for (std::size_t g = 0; g < s.size(); ++g) {
        LatticeVector p = points[idx] + s[g];
        if (seen.count(p)) continue;
        seen.emplace(p, points.size());
        points.push_back(p);
        nodes.push_back({idx, g});
        if (std::find(targets.begin(), targets.end(), p) != targets.end())
          found.emplace(p, points.size() - 1);
      }
    }
    frontier_begin = frontier_end;
    if (frontier_begin == points.size()) break;
  }

  for (const auto& t : targets) {
    auto it = found.find(t);
    if (it == found.end()) continue;
    MonoidWitness w{t, std::vector<std::int64_t>(s.size(), 0), 0};
    for (std::size_t cur = it->second; nodes[cur].parent != SIZE_MAX; cur = nodes[cur].parent) {
      ++w.counts[nodes[cur].gen];
      ++w.length;
    }
    res.witnesses.push_back(std::move(w));
  }
  res.status = found.size() == targets.size() ? MonoidStatus::Generated : MonoidStatus::BoundExhausted;
  return res;
}

std::optional<RationalVector> span_coordinates(const std::vector<LatticeVector>& basis,
                                                const LatticeVector& x) {
  const std::size_t k = basis.size();
  const std::size_t n = x.size();
  for (const auto& g : basis) require_same_dim(g.size(), n, "span_coordinates");
  // Solve sum_i c_i basis[i] = x by elimination on the n x (k+1) augmented system.
  std::vector<RationalVector> a(n, RationalVector(k + 1, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < k; ++i) a[r][i] = Rational(static_cast<long>(basis[i][r]));
    a[r][k] = Rational(static_cast<long>(x[r]));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < n; ++c) {
    std::size_t p = row;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    Rational piv = a[row][c];
    for (auto& v : a[row]) v /= piv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j <= k; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (pivot_col.size() != k) throw std::invalid_argument("span_coordinates: basis is linearly dependent");
  for (std::size_t r = row; r < n; ++r)
    if (a[r][k] != 0) return std::nullopt;
  RationalVector c(k, 0);
  for (std::size_t i = 0; i < pivot_col.size(); ++i) c[pivot_col[i]] = a[i][k];
  return c;
}

bool in_subgroup(const std::vector<LatticeVector>& basis, const LatticeVector& x) {
  if (basis.empty()) return x.is_zero();
  auto c = span_coordinates(basis, x);
  return c && std::all_of(c->begin(), c->end(), [](const Rational& q) { return is_integer(q); });
}

bool convex_hull_contains(const std::vector<LatticeVector>& points, const LatticeVector& q) {
  if (points.empty()) throw std::invalid_argument("convex_hull_contains: empty point set");
  const std::size_t n = q.size();
  for (const auto& p : points) require_same_dim(p.size(), n, "convex_hull_contains");
  if (std::find(points.begin(), points.end(), q) != points.end()) return true;
  lp::Problem p;
  p.num_vars = points.size();
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row;
    for (const auto& x : points) row.emplace_back(static_cast<long>(x[i]));
    p.add(std::move(row), lp::Relation::Eq, Rational(static_cast<long>(q[i])));
  }
  p.add(RationalVector(points.size(), 1), lp::Relation::Eq, 1);
  return lp::find_feasible(p).has_value();
}

std::optional<RationalVector> separating_hyperplane(const std::vector<LatticeVector>& a_set,
                                                     const LatticeVector& mu) {
  if (a_set.empty()) throw std::invalid_argument("separating_hyperplane: empty set");
  const std::size_t n = mu.size();
  std::vector<LatticeVector> diffs;
  for (const auto& x : a_set) diffs.push_back(x - mu);
  auto strictly_positive = [&](const RationalVector& a) {
    return std::all_of(diffs.begin(), diffs.end(), [&](const auto& d) { return dot(a, d) > 0; });
  };
  for (const auto& cand : small_primitive_vectors(n, n <= 3 ? 3 : 2)) {
    RationalVector a = to_rational(cand);
    if (strictly_positive(a)) return a;
  }
  lp::Problem p;
  p.num_vars = n;
  p.free.assign(n, true);
  for (const auto& d : diffs) p.add(to_rational(d), lp::Relation::Geq, 1);
  auto sol = lp::find_feasible(p);
  if (!sol) return std::nullopt;
  RationalVector a = primitive_integer_multiple(*sol);
  if (!strictly_positive(a)) throw std::logic_error("separating_hyperplane: certificate failed re-verification");
  return a;
}

}  // namespace witt
