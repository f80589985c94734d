#include "wittsupport/supports.hpp"

#include "wittsupport/exact_lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace witt {

bool SupportWindow::supported(const LatticeVector& x) const {
  auto it = dims.find(x);
  return it != dims.end() && it->second > 0;
}

std::vector<LatticeVector> SupportWindow::complement() const {
  std::vector<LatticeVector> out;
  for (const auto& [x, d] : dims)
    if (d == 0 && !boundary.count(x)) out.push_back(x);
  return out;
}

std::vector<LatticeVector> SupportWindow::support() const {
  std::vector<LatticeVector> out;
  for (const auto& [x, d] : dims)
    if (d > 0) out.push_back(x);
  return out;
}

SupportWindow support_window(const WeightModule& v, const std::optional<Box>& box) {
  SupportWindow w;
  w.box = box ? *box : v.default_window();
  require_same_dim(w.box.dim(), v.rank(), "support_window");
  for (const auto& x : w.box.points()) {
    if (!v.valid_offset(x))
      throw std::out_of_range("support_window: offset " + x.to_string() + " exceeds the construction box");
    w.dims.emplace(x, v.weight_dim(x));
    if (v.boundary_offset(x)) w.boundary.insert(x);
  }
  w.coset = v.coset_rep();
  w.zero_weight_offset = v.zero_weight_offset();
  w.analytic_cut = v.analytic_cut();
  return w;
}

namespace {

Box bounding_box(const std::vector<LatticeVector>& pts, std::size_t n) {
  Box b{LatticeVector(n), LatticeVector(n)};
  if (pts.empty()) return b;
  b.lo = b.hi = pts.front();
  for (const auto& p : pts)
    for (std::size_t i = 0; i < n; ++i) {
      b.lo[i] = std::min(b.lo[i], p[i]);
      b.hi[i] = std::max(b.hi[i], p[i]);
    }
  return b;
}

}  // namespace

SupportWindow transform_window(const SupportWindow& w, const UnimodularBasis& m) {
  require_same_dim(m.dim(), w.dim(), "transform_window");
  SupportWindow out;
  std::vector<LatticeVector> keys;
  for (const auto& [x, d] : w.dims) {
    LatticeVector y = m.apply(x);
    out.dims.emplace(y, d);
    keys.push_back(y);
  }
  for (const auto& x : w.boundary) out.boundary.insert(m.apply(x));
  out.box = bounding_box(keys, w.dim());
  {
    // lambda in the new basis as well: y_j = sum_i lambda_i (M^{-1})_{ij}
    const UnimodularBasis minv = m.inverse();
    const auto& inv = minv.rows();
    ScalarVector y(w.dim());
    for (std::size_t j = 0; j < w.dim(); ++j)
      for (std::size_t i = 0; i < w.dim(); ++i)
        if (inv[i][j] != 0) y[j] += w.coset[i] * Scalar(static_cast<long>(inv[i][j]));
    out.coset = y;
  }
  if (w.zero_weight_offset) out.zero_weight_offset = m.apply(*w.zero_weight_offset);
  if (w.analytic_cut) {
    // a.x = a.(M^T y) = (M a).y
    RationalVector a2(w.dim(), 0);
    for (std::size_t i = 0; i < w.dim(); ++i)
      for (std::size_t j = 0; j < w.dim(); ++j)
        a2[i] += Rational(static_cast<long>(m.rows()[i][j])) * w.analytic_cut->a[j];
    out.analytic_cut = HalfSpaceSpec{a2, m.apply(w.analytic_cut->b)};
  }
  return out;
}

SupportWindow rebase(const SupportWindow& w, const LatticeVector& origin) {
  require_same_dim(origin.size(), w.dim(), "rebase");
  SupportWindow out;
  for (const auto& [x, d] : w.dims) out.dims.emplace(x - origin, d);
  for (const auto& x : w.boundary) out.boundary.insert(x - origin);
  out.box = {w.box.lo - origin, w.box.hi - origin};
  out.coset = w.coset;
  for (std::size_t i = 0; i < w.dim(); ++i) out.coset[i] += Scalar(static_cast<long>(origin[i]));
  if (w.zero_weight_offset) out.zero_weight_offset = *w.zero_weight_offset - origin;
  if (w.analytic_cut) out.analytic_cut = HalfSpaceSpec{w.analytic_cut->a, w.analytic_cut->b - origin};
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Dense: return "Dense";
    case Verdict::Punctured: return "Punctured";
    case Verdict::Cut: return "Cut";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Scope s) { return s == Scope::Analytic ? "analytic" : "window"; }

Verdict parse_verdict(const std::string& s) {
  for (auto v : {Verdict::Dense, Verdict::Punctured, Verdict::Cut, Verdict::Unknown})
    if (to_string(v) == s) return v;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

Scope parse_scope(const std::string& s) {
  if (s == "analytic") return Scope::Analytic;
  if (s == "window") return Scope::Window;
  throw std::invalid_argument("unknown scope '" + s + "'");
}

std::size_t cut_margin(const SupportWindow& w) { return (w.dims.size() + 3) / 4; }

namespace {

RationalVector shifted(const LatticeVector& x, const LatticeVector& b) { return to_rational(x - b); }

std::size_t strict_count(const RationalVector& a, const std::vector<LatticeVector>& pts, const LatticeVector& b) {
  std::size_t c = 0;
  for (const auto& u : pts)
    if (dot(a, u - b) > 0) ++c;
  return c;
}

bool closed_side(const RationalVector& a, const std::vector<LatticeVector>& pts, const LatticeVector& b) {
  return std::all_of(pts.begin(), pts.end(), [&](const auto& x) { return dot(a, x - b) <= 0; });
}

}  // namespace

bool verify_cut(const SupportWindow& w, const HalfSpaceSpec& cut, bool require_margin) {
  require_same_dim(cut.a.size(), w.dim(), "verify_cut");
  if (std::all_of(cut.a.begin(), cut.a.end(), [](const Rational& q) { return q == 0; })) return false;
  std::vector<LatticeVector> sup, uns;
  for (const auto& [x, d] : w.dims) (d > 0 ? sup : uns).push_back(x);
  if (!closed_side(cut.a, sup, cut.b)) return false;
  return !require_margin || strict_count(cut.a, uns, cut.b) >= cut_margin(w);
}

std::optional<HalfSpaceSpec> cut_certificate(const SupportWindow& w) {
  const std::size_t n = w.dim();
  std::vector<LatticeVector> sup, uns;
  for (const auto& [x, d] : w.dims) (d > 0 ? sup : uns).push_back(x);
  const std::size_t margin = cut_margin(w);
  if (uns.size() < margin || uns.empty()) return std::nullopt;

  std::vector<LatticeVector> shifts{LatticeVector(n)};
  for (const auto& v : small_primitive_vectors(n, 2))
    if (v.l1_norm() <= 2) shifts.push_back(v);
  for (const auto& v : small_primitive_vectors(n, 1))
    if (v.l1_norm() == 1) shifts.push_back(v * 2);  // non-primitive shifts like 2e_i
  std::stable_sort(shifts.begin() + 1, shifts.end(), [](const LatticeVector& x, const LatticeVector& y) {
    if (x.l1_norm() != y.l1_norm()) return x.l1_norm() < y.l1_norm();
    return x > y;
  });
  const auto candidates = small_primitive_vectors(n, 2);

  for (const auto& b : shifts) {
    for (const auto& c : candidates) {
      RationalVector a = to_rational(c);
      if (closed_side(a, sup, b) && strict_count(a, uns, b) >= margin) return HalfSpaceSpec{a, b};
    }
    std::set<LatticeVector> covered;
    for (const auto& u : uns) {
      if (covered.count(u)) continue;
      lp::Problem p;
      p.num_vars = n;
      p.free.assign(n, true);
      for (const auto& x : sup) p.add(shifted(x, b), lp::Relation::Leq, 0);
      p.add(shifted(u, b), lp::Relation::Geq, 1);
      auto sol = lp::find_feasible(p);
      if (!sol) {
        covered.insert(u);
        continue;
      }
      RationalVector a = primitive_integer_multiple(*sol);
      for (const auto& v : uns)
        if (dot(a, v - b) > 0) covered.insert(v);
      if (closed_side(a, sup, b) && strict_count(a, uns, b) >= margin) return HalfSpaceSpec{a, b};
    }
  }
  return std::nullopt;
}

Classification classify_support(const SupportWindow& w) {
  if (w.dims.empty()) throw std::invalid_argument("classify_support: empty window");
  bool all = std::all_of(w.dims.begin(), w.dims.end(), [](const auto& kv) { return kv.second > 0; });
  if (all) return {Verdict::Dense, std::nullopt, Scope::Window};
  if (w.zero_weight_offset && w.contains(*w.zero_weight_offset)) {
    bool punctured = true;
    for (const auto& [x, d] : w.dims)
      if ((d == 0) != (x == *w.zero_weight_offset)) {
        punctured = false;
        break;
      }
    if (punctured) return {Verdict::Punctured, std::nullopt, Scope::Window};
  }
  if (w.analytic_cut && verify_cut(w, *w.analytic_cut, false))
    return {Verdict::Cut, w.analytic_cut, Scope::Analytic};
  if (auto c = cut_certificate(w)) return {Verdict::Cut, c, Scope::Window};
  return {};
}

CheckResult complement_convexity_check(const SupportWindow& w) {
  CheckResult r{"convexity", true, {}, 0};
  auto hat = w.complement();
  if (hat.empty()) return r;
  Box bb = bounding_box(hat, w.dim());
  for (const auto& [x, d] : w.dims) {
    if (d == 0) continue;
    if (w.zero_weight_offset && x == *w.zero_weight_offset) continue;
    if (!bb.contains(x)) continue;
    ++r.checked;
    if (convex_hull_contains(hat, x)) r.violations.push_back(x);
  }
  r.pass = r.violations.empty();
  return r;
}

CheckResult upset_complement_check(const SupportWindow& w) {
  CheckResult r{"upset", true, {}, 0};
  auto hat = w.complement();
  std::set<LatticeVector> bad;
  for (const auto& a : hat)
    for (const auto& [x, d] : w.dims) {
      if (!leq(a, x)) continue;
      ++r.checked;
      if (d > 0) bad.insert(x);
    }
  r.violations.assign(bad.begin(), bad.end());
  r.pass = r.violations.empty();
  return r;
}

std::string to_string(RayKind k) {
  switch (k) {
    case RayKind::UpBounded: return "UpBounded";
    case RayKind::AllWindow: return "AllWindow";
    case RayKind::Irregular: return "Irregular";
  }
  return "?";
}

RayProfile ray_profile(const SupportWindow& w, const LatticeVector& mu, const LatticeVector& alpha) {
  require_same_dim(mu.size(), w.dim(), "ray_profile");
  require_same_dim(alpha.size(), w.dim(), "ray_profile");
  if (alpha.is_zero() || std::any_of(alpha.begin(), alpha.end(), [](auto c) { return c < 0; }))
    throw std::invalid_argument("ray_profile: alpha must be a nonzero vector in N^n");
  if (!w.supported(mu)) throw std::invalid_argument("ray_profile: offset " + mu.to_string() + " is not supported");
  std::int64_t extent = 0;
  for (std::size_t i = 0; i < w.dim(); ++i) extent = std::max(extent, w.box.hi[i] - w.box.lo[i]);
  RayProfile p;
  for (std::int64_t x = -extent; x <= extent; ++x) {
    LatticeVector pt = mu + alpha * x;
    auto it = w.dims.find(pt);
    if (it == w.dims.end()) continue;
    p.xs.push_back(x);
    p.supported.push_back(it->second > 0);
  }
  if (p.xs.size() < 5)
    throw std::invalid_argument("ray_profile: ray meets the window in " + std::to_string(p.xs.size()) +
                                " points (need 5)");
  std::size_t first_gap = 0;
  while (first_gap < p.xs.size() && p.supported[first_gap]) ++first_gap;
  if (first_gap == p.xs.size()) {
    p.kind = RayKind::AllWindow;
    return p;
  }
  bool tail_empty = std::none_of(p.supported.begin() + static_cast<std::ptrdiff_t>(first_gap), p.supported.end(),
                                 [](bool b) { return b; });
  if (tail_empty && first_gap > 0) {
    p.kind = RayKind::UpBounded;
    p.m = p.xs[first_gap - 1];
  } else {
    p.kind = RayKind::Irregular;
  }
  return p;
}

std::string to_string(MixedTag t) {
  switch (t) {
    case MixedTag::Fin: return "fin";
    case MixedTag::Inf: return "inf";
    case MixedTag::BoundaryUndetermined: return "boundary-undetermined";
  }
  return "?";
}

std::vector<LatticeVector> MixedSupport::with_tag(MixedTag t) const {
  std::vector<LatticeVector> out;
  for (const auto& [x, tag] : tags)
    if (tag == t) out.push_back(x);
  return out;
}

MixedSupport mixed_refine(const ModuleAtRadius& build, std::int64_t r1, std::int64_t r2, const std::optional<Box>& box) {
  if (r1 >= r2) throw std::invalid_argument("mixed_refine: radii must satisfy r1 < r2");
  auto small = build(r1);
  auto large = build(r2);
  MixedSupport m;
  m.box = box ? *box : small->default_window();
  m.radius_small = r1;
  m.radius_large = r2;
  m.zero_weight_offset = small->zero_weight_offset();
  for (const auto& x : m.box.points()) {
    if (!small->valid_offset(x) || !large->valid_offset(x)) {
      m.tags.emplace(x, MixedTag::BoundaryUndetermined);
      continue;
    }
    std::size_t d1 = small->weight_dim(x), d2 = large->weight_dim(x);
    if (d2 < d1) throw std::logic_error("mixed_refine: dimension shrank at " + x.to_string());
    m.dims.emplace(x, std::make_pair(d1, d2));
    m.tags.emplace(x, d1 == d2 ? MixedTag::Fin : MixedTag::Inf);
  }
  return m;
}

CheckResult finsupp_convexity_check(const MixedSupport& m, const SupportWindow& w) {
  CheckResult r{"finsupp-convexity", true, {}, 0};
  std::vector<LatticeVector> fin;
  for (const auto& [x, tag] : m.tags) {
    if (tag != MixedTag::Fin) continue;
    auto it = m.dims.find(x);
    if (it != m.dims.end() && it->second.first > 0) fin.push_back(x);
  }
  if (fin.empty()) return r;
  Box bb = bounding_box(fin, m.box.dim());
  for (const auto& [x, tag] : m.tags) {
    if (tag != MixedTag::Inf) continue;
    if (!w.dims.empty() && !w.contains(x)) continue;
    if (m.zero_weight_offset && x == *m.zero_weight_offset) continue;
    if (!bb.contains(x)) continue;
    ++r.checked;
    if (convex_hull_contains(fin, x)) r.violations.push_back(x);
  }
  r.pass = r.violations.empty();
  return r;
}

}  // namespace witt
