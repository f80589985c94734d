#include "wittsupport/verify.hpp"

#include "wittsupport/catalog.hpp"
#include "wittsupport/descriptor.hpp"
#include "wittsupport/ghw.hpp"
#include "wittsupport/report.hpp"
#include "wittsupport/verma.hpp"
#include "wittoracles/oracles.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace witt {

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

namespace {

constexpr std::size_t kMaxFailures = 8;

struct Ctx {
  SuiteResult& r;
  std::mt19937_64 rng;

  std::int64_t uni(std::int64_t lo, std::int64_t hi) { return uniform_int(rng, lo, hi); }
  void fail(const std::string& what) {
    r.pass = false;
    if (r.failures.size() < kMaxFailures) r.failures.push_back(what);
  }
  void expect(bool ok, const std::string& what) {
    ++r.checked;
    if (!ok) fail(what);
  }

  Rational ratio(std::int64_t lo, std::int64_t hi, std::int64_t den) {
    Rational q(uni(lo, hi), uni(1, den));
    q.canonicalize();
    return q;
  }
  Rational rational() { return ratio(-9, 9, 9); }
  LatticeVector lattice(std::size_t n, std::int64_t lo, std::int64_t hi) {
    LatticeVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = uni(lo, hi);
    return x;
  }
  ScalarVector nonzero_vector(std::size_t n) {
    ScalarVector u(n);
    do
      for (auto& s : u) s = Scalar(rational());
    while (is_zero(u));
    return u;
  }
  WittElement element(std::size_t n) {
    WittElement x(n);
    const auto terms = uni(1, 3);
    for (std::int64_t t = 0; t < terms; ++t) x += WittElement::term(lattice(n, -5, 5), nonzero_vector(n));
    return x;
  }
};

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) h = (h ^ c) * 1099511628211ULL;
  return seed ^ h;
}

oracle::Exponent exponent(const LatticeVector& x) { return oracle::Exponent(x.begin(), x.end()); }

oracle::Derivation as_derivation(const WittElement& x) {
  oracle::Derivation d;
  for (const auto& [alpha, u] : x.terms()) {
    std::vector<mpq_class> q;
    for (const auto& s : u) q.push_back(s.rational());
    d.terms.emplace_back(exponent(alpha), q);
  }
  return d;
}

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

VermaParams verma_params(std::vector<LatticeVector> G, LatticeVector beta, std::int64_t K, std::int64_t B,
                         VermaXKind kind = VermaXKind::Trivial) {
  VermaParams p;
  p.G = std::move(G);
  p.beta = std::move(beta);
  p.K = K;
  p.B = B;
  p.X.kind = kind;
  p.X.lambda = ScalarVector(p.beta.size());
  if (kind == VermaXKind::CosetTensor) {
    p.X.lambda = {Scalar(Rational(1, 2)), Scalar(Rational(1, 3))};
    p.X.b = Scalar(Rational(1, 2));
  }
  return p;
}

// Criterion-6 module: G = <e2>, beta = e1, trivial level module.
std::shared_ptr<TruncatedVerma> cut_verma(std::int64_t KB) { return build_truncated_verma(verma_params({{0, 1}}, {1, 0}, KB, KB)); }

Matrix zero_matrix(const WeightModule& v, const LatticeVector& to, const LatticeVector& from) {
  return Matrix(v.weight_dim(to), v.weight_dim(from));
}

SupportWindow catalog_window(const Json& desc) {
  FamilyDescriptor d = parse_descriptor(desc);
  auto m = build_module(d);
  return support_window(*m, scan_window(d, *m));
}

// ---------------------------------------------------------------------------------------------

void antisymmetry(Ctx& c) {
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<std::size_t>(c.uni(1, 4));
    WittElement x = c.element(n), y = c.element(n);
    c.expect((bracket(x, y) + bracket(y, x)).is_zero() && bracket(x, x).is_zero(),
             "[x,y] + [y,x] != 0 for x = " + x.to_string() + ", y = " + y.to_string());
  }
}

void jacobi(Ctx& c) {
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<std::size_t>(c.uni(1, 4));
    WittElement x = c.element(n), y = c.element(n), z = c.element(n);
    WittElement j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    c.expect(j.is_zero(), "Jacobi residual " + j.to_string() + " for x = " + x.to_string() + ", y = " +
                              y.to_string() + ", z = " + z.to_string());
  }
}

void derivation_oracle(Ctx& c) {
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(c.uni(1, 4));
    WittElement x = c.element(n), y = c.element(n);
    oracle::LaurentPolynomial f{{exponent(c.lattice(n, -5, 5)), mpq_class(1)}};
    auto dx = as_derivation(x), dy = as_derivation(y);
    auto lhs = as_derivation(bracket(x, y))(f);
    auto rhs = oracle::subtract(dx(dy(f)), dy(dx(f)));
    c.expect(lhs == rhs, "bracket disagrees with the commutator of derivations for x = " + x.to_string() +
                             ", y = " + y.to_string());
  }
}

void grading(Ctx& c) {
  for (int i = 0; i < 400; ++i) {
    const bool self = i >= 200;
    const auto n = static_cast<std::size_t>(c.uni(1, 4));
    LatticeVector a = c.lattice(n, -5, 5), b;
    if (self) {
      while (a.is_zero()) a = c.lattice(n, -5, 5);
      b = a;
    } else {
      do b = c.lattice(n, -5, 5);
      while (b == a);
    }
    Matrix span(n * n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        ScalarVector w = bracket(WittElement::basis(a, p), WittElement::basis(b, q)).component(a + b);
        for (std::size_t k = 0; k < n; ++k) span(p * n + q, k) = w[k];
      }
    const std::size_t rank = span.rank();
    bool perp = true;
    if (self)
      for (std::size_t row = 0; row < n * n; ++row) {
        Scalar s;
        for (std::size_t k = 0; k < n; ++k) s += span(row, k) * Scalar(static_cast<long>(a[k]));
        perp = perp && s.is_zero();
      }
    const std::size_t want = self ? n - 1 : n;
    c.expect(rank == want && perp, "grade " + a.to_string() + " + " + b.to_string() + ": rank " +
                                       std::to_string(rank) + ", expected " + std::to_string(want) +
                                       (perp ? "" : ", span not orthogonal to the grade"));
  }
}

void module_axiom(Ctx& c) {
  for (int i = 0; i < 500; ++i) {
    TensorFamily fam;
    std::size_t n = 0;
    switch (i % 5) {
      case 0:
        n = static_cast<std::size_t>(c.uni(1, 4));
        fam.lambda = c.nonzero_vector(n);
        fam.b = Scalar(c.rational());
        break;
      case 1:
        n = static_cast<std::size_t>(c.uni(1, 2));
        fam.lambda = formal_vector("γ", n);
        fam.b = Scalar::variable("b");
        break;
      case 2:
      case 3:
        n = static_cast<std::size_t>(c.uni(1, 3));
        fam.lambda = to_scalars(to_rational(c.lattice(n, -3, 3)));
        fam.variant = i % 5 == 2 ? TensorVariant::QuotientByTrivial : TensorVariant::PuncturedSubmodule;
        fam.b = Scalar(i % 5 == 2 ? 0 : 1);
        break;
      default:
        n = static_cast<std::size_t>(c.uni(1, 2));
        fam.lambda = formal_vector("γ", n);
        fam.b = Scalar(c.rational());
    }
    TensorModule V(fam);
    WittElement x = WittElement::term(c.lattice(n, -4, 4), c.nonzero_vector(n));
    WittElement y = WittElement::term(c.lattice(n, -4, 4), c.nonzero_vector(n));
    const LatticeVector a = *x.grade(), b = *y.grade();
    const LatticeVector mu = c.lattice(n, -2, 2);
    Matrix lhs = action_matrix(V, x, mu + b).matrix * action_matrix(V, y, mu).matrix -
                 action_matrix(V, y, mu + a).matrix * action_matrix(V, x, mu).matrix;
    WittElement xy = bracket(x, y);
    Matrix rhs = xy.is_zero() ? zero_matrix(V, mu + a + b, mu) : action_matrix(V, xy, mu).matrix;
    c.expect((lhs - rhs).is_zero(), "module axiom fails on " + to_string(fam.variant) + " F(" +
                                        join(to_strings(fam.lambda)) + "; " + fam.b.to_string() + ") for x = " +
                                        x.to_string() + ", y = " + y.to_string() + " at " + mu.to_string());
  }
}

void verma_axiom(Ctx& c) {
  std::vector<std::pair<std::string, std::shared_ptr<TruncatedVerma>>> mods{
      {"n1", build_truncated_verma(verma_params({}, {1}, 6, 0))},
      {"trivial", build_truncated_verma(verma_params({{0, 1}}, {1, 0}, 3, 3))},
      {"coset-tensor", build_truncated_verma(verma_params({{0, 1}}, {1, 0}, 3, 3, VermaXKind::CosetTensor))},
  };
  Json per = Json::object();
  for (const auto& [name, V] : mods) {
    const std::size_t n = V->rank();
    auto pts = V->default_window().points();
    std::size_t exact = 0;
    for (int t = 0; t < 300; ++t) {
      const LatticeVector mu = pts[static_cast<std::size_t>(c.uni(0, static_cast<std::int64_t>(pts.size()) - 1))];
      const LatticeVector a = c.lattice(n, -3, 3), b = c.lattice(n, -3, 3);
      const auto i = static_cast<std::size_t>(c.uni(0, static_cast<std::int64_t>(n) - 1));
      const auto j = static_cast<std::size_t>(c.uni(0, static_cast<std::int64_t>(n) - 1));
      if (!V->valid_offset(mu + a) || !V->valid_offset(mu + b) || !V->valid_offset(mu + a + b)) continue;
      ActionResult ya = V->act(b, j, mu), xa = V->act(a, i, mu + b);
      ActionResult xb = V->act(a, i, mu), yb = V->act(b, j, mu + a);
      WittElement xy = bracket(WittElement::basis(a, i), WittElement::basis(b, j));
      ActionResult br = xy.is_zero() ? ActionResult{zero_matrix(*V, mu + a + b, mu), true} : action_matrix(*V, xy, mu);
      if (!(ya.exact && xa.exact && xb.exact && yb.exact && br.exact)) continue;
      ++exact;
      Matrix res = xa.matrix * ya.matrix - yb.matrix * xb.matrix - br.matrix;
      c.expect(res.is_zero(), name + ": module axiom fails for t^" + a.to_string() + "d" + std::to_string(i + 1) +
                                  ", t^" + b.to_string() + "d" + std::to_string(j + 1) + " at " + mu.to_string());
    }
    per[name] = exact;
    if (exact == 0) c.fail(name + ": no exact sample");
  }
  c.r.details["exact_samples"] = per;
}

void verma_partitions(Ctx& c) {
  auto p = oracle::partition_numbers(10);
  for (std::int64_t K = 1; K <= 10; ++K) {
    auto V = build_truncated_verma(verma_params({}, {1}, K, 0));
    std::vector<std::size_t> dims;
    for (std::int64_t d = 0; d <= K; ++d) {
      const LatticeVector mu = V->offset_of(LatticeVector(0), d);
      dims.push_back(V->weight_dim(mu));
      c.expect(dims.back() == p[static_cast<std::size_t>(d)],
               "K = " + std::to_string(K) + ", depth " + std::to_string(d) + ": dim " + std::to_string(dims.back()) +
                   ", oracle " + std::to_string(p[static_cast<std::size_t>(d)]));
      if (K != 7) continue;
      // basis monomials as partitions, against brute-force enumeration
      std::set<std::vector<int>> got;
      for (const auto& e : V->basis(mu)) {
        std::vector<int> parts;
        for (auto id : e.m) parts.push_back(static_cast<int>(V->generator(id).k));
        std::sort(parts.rbegin(), parts.rend());
        got.insert(parts);
      }
      auto want = oracle::partitions(static_cast<int>(d), static_cast<int>(K));
      c.expect(got == std::set<std::vector<int>>(want.begin(), want.end()) && got.size() == V->basis(mu).size(),
               "depth " + std::to_string(d) + ": PBW monomials differ from the partition oracle");
    }
    if (K == 7) c.r.details["dims_K7"] = dims;
  }
  c.r.details["oracle"] = std::vector<std::uint64_t>(p.begin(), p.begin() + 8);
}

void punctured(Ctx& c) {
  struct Case {
    const char* name;
    TensorFamily fam;
  };
  std::vector<Case> cases{
      {"F(0,0)/trivial", {{Scalar(0), Scalar(0)}, Scalar(0), TensorVariant::QuotientByTrivial}},
      {"F(0,1) submodule", {{Scalar(0), Scalar(0)}, Scalar(1), TensorVariant::PuncturedSubmodule}},
  };
  for (const auto& cs : cases) {
    TensorModule V(cs.fam, 6);
    SupportWindow w = support_window(V, Box::cube(2, 6));
    for (const auto& [x, d] : w.dims)
      c.expect(d == (x.is_zero() ? 0u : 1u), std::string(cs.name) + ": dim " + std::to_string(d) + " at " + x.to_string());
    Classification cl = classify_support(w);
    c.expect(cl.verdict == Verdict::Punctured, std::string(cs.name) + ": verdict " + to_string(cl.verdict));
  }
}

void cut(Ctx& c) {
  auto V = cut_verma(5);
  SupportWindow w = support_window(*V);
  Classification cl = classify_support(w);
  c.expect(cl.verdict == Verdict::Cut, "verdict " + to_string(cl.verdict));
  const HalfSpaceSpec want{{Rational(1), Rational(0)}, LatticeVector(2)};
  c.expect(cl.cut && cl.cut->a == want.a && cl.cut->b == want.b, "certificate differs from a = (1,0), b = 0");
  c.expect(cl.cut && verify_cut(w, *cl.cut, false), "certificate does not verify on the window");
  auto wc = cut_certificate(w);
  c.expect(wc && verify_cut(w, *wc, true), "no window-scope certificate with margin");
  std::int64_t p = 0;
  CheckResult up = upset_complement_check(lemma5_normalized(w, LatticeVector(2), &p));
  c.expect(up.pass, "upset check fails in normalized coordinates at " +
                        (up.violations.empty() ? std::string("?") : up.violations.front().to_string()));
  c.r.details = Json{{"box", to_json(w.box)},
                     {"scope", to_string(cl.scope)},
                     {"certificate", cl.cut ? to_json(*cl.cut) : Json(nullptr)},
                     {"window_certificate", wc ? to_json(*wc) : Json(nullptr)},
                     {"lemma5_p", p},
                     {"upset_pairs", up.checked}};
}

SupportWindow negative_control() {
  SupportWindow w;
  w.box = Box::cube(2, 4);
  w.coset = {Scalar(Rational(1, 2)), Scalar(Rational(1, 2))};
  for (const auto& x : w.box.points()) w.dims[x] = 1;
  w.dims[LatticeVector{1, 0}] = 0;
  w.dims[LatticeVector{3, 0}] = 0;
  return w;
}

void convexity(Ctx& c, bool inject) {
  std::vector<std::pair<std::string, SupportWindow>> windows;
  for (const auto& e : family_catalog()) windows.emplace_back(e.descriptor.at("name").get<std::string>(), catalog_window(e.descriptor));
  if (inject) windows.emplace_back("negative-control", negative_control());
  for (const auto& [name, w] : windows) {
    CheckResult r = complement_convexity_check(w);
    std::vector<std::string> v;
    for (const auto& x : r.violations) v.push_back(x.to_string());
    c.expect(r.pass, name + ": violators " + join(v));
  }
  CheckResult ctl = complement_convexity_check(negative_control());
  c.expect(!ctl.pass && ctl.violations == std::vector<LatticeVector>{{2, 0}}, "negative control not detected at (2,0)");
  c.r.details["windows"] = windows.size();
}

void semigroup(Ctx& c) {
  std::size_t longest = 0;
  for (int i = 0; i < 50; ++i) {
    const auto n = static_cast<std::size_t>(c.uni(2, 3));
    LatticeVector beta;
    do beta = c.lattice(n, -5, 5);
    while (beta.is_zero());
    RationalVector a(n);
    do
      for (auto& q : a) q = c.ratio(-5, 5, 3);
    while (dot(a, beta) >= 0);
    SemigroupGenerators g = semigroup_generators_for(beta, a);
    auto S = g.with_beta(beta);
    bool positive = true;
    for (std::size_t k = 1; k < S.size(); ++k) positive = positive && dot(a, S[k]) > 0;
    const std::int64_t bound = 2 * (1 + g.max_k()) * static_cast<std::int64_t>(n);
    MonoidResult r = generates_monoid(S, bound);
    bool ok = positive && r.generated() && r.witnesses.size() == 2 * n;
    for (const auto& w : r.witnesses) {
      LatticeVector sum(n);
      std::int64_t len = 0;
      for (std::size_t k = 0; k < S.size(); ++k) {
        sum += S[k] * w.counts[k];
        len += w.counts[k];
      }
      ok = ok && sum == w.target && len == w.length && w.length <= bound;
      longest = std::max<std::size_t>(longest, static_cast<std::size_t>(w.length));
    }
    c.expect(ok, "beta = " + beta.to_string() + ", a = (" + join(to_strings(a)) + "): " + to_string(r.status));
  }
  c.r.details["longest_witness"] = longest;
}

void rays(Ctx& c) {
  std::vector<std::pair<std::string, std::shared_ptr<TruncatedVerma>>> mods{
      {"trivial", cut_verma(5)},
      {"coset-tensor", build_truncated_verma(verma_params({{0, 1}}, {1, 0}, 3, 3, VermaXKind::CosetTensor))},
  };
  Json per = Json::object();
  for (const auto& [name, V] : mods) {
    SupportWindow w = support_window(*V);
    const RationalVector a = V->analytic_cut()->a;
    RayProfile top = ray_profile(w, LatticeVector(2), LatticeVector{1, 1});
    c.expect(top.kind == RayKind::UpBounded && top.m == 0, name + ": top ray along (1,1) is " + to_string(top.kind));
    std::size_t observed = 0, unobservable = 0;
    for (const auto& mu : w.support())
      for (const auto& alpha : Box{{1, 1}, {3, 3}}.points()) {
        RayProfile p;
        try {
          p = ray_profile(w, mu, alpha);
        } catch (const std::invalid_argument&) {
          continue;
        }
        // The upper end is only visible when the ray leaves the cut half-space inside the box.
        bool leaves = false;
        for (auto x : p.xs) leaves = leaves || dot(a, mu + alpha * x) > 0;
        if (!leaves) {
          ++unobservable;
          continue;
        }
        ++observed;
        c.expect(p.kind == RayKind::UpBounded,
                 name + ": ray from " + mu.to_string() + " along " + alpha.to_string() + " is " + to_string(p.kind));
      }
    per[name] = Json{{"observed", observed}, {"beyond_window", unobservable}};
  }
  c.r.details = per;
}

void propagation(Ctx& c) {
  auto V = cut_verma(4);
  Box window = V->default_window();
  auto wit = find_ghw_vector(*V, window);
  c.expect(wit && wit->offset.is_zero() && wit->N == 0, "no top-level witness with N = 0");
  if (!wit) return;
  const std::int64_t R = 12;
  std::size_t skipped = 0, zero = 0, grades = 0;
  for (int t = 0; t < 200; ++t) {
    LatticeVector beta{c.uni(-3, 1), c.uni(-3, 3)};
    const auto j = static_cast<std::size_t>(c.uni(0, 1));
    VectorResult yv = V->apply(beta, j, wit->offset, wit->vector);
    if (!yv.exact) {
      ++skipped;
      continue;
    }
    if (is_zero(yv.vector)) {
      ++zero;
      continue;
    }
    const std::int64_t Np = ghw_propagate_bound(wit->N, beta);
    std::int64_t least = 0;
    bool ok = true;
    for (const auto& alpha : Box{{1, 1}, {R, R}}.points())
      for (std::size_t i = 0; i < 2; ++i) {
        VectorResult r = V->apply(alpha, i, beta, yv.vector);
        if (!r.exact) continue;
        ++grades;
        if (is_zero(r.vector)) continue;
        least = std::max(least, std::min(alpha[0], alpha[1]));
        if (alpha[0] > Np && alpha[1] > Np) ok = false;
      }
    c.expect(ok && least <= Np, "t^" + beta.to_string() + "d" + std::to_string(j + 1) + " v: bound " +
                                    std::to_string(least) + " exceeds N' = " + std::to_string(Np));
  }
  c.r.details = Json{{"witness", to_json(wit->offset)}, {"N", wit->N}, {"inexact_pairs", skipped},
                     {"annihilated_pairs", zero}, {"exact_grade_checks", grades}};
}

void trichotomy(Ctx& c) {
  std::map<std::string, std::size_t> tally;
  for (const auto& e : family_catalog()) {
    Classification cl = classify_support(catalog_window(e.descriptor));
    const std::string v = to_string(cl.verdict);
    ++tally[v];
    c.expect(cl.verdict != Verdict::Unknown && v == e.expected,
             e.descriptor.at("name").get<std::string>() + ": " + v + ", expected " + e.expected);
  }
  c.expect(family_catalog().size() >= 12 && tally.count("Dense") && tally.count("Punctured") && tally.count("Cut"),
           "catalog does not span the three verdicts");
  c.r.details["verdicts"] = tally;
}

void mixed(Ctx& c) {
  Json desc{{"family", "verma"}, {"n", 2}, {"G", {{0, 1}}}, {"beta", {1, 0}},
            {"X", {{"type", "tensor"}, {"lambda", {"1/2", "1/3"}}, {"b", "1/2"}}}, {"K", 3}, {"B", 4}};
  FamilyDescriptor d = parse_descriptor(desc);
  auto small = build_module(d);
  auto& V = dynamic_cast<const TruncatedVerma&>(*small);
  SupportWindow w = support_window(V);
  MixedSupport m = mixed_refine(d, 4, 6, w.box);
  const RationalVector a = V.analytic_cut()->a;
  std::size_t undetermined = 0, inf = 0;
  for (const auto& [x, tag] : m.tags) {
    if (tag == MixedTag::BoundaryUndetermined) {
      ++undetermined;
      continue;
    }
    const std::int64_t depth = V.coordinates(x).depth;
    const MixedTag want = depth >= 1 ? MixedTag::Inf : MixedTag::Fin;
    c.expect(tag == want, x.to_string() + " at depth " + std::to_string(depth) + " tagged " + to_string(tag));
    if (depth == 0) c.expect(m.dims.at(x) == std::make_pair<std::size_t, std::size_t>(1, 1), x.to_string() + ": top level dim not 1");
    if (tag == MixedTag::Inf) {
      ++inf;
      c.expect(dot(a, x) < 0, x.to_string() + " tagged inf outside the open half-space");
    }
  }
  CheckResult f = finsupp_convexity_check(m, w);
  c.expect(f.pass, "finsupp convexity fails");

  auto all_fin = [&](const Json& jd, std::int64_t r1, std::int64_t r2, const std::string& label) {
    FamilyDescriptor fd = parse_descriptor(jd);
    MixedSupport ms = mixed_refine(fd, r1, r2);
    for (const auto& [x, tag] : ms.tags)
      if (tag != MixedTag::BoundaryUndetermined) c.expect(tag == MixedTag::Fin, label + ": " + x.to_string() + " tagged " + to_string(tag));
  };
  all_fin(Json{{"family", "verma"}, {"n", 1}, {"G", Json::array()}, {"beta", {1}}, {"X", "trivial"}, {"K", 7}}, 1, 2, "n = 1 Verma");
  all_fin(family_catalog().front().descriptor, 1, 2, "tensor");
  c.r.details = Json{{"box", to_json(w.box)}, {"radii", {4, 6}}, {"inf", inf}, {"boundary_undetermined", undetermined}};
}

void lemma3(Ctx& c) {
  auto V = build_truncated_verma(verma_params({{0, 1}}, {1, 0}, 3, 3, VermaXKind::CosetTensor));
  auto interior = [&](const LatticeVector& x) { return V->valid_offset(x) && !V->boundary_offset(x); };
  std::vector<std::pair<LatticeVector, LatticeVector>> pairs;
  for (const auto& x : V->default_window().points())
    for (const auto& alpha : Box::cube(2, 2).points())
      if (alpha[0] >= 0 && alpha[1] >= 0 && !alpha.is_zero() && interior(x) && interior(x - alpha) && V->weight_dim(x) > 0)
        pairs.emplace_back(x, alpha);
  std::size_t skipped = 0;
  for (int t = 0; t < 200; ++t) {
    const auto& [mu, alpha] = pairs[static_cast<std::size_t>(c.uni(0, static_cast<std::int64_t>(pairs.size()) - 1))];
    ScalarVector v = c.nonzero_vector(V->weight_dim(mu));
    bool nonzero = false, all_exact = true;
    for (std::size_t j = 0; j < 2; ++j) {
      VectorResult r = V->apply(-alpha, j, mu, v);
      all_exact = all_exact && r.exact;
      nonzero = nonzero || (r.exact && !is_zero(r.vector));
    }
    if (!nonzero && !all_exact) {
      ++skipped;
      continue;
    }
    c.expect(nonzero, "grade -" + alpha.to_string() + " annihilates a vector at " + mu.to_string());
  }
  c.r.details["skipped"] = skipped;
}

void bases(Ctx& c) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::int64_t k = 1; k <= 20; ++k) {
      UnimodularBasis l1 = lemma1_basis(k, n), l5 = lemma5_basis(k, n);
      std::vector<LatticeVector> r1(n, LatticeVector(n)), r5(n, LatticeVector(n));
      r1[0][0] = k + 1, r1[0][1] = 1, r1[1][0] = k, r1[1][1] = 1;
      for (std::size_t i = 0; i < n; ++i) r5[0][i] = r5[1][i] = k;
      r5[0][0] = k + 1, r5[1][0] = k + 2, r5[1][1] = k + 1;
      for (std::size_t j = 2; j < n; ++j) {
        r1[j] = r1[0] + LatticeVector::unit(n, j);
        r5[j] = r5[0] + LatticeVector::unit(n, j);
      }
      const std::string tag = "k = " + std::to_string(k) + ", n = " + std::to_string(n);
      c.expect(l1.rows() == r1 && abs(integer_determinant(r1)) == 1, "lemma1 basis " + tag);
      c.expect(l5.rows() == r5 && abs(integer_determinant(r5)) == 1, "lemma5 basis " + tag);
    }
  bool threw = false;
  try {
    (void)lemma1_basis(1, 1);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  c.expect(threw, "lemma1_basis accepted n = 1");
}

void hull_oracle(Ctx& c) {
  for (int t = 0; t < 300; ++t) {
    const auto m = static_cast<std::size_t>(c.uni(1, 4));
    std::vector<LatticeVector> P;
    std::vector<std::vector<long>> raw;
    for (std::size_t i = 0; i < m; ++i) {
      P.push_back(c.lattice(2, -2, 2));
      raw.emplace_back(P.back().begin(), P.back().end());
    }
    LatticeVector q = c.lattice(2, -2, 2);
    // planar lattice simplices in [-2,2]^2 have barycentric denominators at most 16
    const bool want = oracle::hull_contains_bruteforce(raw, {q[0], q[1]}, 16);
    const bool got = convex_hull_contains(P, q);
    auto sep = separating_hyperplane(P, q);
    bool sep_ok = sep.has_value() != want;
    if (sep)
      for (const auto& x : P) sep_ok = sep_ok && dot(*sep, x - q) > 0;
    std::vector<std::string> ps;
    for (const auto& x : P) ps.push_back(x.to_string());
    c.expect(got == want && sep_ok, q.to_string() + " in hull of {" + join(ps) + "}: lp " + std::to_string(got) +
                                        ", oracle " + std::to_string(want));
  }
}

void ghw(Ctx& c) {
  c.expect(ghw_propagate_bound(3, {2, -1}) == 7 && ghw_propagate_bound(0, {1, 1, 1}) == 4 &&
               ghw_propagate_bound(5, {0, 0}) == 6,
           "propagation bound formula");
  auto v1 = build_truncated_verma(verma_params({}, {1}, 5, 0));
  auto w1 = find_ghw_vector(*v1, v1->default_window());
  c.expect(w1 && w1->offset.is_zero() && w1->N == 0, "n = 1 Verma: no top-level witness with N = 0");
  auto v2 = cut_verma(4);
  auto w2 = find_ghw_vector(*v2, v2->default_window());
  c.expect(w2 && w2->offset.is_zero() && w2->N == 0, "n = 2 Verma: no top-level witness with N = 0");
  TensorModule formal({formal_vector("γ", 2), Scalar(Rational(1, 2)), TensorVariant::Full});
  c.expect(!find_ghw_vector(formal, Box::cube(2, 3)).has_value(), "formal tensor module has a GHW vector");
  TensorModule quot({{Scalar(0), Scalar(0)}, Scalar(0), TensorVariant::QuotientByTrivial});
  c.expect(!is_ghw(quot, {-1, -1}, {Scalar(1)}, 6).has_value(), "punctured quotient vector at (-1,-1) is GHW");
  c.r.details = Json{{"n1", w1 ? to_json(w1->offset) : Json(nullptr)}, {"n2", w2 ? to_json(w2->offset) : Json(nullptr)}};
}

using SuiteFn = std::function<void(Ctx&, const SuiteOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"antisymmetry", [](Ctx& c, const SuiteOptions&) { antisymmetry(c); }},
      {"jacobi", [](Ctx& c, const SuiteOptions&) { jacobi(c); }},
      {"derivation-oracle", [](Ctx& c, const SuiteOptions&) { derivation_oracle(c); }},
      {"grading", [](Ctx& c, const SuiteOptions&) { grading(c); }},
      {"module-axiom", [](Ctx& c, const SuiteOptions&) { module_axiom(c); }},
      {"verma-axiom", [](Ctx& c, const SuiteOptions&) { verma_axiom(c); }},
      {"verma-partitions", [](Ctx& c, const SuiteOptions&) { verma_partitions(c); }},
      {"punctured", [](Ctx& c, const SuiteOptions&) { punctured(c); }},
      {"cut", [](Ctx& c, const SuiteOptions&) { cut(c); }},
      {"convexity", [](Ctx& c, const SuiteOptions& o) { convexity(c, o.inject_negative); }},
      {"semigroup", [](Ctx& c, const SuiteOptions&) { semigroup(c); }},
      {"rays", [](Ctx& c, const SuiteOptions&) { rays(c); }},
      {"propagation", [](Ctx& c, const SuiteOptions&) { propagation(c); }},
      {"trichotomy", [](Ctx& c, const SuiteOptions&) { trichotomy(c); }},
      {"mixed", [](Ctx& c, const SuiteOptions&) { mixed(c); }},
      {"lemma3", [](Ctx& c, const SuiteOptions&) { lemma3(c); }},
      {"bases", [](Ctx& c, const SuiteOptions&) { bases(c); }},
      {"hull-oracle", [](Ctx& c, const SuiteOptions&) { hull_oracle(c); }},
      {"ghw", [](Ctx& c, const SuiteOptions&) { ghw(c); }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& [n, f] : registry()) {
    if (n != name) continue;
    SuiteResult r;
    r.name = name;
    Ctx c{r, std::mt19937_64(suite_seed(opts.seed, name))};
    try {
      f(c, opts);
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    return r;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

Json to_json(const SuiteResult& r) {
  return Json{{"name", r.name}, {"pass", r.pass}, {"checked", r.checked}, {"failures", r.failures}, {"details", r.details}};
}

Json verify_report(const std::vector<std::string>& names, const SuiteOptions& opts) {
  const std::vector<std::string>& run = names.empty() ? suite_names() : names;
  for (const auto& n : run)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw std::invalid_argument("unknown suite '" + n + "'");
  std::vector<std::future<SuiteResult>> jobs;
  for (const auto& n : run) jobs.push_back(std::async(std::launch::async, [n, opts] { return run_suite(n, opts); }));
  Json suites = Json::array();
  bool pass = true;
  for (auto& j : jobs) {
    SuiteResult r = j.get();
    pass = pass && r.pass;
    suites.push_back(to_json(r));
  }
  return Json{{"schema", kVerifySchema}, {"seed", opts.seed}, {"inject_negative", opts.inject_negative},
              {"suites", suites}, {"pass", pass}};
}

}  // namespace witt
