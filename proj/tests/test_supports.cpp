#include "helpers.hpp"

#include "wittsupport/descriptor.hpp"
#include "wittsupport/ghw.hpp"
#include "wittsupport/verma.hpp"

using namespace witt;
using witt::test::Q;
using witt::test::S;
using witt::test::synthetic;

namespace {
SupportWindow verma_window(std::int64_t K = 4, std::int64_t B = 4) {
  VermaParams p;
  p.G = {{0, 1}};
  p.beta = {1, 0};
  p.K = K;
  p.B = B;
  return support_window(TruncatedVerma(p));
}
}  // namespace

TEST_CASE("classify_support") {
  TensorModule full({S({"1/2", "1/3"}), Scalar(2), TensorVariant::Full});
  CHECK(classify_support(support_window(full, Box::cube(2, 4))).verdict == Verdict::Dense);

  TensorModule quot({S({"0", "0"}), Scalar(0), TensorVariant::QuotientByTrivial});
  CHECK(classify_support(support_window(quot, Box::cube(2, 4))).verdict == Verdict::Punctured);

  Classification c = classify_support(verma_window());
  CHECK(c.verdict == Verdict::Cut);
  CHECK(c.scope == Scope::Analytic);
  REQUIRE(c.cut);
  CHECK(c.cut->a == Q({1, 0}));
  CHECK(c.cut->b == LatticeVector{0, 0});

  // dense minus one corner: no margin, so not a cut
  CHECK(classify_support(synthetic(2, 4, {{4, 4}})).verdict == Verdict::Unknown);
  // a hole at a non-zero weight is not punctured
  CHECK(classify_support(synthetic(2, 4, {{1, 0}}, S({"0", "0"}))).verdict == Verdict::Unknown);
}

TEST_CASE("cut_certificate") {
  SupportWindow w = verma_window();
  w.analytic_cut.reset();
  auto c = cut_certificate(w);
  REQUIRE(c);
  CHECK(c->a == Q({1, 0}));
  CHECK(c->b == LatticeVector{0, 0});
  CHECK(verify_cut(w, *c, true));

  CHECK_FALSE(cut_certificate(synthetic(2, 4, {})));

  std::vector<LatticeVector> holes;
  for (const auto& x : Box::cube(2, 4).points())
    if (x[0] >= 2) holes.push_back(x);
  auto shifted = cut_certificate(synthetic(2, 4, holes));
  REQUIRE(shifted);
  CHECK(shifted->a == Q({1, 0}));
  CHECK(shifted->b == LatticeVector{1, 0});
  CHECK(cut_margin(synthetic(2, 4, holes)) == 21);
}

TEST_CASE("complement_convexity_check") {
  TensorModule quot({S({"0", "0"}), Scalar(0), TensorVariant::QuotientByTrivial});
  CHECK(complement_convexity_check(support_window(quot, Box::cube(2, 4))).pass);

  // zero weight at (1,1) sits between the holes and is exempt
  CHECK(complement_convexity_check(synthetic(2, 3, {{1, 0}, {1, 2}}, S({"-1", "-1"}))).pass);

  CheckResult bad = complement_convexity_check(synthetic(2, 4, {{1, 0}, {3, 0}}));
  CHECK_FALSE(bad.pass);
  CHECK(bad.violations == std::vector<LatticeVector>{{2, 0}});

  // boundary offsets do not enter the complement
  SupportWindow b = synthetic(2, 4, {{1, 0}, {3, 0}});
  b.boundary.insert({3, 0});
  CHECK(complement_convexity_check(b).pass);
}

TEST_CASE("ray_profile") {
  SupportWindow v = verma_window();
  RayProfile top = ray_profile(v, {0, 0}, {1, 1});
  CHECK(top.kind == RayKind::UpBounded);
  CHECK(top.m == 0);

  SupportWindow dense = synthetic(2, 4, {});
  CHECK(ray_profile(dense, {-1, 2}, {1, 0}).kind == RayKind::AllWindow);

  TensorModule quot({S({"0", "0"}), Scalar(0), TensorVariant::QuotientByTrivial});
  SupportWindow p = support_window(quot, Box::cube(2, 4));
  CHECK(ray_profile(p, {-2, -2}, {1, 1}).kind == RayKind::Irregular);

  CHECK_THROWS_AS(ray_profile(dense, {4, 4}, {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(ray_profile(p, {0, 0}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ray_profile(dense, {0, 0}, {1, -1}), std::invalid_argument);
}

TEST_CASE("upset_complement_check") {
  SupportWindow v = verma_window();
  std::int64_t p = 0;
  CHECK(upset_complement_check(lemma5_normalized(v, {0, 0}, &p)).pass);
  CHECK(p == 2);
  CHECK(upset_complement_check(synthetic(2, 3, {})).pass);
  CheckResult bad = upset_complement_check(synthetic(2, 3, {{1, 0}}));
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.violations.empty());
}

TEST_CASE("transform and rebase") {
  SupportWindow v = verma_window(3, 3);
  SupportWindow r = rebase(v, {-1, 0});
  CHECK(r.dims.at({1, 0}) == v.dims.at({0, 0}));
  UnimodularBasis m({{0, 1}, {1, 0}});
  SupportWindow t = transform_window(v, m);
  CHECK(t.dims.at({2, -1}) == v.dims.at({-1, 2}));
  REQUIRE(t.analytic_cut);
  CHECK(verify_cut(t, *t.analytic_cut, false));
}

TEST_CASE("mixed refinement") {
  Json tensor{{"family", "tensor"}, {"lambda", {"1/2", "1/3"}}, {"b", "2"}, {"variant", "full"}, {"box", 3}};
  MixedSupport all = mixed_refine(parse_descriptor(tensor), 1, 2);
  CHECK(all.with_tag(MixedTag::Fin).size() == all.tags.size());

  MixedSupport m;
  m.box = Box::cube(2, 2);
  for (const auto& x : m.box.points()) {
    m.tags[x] = MixedTag::Fin;
    m.dims[x] = {0, 0};
  }
  m.tags[{1, 0}] = MixedTag::Inf;
  m.dims[{1, 0}] = {2, 5};
  m.dims[{0, 0}] = {1, 1};
  m.dims[{2, 0}] = {1, 1};
  m.zero_weight_offset = LatticeVector{-2, 2};
  CheckResult r = finsupp_convexity_check(m, synthetic(2, 2, {}));
  CHECK_FALSE(r.pass);
  CHECK(r.violations == std::vector<LatticeVector>{{1, 0}});
  m.zero_weight_offset = LatticeVector{1, 0};
  CHECK(finsupp_convexity_check(m, synthetic(2, 2, {})).pass);
}
