#include "helpers.hpp"

#include "wittsupport/verma.hpp"
#include "wittsupport/wmod.hpp"

using namespace witt;
using witt::test::S;

namespace {
VermaParams e2_e1(std::int64_t K, std::int64_t B) {
  VermaParams p;
  p.G = {{0, 1}};
  p.beta = {1, 0};
  p.K = K;
  p.B = B;
  return p;
}
}  // namespace

TEST_CASE("tensor_action_coefficient") {
  const Scalar lam = Scalar::variable("l"), b = Scalar::variable("b");
  for (std::int64_t m = -3; m <= 3; ++m)
    for (std::int64_t k = -3; k <= 3; ++k)
      CHECK(tensor_action_coefficient({lam}, b, {m}, {Scalar(1)}, {k}) ==
            lam + Scalar(static_cast<long>(k)) + Scalar(static_cast<long>(m)) * b);
  LatticeVector alpha{2, -1};
  ScalarVector u = S({"1/3", "5"});
  CHECK(tensor_action_coefficient(S({"0", "0"}), Scalar(1), alpha, u, -alpha).is_zero());
  CHECK(tensor_action_coefficient(S({"0", "0"}), Scalar(0), alpha, u, {0, 0}).is_zero());
}

TEST_CASE("tensor modules") {
  TensorModule full({S({"1/2", "1/3"}), Scalar(2), TensorVariant::Full});
  for (const auto& x : Box::cube(2, 3).points()) CHECK(full.weight_dim(x) == 1);
  CHECK_FALSE(full.zero_weight_offset());

  TensorModule quot({S({"0", "0"}), Scalar(0), TensorVariant::QuotientByTrivial});
  for (const auto& x : Box::cube(2, 6).points()) CHECK(quot.weight_dim(x) == (x.is_zero() ? 0u : 1u));

  TensorModule sub({S({"0", "0"}), Scalar(1), TensorVariant::PuncturedSubmodule});
  for (const auto& x : Box::cube(2, 3).points()) CHECK(sub.weight_dim(x) == (x.is_zero() ? 0u : 1u));

  TensorModule shifted({S({"2", "-1"}), Scalar(0), TensorVariant::QuotientByTrivial});
  CHECK(shifted.weight_dim({0, 0}) == 0);
  CHECK(shifted.weight_dim({-2, 1}) == 1);

  CHECK_THROWS_AS(TensorModule({S({"1/2", "0"}), Scalar(0), TensorVariant::QuotientByTrivial}), std::invalid_argument);
  CHECK_THROWS_AS(TensorModule({S({"0", "0"}), Scalar(2), TensorVariant::PuncturedSubmodule}), std::invalid_argument);
}

TEST_CASE("action matrices") {
  TensorModule full({S({"1/2", "1/3"}), Scalar(2), TensorVariant::Full});
  WittElement x = WittElement::term({1, 0}, S({"1", "1"}));
  ActionResult a = action_matrix(full, x, {0, 0});
  REQUIRE(a.matrix.rows() == 1);
  CHECK(a.matrix(0, 0) == tensor_action_coefficient(full.coset_rep(), Scalar(2), {1, 0}, S({"1", "1"}), {0, 0}));

  VermaParams p;
  p.beta = {1};
  p.K = 3;
  TruncatedVerma v1(p);
  ActionResult low = v1.act({-1}, 0, {0});
  CHECK(low.exact);
  REQUIRE(low.matrix.rows() == 1);
  REQUIRE(low.matrix.cols() == 1);
  CHECK_FALSE(low.matrix(0, 0).is_zero());

  ActionResult up = v1.act({1}, 0, {0});
  CHECK(up.matrix.rows() == 0);
  CHECK(up.matrix.cols() == 1);
  CHECK_THROWS_AS(action_matrix(full, WittElement::basis({1, 0}, 0) + WittElement::basis({0, 1}, 0), {0, 0}),
                  std::invalid_argument);
}

TEST_CASE("action kernels") {
  TruncatedVerma v(e2_e1(3, 3));
  std::vector<WittElement> pos;
  for (std::int64_t k = 1; k <= 2; ++k)
    for (std::int64_t c = -2; c <= 2; ++c)
      for (std::size_t j = 0; j < 2; ++j) pos.push_back(WittElement::basis({k, c}, j));
  CHECK(action_kernel(v, {0, 0}, pos).basis.size() == v.weight_dim({0, 0}));

  TensorModule full({formal_vector("γ", 2), Scalar(Rational(1, 2)), TensorVariant::Full});
  CHECK(action_kernel(full, {1, -3}, {WittElement::basis({1, 0}, 0)}).basis.empty());

  TensorModule quot({S({"0", "0"}), Scalar(0), TensorVariant::QuotientByTrivial});
  CHECK(action_kernel(quot, {-1, 0}, {WittElement::term({1, 0}, S({"2", "7"}))}).basis.size() == 1);
}

TEST_CASE("truncated Verma dimensions") {
  VermaParams p;
  p.beta = {1};
  p.K = 7;
  TruncatedVerma v(p);
  std::vector<std::size_t> dims;
  for (std::int64_t d = 0; d <= 7; ++d) dims.push_back(v.weight_dim(v.offset_of(LatticeVector(0), d)));
  CHECK(dims == std::vector<std::size_t>{1, 1, 2, 3, 5, 7, 11, 15});
  CHECK(v.weight_dim(v.offset_of(LatticeVector(0), -1)) == 0);

  TruncatedVerma small(e2_e1(3, 2)), big(e2_e1(3, 3));
  CHECK(small.weight_dim({0, 0}) == 1);
  CHECK(small.weight_dim({1, 0}) == 0);
  CHECK(small.weight_dim({0, 1}) == 0);
  // depth one holds one generator per derivation; depth two grows with the radius
  CHECK(small.weight_dim({-1, 1}) == 2);
  CHECK(big.weight_dim({-1, 1}) == 2);
  CHECK(small.weight_dim({-2, 0}) < big.weight_dim({-2, 0}));
  VermaParams ct = e2_e1(2, 2);
  ct.X = {VermaXKind::CosetTensor, S({"1/2", "1/3"}), Scalar(Rational(1, 2))};
  VermaParams ct3 = ct;
  ct3.B = 3;
  CHECK(TruncatedVerma(ct).weight_dim({-1, 0}) < TruncatedVerma(ct3).weight_dim({-1, 0}));
  CHECK(small.analytic_cut()->a == witt::test::Q({1, 0}));
}

TEST_CASE("truncated Verma validation") {
  VermaParams bad = e2_e1(3, 3);
  bad.G = {{0, 2}};
  CHECK_THROWS_AS(TruncatedVerma{bad}, std::invalid_argument);
  VermaParams lam = e2_e1(3, 3);
  lam.X.lambda = S({"1", "0"});
  CHECK_THROWS_AS(TruncatedVerma{lam}, std::invalid_argument);
  VermaParams k0 = e2_e1(0, 3);
  CHECK_THROWS_AS(TruncatedVerma{k0}, std::invalid_argument);
}

TEST_CASE("support windows") {
  TensorModule full({S({"1/2", "1/3"}), Scalar(2), TensorVariant::Full});
  SupportWindow w = support_window(full, Box::cube(2, 4));
  CHECK(w.dims.size() == 81);
  CHECK(w.complement().empty());

  TensorModule quot({S({"0", "0"}), Scalar(0), TensorVariant::QuotientByTrivial});
  SupportWindow q = support_window(quot, Box::cube(2, 4));
  CHECK(q.complement() == std::vector<LatticeVector>{{0, 0}});

  TruncatedVerma v(e2_e1(3, 3));
  SupportWindow vw = support_window(v);
  for (const auto& [x, d] : vw.dims)
    if (x[0] > 0) CHECK(d == 0);
  CHECK_THROWS_AS(support_window(v, Box::cube(2, 20)), std::out_of_range);
}
