#include "helpers.hpp"

#include "wittsupport/ghw.hpp"
#include "wittsupport/verma.hpp"

using namespace witt;
using witt::test::S;

TEST_CASE("ghw_propagate_bound") {
  CHECK(ghw_propagate_bound(3, {2, -1}) == 7);
  CHECK(ghw_propagate_bound(0, {1, 1, 1}) == 4);
  CHECK(ghw_propagate_bound(4, {0, 0}) == 5);
}

TEST_CASE("lemma bases") {
  CHECK(lemma1_basis(2, 2).rows() == std::vector<LatticeVector>{{3, 1}, {2, 1}});
  CHECK(lemma1_basis(1, 3).rows() == std::vector<LatticeVector>{{2, 1, 0}, {1, 1, 0}, {2, 1, 1}});
  CHECK(lemma1_basis(0, 2).rows() == std::vector<LatticeVector>{{1, 1}, {0, 1}});
  CHECK(lemma1_basis(2, 2).determinant() == 1);
  CHECK(lemma5_basis(2, 2).rows() == std::vector<LatticeVector>{{3, 2}, {4, 3}});
  CHECK(lemma5_basis(1, 3).rows() == std::vector<LatticeVector>{{2, 1, 1}, {3, 2, 1}, {2, 1, 2}});
  CHECK(lemma5_basis(2, 3).rows() == std::vector<LatticeVector>{{3, 2, 2}, {4, 3, 2}, {3, 2, 3}});
  CHECK(std::abs(lemma5_basis(2, 3).determinant()) == 1);
  CHECK_THROWS_AS(lemma1_basis(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(lemma5_basis(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(lemma5_basis(2, 1), std::invalid_argument);
}

TEST_CASE("is_ghw") {
  VermaParams p;
  p.G = {{0, 1}};
  p.beta = {1, 0};
  p.K = 3;
  p.B = 3;
  TruncatedVerma v(p);
  CHECK(is_ghw(v, {0, 0}, {Scalar(1)}, 4) == std::optional<std::int64_t>(0));
  CHECK_THROWS_AS(is_ghw(v, {0, 0}, {Scalar(0)}, 4), std::invalid_argument);

  TensorModule formal({formal_vector("γ", 2), Scalar(0), TensorVariant::Full});
  CHECK_FALSE(is_ghw(formal, {3, 3}, {Scalar(1)}, 1));
  TensorModule quot({S({"0", "0"}), Scalar(0), TensorVariant::QuotientByTrivial});
  CHECK_FALSE(is_ghw(quot, {-1, -1}, {Scalar(1)}, 1));
  CHECK(ghw_is_symbolic(quot));
  CHECK_FALSE(ghw_is_symbolic(v));
}

TEST_CASE("find_ghw_vector") {
  VermaParams p1;
  p1.beta = {1};
  p1.K = 5;
  TruncatedVerma v1(p1);
  auto w1 = find_ghw_vector(v1, v1.default_window());
  REQUIRE(w1);
  CHECK(w1->offset == LatticeVector{0});
  CHECK(w1->N == 0);

  TensorModule formal({formal_vector("γ", 2), Scalar(Rational(1, 2)), TensorVariant::Full});
  CHECK_FALSE(find_ghw_vector(formal, Box::cube(2, 3)));

  VermaParams p;
  p.G = {{0, 1}};
  p.beta = {1, 0};
  p.K = 3;
  p.B = 3;
  TruncatedVerma v(p);
  auto w = find_ghw_vector(v, v.default_window());
  REQUIRE(w);
  CHECK(w->offset == LatticeVector{0, 0});
  CHECK(w->N == 0);
  CHECK(w->scope == "window");
}
