#include "helpers.hpp"

#include "wittsupport/lattice.hpp"

using namespace witt;
using witt::test::Q;

TEST_CASE("dot") {
  CHECK(dot(Q({1, 0}), LatticeVector{0, 1}) == 0);
  CHECK(dot(Q({2, -1, 3}), LatticeVector{1, 1, 1}) == 4);
  CHECK(dot(Q({1, 1}), LatticeVector{-3, 1}) == -2);
  CHECK(halfspace_classify(Q({1, 1}), {-3, 1}) == Side::Negative);
  CHECK_THROWS_AS(dot(Q({1, 0}), LatticeVector{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("halfspace_classify") {
  CHECK(halfspace_classify(Q({1, 0}), {0, 5}) == Side::Zero);
  CHECK(halfspace_classify(Q({1, 1}), {2, -1}) == Side::Positive);
  CHECK(halfspace_classify(Q({3, -2}), {2, 3}) == Side::Zero);
  CHECK_THROWS_AS(halfspace_classify(Q({0, 0}), {1, 1}), std::invalid_argument);
}

TEST_CASE("componentwise_order") {
  CHECK(componentwise_order({3, 3}, {2, 2}) == Order::Gt);
  CHECK(componentwise_order({2, 1}, {1, 2}) == Order::Incomparable);
  CHECK(componentwise_order({1, 1, 1}, {1, 1, 1}) == Order::Eq);
  CHECK(leq({1, 1, 1}, {1, 1, 1}));
  CHECK(componentwise_order({2, 3}, {2, 2}) == Order::Geq);
  CHECK(componentwise_order({1, 1}, {2, 2}) == Order::Lt);
  CHECK_THROWS_AS(componentwise_order({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("unimodular bases") {
  auto id = UnimodularBasis::identity(3);
  CHECK(apply_basis(id, {4, -2, 7}) == LatticeVector{4, -2, 7});
  UnimodularBasis l1({{3, 1}, {2, 1}});
  CHECK(l1.determinant() == 1);
  UnimodularBasis l5({{3, 2}, {4, 3}});
  CHECK(l5.determinant() == 1);
  LatticeVector x{5, -7};
  CHECK(l1.to_standard(l1.apply(x)) == x);
  CHECK(apply_basis(l1, apply_basis(l1.inverse(), x)) == x);
  CHECK_THROWS_AS(UnimodularBasis({{2, 0}, {0, 1}}), std::invalid_argument);
  CHECK(integer_determinant({{2, 1, 0}, {1, 1, 0}, {2, 1, 1}}) == 1);
}

TEST_CASE("semigroup_generators_for") {
  auto g = semigroup_generators_for({-1, -1}, Q({1, 1}));
  CHECK(g.plus == std::vector<LatticeVector>{{1, 0}, {0, 1}});
  CHECK(g.minus == std::vector<LatticeVector>{{0, 1}, {1, 0}});

  g = semigroup_generators_for({-2, 1}, Q({1, 1}));
  CHECK(g.plus == std::vector<LatticeVector>{{1, 0}, {0, 1}});
  CHECK(g.minus == std::vector<LatticeVector>{{3, -2}, {4, -3}});

  g = semigroup_generators_for({-1}, Q({1}));
  CHECK(g.plus == std::vector<LatticeVector>{{1}});
  CHECK(g.minus == std::vector<LatticeVector>{{1}});
  CHECK(g.k_plus == std::vector<std::int64_t>{0});
  CHECK(g.k_minus == std::vector<std::int64_t>{2});

  CHECK_THROWS_AS(semigroup_generators_for({1, 1}, Q({1, 1})), std::invalid_argument);
}

TEST_CASE("generates_monoid") {
  auto r = generates_monoid({{-1, -1}, {1, 0}, {0, 1}}, 8);
  CHECK(r.status == MonoidStatus::Generated);
  bool found = false;
  for (const auto& w : r.witnesses)
    if (w.target == LatticeVector{-1, 0}) {
      found = true;
      CHECK(w.counts == std::vector<std::int64_t>{1, 0, 1});
      CHECK(w.length == 2);
    }
  CHECK(found);

  r = generates_monoid({{1, 0}, {0, 1}}, 8);
  CHECK(r.status == MonoidStatus::ProvenImpossible);
  REQUIRE(r.separating_functional);
  REQUIRE(r.unreachable);
  CHECK(dot(*r.separating_functional, *r.unreachable) < 0);
  CHECK(dot(*r.separating_functional, LatticeVector{1, 0}) >= 0);
  CHECK(dot(*r.separating_functional, LatticeVector{0, 1}) >= 0);

  CHECK(generates_monoid({{2, 1}, {1, 2}, {-1, -1}}, 12).generated());

  r = generates_monoid({{2, 0}, {-2, 0}, {0, 1}, {0, -1}}, 12);
  CHECK(r.status == MonoidStatus::ProvenImpossible);
  CHECK(r.proper_sublattice);

  CHECK_THROWS_AS(generates_monoid({}, 4), std::invalid_argument);
}

TEST_CASE("convex_hull_contains") {
  CHECK(convex_hull_contains({{1, 0}, {1, 2}}, {1, 1}));
  CHECK(convex_hull_contains({{0, 0}}, {0, 0}));
  CHECK_FALSE(convex_hull_contains({{0, 0}}, {1, 0}));
  CHECK(convex_hull_contains({{0, 0}, {2, 0}, {0, 2}}, {1, 1}));
  CHECK_FALSE(convex_hull_contains({{0, 0}, {2, 0}, {0, 2}}, {2, 1}));
}

TEST_CASE("separating_hyperplane") {
  auto a = separating_hyperplane({{1, 0}, {1, 2}}, {0, 0});
  REQUIRE(a);
  CHECK(*a == Q({1, 0}));
  CHECK_FALSE(separating_hyperplane({{1, 0}, {-1, 0}}, {0, 0}));
  a = separating_hyperplane({{2, 1}}, {1, 1});
  REQUIRE(a);
  CHECK(*a == Q({1, 0}));
}

TEST_CASE("small primitive vectors and subgroups") {
  auto v = small_primitive_vectors(2, 1);
  CHECK(v.size() == 8);
  CHECK(v.front() == LatticeVector{1, 0});
  CHECK(in_subgroup({{0, 2}}, {0, 4}));
  CHECK_FALSE(in_subgroup({{0, 2}}, {0, 3}));
  CHECK_FALSE(in_subgroup({{0, 1}}, {1, 0}));
  CHECK_THROWS_AS(span_coordinates({{1, 1}, {2, 2}}, {1, 1}), std::invalid_argument);
}

TEST_CASE("overflow is detected") {
  LatticeVector big{std::numeric_limits<std::int64_t>::max()};
  CHECK_THROWS_AS(big + LatticeVector{1}, std::overflow_error);
}
