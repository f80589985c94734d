#include "helpers.hpp"

#include "wittsupport/witt.hpp"

using namespace witt;
using witt::test::S;

TEST_CASE("scalars") {
  CHECK(Scalar::parse("2/4") == Scalar(Rational(1, 2)));
  CHECK(Scalar::parse("(x^2 - 1)/(x - 1)") == Scalar::parse("x + 1"));
  CHECK(Scalar::parse("γ1 - γ1").is_zero());
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Scalar::parse("(1"), std::invalid_argument);
  CHECK(Scalar::parse("x/y").to_string() == "(x)/(y)");
}

TEST_CASE("bracket examples") {
  const ScalarVector u = S({"3", "-1/2"});
  WittElement d1 = WittElement::basis({0, 0}, 0);
  CHECK(bracket(d1, WittElement::term({2, 3}, u)) == WittElement::term({2, 3}, u).scaled(2));

  WittElement lhs = bracket(WittElement::basis({1, 0}, 1), WittElement::basis({0, 1}, 0));
  CHECK(lhs == WittElement::term({1, 1}, S({"1", "-1"})));

  WittElement x = WittElement::term({1, -2}, S({"γ1", "2"})) + WittElement::basis({0, 3}, 1);
  CHECK(bracket(x, x).is_zero());
  CHECK_THROWS_AS(bracket(WittElement::basis({1}, 0), WittElement::basis({1, 1}, 0)), std::invalid_argument);
}

TEST_CASE("canonical form") {
  WittElement x = WittElement::term({1, 0}, S({"1", "2"})) + WittElement::term({1, 0}, S({"-1", "-2"}));
  CHECK(x.is_zero());
  CHECK(WittElement::term({1, 0}, S({"0", "0"})).is_zero());
  WittElement y = WittElement::basis({0, 1}, 0) + WittElement::basis({1, 0}, 0);
  CHECK_FALSE(y.grade());
  CHECK(y.terms().begin()->first == LatticeVector{0, 1});
}

TEST_CASE("in_subalgebra") {
  CHECK(in_subalgebra(WittElement::basis({0, 0}, 0), SubalgebraSpec::cartan()));
  CHECK_FALSE(in_subalgebra(WittElement::basis({1, 0}, 0), SubalgebraSpec::cartan()));
  ScalarVector g = formal_vector("γ", 2);
  auto vir = SubalgebraSpec::vir_gamma(g);
  CHECK(in_subalgebra(WittElement::term({1, 1}, g), vir));
  CHECK_FALSE(in_subalgebra(WittElement::basis({1, 1}, 0), vir));
  auto gg = SubalgebraSpec::g_of_G({{0, 1}});
  CHECK(in_subalgebra(WittElement::basis({0, 2}, 0), gg));
  CHECK_FALSE(in_subalgebra(WittElement::basis({1, 0}, 0), gg));
  CHECK(in_subalgebra(WittElement::basis({4, 4}, 1), SubalgebraSpec::full()));
  CHECK_THROWS_AS(SubalgebraSpec::g_of_G({{1, 1}, {2, 2}}), std::invalid_argument);
}

TEST_CASE("vir_bracket_coefficient") {
  ScalarVector g = formal_vector("γ", 2);
  CHECK(vir_bracket_coefficient(g, {1, 2}, {1, 2}).is_zero());
  CHECK(vir_bracket_coefficient({Scalar(1)}, {1}, {2}) == Scalar(1));
  CHECK(vir_bracket_coefficient(g, {0, 1}, {1, 0}) == Scalar::parse("γ1 - γ2"));
  // agrees with the bracket
  LatticeVector a{2, -1}, b{-3, 4};
  WittElement br = bracket(WittElement::term(a, g), WittElement::term(b, g));
  ScalarVector scaled;
  for (const auto& s : g) scaled.push_back(s * vir_bracket_coefficient(g, a, b));
  CHECK(br == WittElement::term(a + b, scaled));
}
