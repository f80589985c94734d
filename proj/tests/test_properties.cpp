#include "helpers.hpp"

#include "wittsupport/ghw.hpp"
#include "wittsupport/verify.hpp"

using namespace witt;

namespace {
LatticeVector random_vector(std::mt19937_64& g, std::size_t n, std::int64_t r) {
  LatticeVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = uniform_int(g, -r, r);
  return x;
}
}  // namespace

TEST_CASE("basis changes round-trip") {
  std::mt19937_64 g(101);
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<std::size_t>(uniform_int(g, 2, 4));
    UnimodularBasis m = i % 2 ? lemma1_basis(uniform_int(g, 0, 5), n) : lemma5_basis(uniform_int(g, 1, 5), n);
    LatticeVector x = random_vector(g, n, 20);
    REQUIRE(m.to_standard(m.apply(x)) == x);
    REQUIRE(apply_basis(m, apply_basis(m.inverse(), x)) == x);
  }
}

TEST_CASE("dot and halfspace symmetries") {
  std::mt19937_64 g(202);
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<std::size_t>(uniform_int(g, 1, 4));
    LatticeVector x = random_vector(g, n, 9), y = random_vector(g, n, 9);
    RationalVector a(n);
    for (auto& q : a) {
      q = Rational(uniform_int(g, -9, 9), uniform_int(g, 1, 9));
      q.canonicalize();
    }
    REQUIRE(dot(to_rational(x), y) == dot(to_rational(y), x));
    REQUIRE(dot(a, x + y) == dot(a, x) + dot(a, y));
    bool nonzero = false;
    for (const auto& q : a) nonzero = nonzero || q != 0;
    if (nonzero) REQUIRE(static_cast<int>(halfspace_classify(a, x)) == -static_cast<int>(halfspace_classify(a, -x)));
  }
}

TEST_CASE("separating hyperplanes verify and exclude hull membership") {
  std::mt19937_64 g(303);
  for (int i = 0; i < 200; ++i) {
    const auto n = static_cast<std::size_t>(uniform_int(g, 2, 3));
    std::vector<LatticeVector> pts;
    for (int k = 0, m = static_cast<int>(uniform_int(g, 1, 4)); k < m; ++k) pts.push_back(random_vector(g, n, 3));
    LatticeVector q = random_vector(g, n, 3);
    auto a = separating_hyperplane(pts, q);
    if (a) {
      for (const auto& p : pts) REQUIRE(dot(*a, p - q) > 0);
      REQUIRE_FALSE(convex_hull_contains(pts, q));
    }
    REQUIRE(a.has_value() != convex_hull_contains(pts, q));
  }
}
