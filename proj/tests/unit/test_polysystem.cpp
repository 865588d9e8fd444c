#include <crossbraid/polysystem.hpp>

#include <doctest.h>

using namespace crossbraid;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }
Polynomial cst(std::size_t n, const Scalar& c) { return Polynomial::constant(n, c); }

}  // namespace

TEST_CASE("rational_roots finds each rational root once, ascending") {
  // (x - 1)(x + 2)(2x - 1) = 2x^3 + x^2 - 5x + 2
  const auto r = rational_roots({2, -5, 1, 2});
  REQUIRE(r.size() == 3);
  CHECK(r[0] == -2);
  CHECK(r[1] == Scalar(1, 2));
  CHECK(r[2] == 1);
  const auto dbl = rational_roots({1, -2, 1});  // (x-1)^2
  REQUIRE(dbl.size() == 1);
  CHECK(dbl[0] == 1);
  CHECK(rational_roots({0, 0, 1}) == std::vector<Scalar>{0});
}

TEST_CASE("rational_roots reports irrational factors") {
  CHECK_THROWS_AS(rational_roots({1, 0, 1}), OutsideRationals);   // x^2 + 1
  CHECK_THROWS_AS(rational_roots({-2, 0, 1}), OutsideRationals);  // x^2 - 2
  CHECK_THROWS_AS(rational_roots({-2, 0, 1, 0}), OutsideRationals);
}

TEST_CASE("polynomial arithmetic and evaluation") {
  const auto x = var(2, 0), y = var(2, 1);
  const Polynomial p = (x + y) * (x - y);
  CHECK(p.degree() == 2);
  CHECK(p.evaluate({3, 2}) == 5);
  CHECK(p.coefficient({2, 0}) == 1);
  CHECK(p.coefficient({1, 1}) == 0);
  const Polynomial q = p.substitute(1, cst(2, 1));
  CHECK(q.variables() == std::vector<std::size_t>{0});
  CHECK(q.univariate_coefficients(0) == std::vector<Scalar>{-1, 0, 1});
}

TEST_CASE("solve_polynomial_system: grouplike system of kC2") {
  // x = a*1 + b*g, Δx = x⊗x and ε(x) = 1: a^2 = a, b^2 = b, ab = 0, a + b = 1
  const auto a = var(2, 0), b = var(2, 1);
  std::vector<Polynomial> eqs = {a * a - a, b * b - b, a * b, a + b - cst(2, 1)};
  const auto sols = solve_polynomial_system(2, eqs);
  REQUIRE(sols.size() == 2);
  CHECK(sols[0] == Vector{0, 1});
  CHECK(sols[1] == Vector{1, 0});
}

TEST_CASE("solve_polynomial_system error classes") {
  const auto x = var(2, 0), y = var(2, 1);
  CHECK_THROWS_AS(solve_polynomial_system(2, {x * x - cst(2, 1)}), PositiveDimensional);
  CHECK_THROWS_AS(solve_polynomial_system(1, {var(1, 0) * var(1, 0) + cst(1, 1)}), OutsideRationals);
  CHECK_THROWS_AS(solve_polynomial_system(2, {x * y - cst(2, 1), x * x - y * y}), IrreducibleSystem);
  CHECK(solve_polynomial_system(1, {var(1, 0) - cst(1, 1), var(1, 0) - cst(1, 2)}).empty());
}
