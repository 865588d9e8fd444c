#include <crossbraid/scalar.hpp>

#include <doctest.h>

using namespace crossbraid;

TEST_CASE("parse_scalar accepts exact fractions in canonical form") {
  CHECK(parse_scalar("3") == 3);
  CHECK(parse_scalar("-7") == -7);
  CHECK(parse_scalar("+2") == 2);
  CHECK(parse_scalar("2/4") == Scalar(1, 2));
  CHECK(parse_scalar("-6/9") == Scalar(-2, 3));
  const Scalar q = parse_scalar("10/4");
  CHECK(q.get_num() == 5);
  CHECK(q.get_den() == 2);
}

TEST_CASE("parse_scalar rejects floats and malformed input") {
  CHECK_THROWS_AS(parse_scalar("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("abc"), std::invalid_argument);
}

TEST_CASE("to_string round-trips") {
  for (const char* s : {"0", "1", "-1", "1/2", "-3/7", "123456789012345678901234567891/2"}) {
    CHECK(to_string(parse_scalar(s)) == s);
  }
}

TEST_CASE("denominator stays positive and exact equality holds") {
  const Scalar a = Scalar(1, 3) - Scalar(1, 2);
  CHECK(a == Scalar(-1, 6));
  CHECK(a.get_den() > 0);
  CHECK(is_zero(Scalar(1, 3) * 3 - 1));
}

TEST_CASE("OutsideRationals carries the documented prefix") {
  const OutsideRationals e("x^2 + 1");
  CHECK(std::string(e.what()).rfind("solution outside the rationals: ", 0) == 0);
}

TEST_CASE("unit vectors") {
  const Vector v = unit_vector(4, 2);
  CHECK(v == Vector{0, 0, 1, 0});
  CHECK(zero_vector(3) == Vector{0, 0, 0});
}
