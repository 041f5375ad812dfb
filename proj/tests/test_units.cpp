#include "ssdsim/errors.hpp"
#include "ssdsim/units.hpp"

#include <doctest.h>

using namespace ssdsim;

TEST_CASE("parse_ns keeps picosecond precision") {
  CHECK(parse_ns("7.82") == Picoseconds{7820});
  CHECK(parse_ns("0.02") == Picoseconds{20});
  CHECK(parse_ns("20") == Picoseconds{20000});
  CHECK(parse_ns("12.048") == Picoseconds{12048});
  CHECK_THROWS_AS(parse_ns("1.0005"), InputError);
  CHECK_THROWS_AS(parse_ns("abc"), InputError);
  CHECK_THROWS_AS(parse_ns(""), InputError);
}

TEST_CASE("parse_fraction is exact") {
  CHECK(parse_fraction("0.5") == Fraction(1, 2));
  CHECK(parse_fraction("0.25") == Fraction(1, 4));
  CHECK(parse_fraction("1") == Fraction(1));
}

TEST_CASE("round_picos rounds halves up and rejects negatives") {
  CHECK(round_picos(Fraction(5, 2)) == Picoseconds{3});
  CHECK(round_picos(Fraction(7, 3)) == Picoseconds{2});
  CHECK(round_picos(Fraction(0)) == Picoseconds{0});
  CHECK_THROWS_AS(round_picos(Fraction(-1, 2)), DomainError);
}

TEST_CASE("unit helpers") {
  CHECK(ns(3) == Picoseconds{3000});
  CHECK(us(2) == Picoseconds{2000000});
  CHECK(to_ns(Picoseconds{12048}) == doctest::Approx(12.048));
  CHECK(to_seconds(us(1)) == doctest::Approx(1e-6));
}
