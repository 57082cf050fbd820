#include "doctest.h"

#include <stdexcept>

#include "burnside/permutation.hpp"

using namespace burnside;

TEST_CASE("parse_cycles basics") {
  Permutation p = parse_cycles("(0 1 2)(3 4)");
  CHECK(p.degree() == 5);
  CHECK(p(0) == 1);
  CHECK(p(1) == 2);
  CHECK(p(2) == 0);
  CHECK(p(3) == 4);
  CHECK(p(4) == 3);

  CHECK(parse_cycles("()").is_identity());
  CHECK(parse_cycles("(0 1)", 7).degree() == 7);
  CHECK(parse_cycles("(0,1,2)")(2) == 0);  // commas allowed inside cycles
}

TEST_CASE("parse_cycles errors carry a position") {
  CHECK_THROWS_WITH_AS(parse_cycles("0 1"),
                       doctest::Contains("expected '('"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_cycles("(0 x)"), doctest::Contains("digit"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_cycles("(0 1"), doctest::Contains("unterminated"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_cycles("(3)"), doctest::Contains("singleton"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_cycles("(0 1)(1 2)"),
                       doctest::Contains("repeated"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0 99999999999)"), std::invalid_argument);
}

TEST_CASE("to_cycles is canonical and round-trips") {
  CHECK(to_cycles(Permutation::identity(4)) == "()");
  Permutation p = parse_cycles("(3 4)(0 1 2)");
  CHECK(to_cycles(p) == "(0 1 2)(3 4)");
  CHECK(to_cycles(parse_cycles(to_cycles(p), p.degree())) == to_cycles(p));
}

TEST_CASE("compose and inverse") {
  Permutation a = parse_cycles("(0 1 2)");
  Permutation b = parse_cycles("(0 1)", 3);
  // compose(a, b) applies b first.
  CHECK(compose(a, b)(0) == 2);
  CHECK(compose(b, a)(0) == 0);
  Permutation ai = a.inverse();
  CHECK(compose(a, ai).is_identity());
  CHECK(compose(ai, a).is_identity());
  CHECK(a.is_bijection());
}
