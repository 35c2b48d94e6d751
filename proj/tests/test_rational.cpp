#include "doctest.h"

#include "pgnlab/linalg.hpp"
#include "pgnlab/rational.hpp"
#include "pgnlab/real.hpp"

using namespace pgnlab;

TEST_CASE("parsing fractions and decimals") {
  CHECK(parse_rational("7/10") == Rat(7, 10));
  CHECK(parse_rational("0.7") == Rat(7, 10));
  CHECK(parse_rational("-3/6") == Rat(-1, 2));
  CHECK(parse_rational(" 11/10 ") == Rat(11, 10));
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational("-0.25") == Rat(-1, 4));
  CHECK(parse_rational("1.5") == Rat(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational(""), parse_error);
  CHECK_THROWS_AS(parse_rational("abc"), parse_error);
}

TEST_CASE("string round trip stays reduced") {
  Rat q = parse_rational("14/20");
  CHECK(to_string(q) == "7/10");
  CHECK(parse_rational(to_string(q)) == q);
  CHECK(to_string(Rat(5)) == "5");
}

TEST_CASE("integer powers") {
  CHECK(pow_int(Rat(2), 10) == 1024);
  CHECK(pow_int(Rat(3, 2), -2) == Rat(4, 9));
  CHECK(pow_int(Rat(7, 10), 0) == 1);
  CHECK(pow_int(Rat(-2), 3) == -8);
}

TEST_CASE("perfect roots") {
  CHECK(*root_if_perfect(Rat(8), 3) == 2);
  CHECK(*root_if_perfect(Rat(4, 9), 2) == Rat(2, 3));
  CHECK(!root_if_perfect(Rat(2), 2).has_value());
  CHECK(*pow_exact(Rat(4), 3, 2) == 8);         // 4^(3/2)
  CHECK(*pow_exact(Rat(64), -1, 3) == Rat(1, 4));
  CHECK(!pow_exact(Rat(2), 1, 2).has_value());
}

TEST_CASE("floor ceil round root_ceil") {
  CHECK(floor_int(Rat(7, 2)) == 3);
  CHECK(floor_int(Rat(-7, 2)) == -4);
  CHECK(ceil_int(Rat(7, 2)) == 4);
  CHECK(round_nearest(Rat(5, 2)) == 3);
  CHECK(round_nearest(Rat(-5, 2)) == -2);
  CHECK(root_ceil(Rat(8), 3) == 2);
  CHECK(root_ceil(Rat(9), 3) == 3);
  CHECK(root_ceil(Rat(1, 8), 3) == 1);
}

TEST_CASE("exact inverse and determinant") {
  RatMatrix a(3, 3);
  a << Rat(1), Rat(0), Rat(0),
       Rat(7, 10), Rat(1), Rat(0),
       Rat(3, 10), Rat(0), Rat(1);
  CHECK(determinant(a) == 1);
  RatMatrix ainv = inverse(a);
  CHECK(RatMatrix(a * ainv) == RatMatrix::Identity(3, 3));
  CHECK(ainv(1, 0) == Rat(-7, 10));

  RatMatrix b(2, 2);
  b << Rat(1, 3), Rat(1, 5), Rat(1, 7), Rat(2, 7);
  CHECK(determinant(b) == Rat(1, 3) * Rat(2, 7) - Rat(1, 5) * Rat(1, 7));
  CHECK(rank(b) == 2);

  RatMatrix sing(2, 2);
  sing << Rat(1), Rat(2), Rat(2), Rat(4);
  CHECK(determinant(sing) == 0);
  CHECK(rank(sing) == 1);
  CHECK_THROWS(inverse(sing));
}

TEST_CASE("saturation basis extension") {
  // span{(2,4,6)} saturates to multiples of (1,2,3)
  IntMatrix w(3, 1);
  w << Int(2), Int(4), Int(6);
  IntMatrix c = saturate_and_complete(w);
  Rat det = determinant(to_rat(c));
  CHECK((det == 1 || det == -1));
  IntVector first = c.col(0);
  CHECK(abs(first(0)) == 1);
  CHECK(first(1) == 2 * first(0));
  CHECK(first(2) == 3 * first(0));
}

TEST_CASE("display real") {
  Real one_third = Real(Rat(1, 3));
  CHECK(one_third.str(10).substr(0, 6) == "0.3333");
  Real lg = Real::log_of(Rat(1));
  CHECK(lg == Real(0.0));
  CHECK(Real::log_of(Rat(8)) / Real::log_of(Rat(2)) == Real(3.0));
}
