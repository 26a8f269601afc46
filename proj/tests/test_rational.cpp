#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "btlat/rational.hpp"

using namespace btlat;

TEST_CASE("ceil and floor on exact rationals") {
  CHECK(ratCeil(Rat(0)) == 0);
  CHECK(ratCeil(Rat(1, 2)) == 1);
  CHECK(ratCeil(Rat(-1, 2)) == 0);
  CHECK(ratCeil(Rat(3)) == 3);
  CHECK(ratCeil(Rat(-3)) == -3);
  CHECK(ratCeil(Rat(7, 3)) == 3);
  CHECK(ratCeil(Rat(-7, 3)) == -2);

  CHECK(ratFloor(Rat(0)) == 0);
  CHECK(ratFloor(Rat(1, 2)) == 0);
  CHECK(ratFloor(Rat(-1, 2)) == -1);
  CHECK(ratFloor(Rat(7, 3)) == 2);
  CHECK(ratFloor(Rat(-7, 3)) == -3);

  // ceil(x) == -floor(-x) on a dense sample
  for (long long num = -24; num <= 24; ++num)
    for (long long den = 1; den <= 7; ++den)
      CHECK(ratCeil(Rat(num, den)) == -ratFloor(Rat(-num, den)));
}

TEST_CASE("mod helpers stay in range") {
  CHECK(ratMod1(Rat(5, 2)) == Rat(1, 2));
  CHECK(ratMod1(Rat(-1, 3)) == Rat(2, 3));
  CHECK(ratMod1(Rat(2)) == Rat(0));
  CHECK(ratMod(Rat(5, 4), Rat(1, 2)) == Rat(1, 4));
  CHECK(ratMod(Rat(-1, 4), Rat(1, 2)) == Rat(1, 4));
  for (long long num = -12; num <= 12; ++num) {
    Rat m = ratMod(Rat(num, 5), Rat(1, 3));
    CHECK(m >= Rat(0));
    CHECK(m < Rat(1, 3));
  }
  CHECK_THROWS_AS(ratMod(Rat(1), Rat(0)), InvalidInput);
}

TEST_CASE("parse and print round trip") {
  CHECK(parseRat("3") == Rat(3));
  CHECK(parseRat("-3") == Rat(-3));
  CHECK(parseRat("3/6") == Rat(1, 2));
  CHECK(parseRat("-4/6") == Rat(-2, 3));
  CHECK(ratStr(Rat(1, 2)) == "1/2");
  CHECK(ratStr(Rat(-2, 3)) == "-2/3");
  CHECK(ratStr(Rat(5)) == "5");
  CHECK(ratStr(Rat(0)) == "0");
  CHECK(parseRat(ratStr(Rat(-7, 12))) == Rat(-7, 12));

  CHECK_THROWS_AS(parseRat(""), InvalidInput);
  CHECK_THROWS_AS(parseRat("1/"), InvalidInput);
  CHECK_THROWS_AS(parseRat("/2"), InvalidInput);
  CHECK_THROWS_AS(parseRat("1/0"), InvalidInput);
  CHECK_THROWS_AS(parseRat("a/b"), InvalidInput);
  CHECK_THROWS_AS(parseRat("1.5"), InvalidInput);
}

TEST_CASE("lcm of denominators") {
  CHECK(lcmDenominators({}) == 1);
  CHECK(lcmDenominators({Rat(1, 2), Rat(1, 3)}) == 6);
  CHECK(lcmDenominators({Rat(2), Rat(3)}) == 1);
  CHECK(lcmDenominators({Rat(5, 6), Rat(3, 4)}) == 12);
}
