#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "knotarc/poly.hpp"

using namespace knotarc;

TEST_SUITE_BEGIN("laurent polynomials");

TEST_CASE("basic arithmetic") {
  auto v = LaurentPoly2::monomial(1, 0);
  auto vinv = LaurentPoly2::monomial(-1, 0);
  auto z = LaurentPoly2::monomial(0, 1);
  auto one = LaurentPoly2::constant(1);

  CHECK((v * vinv) == one);
  CHECK((v + vinv) * z == v * z + vinv * z);
  CHECK((v - v).is_zero());
  CHECK(one.v_spread() == 0);
  CHECK((v + vinv).v_spread() == 2);
  CHECK((v * v * z - vinv).min_v() == -1);
  CHECK((v * v * z - vinv).max_v() == 2);
}

TEST_CASE("zero coefficients are never stored") {
  auto p = LaurentPoly2::monomial(3, 1, 2) + LaurentPoly2::monomial(3, 1, -2);
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK_THROWS(p.min_v());
}

TEST_CASE("associativity and commutativity on pseudo-random inputs") {
  // hand-rolled generator; exponents in [-3,3], coefficients in [-4,4]
  uint64_t s = 12345;
  auto rnd = [&]() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  };
  auto make = [&]() {
    LaurentPoly2 p;
    int terms = static_cast<int>(rnd() % 5);
    for (int i = 0; i < terms; ++i) {
      int a = static_cast<int>(rnd() % 7) - 3;
      int b = static_cast<int>(rnd() % 7) - 3;
      long long c = static_cast<long long>(rnd() % 9) - 4;
      p += LaurentPoly2::monomial(a, b, c);
    }
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto a = make(), b = make(), c = make();
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("serialization") {
  auto p = LaurentPoly2::monomial(-1, 2, 3) + LaurentPoly2::constant(1);
  CHECK(p.json() == "[[-1,2,3],[0,0,1]]");
  CHECK(LaurentPoly2::constant(0).str() == "0");
}

TEST_SUITE_END();
