#include <doctest.h>

#include "valueset/poly_text.hpp"

using namespace valueset;

TEST_CASE("parse dense") {
  auto f = parse_poly("dense p=5: 1 0 1 0");
  auto& d = std::get<DensePoly>(f);
  CHECK(d.coeffs().size() == 3);
  CHECK(d.field().p() == 5);
  CHECK(serialize_poly(f) == "dense p=5: 1 0 1");
}

TEST_CASE("parse sparse alpha") {
  auto f = parse_poly("sparse p=67: 34*x^33 + 34*x^66");
  auto& s = std::get<SparsePoly>(f);
  REQUIRE(s.terms().size() == 2);
  CHECK(s.terms()[0].coeff.index() == 34);
  CHECK(s.terms()[0].exp == 33);
  CHECK(s.terms()[1].exp == 66);
}

TEST_CASE("round trips") {
  const char* inputs[] = {
      "dense p=5: 1 0 1",
      "dense p=2 m=3 mod=1,1,0,1: 0 1.1.0 0.0.1",
      "sparse p=7: 3*x^2 + 1*x^100000000000000000000",
      "shift p=11: 6*(x+0)^5 + 6*(x+1)^10 + const 9",
      "slp p=5 mode=strict\nr1 := one\nr2 := x\nr3 := mul r2 r2\nr4 := add r3 r1\nout r4\n",
      "slp p=3 m=2 mod=2,2,1 mode=extended\nr1 := x\nr2 := const 2\nr3 := gen\nr4 := mul r1 r3\nr5 := sub r4 r2\nout r5\n",
  };
  for (auto text : inputs) {
    auto f = parse_poly(text);
    auto s = serialize_poly(f);
    auto g = parse_poly(s);
    CHECK(serialize_poly(g) == s);
    for (auto x : enumerate_field(field_of(f))) CHECK(evaluate(f, x) == evaluate(g, x));
  }
}

TEST_CASE("zero polynomial") {
  CHECK(std::get<DensePoly>(parse_poly("dense p=3: 0")).is_zero());
  CHECK(std::get<SparsePoly>(parse_poly("sparse p=3:")).is_zero());
}

TEST_CASE("comments are ignored") {
  auto f = parse_poly("# a comment\ndense p=7: 0 1 # trailing\n");
  CHECK(std::get<DensePoly>(f).degree() == Degree::of(1));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_poly("dense p=4: 1"), Error);
  CHECK_THROWS_AS(parse_poly("dense p=5: 7"), Error);
  CHECK_THROWS_AS(parse_poly("dense 1 2"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("wavelet p=5: 1"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("sparse p=5: 3*y^2"), SyntaxError);
  CHECK_THROWS_AS(parse_poly("dense p=2 m=2 mod=1,0,1: 1"), Error);
  CHECK_THROWS_AS(parse_poly("slp p=5 mode=strict\nr1 := x\nout r1\n"), Error);
  try {
    parse_poly("dense p=5:\n 1 $");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
  }
}
