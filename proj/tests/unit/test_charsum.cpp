#include <doctest.h>

#include "oracles/oracles.hpp"
#include "valueset/charsum.hpp"

using namespace valueset;

TEST_CASE("quadratic character") {
  auto f7 = make_field(7, 1);
  auto f5 = make_field(5, 1);
  CHECK(chi(f7->from_int(2), *f7) == 1);
  CHECK(chi(f5->zero(), *f5) == 0);
  CHECK(chi(f5->from_int(2), *f5) == -1);
  CHECK_THROWS_AS(chi(FieldElement{1}, *make_field(2, 1)), Error);
  for (std::uint64_t p : {3u, 11u, 101u, 1009u})
    for (std::uint64_t x = 0; x < p; ++x) CHECK(chi(FieldElement{x}, *make_field(p, 1)) == oracle::legendre(x, p));
}

TEST_CASE("alpha gadget") {
  auto g5 = alpha_poly(5);
  REQUIRE(g5.alpha.terms().size() == 2);
  CHECK(g5.alpha.terms()[0] == SparseTerm{FieldElement{3}, BigInt(2)});
  CHECK(g5.alpha.terms()[1] == SparseTerm{FieldElement{3}, BigInt(4)});
  auto g67 = alpha_poly(67);
  CHECK(g67.alpha.terms()[0] == SparseTerm{FieldElement{34}, BigInt(33)});
  CHECK(g67.alpha.terms()[1] == SparseTerm{FieldElement{34}, BigInt(66)});
  CHECK(alpha_table(g5) == std::vector<std::uint8_t>{0, 1, 0, 0, 1});
  CHECK_THROWS_AS(alpha_poly(2), Error);
}

TEST_CASE("pattern map") {
  auto g = alpha_poly(5);
  CHECK(pattern_map(g, 2, FieldElement{0}) == std::vector<std::uint8_t>{0, 1});
  CHECK(pattern_map(g, 1, FieldElement{1}) == std::vector<std::uint8_t>{1});
  CHECK(pattern_map(g, 2, FieldElement{3}) == std::vector<std::uint8_t>{0, 1});
}

TEST_CASE("coverage counts") {
  auto c5 = coverage(5, 1);
  CHECK(c5.counts == std::vector<std::uint64_t>{3, 2});
  CHECK(c5.onto());
  for (std::uint64_t p : {67u, 131u, 257u}) {
    auto c = coverage(p, 2);
    CHECK(c.counts == oracle::pattern_counts(p, 2));
    CHECK(c.onto());
    std::uint64_t sum = 0;
    for (auto v : c.counts) sum += v;
    CHECK(sum == p);
  }
  CHECK(coverage(1031, 3, 1).counts == coverage(1031, 3, 7).counts);
  CHECK_THROWS_AS(coverage(9, 1), Error);
  CHECK_THROWS_AS(coverage(5, 0), Error);
}

TEST_CASE("onto guarantee") {
  CHECK(onto_guaranteed(67, 2));
  CHECK_FALSE(onto_guaranteed(64, 2));
  CHECK_FALSE(onto_guaranteed(3, 2));
  CHECK(is_onto(67, 2));
  CHECK(is_onto(5, 1));
  (void)is_onto(3, 2);
}

TEST_CASE("weil interval") {
  auto c = coverage(1031, 2);
  CHECK(c.lower_bound_positive());
  for (auto v : c.counts) CHECK(c.strictly_inside(v));
  CHECK_FALSE(c.strictly_inside(0));
  CHECK_FALSE(coverage(67, 2).lower_bound_positive());
}
