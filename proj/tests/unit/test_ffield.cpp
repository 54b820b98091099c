#include <doctest.h>

#include <set>

#include "oracles/oracles.hpp"
#include "valueset/ffield.hpp"

using namespace valueset;

TEST_CASE("prime field construction") {
  auto f5 = make_field(5, 1);
  CHECK(f5->order() == 5);
  CHECK(f5->is_prime_field());
  CHECK(f5->modulus().empty());
  CHECK_THROWS_AS(make_field(4, 1), Error);
  try {
    make_field(4, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
}

TEST_CASE("F4 uses x^2 + x + 1") {
  auto f4 = make_field(2, 2);
  auto mod = f4->modulus();
  REQUIRE(mod.size() == 3);
  CHECK(mod[0] == 1);
  CHECK(mod[1] == 1);
  CHECK(mod[2] == 1);
  FieldElement x{2}, x1{3};
  CHECK(f4->mul(x, x1) == f4->one());
  CHECK(f4->coeffs(FieldElement{2}) == std::vector<std::uint64_t>{0, 1});
  CHECK(f4->coeffs(FieldElement{3}) == std::vector<std::uint64_t>{1, 1});
}

TEST_CASE("inverse and Lagrange") {
  auto f5 = make_field(5, 1);
  CHECK(f5->inv(f5->from_int(2)) == f5->from_int(3));
  CHECK_THROWS_AS(f5->inv(f5->zero()), Error);
  for (std::uint64_t q : {2u, 3u, 5u}) {
    for (unsigned m : {1u, 2u, 3u}) {
      auto f = make_field(q, m);
      for (auto a : enumerate_field(*f)) {
        if (a.is_zero()) continue;
        CHECK(f->pow(a, f->order() - 1) == f->one());
        CHECK(f->mul(a, f->inv(a)) == f->one());
      }
    }
  }
  CHECK(f5->pow(f5->zero(), 0) == f5->one());
}

TEST_CASE("table and schoolbook multiplication agree with field axioms") {
  // 3^13 exceeds the table limit and exercises the polynomial path.
  auto big = make_field(3, 13);
  REQUIRE(big->order() > Field::kTableLimit);
  auto small = make_field(3, 5);
  for (auto f : {big, small}) {
    std::uint64_t seed = 12345;
    auto next = [&] {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      return FieldElement{(seed >> 11) % f->order()};
    };
    for (int i = 0; i < 200; ++i) {
      auto a = next(), b = next(), c = next();
      CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      if (!a.is_zero()) CHECK(f->mul(a, f->inv(a)) == f->one());
    }
  }
}

TEST_CASE("enumeration is a bijection onto indices") {
  auto f3 = make_field(3, 1);
  std::vector<std::uint64_t> idx;
  for (auto e : enumerate_field(*f3)) idx.push_back(e.index());
  CHECK(idx == std::vector<std::uint64_t>{0, 1, 2});
  auto f8 = make_field(2, 3);
  std::set<std::vector<std::uint64_t>> seen;
  for (auto e : enumerate_field(*f8)) seen.insert(f8->coeffs(e));
  CHECK(seen.size() == 8);
  CHECK_THROWS_AS(enumerate_field(*make_field(2, 30)), Error);
}

TEST_CASE("primality against trial division") {
  CHECK(is_prime(std::uint64_t{67}));
  CHECK_FALSE(is_prime(std::uint64_t{1} << 16));
  CHECK(oracle::is_prime_trial(4099));
  CHECK(is_prime(std::uint64_t{4099}));
  for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == oracle::is_prime_trial(n));
  CHECK(is_prime(BigInt("170141183460469231731687303715884105727")));
  CHECK_FALSE(is_prime(BigInt("170141183460469231731687303715884105729")));
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(std::vector<std::uint64_t>{1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible(std::vector<std::uint64_t>{1, 0, 1}, 2));
  CHECK(is_irreducible(std::vector<std::uint64_t>{1, 1, 0, 1}, 2));
  CHECK_THROWS_AS(is_irreducible(std::vector<std::uint64_t>{1, 1, 2}, 3), Error);
  // degree-4 reducible with no roots: (x^2+x+1)^2 over F_2
  CHECK_FALSE(is_irreducible(std::vector<std::uint64_t>{1, 0, 1, 0, 1}, 2));
  CHECK_THROWS_AS(make_field_with_modulus(2, {1, 0, 1}), Error);
}

TEST_CASE("solve_linear") {
  auto f5 = make_field(5, 1);
  Matrix id{{f5->one(), f5->zero()}, {f5->zero(), f5->one()}};
  std::vector<FieldElement> v{f5->from_int(3), f5->from_int(4)};
  CHECK(solve_linear(*f5, id, v) == v);
  CHECK(solve_linear(*f5, {{f5->from_int(2)}}, {f5->from_int(3)}) ==
        std::vector<FieldElement>{f5->from_int(4)});
  Matrix zero{{f5->zero()}};
  CHECK_THROWS_AS(solve_linear(*f5, zero, {f5->one()}), Error);
}

TEST_CASE("from_int reduces negatives") {
  auto f7 = make_field(7, 1);
  CHECK(f7->from_int(-1) == FieldElement{6});
  CHECK(f7->from_big(BigInt(-15)) == FieldElement{6});
  CHECK_THROWS_AS(f7->element(7), Error);
}
