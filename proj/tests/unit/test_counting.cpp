#include <doctest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "valueset/counting.hpp"

using namespace valueset;

namespace {

PolyInput dense(std::uint64_t p, std::vector<std::uint64_t> c) {
  auto f = make_field(p, 1);
  std::vector<FieldElement> e;
  for (auto v : c) e.push_back(FieldElement{v});
  return DensePoly(f, e);
}

PolyInput monomial(std::uint64_t p, unsigned m, std::uint64_t k) {
  auto f = make_field(p, m);
  return SparsePoly(f, {{f->one(), BigInt(static_cast<unsigned long>(k))}});
}

std::vector<std::uint64_t> random_coeffs(std::mt19937_64& rng, std::uint64_t p, unsigned d) {
  std::vector<std::uint64_t> c(d + 1);
  for (auto& v : c) v = rng() % p;
  c[d] = 1 + rng() % (p - 1);
  return c;
}

}  // namespace

TEST_CASE("direct counts") {
  CHECK(count_direct(dense(7, {0, 1})).first.cardinality == 7);
  auto [rep, hist] = count_direct(dense(3, {0, 0, 1}));
  CHECK(rep.cardinality == 2);
  REQUIRE(hist.entries.size() == 2);
  CHECK(hist.entries[0] == std::pair<std::uint64_t, std::uint64_t>{0, 1});
  CHECK(hist.entries[1] == std::pair<std::uint64_t, std::uint64_t>{1, 2});
  for (std::uint64_t q : {3u, 5u, 7u, 11u, 13u})
    CHECK(count_direct(dense(q, {0, 0, 1})).first.cardinality == (q + 1) / 2);
  CHECK(count_direct(monomial(3, 2, 2)).first.cardinality == 5);
}

TEST_CASE("cubes mod 7") {
  CHECK(oracle::value_set_size({0, 0, 0, 1}, 7) == 3);
  CHECK(count_direct(dense(7, {0, 0, 0, 1})).first.cardinality == 3);
  CHECK(count_codomain(std::get<DensePoly>(dense(7, {0, 0, 0, 1}))).cardinality == 3);
  CHECK(count_codomain(std::get<DensePoly>(dense(5, {0, 0, 0, 1}))).cardinality == 5);
  CHECK(count_codomain(std::get<DensePoly>(dense(3, {0, 0, 1}))).cardinality == 2);
}

TEST_CASE("has_root") {
  CHECK(has_root(std::get<DensePoly>(dense(5, {1, 0, 1}))));
  CHECK_FALSE(has_root(std::get<DensePoly>(dense(3, {1, 0, 1}))));
  for (std::uint64_t q : {2u, 3u, 5u, 7u}) CHECK(has_root(std::get<DensePoly>(dense(q, {q - 1, 1}))));
  CHECK_FALSE(has_root(std::get<DensePoly>(dense(5, {3}))));
  CHECK_THROWS_AS(has_root(DensePoly::zero(make_field(5, 1))), Error);
}

TEST_CASE("symmetric weights") {
  CHECK(sym_weights(1).sigma == std::vector<Rational>{1});
  CHECK(sym_weights(2).sigma == std::vector<Rational>{Rational(3, 2), Rational(1, 2)});
  CHECK(sym_weights(3).sigma == std::vector<Rational>{Rational(11, 6), 1, Rational(1, 6)});
  CHECK(oracle::sigma_by_product(3) == sym_weights(3).sigma);
  for (int d = 1; d <= 60; ++d) {
    CHECK(sym_weights_newton(d).sigma == oracle::sigma_by_product(d));
    CHECK(sym_weights_product(d).sigma == oracle::sigma_by_product(d));
  }
  CHECK_THROWS_AS(sym_weights(0), Error);
}

TEST_CASE("omega identity") {
  for (int d = 1; d <= 12; ++d)
    for (int k = 1; k <= d; ++k) CHECK(omega_identity_check(d, k) == 1);
  CHECK_THROWS_AS(omega_identity_check(3, 4), Error);
}

TEST_CASE("equal-value tuple counts") {
  auto f3 = make_field(3, 1);
  Evaluator sq(dense(3, {0, 0, 1}));
  CHECK(nk_brute(sq, f3, 2) == 5);
  CHECK(nk_brute(sq, f3, 1) == 3);
  auto f4 = make_field(2, 2);
  Evaluator id(PolyInput{DensePoly(f4, {FieldElement{0}, FieldElement{1}})});
  CHECK(nk_brute(id, f4, 3) == 4);
  auto hist = count_direct(dense(3, {0, 0, 1})).second;
  auto nk = nk_from_histogram(hist, 2);
  CHECK(nk.n == std::vector<BigInt>{3, 5});
  auto hist_c = count_direct(dense(5, {4})).second;
  CHECK(nk_from_histogram(hist_c, 1).n == std::vector<BigInt>{5});
}

TEST_CASE("hypersurface points") {
  auto f3 = make_field(3, 1);
  Evaluator sq(dense(3, {0, 0, 1}));
  CHECK(oracle::hypersurface_points({0, 0, 1}, 3, 2) == 19);
  auto c = count_hypersurface_points(sq, f3, 2);
  CHECK(c.points == 19);
  CHECK(count_hypersurface_points(sq, f3, 2, HypersurfaceMode::Literal).points == 19);
  CHECK(nk_from_hypersurface(c, 3) == 5);
  Evaluator id(dense(3, {0, 1}));
  auto ci = count_hypersurface_points(id, f3, 2);
  CHECK(ci.points == 15);
  CHECK(nk_from_hypersurface(ci, 3) == 3);
  Evaluator cst(dense(3, {2}));
  auto cc = count_hypersurface_points(cst, f3, 2);
  CHECK(cc.points == 27);
  CHECK(nk_from_hypersurface(cc, 3) == 9);
  CHECK_THROWS_AS(nk_from_hypersurface({2, BigInt(20)}, 3), Error);
}

TEST_CASE("hypersurface analytic matches literal enumeration") {
  std::mt19937_64 rng(7);
  for (std::uint64_t p : {3u, 5u}) {
    auto f = make_field(p, 1);
    for (unsigned k : {2u, 3u}) {
      for (int trial = 0; trial < 5; ++trial) {
        auto c = random_coeffs(rng, p, 1 + rng() % (p - 1));
        Evaluator ev(dense(p, c));
        auto want = oracle::hypersurface_points(c, p, k);
        CHECK(count_hypersurface_points(ev, f, k).points == want);
        CHECK(nk_brute(ev, f, k) == oracle::equal_tuples(c, p, k));
      }
    }
  }
}

TEST_CASE("symmetric method") {
  auto sq = dense(3, {0, 0, 1});
  CHECK(count_symmetric(sq, NkSource::Histogram).cardinality == 2);
  CHECK(count_symmetric(sq, NkSource::Hypersurface).cardinality == 2);
  CHECK(count_symmetric(sq, NkSource::Brute).cardinality == 2);
  CHECK(count_symmetric(dense(7, {0, 0, 0, 1}), NkSource::Histogram).cardinality == 3);
  CHECK(count_symmetric(dense(11, {0, 1}), NkSource::Histogram).cardinality == 11);
  CHECK(count_symmetric(dense(5, {3}), NkSource::Histogram).cardinality == 1);
}

TEST_CASE("three methods agree with the oracle on random prime-field inputs") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto c = random_coeffs(rng, p, 1 + rng() % 6);
      auto f = dense(p, c);
      auto want = oracle::value_set_size(c, p);
      CHECK(count_direct(f).first.cardinality == want);
      CHECK(count_codomain(std::get<DensePoly>(f)).cardinality == want);
      CHECK(count_symmetric(f, NkSource::Histogram).cardinality == want);
    }
  }
}

TEST_CASE("histogram is independent of worker count") {
  auto f = make_field(3, 7);
  SparsePoly g(f, {{FieldElement{5}, BigInt(13)}, {FieldElement{9}, BigInt(4)}, {f->one(), BigInt(0)}});
  auto h1 = count_direct(PolyInput{g}, 1).second;
  auto h5 = count_direct(PolyInput{g}, 5).second;
  CHECK(h1.entries == h5.entries);
  CHECK(h1.total() == f->order());
}

TEST_CASE("permutation test") {
  CHECK(is_permutation(monomial(5, 1, 3)));
  CHECK_FALSE(is_permutation(monomial(7, 1, 3)));
  CHECK(is_permutation(monomial(5, 1, 1)));
  CHECK(is_permutation(monomial(2, 3, 1)));
  for (auto method : {CountMethod::Direct, CountMethod::Codomain, CountMethod::Symmetric}) {
    CHECK(is_permutation(monomial(5, 1, 3), method));
    CHECK_FALSE(is_permutation(monomial(7, 1, 3), method));
  }
}

TEST_CASE("trivial bounds") {
  CHECK(within_trivial_bounds(2, 3, 2));
  CHECK_FALSE(within_trivial_bounds(1, 3, 2));
  CHECK_FALSE(within_trivial_bounds(4, 3, 2));
  CHECK(within_trivial_bounds(3, 7, 3));
}
