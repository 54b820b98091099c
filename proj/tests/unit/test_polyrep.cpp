#include <doctest.h>

#include "oracles/oracles.hpp"
#include "valueset/polyrep.hpp"

using namespace valueset;

namespace {

std::vector<FieldElement> elems(const Field& f, std::initializer_list<std::int64_t> v) {
  std::vector<FieldElement> out;
  for (auto c : v) out.push_back(f.from_int(c));
  return out;
}

}  // namespace

TEST_CASE("dense normalization and degree") {
  auto f5 = make_field(5, 1);
  DensePoly a(f5, elems(*f5, {1, 0, 1, 0}));
  CHECK(a.coeffs().size() == 3);
  CHECK(a.degree() == Degree::of(2));
  CHECK(DensePoly::zero(f5).degree().is_neg_infinity());
  CHECK(DensePoly::zero(f5).degree().to_string() == "-inf");
  auto b = degree_bound(PolyInput{a});
  CHECK(b.exact);
  CHECK(b.degree == Degree::of(2));
}

TEST_CASE("four representations evaluate the same function") {
  auto f5 = make_field(5, 1);
  DensePoly dense(f5, elems(*f5, {1, 0, 1}));
  SparsePoly sparse(f5, {{f5->one(), BigInt(2)}, {f5->one(), BigInt(0)}});
  SparseShiftPoly shift(f5, {{f5->one(), f5->zero(), BigInt(2)}}, f5->one());
  Slp slp(f5, SlpMode::Strict,
          {{SlpOp::One}, {SlpOp::X}, {SlpOp::Mul, 1, 1}, {SlpOp::Add, 2, 0}}, 3);
  for (auto x : enumerate_field(*f5)) {
    auto want = FieldElement{oracle::eval_dense({1, 0, 1}, x.index(), 5)};
    CHECK(evaluate(PolyInput{dense}, x) == want);
    CHECK(evaluate(PolyInput{sparse}, x) == want);
    CHECK(evaluate(PolyInput{shift}, x) == want);
    CHECK(evaluate(PolyInput{slp}, x) == want);
  }
  CHECK(evaluate(PolyInput{dense}, f5->from_int(2)) == f5->zero());
}

TEST_CASE("alpha over F_67 evaluates to 1 at 1") {
  auto f = make_field(67, 1);
  SparsePoly alpha(f, {{f->from_int(34), BigInt(33)}, {f->from_int(34), BigInt(66)}});
  CHECK(evaluate(PolyInput{alpha}, f->one()) == f->one());
}

TEST_CASE("slp validation") {
  auto f5 = make_field(5, 1);
  CHECK_THROWS_AS(Slp(f5, SlpMode::Extended, {{SlpOp::X}, {SlpOp::Mul, 0, 1}}, 1), Error);
  CHECK_THROWS_AS(Slp(f5, SlpMode::Strict, {{SlpOp::X}, {SlpOp::One}}, 1), Error);
  CHECK_THROWS_AS(
      Slp(f5, SlpMode::Strict, {{SlpOp::One}, {SlpOp::X}, {SlpOp::Const, 0, 0, 3}}, 2), Error);
  auto f4 = make_field(2, 2);
  CHECK_THROWS_AS(Slp(f4, SlpMode::Strict, {{SlpOp::One}, {SlpOp::X}}, 1), Error);
  CHECK_NOTHROW(Slp(f4, SlpMode::Strict, {{SlpOp::Gen}, {SlpOp::X}}, 1));
}

TEST_CASE("degree bounds") {
  auto f5 = make_field(5, 1);
  SlpBuilder b(f5);
  auto r = b.x();
  for (int i = 0; i < 10; ++i) r = b.mul(r, r);
  auto slp = std::move(b).finish(r);
  CHECK(degree_bound(PolyInput{slp}).degree == Degree::of(1024));

  SparseShiftPoly s(f5, {{f5->one(), f5->one(), BigInt(3)}, {f5->from_int(-1), f5->zero(), BigInt(3)}});
  auto sb = degree_bound(PolyInput{s});
  CHECK(sb.degree == Degree::of(3));
  CHECK_FALSE(sb.exact);
  CHECK(to_dense(PolyInput{s}, 100).degree() == Degree::of(2));
}

TEST_CASE("exponent reduction") {
  auto f5 = make_field(5, 1);
  auto r = reduce_exponents(SparsePoly(f5, {{f5->one(), BigInt(5)}}));
  REQUIRE(r.terms().size() == 1);
  CHECK(r.terms()[0].exp == 1);
  auto f67 = make_field(67, 1);
  CHECK(reduce_exponents(SparsePoly(f67, {{f67->one(), BigInt(66)}})).terms()[0].exp == 66);
  CHECK(reduce_exponents(SparsePoly(f67, {{f67->one(), BigInt(67)}})).terms()[0].exp == 1);
  // x^5 + 4x merges to 0 over F_5
  CHECK(reduce_exponents(SparsePoly(f5, {{f5->one(), BigInt(5)}, {f5->from_int(4), BigInt(1)}})).is_zero());
  // huge exponent
  auto huge = reduce_exponents(SparsePoly(f5, {{f5->one(), BigInt("100000000000000000000001")}}));
  CHECK(huge.degree() < Degree::of(5));
}

TEST_CASE("dense arithmetic") {
  auto f7 = make_field(7, 1);
  DensePoly x2m1(f7, elems(*f7, {-1, 0, 1}));
  DensePoly xm1(f7, elems(*f7, {-1, 1}));
  CHECK(gcd(x2m1, xm1) == xm1);
  auto f5 = make_field(5, 1);
  DensePoly x(f5, elems(*f5, {0, 1}));
  DensePoly x2p1(f5, elems(*f5, {1, 0, 1}));
  CHECK(powmod(x, BigInt(5), x2p1) == x);
  DensePoly x3(f5, elems(*f5, {0, 0, 0, 1}));
  CHECK(mod(x3, x).is_zero());
  CHECK_THROWS_AS(divmod(x3, DensePoly::zero(f5)), Error);
  CHECK_THROWS_AS(gcd(DensePoly::zero(f5), DensePoly::zero(f5)), Error);
  auto [q, r] = divmod(x3, x2p1);
  CHECK(add(mul(q, x2p1), r) == x3);
}

TEST_CASE("symbolic expansion") {
  auto f5 = make_field(5, 1);
  SparsePoly s(f5, {{f5->one(), BigInt(2)}, {f5->one(), BigInt(0)}});
  CHECK(to_dense(PolyInput{s}, 100) == DensePoly(f5, elems(*f5, {1, 0, 1})));
  SparseShiftPoly sh(f5, {{f5->one(), f5->one(), BigInt(2)}});
  CHECK(to_dense(PolyInput{sh}, 100) == DensePoly(f5, elems(*f5, {1, 2, 1})));
  SlpBuilder b(f5);
  auto r = b.x();
  for (int i = 0; i < 40; ++i) r = b.mul(r, r);
  auto big = std::move(b).finish(r);
  CHECK_THROWS_AS(to_dense(PolyInput{big}, 1000000), Error);
}

TEST_CASE("interpolation recovers the reduced representative") {
  for (auto [p, m] : {std::pair{5ull, 1u}, {7ull, 1u}, {3ull, 2u}, {2ull, 3u}}) {
    auto f = make_field(p, m);
    std::vector<FieldElement> coeffs;
    for (std::uint64_t i = 0; i < f->order(); ++i) coeffs.push_back(FieldElement{(i * 7 + 3) % f->order()});
    DensePoly g(f, coeffs);
    std::vector<FieldElement> values;
    for (auto x : enumerate_field(*f)) values.push_back(evaluate(g, x));
    CHECK(interpolate(f, values) == reduce_dense(g));
    CHECK(reduced_representative(PolyInput{g}) == reduce_dense(g));
  }
}

TEST_CASE("strict conversion preserves the function") {
  for (auto [p, m] : {std::pair{7ull, 1u}, {2ull, 3u}, {3ull, 2u}}) {
    auto f = make_field(p, m);
    SlpBuilder b(f);
    auto x = b.x();
    auto c = b.constant(p - 1);
    auto g = b.gen();
    auto t = b.add(b.mul(x, c), b.pow(x, BigInt(5)));
    auto out = b.sub(t, g);
    auto slp = std::move(b).finish(out);
    auto strict = to_strict(slp);
    CHECK(strict.mode() == SlpMode::Strict);
    for (auto e : enumerate_field(*f)) CHECK(evaluate(PolyInput{slp}, e) == evaluate(PolyInput{strict}, e));
  }
}

TEST_CASE("extension-field shift polynomial matches dense expansion") {
  auto f9 = make_field(3, 2);
  SparseShiftPoly sh(f9, {{FieldElement{4}, FieldElement{5}, BigInt(7)}, {FieldElement{2}, FieldElement{1}, BigInt(20)}},
                     FieldElement{8});
  auto d = to_dense(PolyInput{sh}, 100);
  for (auto x : enumerate_field(*f9)) CHECK(evaluate(d, x) == evaluate(PolyInput{sh}, x));
}
