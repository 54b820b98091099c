#include "valueset/charsum.hpp"

#include <cmath>

namespace valueset {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p == 2) throw Error(ErrorKind::EvenCharacteristic, "the quadratic character needs an odd prime");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// sign-aware test of t*sqrt(p) > a for rational a
bool t_sqrt_p_exceeds(const Rational& a, unsigned t, std::uint64_t p) {
  if (sgn(a) < 0) return true;
  const Rational lhs = Rational(big_from_u64(t) * big_from_u64(t) * big_from_u64(p));
  return lhs > a * a;
}

}  // namespace

int chi(FieldElement x, const Field& field) {
  if (field.m() != 1) throw Error(ErrorKind::InvalidArgument, "the quadratic character is defined on F_p here");
  require_odd_prime(field.p());
  const FieldElement r = field.pow(x, (field.p() - 1) / 2);
  if (r.is_zero()) return 0;
  return r == field.one() ? 1 : -1;
}

CharacterGadget alpha_poly(std::uint64_t p) {
  require_odd_prime(p);
  CharacterGadget g;
  g.p = p;
  g.field = make_field(p, 1);
  const FieldElement inv2{(p + 1) / 2};
  g.alpha = SparsePoly(g.field, {{inv2, big_from_u64((p - 1) / 2)}, {inv2, big_from_u64(p - 1)}});
  return g;
}

std::vector<std::uint8_t> pattern_map(const CharacterGadget& g, unsigned t, FieldElement x) {
  if (t < 1) throw Error(ErrorKind::InvalidArgument, "pattern length must be at least 1");
  const Evaluator alpha(PolyInput{g.alpha});
  const Field& F = *g.field;
  std::vector<std::uint8_t> bits(t);
  for (unsigned i = 0; i < t; ++i) {
    const FieldElement v = alpha(F.add(x, F.from_int(i)));
    if (v.index() > 1) throw Error(ErrorKind::InternalError, "alpha left {0, 1}");
    bits[i] = static_cast<std::uint8_t>(v.index());
  }
  return bits;
}

std::vector<std::uint8_t> alpha_table(const CharacterGadget& g, unsigned workers) {
  check_enumerable(g.p);
  const Evaluator alpha(PolyInput{g.alpha});
  std::vector<std::uint8_t> table(g.p);
  parallel_ranges(g.p, workers, [&](IndexRange r, std::size_t) {
    for (auto x : enumerate_range(r)) {
      const FieldElement v = alpha(x);
      if (v.index() > 1) throw Error(ErrorKind::InternalError, "alpha left {0, 1}");
      table[x.index()] = static_cast<std::uint8_t>(v.index());
    }
  });
  return table;
}

PatternCoverage coverage(std::uint64_t p, unsigned t, unsigned workers) {
  if (t < 1 || t > 20) throw Error(ErrorKind::InvalidArgument, "pattern length must be in [1, 20]");
  require_odd_prime(p);
  check_enumerable(p);
  const auto g = alpha_poly(p);
  const auto alpha = alpha_table(g, workers);

  const std::size_t patterns = std::size_t{1} << t;
  std::vector<std::vector<std::uint64_t>> partial(range_count(p, workers), std::vector<std::uint64_t>(patterns, 0));
  parallel_ranges(p, workers, [&](IndexRange r, std::size_t slot) {
    for (std::uint64_t x = r.begin; x < r.end; ++x) {
      std::size_t idx = 0;
      for (unsigned i = 0; i < t; ++i) idx |= std::size_t{alpha[(x + i) % p]} << i;
      ++partial[slot][idx];
    }
  });
  PatternCoverage out;
  out.p = p;
  out.t = t;
  out.counts.assign(patterns, 0);
  for (const auto& part : partial)
    for (std::size_t i = 0; i < patterns; ++i) out.counts[i] += part[i];

  const Rational center(big_from_u64(p), BigInt(1) << t);
  const std::uint64_t s = isqrt(p);
  out.weil_low_inner = center - Rational(big_from_u64(t) * (3 + s));
  out.weil_high_inner = center + Rational(big_from_u64(t) * (3 + s));
  out.weil_low_outer = center - Rational(big_from_u64(t) * (4 + s));
  out.weil_high_outer = center + Rational(big_from_u64(t) * (4 + s));
  for (auto* r : {&out.weil_low_inner, &out.weil_high_inner, &out.weil_low_outer, &out.weil_high_outer})
    r->canonicalize();
  return out;
}

bool PatternCoverage::onto() const {
  for (auto c : counts)
    if (c == 0) return false;
  return true;
}

bool PatternCoverage::lower_bound_positive() const {
  // p/2^t - 3t > t sqrt(p)
  const Rational a = Rational(big_from_u64(p), BigInt(1) << t) - Rational(big_from_u64(3 * t));
  return sgn(a) > 0 && a * a > Rational(big_from_u64(t) * t * p);
}

bool PatternCoverage::strictly_inside(std::uint64_t count) const {
  const Rational c(big_from_u64(count));
  const Rational center(big_from_u64(p), BigInt(1) << t);
  // the sandwich settles most cases without squaring
  if (c > weil_low_inner && c < weil_high_inner) return true;
  if (c <= weil_low_outer || c >= weil_high_outer) return false;
  // count > center - 3t - t sqrt(p)  <=>  t sqrt(p) > center - 3t - count
  const bool above = t_sqrt_p_exceeds(center - Rational(big_from_u64(3 * t)) - c, t, p);
  // count < center + 3t + t sqrt(p)  <=>  t sqrt(p) > count - center - 3t
  const bool below = t_sqrt_p_exceeds(c - center - Rational(big_from_u64(3 * t)), t, p);
  return above && below;
}

bool is_onto(std::uint64_t p, unsigned t, unsigned workers) { return coverage(p, t, workers).onto(); }

bool onto_guaranteed(std::uint64_t p, unsigned t) {
  if (3 * t >= 64) return false;
  return (std::uint64_t{1} << (3 * t)) < p;
}

}  // namespace valueset
