#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ranges>
#include <span>
#include <vector>

#include "valueset/bigint.hpp"
#include "valueset/error.hpp"
#include "valueset/parallel.hpp"

namespace valueset {

// Exhaustive operations (enumeration, histograms, brute-force oracles) refuse to
// touch more than this many points unless the caller passes a different cap.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 26;

enum class SizePolicy { Unbounded, Enumerable };

// An element of F_q identified by its canonical index sum(coeffs[i] * p^i).
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint64_t index) : index_(index) {}

  constexpr std::uint64_t index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint64_t index_ = 0;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Dense polynomial over F_p as little-endian coefficients in [0, p).
using PrimePoly = std::vector<std::uint64_t>;

/// F_q with q = p^m < 2^63. Immutable; share through FieldPtr.
///
/// Prime fields use plain modular arithmetic. Extension fields reduce modulo a
/// monic irreducible of degree m; when q is at most kTableLimit multiplication
/// goes through log/antilog tables built from the smallest primitive element.
class Field {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  std::uint64_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t order() const { return q_; }
  BigInt order_big() const { return big_from_u64(q_); }
  // m + 1 coefficients, little-endian; empty for prime fields.
  std::span<const std::uint64_t> modulus() const { return modulus_; }
  bool is_prime_field() const { return m_ == 1; }

  // Same characteristic, degree and modulus.
  bool same_as(const Field& other) const;

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  // The class of the indeterminate in F_p[x]/(modulus); one() for prime fields.
  FieldElement generator() const { return m_ == 1 ? one() : FieldElement{p_}; }

  bool contains(FieldElement e) const { return e.index() < q_; }
  FieldElement element(std::uint64_t index) const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_big(const BigInt& v) const;
  FieldElement from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(FieldElement e) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  // x^0 = 1 for every x, including 0.
  FieldElement pow(FieldElement base, std::uint64_t e) const;
  FieldElement pow(FieldElement base, const BigInt& e) const;

 private:
  friend FieldPtr make_field(std::uint64_t, unsigned, SizePolicy, std::uint64_t);
  friend FieldPtr make_field_with_modulus(std::uint64_t, PrimePoly, SizePolicy, std::uint64_t);

  Field(std::uint64_t p, PrimePoly modulus);

  std::uint64_t mul_prime(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul_poly(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow_square_multiply(std::uint64_t a, std::uint64_t e) const;
  void build_tables();

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  PrimePoly modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Builds F_{p^m}. For m > 1 the modulus is the monic irreducible of degree m with
/// the smallest canonical index of its lower m coefficients.
FieldPtr make_field(std::uint64_t p, unsigned m, SizePolicy policy = SizePolicy::Unbounded,
                    std::uint64_t cap = kEnumerationCap);

/// Builds F_p[x]/(modulus) after checking that modulus is monic and irreducible.
/// A modulus of size <= 2 (degree <= 1) yields the prime field.
FieldPtr make_field_with_modulus(std::uint64_t p, PrimePoly modulus,
                                 SizePolicy policy = SizePolicy::Unbounded,
                                 std::uint64_t cap = kEnumerationCap);

void check_enumerable(std::uint64_t count, std::uint64_t cap = kEnumerationCap);
void check_enumerable(const BigInt& count, std::uint64_t cap = kEnumerationCap);

// All elements of `range` in increasing canonical-index order.
inline auto enumerate_range(IndexRange range) {
  return std::views::iota(range.begin, range.end) |
         std::views::transform([](std::uint64_t i) { return FieldElement{i}; });
}

inline auto enumerate_field(const Field& field, std::uint64_t cap = kEnumerationCap) {
  check_enumerable(field.order(), cap);
  return enumerate_range({0, field.order()});
}

// Deterministic Miller-Rabin with witnesses {2,...,37} below 2^64; above that a
// 64-round test whose bases come from a Mersenne Twister seeded with a constant.
bool is_prime(std::uint64_t n);
bool is_prime(const BigInt& n);

/// Irreducibility over F_p of a monic polynomial of degree >= 1:
/// x^{p^m} = x mod f, and gcd(x^{p^{m/l}} - x, f) = 1 for each prime l | m.
bool is_irreducible(std::span<const std::uint64_t> poly, std::uint64_t p);

using Matrix = std::vector<std::vector<FieldElement>>;

// Gaussian elimination with first-nonzero pivoting.
std::vector<FieldElement> solve_linear(const Field& field, Matrix matrix,
                                       std::vector<FieldElement> rhs);

}  // namespace valueset
