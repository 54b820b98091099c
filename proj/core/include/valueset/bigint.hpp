#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace valueset {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_from_u64(std::uint64_t v) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
  return r;
}

// nullopt when v is negative or needs more than 64 bits.
inline std::optional<std::uint64_t> big_to_u64(const BigInt& v) {
  if (sgn(v) < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64) return std::nullopt;
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof out, 0, 0, v.get_mpz_t());
  return out;
}

inline std::uint64_t big_mod_u64(const BigInt& v, std::uint64_t modulus) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), big_from_u64(modulus).get_mpz_t());
  return *big_to_u64(r);
}

inline BigInt big_pow(std::uint64_t base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline std::string to_decimal(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  return c.get_str(10);
}

}  // namespace valueset
