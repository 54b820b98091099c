#include "valueset/ffield.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <utility>

namespace valueset {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 powmod(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

// Strong-probable-prime test to base a; n odd, n > 2.
bool sprp(u64 n, u64 a) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// --- polynomials over F_p, used before a Field exists -------------------------

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

u64 inv_mod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Remainder of a modulo the nonzero polynomial b.
PrimePoly poly_rem(PrimePoly a, const PrimePoly& b, u64 p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const u64 lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const u64 c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  return poly_rem(std::move(r), f, p);
}

PrimePoly poly_powmod(PrimePoly base, u64 e, const PrimePoly& f, u64 p) {
  PrimePoly r = poly_rem({1}, f, p);
  base = poly_rem(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PrimePoly poly_sub(PrimePoly a, const PrimePoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

bool checked_pow(u64 p, unsigned m, u64& out) {
  u128 q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q >= (u128{1} << 63)) return false;
  }
  out = static_cast<u64>(q);
  return true;
}

}  // namespace

// --- primality ---------------------------------------------------------------

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 w : kWitnesses) {
    if (n == w) return true;
    if (n % w == 0) return false;
  }
  for (u64 w : kWitnesses)
    if (!sprp(n, w)) return false;
  return true;
}

bool is_prime(const BigInt& n) {
  if (auto small = big_to_u64(n)) return is_prime(*small);
  if (sgn(n) <= 0 || mpz_even_p(n.get_mpz_t())) return false;
  std::mt19937_64 gen(0x5eed5eedULL);
  const BigInt n1 = n - 1;
  BigInt d = n1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt x;
  for (int round = 0; round < 64; ++round) {
    // base in [2, n - 2]; n exceeds 2^64 so a 64-bit draw plus 2 always fits
    BigInt a = big_from_u64(gen() % (~u64{0} - 3)) + 2;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == n1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// --- irreducibility ----------------------------------------------------------

bool is_irreducible(std::span<const std::uint64_t> poly, std::uint64_t p) {
  PrimePoly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) throw Error(ErrorKind::InvalidArgument, "irreducibility needs degree >= 1");
  if (f.back() != 1) throw Error(ErrorKind::NotMonic, "polynomial is not monic");
  for (u64 c : f)
    if (c >= p) throw Error(ErrorKind::FieldMismatch, "coefficient out of range for F_p");
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return true;

  const PrimePoly x = {0, 1};
  // frob[k] = x^{p^k} mod f
  std::vector<PrimePoly> frob(m + 1);
  frob[0] = poly_rem(x, f, p);
  for (unsigned k = 1; k <= m; ++k) frob[k] = poly_powmod(frob[k - 1], p, f, p);

  if (poly_sub(frob[m], frob[0], p) != PrimePoly{}) return false;
  for (u64 l : prime_factors(m)) {
    PrimePoly g = poly_gcd(f, poly_sub(frob[m / l], frob[0], p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

// --- field construction --------------------------------------------------------

void check_enumerable(std::uint64_t count, std::uint64_t cap) {
  if (count > cap)
    throw Error(ErrorKind::OrderTooLarge,
                std::to_string(count) + " points exceed the enumeration cap " + std::to_string(cap));
}

void check_enumerable(const BigInt& count, std::uint64_t cap) {
  auto small = big_to_u64(count);
  if (!small || *small > cap)
    throw Error(ErrorKind::OrderTooLarge,
                to_decimal(count) + " points exceed the enumeration cap " + std::to_string(cap));
}

FieldPtr make_field(std::uint64_t p, unsigned m, SizePolicy policy, std::uint64_t cap) {
  if (p < 2 || m < 1) throw Error(ErrorKind::InvalidArgument, "field needs p >= 2 and m >= 1");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  u64 q = 0;
  if (!checked_pow(p, m, q)) throw Error(ErrorKind::OrderTooLarge, "p^m does not fit in 63 bits");
  if (policy == SizePolicy::Enumerable) check_enumerable(q, cap);
  if (m == 1) return FieldPtr(new Field(p, {}));

  // Candidates x^m + c_{m-1} x^{m-1} + ... + c_0 in increasing index of (c_0..c_{m-1}).
  u64 lower_count = q;
  for (u64 index = 0; index < lower_count; ++index) {
    PrimePoly cand(m + 1, 0);
    u64 rest = index;
    for (unsigned i = 0; i < m; ++i) {
      cand[i] = rest % p;
      rest /= p;
    }
    cand[m] = 1;
    if (cand[0] == 0) continue;
    if (is_irreducible(cand, p)) return FieldPtr(new Field(p, std::move(cand)));
  }
  throw Error(ErrorKind::InternalError, "no irreducible polynomial found");
}

FieldPtr make_field_with_modulus(std::uint64_t p, PrimePoly modulus, SizePolicy policy,
                                 std::uint64_t cap) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  trim(modulus);
  if (modulus.size() <= 2) return make_field(p, 1, policy, cap);
  const unsigned m = static_cast<unsigned>(modulus.size() - 1);
  u64 q = 0;
  if (!checked_pow(p, m, q)) throw Error(ErrorKind::OrderTooLarge, "p^m does not fit in 63 bits");
  if (policy == SizePolicy::Enumerable) check_enumerable(q, cap);
  if (!is_irreducible(modulus, p))
    throw Error(ErrorKind::NotIrreducible, "modulus is reducible over F_" + std::to_string(p));
  return FieldPtr(new Field(p, std::move(modulus)));
}

Field::Field(std::uint64_t p, PrimePoly modulus)
    : p_(p), m_(modulus.empty() ? 1 : static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  checked_pow(p_, m_, q_);
  if (m_ > 1 && q_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
  const u64 order = q_ - 1;
  const auto factors = prime_factors(order);
  u64 gen = 0;
  for (u64 g = 2; g < q_; ++g) {
    bool primitive = true;
    for (u64 r : factors) {
      if (pow_square_multiply(g, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  if (gen == 0) throw Error(ErrorKind::InternalError, "no primitive element found");
  // mul_poly is used while the tables are being filled, so fill them in locals first.
  std::vector<std::uint32_t> log(q_, 0), exp(2 * order, 0);
  u64 cur = 1;
  for (u64 i = 0; i < order; ++i) {
    exp[i] = static_cast<std::uint32_t>(cur);
    exp[i + order] = static_cast<std::uint32_t>(cur);
    log[cur] = static_cast<std::uint32_t>(i);
    cur = mul_poly(cur, gen);
  }
  log_ = std::move(log);
  exp_ = std::move(exp);
}

bool Field::same_as(const Field& other) const {
  return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

FieldElement Field::element(std::uint64_t index) const {
  if (index >= q_)
    throw Error(ErrorKind::FieldMismatch,
                "index " + std::to_string(index) + " outside a field of order " + std::to_string(q_));
  return FieldElement{index};
}

FieldElement Field::from_int(std::int64_t v) const {
  const auto sp = static_cast<std::int64_t>(p_);
  std::int64_t r = v % sp;
  if (r < 0) r += sp;
  return FieldElement{static_cast<u64>(r)};
}

FieldElement Field::from_big(const BigInt& v) const { return FieldElement{big_mod_u64(v, p_)}; }

FieldElement Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  if (coeffs.size() > m_) throw Error(ErrorKind::FieldMismatch, "too many coefficients for this field");
  u64 index = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw Error(ErrorKind::FieldMismatch, "coefficient not below p");
    index = index * p_ + coeffs[i];
  }
  return FieldElement{index};
}

std::vector<std::uint64_t> Field::coeffs(FieldElement e) const {
  std::vector<u64> out(m_, 0);
  u64 rest = e.index();
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = rest % p_;
    rest /= p_;
  }
  return out;
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  if (m_ == 1) {
    u64 s = a.index() + b.index();
    return FieldElement{s >= p_ ? s - p_ : s};
  }
  if (p_ == 2) return FieldElement{a.index() ^ b.index()};
  u64 x = a.index(), y = b.index(), out = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    u64 d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    out += d * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return FieldElement{out};
}

FieldElement Field::neg(FieldElement a) const {
  if (m_ == 1) return FieldElement{a.index() == 0 ? 0 : p_ - a.index()};
  if (p_ == 2) return a;
  u64 x = a.index(), out = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const u64 d = x % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    x /= p_;
    place *= p_;
  }
  return FieldElement{out};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

std::uint64_t Field::mul_prime(std::uint64_t a, std::uint64_t b) const {
  if (p_ < (u64{1} << 32)) return a * b % p_;
  return mulmod(a, b, p_);
}

std::uint64_t Field::mul_poly(std::uint64_t a, std::uint64_t b) const {
  // schoolbook product of digit vectors, then reduction by the monic modulus
  std::vector<u64> x(m_), y(m_), r(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    x[i] = a % p_;
    a /= p_;
    y[i] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < m_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j) r[i + j] = (r[i + j] + mul_prime(x[i], y[j])) % p_;
  }
  for (std::size_t k = r.size(); k-- > m_;) {
    const u64 c = r[k];
    if (c == 0) continue;
    r[k] = 0;
    for (unsigned i = 0; i < m_; ++i) {
      r[k - m_ + i] = (r[k - m_ + i] + p_ - mul_prime(c, modulus_[i])) % p_;
    }
  }
  u64 out = 0;
  for (unsigned i = m_; i-- > 0;) out = out * p_ + r[i];
  return out;
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  if (m_ == 1) return FieldElement{mul_prime(a.index(), b.index())};
  if (a.is_zero() || b.is_zero()) return zero();
  if (!log_.empty()) return FieldElement{exp_[log_[a.index()] + log_[b.index()]]};
  return FieldElement{mul_poly(a.index(), b.index())};
}

std::uint64_t Field::pow_square_multiply(std::uint64_t a, std::uint64_t e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(FieldElement{r}, FieldElement{a}).index();
    a = mul(FieldElement{a}, FieldElement{a}).index();
    e >>= 1;
  }
  return r;
}

FieldElement Field::pow(FieldElement base, std::uint64_t e) const {
  if (e == 0) return one();
  if (base.is_zero()) return zero();
  e %= (q_ - 1);
  return FieldElement{pow_square_multiply(base.index(), e)};
}

FieldElement Field::pow(FieldElement base, const BigInt& e) const {
  if (sgn(e) < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  if (sgn(e) == 0) return one();
  if (base.is_zero()) return zero();
  return pow(base, big_mod_u64(e, q_ - 1));
}

FieldElement Field::inv(FieldElement a) const {
  if (a.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (!log_.empty()) return FieldElement{exp_[(q_ - 1 - log_[a.index()]) % (q_ - 1)]};
  return pow(a, q_ - 2);
}

// --- linear systems -----------------------------------------------------------

std::vector<FieldElement> solve_linear(const Field& field, Matrix a, std::vector<FieldElement> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorKind::InvalidArgument, "rhs length differs from matrix size");
  for (const auto& row : a)
    if (row.size() != n) throw Error(ErrorKind::InvalidArgument, "matrix is not square");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorKind::SingularMatrix, "no pivot in column " + std::to_string(col));
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const FieldElement scale = field.inv(a[col][col]);
    for (std::size_t j = col; j < n; ++j) a[col][j] = field.mul(a[col][j], scale);
    b[col] = field.mul(b[col], scale);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const FieldElement factor = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] = field.sub(a[r][j], field.mul(factor, a[col][j]));
      b[r] = field.sub(b[r], field.mul(factor, b[col]));
    }
  }
  return b;
}

}  // namespace valueset
