#include "valueset/polyrep.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace valueset {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 n) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % n);
}

u64 powmod(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

void require_same_field(const Field& a, const Field& b) {
  if (&a != &b && !a.same_as(b)) throw Error(ErrorKind::FieldMismatch, "operands live in different fields");
}

// exponent e >= 1 reduced to [1, q-1]; 0 stays 0
u64 reduce_exp(const BigInt& e, u64 q) {
  if (sgn(e) == 0) return 0;
  return 1 + big_mod_u64(e - 1, q - 1);
}

// C(n, k) mod p by Lucas' theorem, with factorial tables covering digits < min(n+1, p).
class BinomialModP {
 public:
  BinomialModP(u64 n, u64 p) : p_(p) {
    const u64 limit = std::min<u64>(n, p - 1);
    fact_.resize(limit + 1);
    inv_fact_.resize(limit + 1);
    fact_[0] = 1;
    for (u64 i = 1; i <= limit; ++i) fact_[i] = mulmod(fact_[i - 1], i % p, p);
    inv_fact_[limit] = powmod(fact_[limit], p - 2, p);
    for (u64 i = limit; i > 0; --i) inv_fact_[i - 1] = mulmod(inv_fact_[i], i % p, p);
  }

  u64 operator()(u64 n, u64 k) const {
    u64 r = 1;
    while (n || k) {
      const u64 nd = n % p_, kd = k % p_;
      if (kd > nd) return 0;
      r = mulmod(r, mulmod(fact_[nd], mulmod(inv_fact_[kd], inv_fact_[nd - kd], p_), p_), p_);
      n /= p_;
      k /= p_;
    }
    return r;
  }

 private:
  u64 p_;
  std::vector<u64> fact_;
  std::vector<u64> inv_fact_;
};

}  // namespace

// --- Degree ---------------------------------------------------------------------

const BigInt& Degree::value() const {
  if (!finite_) throw Error(ErrorKind::InvalidArgument, "degree of the zero polynomial has no value");
  return value_;
}

Degree Degree::max(const Degree& a, const Degree& b) { return a < b ? b : a; }

Degree Degree::sum(const Degree& a, const Degree& b) {
  if (!a.finite_ || !b.finite_) return neg_infinity();
  return Degree(a.value_ + b.value_);
}

// --- representations ----------------------------------------------------------

DensePoly::DensePoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (!field_->contains(c)) throw Error(ErrorKind::FieldMismatch, "coefficient outside the field");
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DensePoly DensePoly::monomial(FieldPtr field, std::size_t k, FieldElement c) {
  std::vector<FieldElement> v(k + 1);
  v[k] = c;
  return DensePoly(std::move(field), std::move(v));
}

Degree DensePoly::degree() const {
  return coeffs_.empty() ? Degree::neg_infinity() : Degree::of(coeffs_.size() - 1);
}

bool operator==(const DensePoly& a, const DensePoly& b) {
  return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
}

SparsePoly::SparsePoly(FieldPtr field, std::vector<SparseTerm> terms) : field_(std::move(field)) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const SparseTerm& x, const SparseTerm& y) { return x.exp < y.exp; });
  for (auto& t : terms) {
    if (!field_->contains(t.coeff)) throw Error(ErrorKind::FieldMismatch, "coefficient outside the field");
    if (sgn(t.exp) < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    if (!terms_.empty() && terms_.back().exp == t.exp) {
      terms_.back().coeff = field_->add(terms_.back().coeff, t.coeff);
      if (terms_.back().coeff.is_zero()) terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

Degree SparsePoly::degree() const {
  return terms_.empty() ? Degree::neg_infinity() : Degree(terms_.back().exp);
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
  return a.field_->same_as(*b.field_) && a.terms_ == b.terms_;
}

SparseShiftPoly::SparseShiftPoly(FieldPtr field, std::vector<ShiftTerm> terms, FieldElement constant)
    : field_(std::move(field)), constant_(constant) {
  if (!field_->contains(constant_)) throw Error(ErrorKind::FieldMismatch, "constant outside the field");
  for (auto& t : terms) {
    if (!field_->contains(t.a) || !field_->contains(t.b))
      throw Error(ErrorKind::FieldMismatch, "shift term outside the field");
    if (sgn(t.e) < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    if (!t.a.is_zero()) terms_.push_back(std::move(t));
  }
}

bool operator==(const SparseShiftPoly& a, const SparseShiftPoly& b) {
  return a.field_->same_as(*b.field_) && a.terms_ == b.terms_ && a.constant_ == b.constant_;
}

Slp::Slp(FieldPtr field, SlpMode mode, std::vector<SlpInstr> instrs, std::uint32_t output)
    : field_(std::move(field)), mode_(mode), instrs_(std::move(instrs)), output_(output) {
  if (instrs_.empty()) throw Error(ErrorKind::InvalidArgument, "empty straight-line program");
  if (output_ >= instrs_.size()) throw Error(ErrorKind::InvalidArgument, "output register out of range");
  for (std::size_t i = 0; i < instrs_.size(); ++i) {
    auto& ins = instrs_[i];
    const bool binary = ins.op == SlpOp::Add || ins.op == SlpOp::Sub || ins.op == SlpOp::Mul;
    if (binary && (ins.lhs >= i || ins.rhs >= i))
      throw Error(ErrorKind::InvalidArgument,
                  "instruction " + std::to_string(i + 1) + " reads a register that is not yet defined");
    if (ins.op == SlpOp::Const) ins.constant %= field_->p();
    if (ins.op == SlpOp::Gen && field_->m() == 1 && mode_ == SlpMode::Strict)
      throw Error(ErrorKind::InvalidArgument, "gen is only meaningful over extension fields");
    if (mode_ == SlpMode::Strict) {
      const SlpOp first = field_->m() == 1 ? SlpOp::One : SlpOp::Gen;
      const bool ok = i == 0 ? ins.op == first : i == 1 ? ins.op == SlpOp::X : binary;
      if (!ok)
        throw Error(ErrorKind::InvalidArgument,
                    "strict program violates the one/gen, x, then add/sub/mul shape at instruction " +
                        std::to_string(i + 1));
    }
  }
  if (mode_ == SlpMode::Strict && instrs_.size() < 2)
    throw Error(ErrorKind::InvalidArgument, "strict program needs the two initial registers");
}

bool operator==(const Slp& a, const Slp& b) {
  return a.field_->same_as(*b.field_) && a.mode_ == b.mode_ && a.instrs_ == b.instrs_ &&
         a.output_ == b.output_;
}

std::uint32_t SlpBuilder::push(SlpInstr instr) {
  instrs_.push_back(instr);
  return static_cast<std::uint32_t>(instrs_.size() - 1);
}

std::uint32_t SlpBuilder::pow(std::uint32_t r, const BigInt& e) {
  if (sgn(e) <= 0) throw Error(ErrorKind::InvalidArgument, "SLP power needs a positive exponent");
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  std::uint32_t acc = r;
  for (std::size_t i = bits - 1; i-- > 0;) {
    acc = mul(acc, acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = mul(acc, r);
  }
  return acc;
}

Slp SlpBuilder::finish(std::uint32_t output, SlpMode mode) && {
  return Slp(std::move(field_), mode, std::move(instrs_), output);
}

const FieldPtr& field_ptr(const PolyInput& f) {
  return std::visit([](const auto& v) -> const FieldPtr& { return v.field_ptr(); }, f);
}

// --- evaluation -------------------------------------------------------------------

Evaluator::Evaluator(const PolyInput& f) : field_(field_ptr(f)) {
  const u64 q = field_->order();
  if (const auto* d = std::get_if<DensePoly>(&f)) {
    form_ = Dense{d->coeffs()};
  } else if (const auto* s = std::get_if<SparsePoly>(&f)) {
    Terms t{{}, FieldElement{}, false};
    for (const auto& term : s->terms()) t.terms.push_back({term.coeff, {}, reduce_exp(term.exp, q)});
    form_ = std::move(t);
  } else if (const auto* sh = std::get_if<SparseShiftPoly>(&f)) {
    Terms t{{}, sh->constant(), true};
    for (const auto& term : sh->terms()) t.terms.push_back({term.a, term.b, reduce_exp(term.e, q)});
    form_ = std::move(t);
  } else {
    form_ = std::get<Slp>(f);
  }
}

FieldElement Evaluator::operator()(FieldElement x) const {
  const Field& F = *field_;
  if (!F.contains(x)) throw Error(ErrorKind::FieldMismatch, "point outside the field");
  if (const auto* d = std::get_if<Dense>(&form_)) {
    FieldElement acc{};
    for (std::size_t i = d->coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), d->coeffs[i]);
    return acc;
  }
  if (const auto* t = std::get_if<Terms>(&form_)) {
    FieldElement acc = t->constant;
    for (const auto& term : t->terms) {
      const FieldElement base = t->shifted ? F.add(x, term.shift) : x;
      acc = F.add(acc, F.mul(term.coeff, F.pow(base, term.exp)));
    }
    return acc;
  }
  const auto& slp = std::get<Slp>(form_);
  std::vector<FieldElement> reg(slp.output() + 1);
  const auto& code = slp.instrs();
  for (std::size_t i = 0; i <= slp.output(); ++i) {
    const auto& ins = code[i];
    switch (ins.op) {
      case SlpOp::One: reg[i] = F.one(); break;
      case SlpOp::Gen: reg[i] = F.generator(); break;
      case SlpOp::X: reg[i] = x; break;
      case SlpOp::Const: reg[i] = F.from_int(static_cast<std::int64_t>(ins.constant % F.p())); break;
      case SlpOp::Add: reg[i] = F.add(reg[ins.lhs], reg[ins.rhs]); break;
      case SlpOp::Sub: reg[i] = F.sub(reg[ins.lhs], reg[ins.rhs]); break;
      case SlpOp::Mul: reg[i] = F.mul(reg[ins.lhs], reg[ins.rhs]); break;
    }
  }
  return reg[slp.output()];
}

FieldElement evaluate(const PolyInput& f, FieldElement x) { return Evaluator(f)(x); }

FieldElement evaluate(const DensePoly& f, FieldElement x) {
  const Field& F = f.field();
  FieldElement acc{};
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = F.add(F.mul(acc, x), f.coeffs()[i]);
  return acc;
}

// --- degrees ---------------------------------------------------------------------

DegreeBound degree_bound(const PolyInput& f) {
  if (const auto* d = std::get_if<DensePoly>(&f)) return {d->degree(), true};
  if (const auto* s = std::get_if<SparsePoly>(&f)) return {s->degree(), true};
  if (const auto* sh = std::get_if<SparseShiftPoly>(&f)) {
    const Field& F = sh->field();
    if (sh->terms().empty())
      return {sh->constant().is_zero() ? Degree::neg_infinity() : Degree::of(0), true};
    BigInt top = sh->terms().front().e;
    for (const auto& t : sh->terms()) top = std::max(top, t.e);
    FieldElement lead{};
    for (const auto& t : sh->terms())
      if (t.e == top) lead = F.add(lead, t.a);
    if (sgn(top) == 0) {
      // every term is the constant a_i
      const FieldElement c = F.add(lead, sh->constant());
      return {c.is_zero() ? Degree::neg_infinity() : Degree::of(0), true};
    }
    return {Degree(top), !lead.is_zero()};
  }

  const auto& slp = std::get<Slp>(f);
  const Field& F = slp.field();
  struct Reg {
    Degree deg;
    bool exact;
    FieldElement lc;
  };
  std::vector<Reg> regs;
  regs.reserve(slp.instrs().size());
  for (const auto& ins : slp.instrs()) {
    switch (ins.op) {
      case SlpOp::One: regs.push_back({Degree::of(0), true, F.one()}); break;
      case SlpOp::Gen: regs.push_back({Degree::of(0), true, F.generator()}); break;
      case SlpOp::X: regs.push_back({Degree::of(1), true, F.one()}); break;
      case SlpOp::Const: {
        const FieldElement c = F.from_int(static_cast<std::int64_t>(ins.constant));
        regs.push_back(c.is_zero() ? Reg{Degree::neg_infinity(), true, c} : Reg{Degree::of(0), true, c});
        break;
      }
      case SlpOp::Mul: {
        const Reg a = regs[ins.lhs], b = regs[ins.rhs];
        if (a.deg.is_neg_infinity() || b.deg.is_neg_infinity()) {
          regs.push_back({Degree::neg_infinity(), true, {}});
        } else {
          regs.push_back({Degree::sum(a.deg, b.deg), a.exact && b.exact, F.mul(a.lc, b.lc)});
        }
        break;
      }
      case SlpOp::Add:
      case SlpOp::Sub: {
        const bool minus = ins.op == SlpOp::Sub;
        const Reg a = regs[ins.lhs];
        Reg b = regs[ins.rhs];
        if (minus) b.lc = F.neg(b.lc);
        if (a.deg.is_neg_infinity()) {
          regs.push_back(b);
        } else if (b.deg.is_neg_infinity()) {
          regs.push_back(a);
        } else if (a.deg < b.deg) {
          regs.push_back(b);
        } else if (b.deg < a.deg) {
          regs.push_back(a);
        } else {
          const FieldElement s = F.add(a.lc, b.lc);
          regs.push_back({a.deg, a.exact && b.exact && !s.is_zero(), s});
        }
        break;
      }
    }
  }
  const Reg& out = regs[slp.output()];
  return {out.deg, out.exact};
}

// --- exponent reduction ----------------------------------------------------------

SparsePoly reduce_exponents(const SparsePoly& f) {
  const u64 q = f.field().order();
  std::vector<SparseTerm> terms;
  terms.reserve(f.terms().size());
  for (const auto& t : f.terms()) terms.push_back({t.coeff, big_from_u64(reduce_exp(t.exp, q))});
  return SparsePoly(f.field_ptr(), std::move(terms));
}

DensePoly reduce_dense(const DensePoly& f) {
  const u64 q = f.field().order();
  if (f.coeffs().size() <= q) return f;
  const Field& F = f.field();
  std::vector<FieldElement> out(f.coeffs().begin(), f.coeffs().begin() + static_cast<std::ptrdiff_t>(q));
  for (u64 e = q; e < f.coeffs().size(); ++e) {
    const u64 target = 1 + (e - 1) % (q - 1);
    out[target] = F.add(out[target], f.coeffs()[e]);
  }
  return DensePoly(f.field_ptr(), std::move(out));
}

// --- dense arithmetic ----------------------------------------------------------------

DensePoly add(const DensePoly& a, const DensePoly& b) {
  require_same_field(a.field(), b.field());
  const Field& F = a.field();
  std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.add(a.coeff(i), b.coeff(i));
  return DensePoly(a.field_ptr(), std::move(out));
}

DensePoly sub(const DensePoly& a, const DensePoly& b) {
  require_same_field(a.field(), b.field());
  const Field& F = a.field();
  std::vector<FieldElement> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.sub(a.coeff(i), b.coeff(i));
  return DensePoly(a.field_ptr(), std::move(out));
}

DensePoly mul(const DensePoly& a, const DensePoly& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() || b.is_zero()) return DensePoly::zero(a.field_ptr());
  const Field& F = a.field();
  std::vector<FieldElement> out(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const FieldElement ai = a.coeffs()[i];
    if (ai.is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(ai, b.coeffs()[j]));
  }
  return DensePoly(a.field_ptr(), std::move(out));
}

DensePoly scale(const DensePoly& a, FieldElement c) {
  const Field& F = a.field();
  std::vector<FieldElement> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = F.mul(a.coeffs()[i], c);
  return DensePoly(a.field_ptr(), std::move(out));
}

std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  const Field& F = a.field();
  std::vector<FieldElement> rem = a.coeffs();
  const std::size_t db = b.coeffs().size() - 1;
  if (rem.size() <= db) return {DensePoly::zero(a.field_ptr()), a};
  std::vector<FieldElement> quot(rem.size() - db);
  const FieldElement lead_inv = F.inv(b.leading());
  for (std::size_t k = rem.size(); k-- > db;) {
    const FieldElement c = F.mul(rem[k], lead_inv);
    if (c.is_zero()) continue;
    quot[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = F.sub(rem[k - db + i], F.mul(c, b.coeffs()[i]));
  }
  rem.resize(db);
  return {DensePoly(a.field_ptr(), std::move(quot)), DensePoly(a.field_ptr(), std::move(rem))};
}

DensePoly mod(const DensePoly& a, const DensePoly& b) { return divmod(a, b).second; }

DensePoly powmod(const DensePoly& g, const BigInt& e, const DensePoly& h) {
  if (h.is_zero()) throw Error(ErrorKind::DivisionByZero, "powmod modulo zero");
  if (sgn(e) < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  DensePoly result = mod(DensePoly::constant(h.field_ptr(), h.field().one()), h);
  if (sgn(e) == 0) return result;
  const DensePoly base = mod(g, h);
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(mul(result, result), h);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod(mul(result, base), h);
  }
  return result;
}

DensePoly gcd(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::DivisionByZero, "gcd of two zero polynomials");
  DensePoly x = a, y = b;
  while (!y.is_zero()) {
    DensePoly r = mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return scale(x, x.field().inv(x.leading()));
}

// --- expansion -----------------------------------------------------------------------

namespace {

void require_cap(const Degree& bound, u64 cap) {
  if (!bound.is_neg_infinity() && bound.value() > big_from_u64(cap))
    throw Error(ErrorKind::DegreeCapExceeded,
                "degree bound " + bound.to_string() + " exceeds cap " + std::to_string(cap));
}

DensePoly shift_power(const FieldPtr& field, FieldElement b, u64 e, const BinomialModP& binom) {
  const Field& F = *field;
  std::vector<FieldElement> out(e + 1);
  // (x + b)^e = sum_j C(e, j) b^{e-j} x^j
  FieldElement bpow = F.one();
  for (u64 j = e + 1; j-- > 0;) {
    const u64 c = binom(e, j);
    if (c != 0) out[j] = F.mul(F.from_int(static_cast<std::int64_t>(c)), bpow);
    bpow = F.mul(bpow, b);
  }
  return DensePoly(field, std::move(out));
}

}  // namespace

DensePoly to_dense(const PolyInput& f, std::uint64_t cap) {
  const FieldPtr& field = field_ptr(f);
  const Field& F = *field;
  if (const auto* d = std::get_if<DensePoly>(&f)) {
    require_cap(d->degree(), cap);
    return *d;
  }
  if (const auto* s = std::get_if<SparsePoly>(&f)) {
    require_cap(s->degree(), cap);
    if (s->is_zero()) return DensePoly::zero(field);
    std::vector<FieldElement> out(*big_to_u64(s->terms().back().exp) + 1);
    for (const auto& t : s->terms()) out[*big_to_u64(t.exp)] = t.coeff;
    return DensePoly(field, std::move(out));
  }
  if (const auto* sh = std::get_if<SparseShiftPoly>(&f)) {
    BigInt top = 0;
    for (const auto& t : sh->terms()) top = std::max(top, t.e);
    require_cap(Degree(top), cap);
    const BinomialModP binom(*big_to_u64(top), F.p());
    DensePoly acc = DensePoly::constant(field, sh->constant());
    for (const auto& t : sh->terms())
      acc = add(acc, scale(shift_power(field, t.b, *big_to_u64(t.e), binom), t.a));
    return acc;
  }
  const auto& slp = std::get<Slp>(f);
  require_cap(degree_bound(f).degree, cap);
  std::vector<DensePoly> regs;
  regs.reserve(slp.output() + 1);
  for (std::size_t i = 0; i <= slp.output(); ++i) {
    const auto& ins = slp.instrs()[i];
    switch (ins.op) {
      case SlpOp::One: regs.push_back(DensePoly::constant(field, F.one())); break;
      case SlpOp::Gen: regs.push_back(DensePoly::constant(field, F.generator())); break;
      case SlpOp::X: regs.push_back(DensePoly::monomial(field, 1, F.one())); break;
      case SlpOp::Const:
        regs.push_back(DensePoly::constant(field, F.from_int(static_cast<std::int64_t>(ins.constant))));
        break;
      case SlpOp::Add: regs.push_back(add(regs[ins.lhs], regs[ins.rhs])); break;
      case SlpOp::Sub: regs.push_back(sub(regs[ins.lhs], regs[ins.rhs])); break;
      case SlpOp::Mul: regs.push_back(mul(regs[ins.lhs], regs[ins.rhs])); break;
    }
  }
  return regs[slp.output()];
}

DensePoly interpolate(const FieldPtr& field, const std::vector<FieldElement>& values) {
  const Field& F = *field;
  const u64 q = F.order();
  if (values.size() != q) throw Error(ErrorKind::InvalidArgument, "interpolation needs one value per element");
  // f(x) = sum_a f(a) (1 - (x - a)^{q-1}) and (x - a)^{q-1} = sum_j a^{q-1-j} x^j,
  // so c_0 = f(0) and c_j = -sum_a f(a) a^{q-1-j} for j >= 1.
  std::vector<FieldElement> acc(q);
  for (u64 a = 0; a < q; ++a) {
    if (values[a].is_zero()) continue;
    FieldElement term = values[a];  // f(a) a^{q-1-j}, starting at j = q-1
    for (u64 j = q - 1; j >= 1; --j) {
      acc[j] = F.add(acc[j], term);
      term = F.mul(term, FieldElement{a});
    }
  }
  std::vector<FieldElement> out(q);
  out[0] = values[0];
  for (u64 j = 1; j < q; ++j) out[j] = F.neg(acc[j]);
  return DensePoly(field, std::move(out));
}

DensePoly reduced_representative(const PolyInput& f, std::uint64_t cap, std::uint64_t interpolation_cap) {
  const auto bound = degree_bound(f);
  if (bound.degree.is_neg_infinity() || bound.degree.value() <= big_from_u64(cap)) {
    if (const auto* s = std::get_if<SparsePoly>(&f)) return to_dense(reduce_exponents(*s), cap);
    return reduce_dense(to_dense(f, cap));
  }
  if (const auto* s = std::get_if<SparsePoly>(&f)) {
    SparsePoly r = reduce_exponents(*s);
    if (r.degree().is_neg_infinity() || r.degree().value() <= big_from_u64(cap)) return to_dense(r, cap);
  }
  const FieldPtr& field = field_ptr(f);
  check_enumerable(field->order(), interpolation_cap);
  const Evaluator eval(f);
  std::vector<FieldElement> values(field->order());
  for (auto x : enumerate_range({0, field->order()})) values[x.index()] = eval(x);
  return interpolate(field, values);
}

// --- strict-mode compilation -------------------------------------------------------------

Slp to_strict(const Slp& slp) {
  const FieldPtr& field = slp.field_ptr();
  const Field& F = *field;
  std::vector<SlpInstr> out;
  auto push = [&](SlpOp op, std::uint32_t a, std::uint32_t b) {
    out.push_back({op, a, b, 0});
    return static_cast<std::uint32_t>(out.size() - 1);
  };
  out.push_back({F.m() == 1 ? SlpOp::One : SlpOp::Gen});
  out.push_back({SlpOp::X});
  const std::uint32_t head = 0, x_reg = 1;

  // 1 as a register: the head itself for prime fields, gen^{q-1} otherwise.
  std::uint32_t one_reg = head;
  if (F.m() > 1) {
    const u64 e = F.order() - 1;
    std::uint32_t acc = head;
    for (int i = 62 - __builtin_clzll(e) + 1; i-- > 0;) {
      acc = push(SlpOp::Mul, acc, acc);
      if ((e >> i) & 1) acc = push(SlpOp::Mul, acc, head);
    }
    one_reg = acc;
  }
  std::uint32_t zero_reg = UINT32_MAX;
  auto zero = [&] {
    if (zero_reg == UINT32_MAX) zero_reg = push(SlpOp::Sub, one_reg, one_reg);
    return zero_reg;
  };
  // c * 1 by double-and-add
  auto constant = [&](u64 c) -> std::uint32_t {
    if (c == 0) return zero();
    std::uint32_t acc = one_reg;
    for (int i = 63 - __builtin_clzll(c); i-- > 0;) {
      acc = push(SlpOp::Add, acc, acc);
      if ((c >> i) & 1) acc = push(SlpOp::Add, acc, one_reg);
    }
    return acc;
  };

  std::vector<std::uint32_t> map(slp.instrs().size());
  for (std::size_t i = 0; i < slp.instrs().size(); ++i) {
    const auto& ins = slp.instrs()[i];
    switch (ins.op) {
      case SlpOp::One: map[i] = one_reg; break;
      case SlpOp::Gen: map[i] = F.m() == 1 ? one_reg : head; break;
      case SlpOp::X: map[i] = x_reg; break;
      case SlpOp::Const: map[i] = constant(ins.constant); break;
      case SlpOp::Add: map[i] = push(SlpOp::Add, map[ins.lhs], map[ins.rhs]); break;
      case SlpOp::Sub: map[i] = push(SlpOp::Sub, map[ins.lhs], map[ins.rhs]); break;
      case SlpOp::Mul: map[i] = push(SlpOp::Mul, map[ins.lhs], map[ins.rhs]); break;
    }
  }
  return Slp(field, SlpMode::Strict, std::move(out), map[slp.output()]);
}

}  // namespace valueset
