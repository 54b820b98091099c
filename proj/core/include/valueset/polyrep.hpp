#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "valueset/bigint.hpp"
#include "valueset/ffield.hpp"

namespace valueset {

// Polynomial degree with a distinct value for the zero polynomial.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  explicit Degree(BigInt value) : finite_(true), value_(std::move(value)) {}
  static Degree of(std::uint64_t v) { return Degree(big_from_u64(v)); }

  bool is_neg_infinity() const { return !finite_; }
  // Requires a finite degree.
  const BigInt& value() const;
  std::string to_string() const { return finite_ ? to_decimal(value_) : "-inf"; }

  static Degree max(const Degree& a, const Degree& b);
  static Degree sum(const Degree& a, const Degree& b);

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend bool operator<(const Degree& a, const Degree& b) {
    if (!a.finite_) return b.finite_;
    return b.finite_ && a.value_ < b.value_;
  }

 private:
  Degree() = default;
  bool finite_ = false;
  BigInt value_;
};

struct DegreeBound {
  Degree degree;
  bool exact;
};

/// Coefficient list, index i holding the coefficient of x^i, trailing zeros trimmed.
class DensePoly {
 public:
  DensePoly() = default;
  DensePoly(FieldPtr field, std::vector<FieldElement> coeffs);

  static DensePoly zero(FieldPtr field) { return DensePoly(std::move(field), {}); }
  static DensePoly constant(FieldPtr field, FieldElement c) { return DensePoly(std::move(field), {c}); }
  // x^k
  static DensePoly monomial(FieldPtr field, std::size_t k, FieldElement c);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const;
  // -1 for the zero polynomial; for loops that already handled that case.
  std::int64_t degree_or_minus_one() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  FieldElement coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : FieldElement{}; }
  FieldElement leading() const { return coeffs_.empty() ? FieldElement{} : coeffs_.back(); }

  friend bool operator==(const DensePoly& a, const DensePoly& b);

 private:
  FieldPtr field_;
  std::vector<FieldElement> coeffs_;
};

struct SparseTerm {
  FieldElement coeff;
  BigInt exp;

  friend bool operator==(const SparseTerm&, const SparseTerm&) = default;
};

/// Nonzero terms only, strictly increasing exponents.
class SparsePoly {
 public:
  SparsePoly() = default;
  // Sorts, merges equal exponents and drops zero coefficients.
  SparsePoly(FieldPtr field, std::vector<SparseTerm> terms);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  const std::vector<SparseTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Degree degree() const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

 private:
  FieldPtr field_;
  std::vector<SparseTerm> terms_;
};

struct ShiftTerm {
  FieldElement a;
  FieldElement b;
  BigInt e;

  friend bool operator==(const ShiftTerm&, const ShiftTerm&) = default;
};

/// sum a_i (x + b_i)^{e_i} + constant. Term order is kept as given; zero a_i dropped.
class SparseShiftPoly {
 public:
  SparseShiftPoly() = default;
  SparseShiftPoly(FieldPtr field, std::vector<ShiftTerm> terms, FieldElement constant = {});

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  const std::vector<ShiftTerm>& terms() const { return terms_; }
  FieldElement constant() const { return constant_; }

  friend bool operator==(const SparseShiftPoly& a, const SparseShiftPoly& b);

 private:
  FieldPtr field_;
  std::vector<ShiftTerm> terms_;
  FieldElement constant_;
};

enum class SlpOp { One, Gen, X, Const, Add, Sub, Mul };
enum class SlpMode { Strict, Extended };

// Operands are 0-based register numbers (register i holds instruction i's result).
struct SlpInstr {
  SlpOp op = SlpOp::One;
  std::uint32_t lhs = 0;
  std::uint32_t rhs = 0;
  std::uint64_t constant = 0;  // CONST only, already reduced mod p

  friend bool operator==(const SlpInstr&, const SlpInstr&) = default;
};

/// Straight-line program. Strict mode is the model with registers 1 = ONE (GEN for
/// extension fields) and 2 = X followed by ADD/SUB/MUL only; extended mode also
/// allows ONE, GEN, X and CONST anywhere.
class Slp {
 public:
  Slp() = default;
  // Validates operand ordering and the strict-mode shape.
  Slp(FieldPtr field, SlpMode mode, std::vector<SlpInstr> instrs, std::uint32_t output);

  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  SlpMode mode() const { return mode_; }
  const std::vector<SlpInstr>& instrs() const { return instrs_; }
  std::uint32_t output() const { return output_; }

  friend bool operator==(const Slp& a, const Slp& b);

 private:
  FieldPtr field_;
  SlpMode mode_ = SlpMode::Extended;
  std::vector<SlpInstr> instrs_;
  std::uint32_t output_ = 0;
};

// Incremental SLP construction in extended mode.
class SlpBuilder {
 public:
  explicit SlpBuilder(FieldPtr field) : field_(std::move(field)) {}

  std::uint32_t one() { return push({SlpOp::One}); }
  std::uint32_t gen() { return push({SlpOp::Gen}); }
  std::uint32_t x() { return push({SlpOp::X}); }
  std::uint32_t constant(std::uint64_t c) { return push({SlpOp::Const, 0, 0, c % field_->p()}); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) { return push({SlpOp::Add, a, b}); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) { return push({SlpOp::Sub, a, b}); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) { return push({SlpOp::Mul, a, b}); }
  // Square-and-multiply chain for r^e; e >= 1.
  std::uint32_t pow(std::uint32_t r, const BigInt& e);

  Slp finish(std::uint32_t output, SlpMode mode = SlpMode::Extended) &&;

 private:
  std::uint32_t push(SlpInstr instr);

  FieldPtr field_;
  std::vector<SlpInstr> instrs_;
};

using PolyInput = std::variant<DensePoly, SparsePoly, SparseShiftPoly, Slp>;

const FieldPtr& field_ptr(const PolyInput& f);
inline const Field& field_of(const PolyInput& f) { return *field_ptr(f); }

/// Pointwise evaluation with exponents pre-reduced through x^q = x. Cheap to copy
/// around by reference; safe to call concurrently.
class Evaluator {
 public:
  explicit Evaluator(const PolyInput& f);

  const Field& field() const { return *field_; }
  FieldElement operator()(FieldElement x) const;

 private:
  struct ReducedTerm {
    FieldElement coeff;
    FieldElement shift;
    std::uint64_t exp;  // 0 means the constant 1, else in [1, q-1]
  };
  struct Dense {
    std::vector<FieldElement> coeffs;
  };
  struct Terms {
    std::vector<ReducedTerm> terms;
    FieldElement constant;
    bool shifted;
  };

  FieldPtr field_;
  std::variant<Dense, Terms, Slp> form_;
};

FieldElement evaluate(const PolyInput& f, FieldElement x);

DegreeBound degree_bound(const PolyInput& f);

// x^e -> x^{1 + (e-1) mod (q-1)} for e >= 1, merging equal exponents.
SparsePoly reduce_exponents(const SparsePoly& f);

// Same reduction applied to a dense polynomial; the result has degree < q.
DensePoly reduce_dense(const DensePoly& f);

DensePoly add(const DensePoly& a, const DensePoly& b);
DensePoly sub(const DensePoly& a, const DensePoly& b);
DensePoly mul(const DensePoly& a, const DensePoly& b);
DensePoly scale(const DensePoly& a, FieldElement c);
// Quotient and remainder; throws DivisionByZero when b is zero.
std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b);
DensePoly mod(const DensePoly& a, const DensePoly& b);
DensePoly powmod(const DensePoly& g, const BigInt& e, const DensePoly& h);
// Monic gcd; throws DivisionByZero when both inputs are zero.
DensePoly gcd(const DensePoly& a, const DensePoly& b);
FieldElement evaluate(const DensePoly& f, FieldElement x);

// Symbolic expansion; DegreeCapExceeded when degree_bound(f) > cap.
DensePoly to_dense(const PolyInput& f, std::uint64_t cap);

// The unique polynomial of degree < q inducing the given function (values indexed by
// canonical element index).
DensePoly interpolate(const FieldPtr& field, const std::vector<FieldElement>& values);

/// Dense polynomial of degree < q inducing the same function as f. Expands
/// symbolically when the degree bound is within cap; otherwise interpolates from
/// all q values, which requires q <= interpolation_cap.
DensePoly reduced_representative(const PolyInput& f, std::uint64_t cap = 1u << 20,
                                 std::uint64_t interpolation_cap = 1u << 12);

// Strict-mode SLP computing the same function: constants are rebuilt from the
// initial register by double-and-add chains (and 1 = gen^{q-1} for extensions).
Slp to_strict(const Slp& slp);

}  // namespace valueset
