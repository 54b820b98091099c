#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "valueset/bigint.hpp"
#include "valueset/ffield.hpp"
#include "valueset/parallel.hpp"
#include "valueset/polyrep.hpp"

namespace valueset {

// 3-CNF; literal +v / -v refers to variable v in [1, n].
struct Cnf3 {
  unsigned n = 0;
  std::vector<std::array<int, 3>> clauses;
  std::size_t padded = 0;  // clauses that were shorter than 3 in the source

  std::size_t m() const { return clauses.size(); }
  bool satisfied_by(std::uint64_t assignment) const;  // bit v-1 is variable v
};

// DIMACS CNF. Short clauses are padded by repeating their last literal.
Cnf3 parse_dimacs(std::string_view text);
std::string serialize_dimacs(const Cnf3& cnf);

// Uniform literals over n variables; deterministic for a given generator state.
Cnf3 random_cnf3(unsigned n, unsigned m, std::mt19937_64& rng);

/// Boolean polynomial in algebraic normal form: XOR of monomials, each monomial an
/// AND of the variables in its bit mask (mask 0 is the constant 1).
class Anf {
 public:
  Anf() = default;
  explicit Anf(std::vector<std::uint64_t> monomials);

  static Anf constant(bool bit) { return bit ? Anf({0}) : Anf(); }
  static Anf variable(unsigned v) { return Anf({std::uint64_t{1} << v}); }

  const std::vector<std::uint64_t>& monomials() const { return monos_; }
  std::uint64_t support() const;
  unsigned degree() const;
  bool eval(std::uint64_t input) const;

  friend Anf operator^(const Anf& a, const Anf& b);
  friend Anf operator*(const Anf& a, const Anf& b);
  friend bool operator==(const Anf&, const Anf&) = default;

 private:
  std::vector<std::uint64_t> monos_;  // sorted, no repeats
};

// Inputs x_1..x_n, y_1..y_m are bits 0..n+m-1; outputs z_1..z_n, w_1..w_m likewise.
struct Nc05Circuit {
  unsigned n = 0;
  unsigned m = 0;
  std::vector<Anf> outputs;

  unsigned width() const { return n + m; }
  std::uint64_t apply(std::uint64_t input) const;
};

// Clause indicator 1 + (1 + l1)(1 + l2)(1 + l3) over F_2.
Anf clause_indicator(const std::array<int, 3>& clause);

// z_i = x_i and w_i = y_i + C_i * y_{(i mod m)+1}.
Nc05Circuit build_circuit(const Cnf3& cnf);

BigInt circuit_image_count(const Nc05Circuit& c, unsigned workers = default_workers());
BigInt sat_count(const Cnf3& cnf, unsigned workers = default_workers());

// 2^{n+m} - 2^{m-1} M
BigInt durand_formula(unsigned n, unsigned m, const BigInt& sat);

/// The circuit as one sparse polynomial over F_{2^{n+m}} in the power basis of the
/// field's modulus.
struct GammaConstruction {
  FieldPtr field;
  std::vector<FieldElement> basis;     // omega_i = g^{i-1}
  std::vector<SparsePoly> extraction;  // L_i(omega_k) = delta_ik, F_2-linear
  SparsePoly gamma;
};

GammaConstruction build_gamma(const Nc05Circuit& c);

// Coordinate vector of u in the construction's basis, bit i-1 for omega_i.
std::uint64_t coordinates(const GammaConstruction& g, FieldElement u);

struct DurandReport {
  BigInt gamma_value_set;
  BigInt circuit_image;
  BigInt formula;
  BigInt sat;
  bool fidelity = false;  // coordinates(gamma(u)) = circuit(coordinates(u)) for all u
  bool agree = false;
};

DurandReport gamma_vs_durand_check(const Cnf3& cnf, unsigned workers = default_workers());

}  // namespace valueset
