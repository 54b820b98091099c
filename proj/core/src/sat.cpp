#include "valueset/sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "valueset/counting.hpp"

namespace valueset {

namespace {

using u64 = std::uint64_t;

bool literal_value(int lit, u64 assignment) {
  const bool v = (assignment >> (std::abs(lit) - 1)) & 1;
  return lit > 0 ? v : !v;
}

}  // namespace

bool Cnf3::satisfied_by(std::uint64_t assignment) const {
  for (const auto& c : clauses) {
    if (!(literal_value(c[0], assignment) || literal_value(c[1], assignment) || literal_value(c[2], assignment)))
      return false;
  }
  return true;
}

Cnf3 parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t declared = 0;
  Cnf3 cnf;
  std::vector<int> current;
  std::size_t current_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c') continue;
    if (line[first] == '%') break;
    std::istringstream ls(line);
    if (line[first] == 'p') {
      std::string p, fmt;
      long long n = -1, m = -1;
      ls >> p >> fmt >> n >> m;
      if (have_header || fmt != "cnf" || n < 0 || m < 0 || !ls)
        throw SyntaxError(line_no, first + 1, "expected a single 'p cnf <vars> <clauses>' header");
      have_header = true;
      cnf.n = static_cast<unsigned>(n);
      declared = static_cast<std::size_t>(m);
      continue;
    }
    if (!have_header) throw SyntaxError(line_no, first + 1, "clause before the 'p cnf' header");
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      const long v = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') throw SyntaxError(line_no, first + 1, "'" + tok + "' is not a literal");
      if (v == 0) {
        if (current.empty()) throw SyntaxError(line_no, first + 1, "empty clause");
        if (current.size() > 3)
          throw Error(ErrorKind::ClauseTooLong, "line " + std::to_string(current_line) + ": clause has " +
                                                    std::to_string(current.size()) + " literals");
        if (current.size() < 3) ++cnf.padded;
        while (current.size() < 3) current.push_back(current.back());
        cnf.clauses.push_back({current[0], current[1], current[2]});
        current.clear();
        continue;
      }
      if (static_cast<unsigned long>(std::labs(v)) > cnf.n)
        throw SyntaxError(line_no, first + 1, "literal " + tok + " names a variable above n");
      if (current.empty()) current_line = line_no;
      current.push_back(static_cast<int>(v));
    }
  }
  if (!have_header) throw SyntaxError(line_no + 1, 1, "missing 'p cnf' header");
  if (!current.empty()) {
    if (current.size() > 3) throw Error(ErrorKind::ClauseTooLong, "final clause has more than 3 literals");
    throw SyntaxError(line_no, 1, "last clause is not terminated by 0");
  }
  if (cnf.clauses.size() != declared)
    throw SyntaxError(line_no, 1, "header declares " + std::to_string(declared) + " clauses, found " +
                                      std::to_string(cnf.clauses.size()));
  return cnf;
}

std::string serialize_dimacs(const Cnf3& cnf) {
  std::string s = "p cnf " + std::to_string(cnf.n) + " " + std::to_string(cnf.m()) + "\n";
  for (const auto& c : cnf.clauses)
    s += std::to_string(c[0]) + " " + std::to_string(c[1]) + " " + std::to_string(c[2]) + " 0\n";
  return s;
}

Cnf3 random_cnf3(unsigned n, unsigned m, std::mt19937_64& rng) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "random formula needs n >= 1");
  Cnf3 cnf;
  cnf.n = n;
  for (unsigned i = 0; i < m; ++i) {
    std::array<int, 3> c{};
    for (auto& lit : c) {
      const int v = static_cast<int>(rng() % n) + 1;
      lit = (rng() & 1) ? v : -v;
    }
    cnf.clauses.push_back(c);
  }
  return cnf;
}

// --- ANF ---------------------------------------------------------------------------------

Anf::Anf(std::vector<std::uint64_t> monomials) {
  std::sort(monomials.begin(), monomials.end());
  // x + x = 0: keep monomials of odd multiplicity
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) monos_.push_back(monomials[i]);
    i = j;
  }
}

std::uint64_t Anf::support() const {
  u64 s = 0;
  for (u64 mono : monos_) s |= mono;
  return s;
}

unsigned Anf::degree() const {
  unsigned d = 0;
  for (u64 mono : monos_) d = std::max(d, static_cast<unsigned>(__builtin_popcountll(mono)));
  return d;
}

bool Anf::eval(std::uint64_t input) const {
  bool acc = false;
  for (u64 mono : monos_) acc ^= (input & mono) == mono;
  return acc;
}

Anf operator^(const Anf& a, const Anf& b) {
  std::vector<u64> all = a.monos_;
  all.insert(all.end(), b.monos_.begin(), b.monos_.end());
  return Anf(std::move(all));
}

Anf operator*(const Anf& a, const Anf& b) {
  std::vector<u64> all;
  all.reserve(a.monos_.size() * b.monos_.size());
  for (u64 x : a.monos_)
    for (u64 y : b.monos_) all.push_back(x | y);
  return Anf(std::move(all));
}

// --- circuit -----------------------------------------------------------------------------

std::uint64_t Nc05Circuit::apply(std::uint64_t input) const {
  u64 out = 0;
  for (std::size_t i = 0; i < outputs.size(); ++i)
    if (outputs[i].eval(input)) out |= u64{1} << i;
  return out;
}

Anf clause_indicator(const std::array<int, 3>& clause) {
  const Anf one = Anf::constant(true);
  Anf none_true = one;
  for (int lit : clause) {
    const Anf var = Anf::variable(static_cast<unsigned>(std::abs(lit) - 1));
    // 1 + l, with l = x or l = 1 + x
    const Anf negated = lit > 0 ? one ^ var : var;
    none_true = none_true * negated;
  }
  return one ^ none_true;
}

Nc05Circuit build_circuit(const Cnf3& cnf) {
  if (cnf.m() == 0) throw Error(ErrorKind::InvalidArgument, "the circuit needs at least one clause");
  if (cnf.n + cnf.m() > 64) throw Error(ErrorKind::DeskScaleExceeded, "circuit wider than 64 bits");
  Nc05Circuit c;
  c.n = cnf.n;
  c.m = static_cast<unsigned>(cnf.m());
  for (unsigned i = 0; i < c.n; ++i) c.outputs.push_back(Anf::variable(i));
  for (unsigned i = 0; i < c.m; ++i) {
    const Anf y = Anf::variable(c.n + i);
    const Anf y_next = Anf::variable(c.n + (i + 1) % c.m);
    c.outputs.push_back(y ^ (clause_indicator(cnf.clauses[i]) * y_next));
  }
  return c;
}

BigInt circuit_image_count(const Nc05Circuit& c, unsigned workers) {
  if (c.width() > 24) throw Error(ErrorKind::DeskScaleExceeded, "image enumeration is limited to 24 bits");
  const u64 inputs = u64{1} << c.width();
  const std::size_t words = (inputs + 63) / 64;
  std::vector<std::vector<u64>> partial(range_count(inputs, workers));
  parallel_ranges(inputs, workers, [&](IndexRange r, std::size_t slot) {
    auto& seen = partial[slot];
    seen.assign(words, 0);
    for (u64 in = r.begin; in < r.end; ++in) {
      const u64 out = c.apply(in);
      seen[out / 64] |= u64{1} << (out % 64);
    }
  });
  std::vector<u64> seen(words, 0);
  for (const auto& part : partial)
    for (std::size_t i = 0; i < words; ++i) seen[i] |= part[i];
  u64 count = 0;
  for (u64 w : seen) count += static_cast<u64>(__builtin_popcountll(w));
  return big_from_u64(count);
}

BigInt sat_count(const Cnf3& cnf, unsigned workers) {
  if (cnf.n > 24) throw Error(ErrorKind::DeskScaleExceeded, "assignment enumeration is limited to n <= 24");
  const u64 assignments = u64{1} << cnf.n;
  std::vector<u64> hits(range_count(assignments, workers), 0);
  parallel_ranges(assignments, workers, [&](IndexRange r, std::size_t slot) {
    for (u64 a = r.begin; a < r.end; ++a)
      if (cnf.satisfied_by(a)) ++hits[slot];
  });
  u64 total = 0;
  for (u64 h : hits) total += h;
  return big_from_u64(total);
}

BigInt durand_formula(unsigned n, unsigned m, const BigInt& sat) {
  const BigInt full = BigInt(1) << (n + m);
  if (m == 0) return full;
  return full - (BigInt(1) << (m - 1)) * sat;
}

// --- sparse polynomial over F_{2^{n+m}} --------------------------------------------------

GammaConstruction build_gamma(const Nc05Circuit& c) {
  const unsigned width = c.width();
  if (width < 1 || width > 14)
    throw Error(ErrorKind::DeskScaleExceeded, "gamma is built for 1 <= n+m <= 14");
  if (c.outputs.size() != width) throw Error(ErrorKind::InvalidArgument, "circuit must be square");
  GammaConstruction g;
  g.field = make_field(2, width);
  const Field& F = *g.field;

  FieldElement w = F.one();
  for (unsigned i = 0; i < width; ++i) {
    g.basis.push_back(w);
    w = F.mul(w, F.generator());
  }

  // L_i(x) = sum_j c_ij x^{2^j} with L_i(omega_k) = delta_ik
  Matrix a(width, std::vector<FieldElement>(width));
  for (unsigned k = 0; k < width; ++k) {
    FieldElement frob = g.basis[k];
    for (unsigned j = 0; j < width; ++j) {
      a[k][j] = frob;
      frob = F.mul(frob, frob);
    }
  }
  std::vector<std::vector<std::pair<u64, FieldElement>>> lin(width);
  for (unsigned i = 0; i < width; ++i) {
    std::vector<FieldElement> rhs(width);
    rhs[i] = F.one();
    const auto coeffs = solve_linear(F, a, rhs);
    std::vector<SparseTerm> terms;
    for (unsigned j = 0; j < width; ++j) {
      terms.push_back({coeffs[j], big_from_u64(u64{1} << j)});
      if (!coeffs[j].is_zero()) lin[i].emplace_back(u64{1} << j, coeffs[j]);
    }
    g.extraction.emplace_back(g.field, std::move(terms));
  }

  // gamma = sum_i omega_i * output_i(L_1(x), ..., L_width(x))
  std::map<u64, FieldElement> total;
  std::map<u64, std::map<u64, FieldElement>> monomial_cache;
  for (unsigned i = 0; i < width; ++i) {
    for (u64 mono : c.outputs[i].monomials()) {
      auto it = monomial_cache.find(mono);
      if (it == monomial_cache.end()) {
        std::map<u64, FieldElement> prod{{0, F.one()}};
        for (unsigned v = 0; v < width; ++v) {
          if (!((mono >> v) & 1)) continue;
          std::map<u64, FieldElement> next;
          for (const auto& [e1, c1] : prod) {
            for (const auto& [e2, c2] : lin[v]) {
              auto& slot = next[e1 + e2];
              slot = F.add(slot, F.mul(c1, c2));
            }
          }
          prod = std::move(next);
        }
        it = monomial_cache.emplace(mono, std::move(prod)).first;
      }
      for (const auto& [e, coeff] : it->second) {
        auto& slot = total[e];
        slot = F.add(slot, F.mul(g.basis[i], coeff));
      }
    }
  }
  std::vector<SparseTerm> terms;
  for (const auto& [e, coeff] : total) terms.push_back({coeff, big_from_u64(e)});
  g.gamma = reduce_exponents(SparsePoly(g.field, std::move(terms)));
  return g;
}

std::uint64_t coordinates(const GammaConstruction& g, FieldElement u) {
  // power basis over F_2: coordinate i is the i-th coefficient bit of the index
  for (std::size_t i = 0; i < g.basis.size(); ++i)
    if (g.basis[i].index() != (u64{1} << i))
      throw Error(ErrorKind::InternalError, "construction does not use the power basis");
  return u.index();
}

DurandReport gamma_vs_durand_check(const Cnf3& cnf, unsigned workers) {
  const Nc05Circuit circuit = build_circuit(cnf);
  const GammaConstruction g = build_gamma(circuit);
  DurandReport r;
  r.sat = sat_count(cnf, workers);
  r.circuit_image = circuit_image_count(circuit, workers);
  r.formula = durand_formula(circuit.n, circuit.m, r.sat);

  const Evaluator gamma(PolyInput{g.gamma});
  const u64 q = g.field->order();
  std::vector<std::uint8_t> ok(range_count(q, workers), 1);
  parallel_ranges(q, workers, [&](IndexRange range, std::size_t slot) {
    for (auto u : enumerate_range(range)) {
      if (coordinates(g, gamma(u)) != circuit.apply(coordinates(g, u))) {
        ok[slot] = 0;
        return;
      }
    }
  });
  r.fidelity = std::all_of(ok.begin(), ok.end(), [](std::uint8_t v) { return v == 1; });
  r.gamma_value_set = count_direct(PolyInput{g.gamma}, workers).first.cardinality;
  r.agree = r.fidelity && r.gamma_value_set == r.circuit_image && r.circuit_image == r.formula;
  return r;
}

}  // namespace valueset
