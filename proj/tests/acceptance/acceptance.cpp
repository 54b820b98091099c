// One line per acceptance criterion; exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles/oracles.hpp"
#include "valueset/charsum.hpp"
#include "valueset/counting.hpp"
#include "valueset/sat.hpp"
#include "valueset/ssp.hpp"
#include "valueset_cli/app.hpp"

using namespace valueset;
using u64 = std::uint64_t;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Every report produced anywhere in this run is checked against the trivial bounds.
std::uint64_t g_reports = 0, g_bound_failures = 0;

void record(const ValueSetReport& r) {
  if (!r.d || *r.d < 1) return;
  ++g_reports;
  if (!within_trivial_bounds(r.cardinality, r.q, *r.d)) ++g_bound_failures;
}

FieldPtr field_of_order(u64 q) {
  for (u64 p = 2; p <= q; ++p) {
    if (!oracle::is_prime_trial(p) || q % p) continue;
    unsigned m = 0;
    for (u64 v = 1; v < q; v *= p) ++m;
    return make_field(p, m);
  }
  return nullptr;
}

std::vector<u64> to_u64(const DensePoly& f) {
  std::vector<u64> c;
  for (auto e : f.coeffs()) c.push_back(e.index());
  return c;
}

SubsetSumInstance make_inst(const std::vector<u64>& a, u64 b) {
  SubsetSumInstance s;
  for (auto v : a) s.a.push_back(big_from_u64(v));
  s.b = big_from_u64(b);
  return s;
}

template <class F>
void for_each_multiset(unsigned max_t, u64 max_a, F&& fn) {
  std::vector<u64> a;
  auto rec = [&](auto&& self, u64 lo) -> void {
    if (!a.empty()) fn(a);
    if (a.size() == max_t) return;
    for (u64 v = lo; v <= max_a; ++v) {
      a.push_back(v);
      self(self, v);
      a.pop_back();
    }
  };
  rec(rec, 1);
}

Outcome three_methods() {
  std::mt19937_64 rng(20240601);
  const u64 orders[] = {5, 7, 9, 27, 49, 125, 343};
  u64 mismatches = 0, oracle_checked = 0;
  for (int i = 0; i < 200; ++i) {
    auto field = field_of_order(orders[i % std::size(orders)]);
    const unsigned d = 1 + rng() % 6;
    const DensePoly g = cli::random_dense(field, d, rng);
    const auto direct = count_direct(PolyInput{g}).first;
    const auto codomain = count_codomain(reduce_dense(g));
    const auto sym = count_symmetric(PolyInput{g}, NkSource::Histogram);
    for (const auto* r : {&direct, &codomain, &sym}) record(*r);
    bool ok = direct.cardinality == codomain.cardinality && direct.cardinality == sym.cardinality;
    if (field->is_prime_field()) {
      ++oracle_checked;
      ok = ok && direct.cardinality == oracle::value_set_size(to_u64(g), field->p());
    }
    if (!ok) ++mismatches;
  }
  return {mismatches == 0, "200 polynomials, " + std::to_string(oracle_checked) + " also against brute force, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome hypersurface_pipeline() {
  auto f3 = make_field(3, 1);
  const DensePoly sq(f3, {FieldElement{0}, FieldElement{0}, FieldElement{1}});
  const Evaluator sq_eval{PolyInput{sq}};
  const auto worked = count_hypersurface_points(sq_eval, f3, 2);
  const auto sym = count_symmetric(PolyInput{sq}, NkSource::Hypersurface);
  record(sym);
  bool ok = worked.points == 19 && nk_from_hypersurface(worked, 3) == 5 && sym.cardinality == 2 &&
            oracle::hypersurface_points({0, 0, 1}, 3, 2) == 19;

  std::mt19937_64 rng(77);
  u64 cases = 0, bad = 0;
  for (u64 q : {3, 5, 7}) {
    auto field = make_field(q, 1);
    for (int i = 0; i < 20; ++i) {
      const DensePoly g = cli::random_dense(field, 1 + rng() % (q - 1), rng);
      const auto c = to_u64(g);
      const Evaluator ev{PolyInput{g}};
      const auto [direct, hist] = count_direct(PolyInput{g});
      record(direct);
      for (unsigned k : {2u, 3u}) {
        ++cases;
        const auto surface = count_hypersurface_points(ev, field, k);
        BigInt from_hist = 0;
        for (const auto& [y, cy] : hist.entries) from_hist += big_pow(cy, k);
        const bool good = surface.points == oracle::hypersurface_points(c, q, k) &&
                          nk_from_hypersurface(surface, q) == nk_brute(ev, field, k) &&
                          nk_brute(ev, field, k) == from_hist && from_hist == oracle::equal_tuples(c, q, k);
        if (!good) ++bad;
      }
      const auto s = count_symmetric(PolyInput{g}, NkSource::Hypersurface);
      record(s);
      if (s.cardinality != direct.cardinality) ++bad;
    }
  }
  ok = ok && bad == 0;
  return {ok, "x^2 over F_3: |F_2| = " + to_decimal(worked.points) + ", N_2 = " +
                  to_decimal(nk_from_hypersurface(worked, 3)) + ", |V_f| = " + to_decimal(sym.cardinality) + "; " +
                  std::to_string(cases) + " (f, k) cases, " + std::to_string(bad) + " failures"};
}

Outcome proof_identities() {
  u64 bad = 0;
  for (std::int64_t d = 1; d <= 50; ++d)
    for (std::int64_t k = 1; k <= d; ++k)
      if (omega_identity_check(d, k) != 1) ++bad;
  for (std::int64_t d = 1; d <= 200; ++d)
    if (sym_weights_newton(d).sigma != sym_weights_product(d).sigma) ++bad;
  for (int d = 1; d <= 60; ++d)
    if (sym_weights(d).sigma != oracle::sigma_by_product(d)) ++bad;
  return {bad == 0, "1275 omega checks, 200 Newton/product comparisons, 60 against a naive rational product; " +
                        std::to_string(bad) + " failures"};
}

Outcome monomial_law() {
  u64 checked = 0, bad = 0;
  for (u64 q = 2; q <= 64; ++q) {
    auto field = field_of_order(q);
    u64 pp = field ? 1 : 0;
    for (unsigned i = 0; field && i < field->m(); ++i) pp *= field->p();
    if (!field || pp != q) continue;
    for (unsigned k = 1; k <= 20; ++k) {
      const PolyInput mono = SparsePoly(field, {{field->one(), BigInt(k)}});
      const auto r = count_direct(mono).first;
      record(r);
      ++checked;
      bool perm = r.cardinality == q;
      if (perm != (std::gcd<u64>(k, q - 1) == 1)) ++bad;
      if (field->is_prime_field()) {
        std::vector<u64> c(k + 1, 0);
        c[k] = 1;
        if (oracle::value_set_size(c, q) != r.cardinality) ++bad;
      }
    }
  }
  const bool ok = bad == 0 && g_bound_failures == 0;
  return {ok, std::to_string(checked) + " monomials, " + std::to_string(bad) + " law failures; " +
                  std::to_string(g_reports) + " reports within trivial bounds, " + std::to_string(g_bound_failures) +
                  " violations"};
}

Outcome gadget() {
  u64 bad = 0, inside_checks = 0;
  for (u64 p : {67, 131, 257, 521, 1031}) {
    const auto c = coverage(p, 2);
    if (!c.onto() || c.counts != oracle::pattern_counts(p, 2)) ++bad;
    if (c.lower_bound_positive())
      for (auto v : c.counts) {
        ++inside_checks;
        if (!c.strictly_inside(v)) ++bad;
      }
  }
  u64 points = 0;
  for (u64 p : {3, 5, 11, 101, 1009, 4099, 7919, 9973}) {
    const auto g = alpha_poly(p);
    const auto table = alpha_table(g);
    for (u64 x = 0; x < p; ++x) {
      ++points;
      if (table[x] > 1 || (table[x] == 1) != (oracle::legendre(x, p) == 1)) ++bad;
    }
  }
  return {bad == 0, "5 primes with all patterns, " + std::to_string(inside_checks) + " Weil checks, " +
                        std::to_string(points) + " alpha values; " + std::to_string(bad) + " failures"};
}

Outcome root_reduction() {
  u64 instances = 0, bad = 0;
  for_each_multiset(4, 20, [&](const std::vector<u64>& a) {
    const u64 total = std::accumulate(a.begin(), a.end(), u64{0});
    for (u64 b = 0; b <= total; ++b) {
      ++instances;
      if (decide_ssp_via_root(make_inst(a, b)).answer != (oracle::subset_count(a, b) > 0)) ++bad;
    }
  });
  return {bad == 0, std::to_string(instances) + " instances (t <= 4, a_i <= 20, b <= sum), " + std::to_string(bad) +
                        " disagreements"};
}

Outcome counting_reduction() {
  const auto worked = count_ssp_via_valueset(make_inst({1, 2}, 3));
  bool ok = worked.count == 1 && worked.p == 67u && worked.values == std::vector<u64>{0, 3};
  u64 instances = 0, bad = 0;
  for_each_multiset(4, 12, [&](const std::vector<u64>& a) {
    const u64 total = std::accumulate(a.begin(), a.end(), u64{0});
    for (u64 b = 0; b <= total + 1; ++b) {
      ++instances;
      if (count_ssp_via_valueset(make_inst(a, b)).count != oracle::subset_count(a, b)) ++bad;
    }
  });
  ok = ok && bad == 0;
  return {ok, "S={1,2}, b=3 gives 1 with V_f = {0, 3} over F_67; " + std::to_string(instances) + " instances, " +
                  std::to_string(bad) + " disagreements"};
}

std::vector<Cnf3> unsat_fixtures() {
  return {Cnf3{1, {{1, 1, 1}, {-1, -1, -1}}, 0},
          Cnf3{2, {{1, 1, 2}, {1, 1, -2}, {-1, -1, 2}, {-1, -1, -2}}, 0}};
}

Outcome durand() {
  std::mt19937_64 rng(31337);
  u64 bad = 0;
  for (int i = 0; i < 100; ++i) {
    const unsigned n = 1 + rng() % 6, m = 1 + rng() % 6;
    const Cnf3 f = random_cnf3(n, m, rng);
    const u64 M = oracle::sat_count(n, f.clauses);
    const BigInt image = circuit_image_count(build_circuit(f));
    if (image != durand_formula(n, m, M) || image != oracle::mux_image(n, f.clauses)) ++bad;
  }
  for (const auto& f : unsat_fixtures())
    if (circuit_image_count(build_circuit(f)) != big_pow(2, f.n + f.m())) ++bad;
  return {bad == 0, "100 random formulas and 2 unsatisfiable fixtures, " + std::to_string(bad) + " failures"};
}

Outcome sparse_gamma() {
  std::vector<Cnf3> fixtures{Cnf3{3, {{1, 2, 3}}, 0}};
  for (const auto& f : unsat_fixtures()) fixtures.push_back(f);
  std::mt19937_64 rng(4242);
  for (auto [n, m] : {std::pair{4u, 3u}, {5u, 5u}, {6u, 4u}, {3u, 6u}, {7u, 3u}})
    fixtures.push_back(random_cnf3(n, m, rng));
  u64 bad = 0;
  std::string triples;
  for (const auto& f : fixtures) {
    const auto g = build_gamma(build_circuit(f));
    const u64 M = oracle::sat_count(f.n, f.clauses);
    for (auto u : enumerate_field(*g.field)) {
      auto coords = [&](FieldElement e) {
        u64 bits = 0;
        const auto c = g.field->coeffs(e);
        for (std::size_t i = 0; i < c.size(); ++i) bits |= c[i] << i;
        return bits;
      };
      if (coords(evaluate(PolyInput{g.gamma}, u)) != oracle::mux_circuit(f.n, f.clauses, coords(u))) ++bad;
    }
    const auto r = count_direct(PolyInput{g.gamma}).first;
    const BigInt formula = durand_formula(f.n, f.m(), M);
    if (r.cardinality != formula) ++bad;
    if (triples.size() < 40)
      triples += "(" + to_decimal(r.cardinality) + ", " + to_decimal(circuit_image_count(build_circuit(f))) + ", " +
                 to_decimal(formula) + ") ";
  }
  const auto one = gamma_vs_durand_check(fixtures[0]);
  const auto pair = gamma_vs_durand_check(fixtures[1]);
  const bool worked = one.gamma_value_set == 9 && one.circuit_image == 9 && one.formula == 9 &&
                      pair.gamma_value_set == 8 && pair.circuit_image == 8 && pair.formula == 8;
  return {bad == 0 && worked, std::to_string(fixtures.size()) + " fixtures, first triples " + triples +
                                  std::to_string(bad) + " failures"};
}

Outcome determinism() {
  auto run = [](unsigned workers) {
    cli::RunConfig cfg;
    cfg.subcommand = "verify";
    cfg.mode = "all";
    cfg.seed = 12345;
    cfg.workers = workers;
    std::ostringstream out, err;
    const int code = cli::run(cfg, out, err);
    return std::pair{code, out.str()};
  };
  const auto [c1, s1] = run(1);
  const auto [c4, s4] = run(4);
  return {c1 == 0 && c4 == 0 && s1 == s4 && !s1.empty(),
          std::to_string(s1.size()) + " bytes, exit codes " + std::to_string(c1) + "/" + std::to_string(c4) +
              (s1 == s4 ? ", identical" : ", different")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "three counting methods agree", three_methods},
      {2, "hypersurface pipeline", hypersurface_pipeline},
      {3, "proof identities", proof_identities},
      {4, "trivial bounds and monomial permutation law", monomial_law},
      {5, "quadratic-character gadget", gadget},
      {6, "subset-sum to root reduction", root_reduction},
      {7, "counting subset-sum to value-set reduction", counting_reduction},
      {8, "Durand circuit image formula", durand},
      {9, "sparse gamma over F_{2^{n+m}}", sparse_gamma},
      {10, "verify output independent of worker count", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
