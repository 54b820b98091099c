#include <algorithm>
#include <numeric>

#include "valueset/charsum.hpp"
#include "valueset/sat.hpp"
#include "valueset/ssp.hpp"
#include "valueset_cli/app.hpp"

namespace valueset::cli {

namespace {

using u64 = std::uint64_t;

struct Tally {
  PropertyResult r;
  explicit Tally(std::string name) { r.name = std::move(name); }
  void check(bool ok) {
    ++r.checked;
    if (!ok) ++r.failed;
  }
};

// Runs body and turns a thrown library error into one failed check.
template <class F>
PropertyResult property(std::string name, F&& body) {
  Tally t(std::move(name));
  try {
    body(t);
  } catch (const std::exception&) {
    t.check(false);
  }
  return t.r;
}

FieldPtr field_of_order(u64 q) {
  for (u64 p = 2; p <= q; ++p) {
    if (!is_prime(p)) continue;
    u64 v = 1;
    unsigned m = 0;
    while (v < q) {
      v *= p;
      ++m;
    }
    if (v == q) return make_field(p, m);
  }
  throw Error(ErrorKind::InvalidArgument, "not a prime power");
}

std::vector<u64> prime_powers_up_to(u64 n) {
  std::vector<u64> out;
  for (u64 q = 2; q <= n; ++q) {
    for (u64 p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      u64 v = q;
      while (v % p == 0) v /= p;
      if (v == 1) out.push_back(q);
      break;
    }
  }
  return out;
}

SubsetSumInstance make_inst(const std::vector<u64>& a, u64 b) {
  SubsetSumInstance s;
  for (auto v : a) s.a.push_back(big_from_u64(v));
  s.b = big_from_u64(b);
  return s;
}

// Calls fn on every nondecreasing tuple of length 1..max_t with entries in [1, max_a].
template <class F>
void for_each_tuple(unsigned max_t, u64 max_a, F&& fn) {
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

std::vector<PropertyResult> identities(unsigned workers) {
  std::vector<PropertyResult> out;
  out.push_back(property("omega identity, 1 <= k <= d <= 50", [](Tally& t) {
    for (std::int64_t d = 1; d <= 50; ++d)
      for (std::int64_t k = 1; k <= d; ++k) t.check(omega_identity_check(d, k) == 1);
  }));
  out.push_back(property("Newton sigma equals product sigma, d <= 200", [](Tally& t) {
    for (std::int64_t d = 1; d <= 200; ++d) t.check(sym_weights_newton(d).sigma == sym_weights_product(d).sigma);
  }));
  out.push_back(property("monomial x^k permutes iff gcd(k, q-1) = 1, q <= 64, k <= 20", [workers](Tally& t) {
    for (u64 q : prime_powers_up_to(64)) {
      auto f = field_of_order(q);
      for (unsigned k = 1; k <= 20; ++k) {
        PolyInput mono = SparsePoly(f, {{f->one(), BigInt(k)}});
        const bool perm = is_permutation(mono, CountMethod::Direct, workers);
        t.check(perm == (std::gcd<u64>(k, q - 1) == 1));
      }
    }
  }));
  return out;
}

std::vector<PropertyResult> methods(std::uint64_t seed, unsigned workers) {
  std::vector<PropertyResult> out;
  std::mt19937_64 rng(seed);
  const u64 orders[] = {5, 7, 9, 27, 49, 125, 343};
  Tally bounds("trivial bounds ceil(q/d) <= |V_f| <= q");
  out.push_back(property("direct = codomain = symmetric, 200 random f", [&](Tally& t) {
    for (int i = 0; i < 200; ++i) {
      auto f = field_of_order(orders[rng() % std::size(orders)]);
      const unsigned d = 1 + rng() % 6;
      const PolyInput g = random_dense(f, d, rng);
      const auto direct = count_direct(g, workers).first;
      const auto codomain = count_value_set(g, CountMethod::Codomain, NkSource::Histogram, workers);
      const auto sym = count_symmetric(g, NkSource::Histogram, workers);
      t.check(direct.cardinality == codomain.cardinality && direct.cardinality == sym.cardinality);
      for (const auto* r : {&direct, &codomain, &sym})
        if (r->d && *r->d >= 1) bounds.check(within_trivial_bounds(r->cardinality, r->q, *r->d));
    }
  }));
  out.push_back(bounds.r);
  out.push_back(property("hypersurface N_k = brute N_k = histogram N_k, q <= 9, k in {2,3}", [&](Tally& t) {
    for (u64 q : {3, 4, 5, 7, 8, 9}) {
      auto f = field_of_order(q);
      for (int i = 0; i < 4; ++i) {
        const unsigned d = 1 + rng() % std::min<u64>(q - 1, 6);
        const PolyInput g = random_dense(f, d, rng);
        const Evaluator ev(g);
        const PointMap map = [&ev](FieldElement x) { return ev(x); };
        const auto hist = count_direct(g, workers).second;
        for (unsigned k : {2u, 3u}) {
          const BigInt from_surface = nk_from_hypersurface(count_hypersurface_points(map, f, k,
                                                                                     HypersurfaceMode::Analytic, workers), f->order_big());
          const BigInt brute = nk_brute(map, f, k, workers);
          BigInt from_hist = 0;
          for (const auto& [y, c] : hist.entries) from_hist += big_pow(c, k);
          t.check(from_surface == brute && brute == from_hist);
        }
      }
    }
  }));
  out.push_back(property("symmetric via hypersurface = direct, q <= 9", [&](Tally& t) {
    for (u64 q : {3, 5, 7, 9}) {
      auto f = field_of_order(q);
      for (int i = 0; i < 4; ++i) {
        const unsigned d = 1 + rng() % std::min<u64>(q - 1, 4);
        const PolyInput g = random_dense(f, d, rng);
        t.check(count_symmetric(g, NkSource::Hypersurface, workers).cardinality ==
                count_direct(g, workers).first.cardinality);
      }
    }
  }));
  return out;
}

std::vector<PropertyResult> reductions(std::uint64_t seed, unsigned workers) {
  std::vector<PropertyResult> out;
  out.push_back(property("alpha in {0,1} and alpha = 1 iff chi = 1", [workers](Tally& t) {
    for (u64 p : {3, 67, 131, 257, 521, 1031, 9973}) {
      const auto g = alpha_poly(p);
      const auto table = alpha_table(g, workers);
      for (u64 x = 0; x < p; ++x) t.check(table[x] <= 1 && (table[x] == 1) == (chi(FieldElement{x}, *g.field) == 1));
    }
  }));
  out.push_back(property("patterns onto and inside the Weil interval, t = 2", [workers](Tally& t) {
    for (u64 p : {67, 131, 257, 521, 1031}) {
      const auto c = coverage(p, 2, workers);
      t.check(c.onto());
      t.check(std::accumulate(c.counts.begin(), c.counts.end(), u64{0}) == p);
      if (c.lower_bound_positive())
        for (auto v : c.counts) t.check(c.strictly_inside(v));
    }
  }));
  out.push_back(property("root reduction = subset oracle, t <= 3, a_i <= 8", [workers](Tally& t) {
    for_each_tuple(3, 8, [&](const std::vector<u64>& a) {
      const u64 total = std::accumulate(a.begin(), a.end(), u64{0});
      for (u64 b = 0; b <= total; ++b) {
        const auto inst = make_inst(a, b);
        t.check(decide_ssp_via_root(inst, {}, workers).answer == brute_subset_decision(inst, workers));
      }
    });
  }));
  out.push_back(property("value-set count = subset count, t <= 3, a_i <= 6", [workers](Tally& t) {
    for_each_tuple(3, 6, [&](const std::vector<u64>& a) {
      const u64 total = std::accumulate(a.begin(), a.end(), u64{0});
      for (u64 b = 0; b <= total + 1; ++b) {
        const auto inst = make_inst(a, b);
        t.check(count_ssp_via_valueset(inst, {}, workers).count == brute_subset_count(inst, workers));
      }
    });
  }));
  std::mt19937_64 rng(seed ^ 0x5a7c0ffeeULL);
  std::vector<Cnf3> formulas;
  for (int i = 0; i < 100; ++i) formulas.push_back(random_cnf3(1 + rng() % 6, 1 + rng() % 6, rng));
  out.push_back(property("circuit image = 2^{n+m} - 2^{m-1} M, 100 random 3CNF", [&](Tally& t) {
    for (const auto& f : formulas)
      t.check(circuit_image_count(build_circuit(f), workers) == durand_formula(f.n, f.m(), sat_count(f, workers)));
  }));
  out.push_back(property("w_i equals the multiplexer form on all inputs", [&](Tally& t) {
    for (const auto& f : formulas) {
      const auto c = build_circuit(f);
      for (u64 in = 0; in < (u64{1} << c.width()); ++in) {
        const u64 x = in & ((u64{1} << f.n) - 1), y = in >> f.n;
        u64 want = x;
        for (unsigned i = 0; i < f.m(); ++i) {
          const bool yi = y >> i & 1, yn = y >> ((i + 1) % f.m()) & 1;
          const Cnf3 clause{f.n, {f.clauses[i]}, 0};
          if (clause.satisfied_by(x) ? yi != yn : yi) want |= u64{1} << (f.n + i);
        }
        t.check(c.apply(in) == want);
      }
    }
  }));
  out.push_back(property("gamma fidelity and |V_gamma| = Durand formula, n+m <= 8", [&](Tally& t) {
    std::vector<Cnf3> fixtures{Cnf3{3, {{1, 2, 3}}, 0}, Cnf3{1, {{1, 1, 1}, {-1, -1, -1}}, 0}};
    while (fixtures.size() < 6) {
      const unsigned n = 1 + rng() % 4, m = 1 + rng() % 4;
      fixtures.push_back(random_cnf3(n, m, rng));
    }
    for (const auto& f : fixtures) {
      const auto r = gamma_vs_durand_check(f, workers);
      t.check(r.fidelity && r.agree);
    }
  }));
  out.push_back(property("unsatisfiable formulas give permutation gammas", [workers](Tally& t) {
    for (const auto& f : {Cnf3{1, {{1, 1, 1}, {-1, -1, -1}}, 0},
                          Cnf3{2, {{1, 1, 2}, {-1, -1, -1}, {-2, -2, -2}}, 0}}) {
      t.check(sat_count(f, workers) == 0);
      t.check(is_permutation(PolyInput{build_gamma(build_circuit(f)).gamma}, CountMethod::Direct, workers));
    }
  }));
  return out;
}

}  // namespace

DensePoly random_dense(const FieldPtr& field, unsigned d, std::mt19937_64& rng) {
  const u64 q = field->order();
  std::vector<FieldElement> c(d + 1);
  for (auto& v : c) v = FieldElement{rng() % q};
  c[d] = FieldElement{1 + rng() % (q - 1)};
  return DensePoly(field, std::move(c));
}

std::vector<PropertyResult> verify_suite(const std::string& suite, std::uint64_t seed, unsigned workers) {
  std::vector<PropertyResult> out;
  auto append = [&out](std::vector<PropertyResult> v) { out.insert(out.end(), v.begin(), v.end()); };
  if (suite == "identities" || suite == "all") append(identities(workers));
  if (suite == "methods" || suite == "all") append(methods(seed, workers));
  if (suite == "reductions" || suite == "all") append(reductions(seed, workers));
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "unknown suite " + suite);
  return out;
}

}  // namespace valueset::cli
