#include "valueset/counting.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>

namespace valueset {

namespace {

using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// q^k, throwing OrderTooLarge past the enumeration cap.
u64 enumerable_power(u64 q, unsigned k) {
  const BigInt total = big_pow(q, k);
  check_enumerable(total);
  return *big_to_u64(total);
}

std::vector<FieldElement> value_table(const PointMap& f, const Field& field, unsigned workers) {
  std::vector<FieldElement> values(field.order());
  parallel_ranges(field.order(), workers, [&](IndexRange r, std::size_t) {
    for (auto x : enumerate_range(r)) values[x.index()] = f(x);
  });
  return values;
}

// Exact degree of the function's reduced representative when it is cheap to know.
std::optional<std::int64_t> cheap_reduced_degree(const PolyInput& f) {
  const u64 q = field_of(f).order();
  if (const auto* s = std::get_if<SparsePoly>(&f)) {
    const SparsePoly r = reduce_exponents(*s);
    return r.is_zero() ? 0 : static_cast<std::int64_t>(*big_to_u64(r.degree().value()));
  }
  if (const auto* d = std::get_if<DensePoly>(&f)) return std::max<std::int64_t>(0, reduce_dense(*d).degree_or_minus_one());
  const auto b = degree_bound(f);
  if (!b.exact) return std::nullopt;
  if (b.degree.is_neg_infinity()) return 0;
  if (b.degree.value() >= big_from_u64(q)) return std::nullopt;
  return static_cast<std::int64_t>(*big_to_u64(b.degree.value()));
}

void check_bounds(const ValueSetReport& r) {
  if (r.d && *r.d >= 1 && !within_trivial_bounds(r.cardinality, r.q, *r.d))
    throw Error(ErrorKind::InternalError, "cardinality " + to_decimal(r.cardinality) +
                                              " violates the trivial bounds for q = " + to_decimal(r.q) +
                                              ", d = " + std::to_string(*r.d));
}

}  // namespace

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::Direct: return "direct";
    case CountMethod::Codomain: return "codomain";
    case CountMethod::Symmetric: return "symmetric";
  }
  return "?";
}

std::string_view to_string(NkSource s) {
  switch (s) {
    case NkSource::Histogram: return "histogram";
    case NkSource::Brute: return "brute";
    case NkSource::Hypersurface: return "hypersurface";
  }
  return "?";
}

std::uint64_t PreimageHistogram::max_preimage() const {
  u64 best = 0;
  for (const auto& [y, c] : entries) best = std::max(best, c);
  return best;
}

std::uint64_t PreimageHistogram::total() const {
  u64 sum = 0;
  for (const auto& [y, c] : entries) sum += c;
  return sum;
}

// --- direct enumeration ------------------------------------------------------------

PreimageHistogram preimage_histogram(const PointMap& f, const FieldPtr& field, unsigned workers) {
  check_enumerable(field->order());
  using Entries = std::vector<std::pair<u64, u64>>;
  std::vector<Entries> partial(range_count(field->order(), workers));
  parallel_ranges(field->order(), workers, [&](IndexRange r, std::size_t slot) {
    std::vector<u64> values;
    values.reserve(r.size());
    for (auto x : enumerate_range(r)) values.push_back(f(x).index());
    std::sort(values.begin(), values.end());
    Entries& out = partial[slot];
    for (u64 v : values) {
      if (!out.empty() && out.back().first == v) {
        ++out.back().second;
      } else {
        out.emplace_back(v, 1);
      }
    }
  });
  // merge sorted partial histograms by addition
  PreimageHistogram hist{field, {}};
  for (const auto& part : partial) {
    Entries merged;
    merged.reserve(hist.entries.size() + part.size());
    auto a = hist.entries.begin();
    auto b = part.begin();
    while (a != hist.entries.end() || b != part.end()) {
      if (b == part.end() || (a != hist.entries.end() && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == hist.entries.end() || b->first < a->first) {
        merged.push_back(*b++);
      } else {
        merged.emplace_back(a->first, a->second + b->second);
        ++a;
        ++b;
      }
    }
    hist.entries = std::move(merged);
  }
  return hist;
}

std::pair<ValueSetReport, PreimageHistogram> count_direct(const PointMap& f, const FieldPtr& field,
                                                          unsigned workers) {
  const auto start = Clock::now();
  PreimageHistogram hist = preimage_histogram(f, field, workers);
  ValueSetReport report;
  report.cardinality = big_from_u64(hist.num_values());
  report.method = CountMethod::Direct;
  report.q = field->order_big();
  report.seconds = since(start);
  return {std::move(report), std::move(hist)};
}

std::pair<ValueSetReport, PreimageHistogram> count_direct(const PolyInput& f, unsigned workers) {
  const Evaluator eval(f);
  auto result = count_direct([&eval](FieldElement x) { return eval(x); }, field_ptr(f), workers);
  result.first.d = cheap_reduced_degree(f);
  if (result.first.d && *result.first.d >= 1) {
    const u64 bound = static_cast<u64>(*result.first.d);
    if (result.second.max_preimage() > bound)
      throw Error(ErrorKind::InternalError, "a value has more preimages than the degree allows");
  }
  check_bounds(result.first);
  return result;
}

// --- codomain method -------------------------------------------------------------------

bool has_root(const DensePoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "every element is a root of the zero polynomial");
  if (g.degree_or_minus_one() == 0) return false;
  if (g.coeff(0).is_zero()) return true;
  const FieldPtr& field = g.field_ptr();
  const DensePoly x = DensePoly::monomial(field, 1, field->one());
  const DensePoly frob = powmod(x, field->order_big(), g);
  return gcd(sub(frob, x), g).degree_or_minus_one() >= 1;
}

ValueSetReport count_codomain(const DensePoly& f, unsigned workers) {
  const auto start = Clock::now();
  const FieldPtr& field = f.field_ptr();
  check_enumerable(field->order());
  ValueSetReport report;
  report.method = CountMethod::Codomain;
  report.q = field->order_big();
  if (f.degree_or_minus_one() <= 0) {
    report.cardinality = 1;
    report.d = 0;
    report.seconds = since(start);
    return report;
  }
  std::vector<u64> hits(range_count(field->order(), workers), 0);
  parallel_ranges(field->order(), workers, [&](IndexRange r, std::size_t slot) {
    std::vector<FieldElement> coeffs = f.coeffs();
    const FieldElement c0 = coeffs[0];
    for (auto a : enumerate_range(r)) {
      coeffs[0] = field->sub(c0, a);
      if (has_root(DensePoly(field, coeffs))) ++hits[slot];
    }
  });
  u64 total = 0;
  for (u64 h : hits) total += h;
  report.cardinality = big_from_u64(total);
  if (f.degree_or_minus_one() < static_cast<std::int64_t>(field->order())) report.d = f.degree_or_minus_one();
  report.seconds = since(start);
  check_bounds(report);
  return report;
}

// --- symmetric weights -------------------------------------------------------------------

SymWeights sym_weights_newton(std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "symmetric weights need d >= 1");
  // Newton's identities on the integer roots 1..d, then
  // e_k(1, 1/2, ..., 1/d) = e_{d-k}(1, 2, ..., d) / d!.
  std::vector<BigInt> power(d + 1, BigInt(0));  // power[j] = sum_i i^j
  for (std::int64_t i = 1; i <= d; ++i) {
    BigInt term = 1;
    for (std::int64_t j = 1; j <= d; ++j) {
      term *= i;
      power[j] += term;
    }
  }
  std::vector<BigInt> e(d + 1);
  e[0] = 1;
  for (std::int64_t k = 1; k <= d; ++k) {
    BigInt acc = 0;
    for (std::int64_t i = 1; i <= k; ++i) {
      if (i % 2 == 1) {
        acc += e[k - i] * power[i];
      } else {
        acc -= e[k - i] * power[i];
      }
    }
    mpz_divexact_ui(e[k].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(k));
  }
  const BigInt factorial = e[d];
  std::vector<Rational> sigma;
  sigma.reserve(d);
  for (std::int64_t k = 1; k <= d; ++k) {
    Rational v(e[d - k], factorial);
    v.canonicalize();
    sigma.push_back(std::move(v));
  }
  return {d, std::move(sigma)};
}

SymWeights sym_weights_product(std::int64_t d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "symmetric weights need d >= 1");
  // prod (1 + X/j) = prod (j + X) / d!; c[i] is the coefficient of X^i in prod (j + X).
  std::vector<BigInt> c(d + 1, BigInt(0));
  c[0] = 1;
  for (std::int64_t j = 1; j <= d; ++j) {
    for (std::int64_t i = j; i >= 1; --i) c[i] = c[i] * j + c[i - 1];
    c[0] *= j;
  }
  std::vector<Rational> sigma;
  sigma.reserve(d);
  for (std::int64_t i = 1; i <= d; ++i) {
    Rational v(c[i], c[0]);
    v.canonicalize();
    sigma.push_back(std::move(v));
  }
  return {d, std::move(sigma)};
}

SymWeights sym_weights(std::int64_t d) {
  if (d < 1 || d > 1000) throw Error(ErrorKind::InvalidArgument, "symmetric weights need 1 <= d <= 1000");
  static std::mutex mu;
  static std::map<std::int64_t, SymWeights> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  SymWeights w = sym_weights_newton(d);
  if (w.sigma != sym_weights_product(d).sigma)
    throw Error(ErrorKind::InternalError, "Newton and product expansions of the weights disagree");
  std::lock_guard lock(mu);
  cache.emplace(d, w);
  return w;
}

Rational omega_identity_check(std::int64_t d, std::int64_t k) {
  if (k < 1 || k > d) throw Error(ErrorKind::InvalidArgument, "omega identity needs 1 <= k <= d");
  const SymWeights w = sym_weights(d);
  Rational acc = 0;
  BigInt kp = 1;
  for (std::int64_t i = 1; i <= d; ++i) {
    kp *= k;
    if (i % 2 == 1) {
      acc += Rational(kp) * w.sigma[i - 1];
    } else {
      acc -= Rational(kp) * w.sigma[i - 1];
    }
  }
  acc.canonicalize();
  return acc;
}

// --- equal-value counts --------------------------------------------------------------------

EqualValueCounts nk_from_histogram(const PreimageHistogram& hist, std::int64_t d) {
  EqualValueCounts out{d, std::vector<BigInt>(std::max<std::int64_t>(d, 0)), NkSource::Histogram};
  for (const auto& [y, c] : hist.entries) {
    const BigInt base = big_from_u64(c);
    BigInt pw = 1;
    for (std::int64_t k = 1; k <= d; ++k) {
      pw *= base;
      out.n[k - 1] += pw;
    }
  }
  return out;
}

BigInt nk_brute(const PointMap& f, const FieldPtr& field, unsigned k, unsigned workers) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "N_k needs k >= 1");
  const u64 q = field->order();
  enumerable_power(q, k);
  const auto values = value_table(f, *field, workers);
  const u64 tail = *big_to_u64(big_pow(q, k - 1));
  std::vector<u64> partial(range_count(q, workers), 0);
  parallel_ranges(q, workers, [&](IndexRange r, std::size_t slot) {
    std::vector<u64> x(k);
    for (u64 first = r.begin; first < r.end; ++first) {
      x[0] = first;
      for (u64 t = 0; t < tail; ++t) {
        u64 rest = t;
        for (unsigned j = 1; j < k; ++j) {
          x[j] = rest % q;
          rest /= q;
        }
        bool equal = true;
        for (unsigned j = 1; j < k && equal; ++j) equal = values[x[0]] == values[x[j]];
        if (equal) ++partial[slot];
      }
    }
  });
  u64 total = 0;
  for (u64 v : partial) total += v;
  return big_from_u64(total);
}

HypersurfaceCount count_hypersurface_points(const PointMap& f, const FieldPtr& field, unsigned k,
                                            HypersurfaceMode mode, unsigned workers) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "the auxiliary hypersurface needs k >= 2");
  const Field& F = *field;
  const u64 q = F.order();
  const unsigned vars = mode == HypersurfaceMode::Analytic ? k : 2 * k - 1;
  enumerable_power(q, vars);
  const auto values = value_table(f, F, workers);
  const u64 tail = *big_to_u64(big_pow(q, vars - 1));

  // Analytic: per x-tuple tally whether the linear form in z vanishes identically.
  // Literal: per (x, z) tally zeros of F_k.
  std::vector<std::pair<u64, u64>> partial(range_count(q, workers), {0, 0});
  parallel_ranges(q, workers, [&](IndexRange r, std::size_t slot) {
    std::vector<u64> coord(vars);
    std::vector<FieldElement> form(k - 1);
    for (u64 first = r.begin; first < r.end; ++first) {
      coord[0] = first;
      for (u64 t = 0; t < tail; ++t) {
        u64 rest = t;
        for (unsigned j = 1; j < vars; ++j) {
          coord[j] = rest % q;
          rest /= q;
        }
        // form[j-1] = f(x_1) - f(x_{j+1})
        for (unsigned j = 1; j < k; ++j) form[j - 1] = F.sub(values[coord[0]], values[coord[j]]);
        if (mode == HypersurfaceMode::Analytic) {
          const bool rank_zero = std::all_of(form.begin(), form.end(), [](FieldElement c) { return c.is_zero(); });
          if (rank_zero) {
            ++partial[slot].first;
          } else {
            ++partial[slot].second;
          }
        } else {
          FieldElement acc{};
          for (unsigned j = 0; j + 1 < k; ++j) acc = F.add(acc, F.mul(FieldElement{coord[k + j]}, form[j]));
          if (acc.is_zero()) ++partial[slot].first;
        }
      }
    }
  });
  HypersurfaceCount out{k, 0};
  for (const auto& [zero_rank, full_rank] : partial) {
    if (mode == HypersurfaceMode::Analytic) {
      out.points += big_from_u64(zero_rank) * big_pow(q, k - 1) + big_from_u64(full_rank) * big_pow(q, k - 2);
    } else {
      out.points += big_from_u64(zero_rank);
    }
  }
  return out;
}

BigInt nk_from_hypersurface(const HypersurfaceCount& c, const BigInt& q) {
  if (c.k < 2) throw Error(ErrorKind::InvalidArgument, "the auxiliary hypersurface needs k >= 2");
  BigInt q_2k_2, q_k_2;
  mpz_pow_ui(q_2k_2.get_mpz_t(), q.get_mpz_t(), 2 * c.k - 2);
  mpz_pow_ui(q_k_2.get_mpz_t(), q.get_mpz_t(), c.k - 2);
  const BigInt num = c.points - q_2k_2;
  const BigInt den = q_k_2 * (q - 1);
  if (sgn(den) == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw Error(ErrorKind::NonIntegralResult, "hypersurface count " + to_decimal(c.points) +
                                                  " does not determine an integral N_" + std::to_string(c.k));
  return num / den;
}

// --- symmetric-function method -----------------------------------------------------------------

ValueSetReport count_symmetric(const PolyInput& f, NkSource source, unsigned workers) {
  const auto start = Clock::now();
  const FieldPtr& field = field_ptr(f);
  const BigInt q = field->order_big();
  ValueSetReport report;
  report.method = CountMethod::Symmetric;
  report.q = q;

  const DensePoly rep = reduced_representative(f);
  if (rep.degree_or_minus_one() <= 0) {
    report.cardinality = 1;
    report.d = 0;
    report.seconds = since(start);
    return report;
  }
  const std::int64_t d = rep.degree_or_minus_one();
  report.d = d;

  const Evaluator eval(f);
  const PointMap map = [&eval](FieldElement x) { return eval(x); };
  EqualValueCounts nk{d, {}, source};
  switch (source) {
    case NkSource::Histogram: {
      PreimageHistogram hist = preimage_histogram(map, field, workers);
      nk = nk_from_histogram(hist, d);
      report.histogram = std::move(hist);
      break;
    }
    case NkSource::Brute:
      for (std::int64_t k = 1; k <= d; ++k) nk.n.push_back(nk_brute(map, field, static_cast<unsigned>(k), workers));
      break;
    case NkSource::Hypersurface:
      nk.n.push_back(q);
      for (std::int64_t k = 2; k <= d; ++k) {
        const auto count = count_hypersurface_points(map, field, static_cast<unsigned>(k),
                                                     HypersurfaceMode::Analytic, workers);
        nk.n.push_back(nk_from_hypersurface(count, q));
      }
      break;
  }

  const SymWeights w = sym_weights(d);
  Rational exact = 0;
  // all-integer route: d! sigma_i is an integer
  BigInt factorial = 1;
  for (std::int64_t i = 2; i <= d; ++i) factorial *= i;
  BigInt scaled = 0;
  for (std::int64_t i = 1; i <= d; ++i) {
    const Rational term = Rational(nk.n[i - 1]) * w.sigma[i - 1];
    Rational weight = Rational(factorial) * w.sigma[i - 1];
    weight.canonicalize();
    if (weight.get_den() != 1) throw Error(ErrorKind::NonIntegralResult, "d! sigma_i is not an integer");
    const BigInt iterm = nk.n[i - 1] * weight.get_num();
    if (i % 2 == 1) {
      exact += term;
      scaled += iterm;
    } else {
      exact -= term;
      scaled -= iterm;
    }
  }
  exact.canonicalize();
  if (exact.get_den() != 1)
    throw Error(ErrorKind::NonIntegralResult, "symmetric sum " + to_decimal(exact) + " is not an integer");
  if (scaled != exact.get_num() * factorial)
    throw Error(ErrorKind::NonIntegralResult, "rational and integer accumulations disagree");
  if (sgn(exact) < 0) throw Error(ErrorKind::NonIntegralResult, "symmetric sum is negative");
  report.cardinality = exact.get_num();
  report.nk = std::move(nk);
  report.seconds = since(start);
  check_bounds(report);
  return report;
}

bool within_trivial_bounds(const BigInt& cardinality, const BigInt& q, std::int64_t d) {
  if (d < 1) return cardinality == 1;
  BigInt lower;
  mpz_cdiv_q_ui(lower.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d));
  return lower <= cardinality && cardinality <= q;
}

ValueSetReport count_value_set(const PolyInput& f, CountMethod method, NkSource source, unsigned workers) {
  switch (method) {
    case CountMethod::Direct: {
      auto [report, hist] = count_direct(f, workers);
      report.histogram = std::move(hist);
      return report;
    }
    case CountMethod::Codomain: return count_codomain(reduced_representative(f), workers);
    case CountMethod::Symmetric: return count_symmetric(f, source, workers);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown counting method");
}

bool is_permutation(const PolyInput& f, CountMethod method, unsigned workers) {
  return count_value_set(f, method, NkSource::Histogram, workers).cardinality == field_of(f).order_big();
}

}  // namespace valueset
