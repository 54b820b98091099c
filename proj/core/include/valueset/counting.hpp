#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "valueset/bigint.hpp"
#include "valueset/ffield.hpp"
#include "valueset/polyrep.hpp"

namespace valueset {

enum class CountMethod { Direct, Codomain, Symmetric };
enum class NkSource { Histogram, Brute, Hypersurface };

std::string_view to_string(CountMethod m);
std::string_view to_string(NkSource s);

// Any function F_q -> F_q that can be sampled pointwise, e.g. an Evaluator.
using PointMap = std::function<FieldElement(FieldElement)>;

/// c_y = |f^{-1}(y)| for every attained value y, sorted by canonical index of y.
struct PreimageHistogram {
  FieldPtr field;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

  std::uint64_t num_values() const { return entries.size(); }
  std::uint64_t max_preimage() const;
  std::uint64_t total() const;
};

struct EqualValueCounts {
  std::int64_t d = 0;
  std::vector<BigInt> n;  // n[k-1] = N_k
  NkSource source = NkSource::Histogram;
};

/// sigma[i-1] = e_i(1, 1/2, ..., 1/d).
struct SymWeights {
  std::int64_t d = 0;
  std::vector<Rational> sigma;
};

struct ValueSetReport {
  BigInt cardinality;
  CountMethod method = CountMethod::Direct;
  BigInt q;
  std::optional<std::int64_t> d;  // exact degree of the reduced representative when known
  std::optional<PreimageHistogram> histogram;
  std::optional<EqualValueCounts> nk;
  double seconds = 0.0;
};

struct HypersurfaceCount {
  unsigned k = 0;
  BigInt points;
};

enum class HypersurfaceMode {
  Analytic,  // enumerate x-tuples, count z-solutions by the rank of the linear form
  Literal,   // enumerate every (x, z); the independent oracle
};

PreimageHistogram preimage_histogram(const PointMap& f, const FieldPtr& field,
                                     unsigned workers = default_workers());

std::pair<ValueSetReport, PreimageHistogram> count_direct(const PolyInput& f,
                                                          unsigned workers = default_workers());
std::pair<ValueSetReport, PreimageHistogram> count_direct(const PointMap& f, const FieldPtr& field,
                                                          unsigned workers = default_workers());

// True iff g has a root in F_q; false for nonzero constants. ZeroPolynomial on g = 0.
bool has_root(const DensePoly& g);

ValueSetReport count_codomain(const DensePoly& f, unsigned workers = default_workers());

SymWeights sym_weights(std::int64_t d);
// Newton's identities on the power sums of 1, 2, ..., d, rescaled by d!.
SymWeights sym_weights_newton(std::int64_t d);
// Coefficients of prod_{j=1}^d (1 + X/j).
SymWeights sym_weights_product(std::int64_t d);

EqualValueCounts nk_from_histogram(const PreimageHistogram& hist, std::int64_t d);
BigInt nk_brute(const PointMap& f, const FieldPtr& field, unsigned k,
                unsigned workers = default_workers());

HypersurfaceCount count_hypersurface_points(const PointMap& f, const FieldPtr& field, unsigned k,
                                            HypersurfaceMode mode = HypersurfaceMode::Analytic,
                                            unsigned workers = default_workers());
BigInt nk_from_hypersurface(const HypersurfaceCount& c, const BigInt& q);

/// |V_f| = sum_{i=1}^d (-1)^{i-1} N_i sigma_i over the degree-d reduced representative.
ValueSetReport count_symmetric(const PolyInput& f, NkSource source,
                               unsigned workers = default_workers());

// Permutation test via the chosen method (the symmetric method uses histogram counts).
bool is_permutation(const PolyInput& f, CountMethod method = CountMethod::Direct,
                    unsigned workers = default_workers());

// sum_{i=1}^d (-1)^{i-1} k^i sigma_i(1, ..., 1/d); equals 1 for 1 <= k <= d.
Rational omega_identity_check(std::int64_t d, std::int64_t k);

// ceil(q/d) <= |V_f| <= q for exact degree d >= 1.
bool within_trivial_bounds(const BigInt& cardinality, const BigInt& q, std::int64_t d);

ValueSetReport count_value_set(const PolyInput& f, CountMethod method, NkSource source,
                               unsigned workers = default_workers());

}  // namespace valueset
