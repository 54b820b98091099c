#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "valueset/bigint.hpp"
#include "valueset/counting.hpp"
#include "valueset/ffield.hpp"
#include "valueset/polyrep.hpp"

namespace valueset {

// Subset-sum instance (a_1..a_t, b); a is a multiset of positive integers.
struct SubsetSumInstance {
  std::vector<BigInt> a;
  BigInt b;

  std::size_t t() const { return a.size(); }
  BigInt total() const;
  void validate() const;
};

// File format: line 1 "ssp b=<b>", line 2 the a_i separated by spaces.
SubsetSumInstance parse_ssp(std::string_view text);
std::string serialize_ssp(const SubsetSumInstance& inst);

enum class PrimePolicyKind { Smallest, Random };

struct PrimePolicy {
  PrimePolicyKind kind = PrimePolicyKind::Smallest;
  std::uint64_t seed = 0;
};

// Prime > lower. Random draws from (lower, 2*lower] with a seeded generator and falls
// back to the smallest prime above 2*lower if every draw misses.
BigInt find_prime_above(const BigInt& lower, const PrimePolicy& policy = {});

// beta(x) = sum_{i=0}^{t-1} a_{i+1} alpha(x+i) - b as a shift-sparse polynomial over F_p.
SparseShiftPoly build_beta(const SubsetSumInstance& inst, std::uint64_t p);

// alpha(0..p-1), memoized per prime.
std::shared_ptr<const std::vector<std::uint8_t>> cached_alpha_table(std::uint64_t p);

struct RootDecision {
  bool answer = false;
  std::optional<std::uint64_t> p;
  std::optional<FieldElement> witness;  // smallest root
  bool short_circuit = false;           // b > sum a_i, answered without a field
};

RootDecision decide_ssp_via_root(const SubsetSumInstance& inst, const PrimePolicy& policy = {},
                                 unsigned workers = default_workers());

/// f(x) = (1 - beta(x)^{p-1}) * sum_{i=0}^{t-1} alpha(x+i) 2^i over F_p.
class CountingPoly {
 public:
  CountingPoly(const SubsetSumInstance& inst, std::uint64_t p);

  const FieldPtr& field() const { return field_; }
  const SparseShiftPoly& beta() const { return beta_; }
  std::uint64_t p() const { return p_; }

  // beta(x)^{p-1} is taken as 0 at roots of beta and 1 elsewhere.
  FieldElement operator()(FieldElement x) const;
  std::uint64_t beta_value(std::uint64_t x) const;
  std::uint64_t weight(std::uint64_t x) const;

  // Extended-mode SLP with explicit square-and-multiply chains for every power.
  Slp to_slp() const;

 private:
  SubsetSumInstance inst_;
  std::uint64_t p_;
  FieldPtr field_;
  SparseShiftPoly beta_;
  std::vector<std::uint64_t> a_mod_;
  std::uint64_t b_mod_;
  std::shared_ptr<const std::vector<std::uint8_t>> alpha_;
};

CountingPoly build_counting_poly(const SubsetSumInstance& inst, std::uint64_t p);

struct SspCount {
  BigInt count;
  std::optional<std::uint64_t> p;
  std::optional<std::uint64_t> value_set_size;
  std::vector<std::uint64_t> values;  // V_f as canonical indices
  bool short_circuit = false;
};

SspCount count_ssp_via_valueset(const SubsetSumInstance& inst, const PrimePolicy& policy = {},
                                unsigned workers = default_workers());

bool brute_subset_decision(const SubsetSumInstance& inst, unsigned workers = default_workers());
BigInt brute_subset_count(const SubsetSumInstance& inst, unsigned workers = default_workers());

}  // namespace valueset
