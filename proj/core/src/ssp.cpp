#include "valueset/ssp.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "valueset/charsum.hpp"

namespace valueset {

namespace {

using u64 = std::uint64_t;

u64 desk_scale_prime(const BigInt& p) {
  auto small = big_to_u64(p);
  if (!small || *small > kEnumerationCap)
    throw Error(ErrorKind::DeskScaleExceeded, "prime " + to_decimal(p) + " is too large to enumerate F_p");
  return *small;
}

BigInt pow2(std::size_t e) { return BigInt(1) << static_cast<mp_bitcnt_t>(e); }

}  // namespace

BigInt SubsetSumInstance::total() const {
  BigInt s = 0;
  for (const auto& v : a) s += v;
  return s;
}

void SubsetSumInstance::validate() const {
  if (a.empty()) throw Error(ErrorKind::InvalidArgument, "subset-sum instance needs t >= 1");
  for (const auto& v : a)
    if (sgn(v) <= 0) throw Error(ErrorKind::InvalidArgument, "subset-sum elements must be positive");
  if (sgn(b) < 0) throw Error(ErrorKind::InvalidArgument, "target must be nonnegative");
}

SubsetSumInstance parse_ssp(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.emplace_back(no, line);
  }
  if (lines.size() != 2) throw SyntaxError(lines.empty() ? 1 : lines.back().first, 1,
                                           "expected a header line and one line of elements");
  SubsetSumInstance inst;
  {
    std::istringstream h(lines[0].second);
    std::string kw, bpart;
    h >> kw >> bpart;
    std::string extra;
    if (kw != "ssp" || bpart.rfind("b=", 0) != 0 || (h >> extra))
      throw SyntaxError(lines[0].first, 1, "expected 'ssp b=<b>'");
    const std::string digits = bpart.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw SyntaxError(lines[0].first, 5, "b must be a nonnegative integer");
    inst.b = BigInt(digits, 10);
  }
  std::istringstream body(lines[1].second);
  std::string tok;
  while (body >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw SyntaxError(lines[1].first, 1, "element '" + tok + "' is not a positive integer");
    inst.a.emplace_back(tok, 10);
  }
  inst.validate();
  return inst;
}

std::string serialize_ssp(const SubsetSumInstance& inst) {
  std::string s = "ssp b=" + to_decimal(inst.b) + "\n";
  for (std::size_t i = 0; i < inst.a.size(); ++i) s += (i ? " " : "") + to_decimal(inst.a[i]);
  return s + "\n";
}

BigInt find_prime_above(const BigInt& lower, const PrimePolicy& policy) {
  if (lower < 2) throw Error(ErrorKind::InvalidArgument, "prime search needs lower >= 2");
  if (policy.kind == PrimePolicyKind::Random) {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(big_from_u64(policy.seed));
    const std::size_t tries = 64 * mpz_sizeinbase(lower.get_mpz_t(), 2) + 64;
    for (std::size_t i = 0; i < tries; ++i) {
      const BigInt cand = lower + 1 + BigInt(rng.get_z_range(lower));
      if (is_prime(cand)) return cand;
    }
    return find_prime_above(2 * lower);
  }
  BigInt cand = lower + 1;
  while (!is_prime(cand)) ++cand;
  return cand;
}

SparseShiftPoly build_beta(const SubsetSumInstance& inst, std::uint64_t p) {
  inst.validate();
  if (p < 3 || !is_prime(p)) throw Error(ErrorKind::PrimeTooSmall, "beta needs an odd prime");
  if (big_from_u64(p) <= inst.total())
    throw Error(ErrorKind::PrimeTooSmall, "p = " + std::to_string(p) + " does not exceed sum a_i");
  const FieldPtr field = make_field(p, 1);
  const Field& F = *field;
  const FieldElement inv2{(p + 1) / 2};
  const BigInt half = big_from_u64((p - 1) / 2), full = big_from_u64(p - 1);
  std::vector<ShiftTerm> terms;
  for (std::size_t i = 0; i < inst.t(); ++i) {
    const FieldElement coeff = F.mul(F.from_big(inst.a[i]), inv2);
    const FieldElement shift = F.from_int(static_cast<std::int64_t>(i));
    terms.push_back({coeff, shift, half});
    terms.push_back({coeff, shift, full});
  }
  return SparseShiftPoly(field, std::move(terms), F.neg(F.from_big(inst.b)));
}

std::shared_ptr<const std::vector<std::uint8_t>> cached_alpha_table(std::uint64_t p) {
  static std::mutex mu;
  static std::map<u64, std::shared_ptr<const std::vector<std::uint8_t>>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(p); it != cache.end()) return it->second;
  if (cache.size() >= 16) cache.clear();
  auto table = std::make_shared<const std::vector<std::uint8_t>>(alpha_table(alpha_poly(p), 1));
  cache.emplace(p, table);
  return table;
}

RootDecision decide_ssp_via_root(const SubsetSumInstance& inst, const PrimePolicy& policy, unsigned workers) {
  inst.validate();
  RootDecision out;
  const BigInt total = inst.total();
  if (inst.b > total) {
    out.short_circuit = true;
    return out;
  }
  const u64 p = desk_scale_prime(find_prime_above(std::max(pow2(3 * inst.t()), total), policy));
  out.p = p;
  const auto alpha = cached_alpha_table(p);
  const SparseShiftPoly beta = build_beta(inst, p);
  std::vector<u64> a(inst.t());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = *big_to_u64(inst.a[i]);
  const u64 b = *big_to_u64(inst.b);

  // beta(x) = sum a_{i+1} alpha(x+i) - b; every a_i and b is below p
  std::vector<std::optional<u64>> first_root(range_count(p, workers));
  parallel_ranges(p, workers, [&](IndexRange r, std::size_t slot) {
    for (u64 x = r.begin; x < r.end; ++x) {
      u64 s = 0;
      for (std::size_t i = 0; i < a.size(); ++i)
        if ((*alpha)[(x + i) % p]) s += a[i];
      if (s % p == b) {
        first_root[slot] = x;
        return;
      }
    }
  });
  for (const auto& r : first_root) {
    if (r) {
      out.answer = true;
      out.witness = FieldElement{*r};
      break;
    }
  }
  return out;
}

CountingPoly::CountingPoly(const SubsetSumInstance& inst, std::uint64_t p) : inst_(inst), p_(p) {
  inst_.validate();
  const BigInt bound = std::max(pow2(3 * inst_.t()), BigInt(2 * inst_.total()));
  if (big_from_u64(p) <= bound)
    throw Error(ErrorKind::PrimeTooSmall, "counting polynomial needs p > max(2^{3t}, 2 sum a_i)");
  beta_ = build_beta(inst_, p);
  field_ = beta_.field_ptr();
  for (const auto& v : inst_.a) a_mod_.push_back(big_mod_u64(v, p));
  b_mod_ = big_mod_u64(inst_.b, p);
  if (p <= kEnumerationCap) alpha_ = cached_alpha_table(p);
}

std::uint64_t CountingPoly::beta_value(std::uint64_t x) const {
  const Field& F = *field_;
  if (!alpha_) return evaluate(PolyInput{beta_}, FieldElement{x}).index();
  u64 s = 0;
  for (std::size_t i = 0; i < a_mod_.size(); ++i)
    if ((*alpha_)[(x + i) % p_]) s = (s + a_mod_[i]) % p_;
  return F.sub(FieldElement{s}, FieldElement{b_mod_}).index();
}

std::uint64_t CountingPoly::weight(std::uint64_t x) const {
  u64 w = 0;
  if (alpha_) {
    for (std::size_t i = 0; i < a_mod_.size(); ++i)
      if ((*alpha_)[(x + i) % p_]) w |= u64{1} << i;
    return w;
  }
  const auto g = alpha_poly(p_);
  const auto bits = pattern_map(g, static_cast<unsigned>(a_mod_.size()), FieldElement{x});
  for (std::size_t i = 0; i < bits.size(); ++i) w |= u64{bits[i]} << i;
  return w;
}

FieldElement CountingPoly::operator()(FieldElement x) const {
  if (beta_value(x.index()) != 0) return FieldElement{0};
  // 2^t < p, so the weight is already reduced
  return FieldElement{weight(x.index())};
}

Slp CountingPoly::to_slp() const {
  SlpBuilder s(field_);
  const auto one = s.one();
  const auto x = s.x();
  const auto inv2 = s.constant((p_ + 1) / 2);
  const BigInt half = big_from_u64((p_ - 1) / 2);
  std::vector<std::uint32_t> alpha(inst_.t());
  for (std::size_t i = 0; i < inst_.t(); ++i) {
    const auto xi = i == 0 ? x : s.add(x, s.constant(i));
    const auto h = s.pow(xi, half);  // x^{(p-1)/2}
    const auto full = s.mul(h, h);   // x^{p-1}
    alpha[i] = s.mul(inv2, s.add(h, full));
  }
  auto beta = s.mul(s.constant(a_mod_[0]), alpha[0]);
  for (std::size_t i = 1; i < inst_.t(); ++i) beta = s.add(beta, s.mul(s.constant(a_mod_[i]), alpha[i]));
  beta = s.sub(beta, s.constant(b_mod_));
  const auto indicator = s.sub(one, s.pow(beta, big_from_u64(p_ - 1)));
  auto weight = alpha[0];
  for (std::size_t i = 1; i < inst_.t(); ++i) weight = s.add(weight, s.mul(s.constant(u64{1} << i), alpha[i]));
  const auto out = s.mul(indicator, weight);
  return std::move(s).finish(out);
}

CountingPoly build_counting_poly(const SubsetSumInstance& inst, std::uint64_t p) { return CountingPoly(inst, p); }

SspCount count_ssp_via_valueset(const SubsetSumInstance& inst, const PrimePolicy& policy, unsigned workers) {
  inst.validate();
  SspCount out;
  const BigInt total = inst.total();
  if (inst.b > total) {
    out.count = 0;
    out.short_circuit = true;
    return out;
  }
  if (sgn(inst.b) == 0) {
    out.count = 1;
    out.short_circuit = true;
    return out;
  }
  const u64 p = desk_scale_prime(find_prime_above(std::max(pow2(3 * inst.t()), BigInt(2 * total)), policy));
  const CountingPoly f(inst, p);
  auto [report, hist] = count_direct([&f](FieldElement x) { return f(x); }, f.field(), workers);
  out.p = p;
  out.value_set_size = hist.num_values();
  for (const auto& [y, c] : hist.entries) out.values.push_back(y);
  out.count = report.cardinality - 1;
  return out;
}

namespace {

template <typename Visit>
void for_each_subset_sum(const SubsetSumInstance& inst, unsigned workers, Visit&& visit) {
  inst.validate();
  if (inst.t() > 24) throw Error(ErrorKind::DeskScaleExceeded, "subset enumeration is limited to t <= 24");
  const u64 masks = u64{1} << inst.t();
  parallel_ranges(masks, workers, [&](IndexRange r, std::size_t slot) {
    for (u64 mask = r.begin; mask < r.end; ++mask) {
      BigInt s = 0;
      for (std::size_t i = 0; i < inst.t(); ++i)
        if ((mask >> i) & 1) s += inst.a[i];
      visit(slot, s == inst.b);
    }
  });
}

}  // namespace

bool brute_subset_decision(const SubsetSumInstance& inst, unsigned workers) {
  return sgn(brute_subset_count(inst, workers)) > 0;
}

BigInt brute_subset_count(const SubsetSumInstance& inst, unsigned workers) {
  inst.validate();
  const u64 masks = inst.t() <= 24 ? u64{1} << inst.t() : 0;
  std::vector<u64> hits(range_count(masks, workers), 0);
  for_each_subset_sum(inst, workers, [&](std::size_t slot, bool hit) {
    if (hit) ++hits[slot];
  });
  u64 total = 0;
  for (u64 h : hits) total += h;
  return big_from_u64(total);
}

}  // namespace valueset
