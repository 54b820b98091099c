#pragma once

#include <cstdint>
#include <vector>

#include "valueset/bigint.hpp"
#include "valueset/ffield.hpp"
#include "valueset/polyrep.hpp"

namespace valueset {

// The {0,1}-valued residuosity indicator alpha(x) = (x^{(p-1)/2} + x^{p-1}) / 2 over F_p.
struct CharacterGadget {
  std::uint64_t p = 0;
  FieldPtr field;
  SparsePoly alpha;
};

/// Exact counts of the patterns (alpha(x), ..., alpha(x+t-1)) over x in F_p, with the
/// interval p/2^t -+ t(3 + sqrt p) around each.
struct PatternCoverage {
  std::uint64_t p = 0;
  unsigned t = 0;
  std::vector<std::uint64_t> counts;  // bit i-1 of the index is alpha(x+i-1)
  // Inner bounds p/2^t -+ t(3 + floor(sqrt p)) and outer bounds with floor(sqrt p) + 1.
  Rational weil_low_inner, weil_high_inner;
  Rational weil_low_outer, weil_high_outer;

  bool onto() const;
  // Lower end p/2^t - t(3 + sqrt p) > 0, decided exactly.
  bool lower_bound_positive() const;
  // count lies in the open interval, decided exactly.
  bool strictly_inside(std::uint64_t count) const;
};

// +1, -1 or 0; EvenCharacteristic unless the field is F_p with p odd.
int chi(FieldElement x, const Field& field);

CharacterGadget alpha_poly(std::uint64_t p);

std::vector<std::uint8_t> pattern_map(const CharacterGadget& g, unsigned t, FieldElement x);

// Values alpha(0), ..., alpha(p-1) by evaluating the gadget polynomial.
std::vector<std::uint8_t> alpha_table(const CharacterGadget& g, unsigned workers = default_workers());

PatternCoverage coverage(std::uint64_t p, unsigned t, unsigned workers = default_workers());

bool is_onto(std::uint64_t p, unsigned t, unsigned workers = default_workers());

// 2^{3t} < p: the range in which every pattern is guaranteed to occur.
bool onto_guaranteed(std::uint64_t p, unsigned t);

}  // namespace valueset
