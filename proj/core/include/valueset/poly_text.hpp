#pragma once

#include <string>
#include <string_view>

#include "valueset/polyrep.hpp"

namespace valueset {

// Text formats, one polynomial per input, '#' comments to end of line:
//
//   dense p=<p> [m=<m> mod=<c0,...,cm>]: <c0> <c1> ... <cd>
//   sparse <header>: <coeff>*x^<exp> + ...
//   shift <header>: <a>*(x+<b>)^<e> + ... [+ const <c>]
//   slp p=<p> [m=<m> mod=...] mode=strict|extended
//   r1 := one|gen|x|const <int>|add rJ rK|sub rJ rK|mul rJ rK
//   ...
//   out rI
//
// Extension-field elements are written as base-p digit strings c0.c1...c(m-1).
// An empty body or a lone 0 is the zero polynomial.
PolyInput parse_poly(std::string_view text);

std::string serialize_poly(const PolyInput& f);

// Element literal in the digit-string form used by the formats above.
std::string format_element(const Field& field, FieldElement e);

}  // namespace valueset
