#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "basechange/complex.hpp"

namespace basechange {

// Complex documents are JSON objects:
//
//   {
//     "ring": {"kind": "zmod-pk", "p": 2, "k": 2},
//     "min_degree": 0,
//     "ranks": [1, 1],
//     "maps": [[["2"]]]
//   }
//
// maps[i] is d^{min_degree+i} with ranks[i+1] rows and ranks[i] columns.
// Entries are always strings in the element grammar ("3", "-1/2", "1+2*t-t^2").
//
// Ring objects:
//   {"kind": "zmod-pk", "p": P, "k": K}
//   {"kind": "p-local", "p": P}
//   {"kind": "trunc-poly", "base": {"kind": "prime-field", "p": P}, "n": N}
//   {"kind": "trunc-poly", "base": {"kind": "rationals"}, "n": N}
//   {"kind": "prime-field", "p": P}
//   {"kind": "rationals"}

nlohmann::json ring_to_json(const RingDescriptor& ring);
RingDescriptor ring_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const FreeComplex& c);
// Throws ParseError (with a path such as "maps[0][1][2]" in the message),
// DimensionError, RingMismatchError, or ComplexError when d o d != 0.
FreeComplex complex_from_json(const nlohmann::json& j);

// Text wrappers. Syntax errors are reported with line and column.
FreeComplex parse_complex_document(std::string_view text);
std::string write_complex_document(const FreeComplex& c);

}  // namespace basechange
