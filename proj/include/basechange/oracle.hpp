#pragma once

#include <cstdint>
#include <optional>

#include "basechange/complex.hpp"

namespace basechange {

// Brute-force ground truth over finite rings (zmod-pk, prime-field,
// trunc-poly over F_p). Every element of the relevant free modules is
// enumerated; no normal forms are involved.
//
// Two implementations share each entry point: `serial` is the plain
// set-based reference, `parallel` is the OpenMP bitmap kernel. They must
// agree exactly.
enum class Execution { serial, parallel };

inline constexpr std::uint64_t kDefaultEnumerationCap = 100000;

// |A^rank|, or nullopt if A is infinite or the count exceeds 64 bits.
std::optional<std::uint64_t> free_module_size(const RingDescriptor& ring, std::size_t rank);

// True when both F^{p-1} and F^p fit under the cap.
bool oracle_can_enumerate(const FreeComplex& c, int p, std::uint64_t cap = kDefaultEnumerationCap);

// |ker d^p| / |im d^{p-1}|. Throws OracleTooLargeError past the cap.
std::uint64_t brute_cohomology_order(const FreeComplex& c, int p,
                                     std::uint64_t cap = kDefaultEnumerationCap,
                                     Execution execution = Execution::parallel);

// ker d^p + m F^p == (d^p)^{-1}(m F^{p+1}) as subsets of F^p.
// x lies in ker d^p + m F^p exactly when x mod m equals k mod m for some
// k in ker d^p, so the left side is enumerated through residue classes.
bool brute_phi_surjective(const FreeComplex& c, int p, std::uint64_t cap = kDefaultEnumerationCap,
                          Execution execution = Execution::parallel);

}  // namespace basechange
