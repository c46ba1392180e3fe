#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "basechange/matrix.hpp"

namespace basechange {

// Bounded cochain complex of finite free modules,
//   0 -> F^{p0} -> F^{p0+1} -> ... -> F^{p0+m} -> 0,
// with maps[i] = d^{p0+i} : F^{p0+i} -> F^{p0+i+1}, a ranks[i+1] x ranks[i] matrix.
class FreeComplex {
 public:
  // Throws DimensionError on shape mismatch and ComplexError when d o d != 0.
  FreeComplex(const RingDescriptor& ring, int min_degree, std::vector<std::size_t> ranks,
              std::vector<Matrix> maps);

  // A zero-map complex; convenient for tests.
  static FreeComplex zero(const RingDescriptor& ring, int min_degree, std::vector<std::size_t> ranks);

  const RingDescriptor& ring() const noexcept { return ring_; }
  int min_degree() const noexcept { return min_degree_; }
  // min_degree() - 1 for the empty complex.
  int max_degree() const noexcept { return min_degree_ + static_cast<int>(ranks_.size()) - 1; }
  bool empty() const noexcept { return ranks_.empty(); }
  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  // Rank of F^p; 0 outside [min_degree, max_degree].
  std::size_t rank(int p) const noexcept;
  // d^p : F^p -> F^{p+1} for any p, zero-sized outside the stored range.
  Matrix differential(int p) const;

  friend bool operator==(const FreeComplex&, const FreeComplex&) = default;

 private:
  RingDescriptor ring_;
  int min_degree_;
  std::vector<std::size_t> ranks_;
  std::vector<Matrix> maps_;
};

struct ComplexViolation {
  int degree;  // d^{degree+1} o d^{degree} != 0
  std::string message;
};

// Checks shapes (throws DimensionError) and returns the first degree where
// consecutive maps fail to compose to zero.
std::optional<ComplexViolation> validate(const RingDescriptor& ring, int min_degree,
                                         const std::vector<std::size_t>& ranks,
                                         const std::vector<Matrix>& maps);
std::optional<ComplexViolation> validate(const FreeComplex& c);

// A^free_rank (+) sum_i A/(pi^{torsion_exponents[i]}).
struct ModulePresentation {
  std::size_t free_rank = 0;
  std::vector<int> torsion_exponents;  // ascending, each below the nilpotency degree

  bool is_free() const noexcept { return torsion_exponents.empty(); }
  bool is_zero() const noexcept { return free_rank == 0 && torsion_exponents.empty(); }
  // dim_k of M (x) k.
  std::size_t residue_dimension() const noexcept { return free_rank + torsion_exponents.size(); }

  std::string to_string() const;
  friend bool operator==(const ModulePresentation&, const ModulePresentation&) = default;
};

// Invariant factors of coker(relations : A^cols -> A^rows).
ModulePresentation cokernel_presentation(const Matrix& relations);

// Number of elements of the module over a finite ring; nullopt if the ring
// is infinite or the count overflows 64 bits.
std::optional<std::uint64_t> module_order(const RingDescriptor& ring, const ModulePresentation& m);

// H^p = ker d^p / im d^{p-1}; the zero module outside the support.
ModulePresentation cohomology(const FreeComplex& c, int p);

// (F, d) (x)_A k, as a complex over the residue field.
FreeComplex tensor_residue(const FreeComplex& c);

// A/m^n as a descriptor: p-local(p) -> zmod-pk(p, n); zmod-pk(p, k) -> zmod-pk(p, n)
// for n <= k; trunc-poly(F, N) -> trunc-poly(F, n) for n <= N; a field for n = 1.
// Throws UnsupportedBaseChangeError otherwise.
RingDescriptor quotient_ring(const RingDescriptor& ring, int n);
// The n for which quotient_ring(ring, n) is exercised by the theorem checks.
// p-local rings have every n; they are cut off at kPLocalQuotientDepth.
inline constexpr int kPLocalQuotientDepth = 4;
std::vector<int> representable_quotients(const RingDescriptor& ring);

RingElement project(const RingElement& x, const RingDescriptor& quotient);
Matrix project(const Matrix& a, const RingDescriptor& quotient);

FreeComplex tensor_quotient(const FreeComplex& c, int n);

// H (x)_A A/m^n, normalized: A/(pi^a) becomes B/(pi^min(a, n)), free once a >= n.
ModulePresentation tensor_presentation(const ModulePresentation& h, const RingDescriptor& ring, int n);

}  // namespace basechange
