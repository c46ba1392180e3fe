#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "basechange/complex.hpp"

namespace basechange {

// Checks of the base change map
//   phi^p : H^p(F) (x)_A k -> H^p(F (x)_A k).
// Each condition is decided along its own computational route so that the
// equivalences between them are real cross-checks:
//   phi_surjective            kernel generators of d^p, ranks over k
//   phi_surjective_via_block  N block of the block decomposition of d^p
//   cond_iii                  exhibits bases with d^p = [[0, Id], [0, 0]]
//   cond_iv                   invariant factors of d^p are units or zero

// dim_k H^p(F (x) k) by rank-nullity over k.
std::size_t residue_cohomology_dimension(const FreeComplex& c, int p);

// ker d^p + m F^p == (d^p)^{-1}(m F^{p+1}), read modulo m F^p: the residues of
// the kernel generators span ker(d^p mod m).
bool phi_surjective(const FreeComplex& c, int p);
// The N block of block_decompose(d^p) vanishes.
bool phi_surjective_via_block(const FreeComplex& c, int p);
bool cond_iii(const FreeComplex& c, int p);
bool cond_iv(const FreeComplex& c, int p);

struct PhiReport {
  int degree = 0;
  std::size_t dim_source = 0;  // dim_k H^p(F) (x) k
  std::size_t dim_target = 0;  // dim_k H^p(F (x) k)
  bool surjective = false;
  bool isomorphism = false;
  // Set when phi^p is surjective but the dimensions differ.
  std::optional<std::string> violation;
};

PhiReport phi_report(const FreeComplex& c, int p);

struct Lemma2Verdict {
  bool cond_i = false;
  bool cond_ii = false;
  bool cond_iii = false;
  bool cond_iv = false;
  bool agree = false;
  std::optional<std::string> violation;
};

Lemma2Verdict lemma2_check(const FreeComplex& c, int p);

enum class CheckStatus { holds, skipped, violated };
const char* to_string(CheckStatus status) noexcept;

struct TheoremBReport {
  int degree = 0;
  CheckStatus status = CheckStatus::skipped;
  bool lower_surjective = false;  // phi^{p-1} surjective
  bool cohomology_free = false;   // H^p free
  std::vector<int> quotients_checked;  // n with H^p (x) A/m^n == H^p(F (x) A/m^n)
  std::string message;
};

// Hypothesis: phi^p surjective (otherwise skipped). Asserts
// phi^{p-1} surjective <=> H^p free, and, when both hold, commutation of H^p
// with every representable quotient A -> A/m^n.
TheoremBReport theorem_b_check(const FreeComplex& c, int p);

struct CorollaryReport {
  CheckStatus status = CheckStatus::skipped;
  std::vector<int> quotients_checked;
  std::string message;
};

// Hypothesis: min_degree 0 and H^1(F (x) k) = 0. Asserts H^1 = 0, H^0 free
// and H^0 commuting with every representable quotient.
CorollaryReport corollary_check(const FreeComplex& c);

}  // namespace basechange
