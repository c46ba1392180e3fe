#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "basechange/errors.hpp"

namespace basechange {

// Local rings with principal maximal ideal m = (pi):
//   zmod-pk     Z/p^k,            pi = p
//   p-local     Z_(p),            pi = p
//   trunc-poly  F[t]/(t^n),       pi = t, F = F_p or Q
//   prime-field F_p,              m = 0
//   rationals   Q,                m = 0
enum class RingKind { zmod_pk, p_local, trunc_poly, prime_field, rationals };

// Valuation of zero.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

class RingDescriptor {
 public:
  static RingDescriptor zmod_pk(std::int64_t p, int k);
  static RingDescriptor p_local(std::int64_t p);
  static RingDescriptor trunc_poly_fp(std::int64_t p, int n);
  static RingDescriptor trunc_poly_q(int n);
  static RingDescriptor prime_field(std::int64_t p);
  static RingDescriptor rationals();

  RingKind kind() const noexcept { return kind_; }
  // Characteristic prime of the residue field; 0 when the residue field is Q.
  std::int64_t prime() const noexcept { return prime_; }
  // k for zmod-pk, n for trunc-poly, 1 for fields, 0 for p-local.
  int exponent() const noexcept { return exponent_; }
  // p^k for zmod-pk.
  std::int64_t modulus() const noexcept { return modulus_; }
  // Base field of trunc-poly is Q (otherwise F_p).
  bool over_rationals() const noexcept { return prime_ == 0; }

  // Smallest c with m^c = 0; nullopt for p-local (m is not nilpotent).
  std::optional<int> nilpotency_degree() const noexcept;
  bool is_field() const noexcept { return nilpotency_degree() == 1; }
  bool is_domain() const noexcept;
  bool is_finite() const noexcept;
  // Number of elements; nullopt when infinite or too large for 64 bits.
  std::optional<std::uint64_t> cardinality() const noexcept;
  // Size of k = A/m; nullopt for Q.
  std::optional<std::uint64_t> residue_cardinality() const noexcept;

  // k = A/m as a field descriptor (prime-field or rationals).
  RingDescriptor residue_field() const;

  // Flag token: "zmod-pk:2:3", "p-local:2", "trunc-poly:fp:5:3",
  // "trunc-poly:q:3", "prime-field:7", "rationals".
  std::string spec_string() const;
  static RingDescriptor parse_spec(std::string_view spec);

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;

 private:
  RingDescriptor(RingKind kind, std::int64_t prime, int exponent);

  RingKind kind_ = RingKind::rationals;
  std::int64_t prime_ = 0;
  int exponent_ = 1;
  std::int64_t modulus_ = 0;
};

bool is_prime(std::int64_t n) noexcept;

// An element of a ring described by RingDescriptor, in canonical form:
//   zmod-pk, prime-field   integer in [0, modulus)
//   p-local, rationals     reduced fraction (p does not divide the denominator)
//   trunc-poly             n coefficients, ascending powers of t
// Canonical form makes operator== value equality.
class RingElement {
 public:
  using Value = std::variant<std::int64_t, mpq_class, std::vector<std::int64_t>,
                             std::vector<mpq_class>>;

  static RingElement zero(const RingDescriptor& ring);
  static RingElement one(const RingDescriptor& ring);
  static RingElement from_integer(const RingDescriptor& ring, std::int64_t value);
  // Throws NotAUnitError when the denominator is not a unit of the ring.
  static RingElement from_rational(const RingDescriptor& ring, const mpq_class& value);
  // pi^a; zero once a reaches the nilpotency degree.
  static RingElement uniformizer_power(const RingDescriptor& ring, int a);
  // Coefficients for trunc-poly (missing entries are zero, t^i with i >= n dropped).
  static RingElement polynomial(const RingDescriptor& ring, const std::vector<mpq_class>& coeffs);

  static RingElement parse(const RingDescriptor& ring, std::string_view text);

  const RingDescriptor& ring() const noexcept { return ring_; }
  const Value& value() const noexcept { return value_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const { return valuation() == 0; }
  int valuation() const;

  RingElement operator-() const;
  friend RingElement operator+(const RingElement& x, const RingElement& y);
  friend RingElement operator-(const RingElement& x, const RingElement& y);
  friend RingElement operator*(const RingElement& x, const RingElement& y);
  RingElement& operator+=(const RingElement& y) { return *this = *this + y; }
  RingElement& operator-=(const RingElement& y) { return *this = *this - y; }
  RingElement& operator*=(const RingElement& y) { return *this = *this * y; }

  friend bool operator==(const RingElement& x, const RingElement& y);

  std::string to_string() const;

 private:
  RingElement(RingDescriptor ring, Value value);

  RingDescriptor ring_;
  Value value_;
};

enum class ArithOp { add, sub, mul };
RingElement arith(const RingElement& x, const RingElement& y, ArithOp op);

inline int valuation(const RingElement& x) { return x.valuation(); }

// Throws NotAUnitError on non-units.
RingElement inverse(const RingElement& x);

// Reduction A -> k; the result lives in ring().residue_field().
RingElement residue(const RingElement& x);

// Fixed section k -> A: representative in [0, p) or a constant polynomial.
RingElement lift(const RingDescriptor& ring, const RingElement& y);

// Writes x = u * pi^v with u a unit; returns (v, u). x must be nonzero.
std::pair<int, RingElement> split_uniformizer(const RingElement& x);

// Some q with q * y == x. Requires valuation(x) >= valuation(y).
RingElement exact_quotient(const RingElement& x, const RingElement& y);

// Finite rings only: bijection between elements and [0, cardinality).
RingElement element_at(const RingDescriptor& ring, std::uint64_t index);
std::uint64_t index_of(const RingElement& x);

}  // namespace basechange
