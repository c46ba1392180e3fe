#include "basechange/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace basechange {

namespace {

std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

// Inverse of a modulo m; requires gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod_reduce(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return mod_reduce(old_s, m);
}

std::int64_t mpz_mod(const mpz_class& x, std::int64_t m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

bool mpz_divisible(const mpz_class& x, std::int64_t p) {
  return mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

// p-adic order of a nonzero integer.
int mpz_order(mpz_class x, std::int64_t p) {
  int v = 0;
  while (mpz_divisible(x, p)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

// Rational a/b mapped into Z/m with p | m; throws if p | b.
std::int64_t rational_mod(const mpq_class& q, std::int64_t p, std::int64_t m) {
  if (mpz_divisible(q.get_den(), p))
    throw NotAUnitError("denominator " + q.get_den().get_str() + " is divisible by " +
                        std::to_string(p));
  return mod_mul(mpz_mod(q.get_num(), m), mod_inverse(mpz_mod(q.get_den(), m), m), m);
}

void require_same_ring(const RingElement& x, const RingElement& y) {
  if (!(x.ring() == y.ring()))
    throw RingMismatchError("ring mismatch: " + x.ring().spec_string() + " vs " +
                            y.ring().spec_string());
}

std::string rational_string(const mpq_class& q) { return q.get_str(); }

}  // namespace

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// RingDescriptor

RingDescriptor::RingDescriptor(RingKind kind, std::int64_t prime, int exponent)
    : kind_(kind), prime_(prime), exponent_(exponent) {
  if (prime_ != 0 && !is_prime(prime_))
    throw std::invalid_argument(std::to_string(prime_) + " is not prime");
  if (prime_ > (std::int64_t{1} << 31))
    throw std::invalid_argument("prime " + std::to_string(prime_) + " is too large");
  if (kind_ == RingKind::zmod_pk || kind_ == RingKind::prime_field) {
    if (exponent_ < 1) throw std::invalid_argument("exponent must be positive");
    __int128 m = 1;
    for (int i = 0; i < exponent_; ++i) {
      m *= prime_;
      if (m > (__int128{1} << 62)) throw std::invalid_argument("modulus p^k too large");
    }
    modulus_ = static_cast<std::int64_t>(m);
  } else if (kind_ == RingKind::trunc_poly) {
    if (exponent_ < 1) throw std::invalid_argument("truncation degree must be positive");
    modulus_ = prime_;
  } else if (kind_ == RingKind::p_local) {
    modulus_ = 0;
  }
}

RingDescriptor RingDescriptor::zmod_pk(std::int64_t p, int k) {
  if (p == 0) throw std::invalid_argument("0 is not prime");
  return RingDescriptor(RingKind::zmod_pk, p, k);
}
RingDescriptor RingDescriptor::p_local(std::int64_t p) {
  if (p == 0) throw std::invalid_argument("0 is not prime");
  return RingDescriptor(RingKind::p_local, p, 0);
}
RingDescriptor RingDescriptor::trunc_poly_fp(std::int64_t p, int n) {
  if (p == 0) throw std::invalid_argument("0 is not prime");
  return RingDescriptor(RingKind::trunc_poly, p, n);
}
RingDescriptor RingDescriptor::trunc_poly_q(int n) {
  return RingDescriptor(RingKind::trunc_poly, 0, n);
}
RingDescriptor RingDescriptor::prime_field(std::int64_t p) {
  if (p == 0) throw std::invalid_argument("0 is not prime");
  return RingDescriptor(RingKind::prime_field, p, 1);
}
RingDescriptor RingDescriptor::rationals() { return RingDescriptor(RingKind::rationals, 0, 1); }

std::optional<int> RingDescriptor::nilpotency_degree() const noexcept {
  switch (kind_) {
    case RingKind::zmod_pk:
    case RingKind::trunc_poly:
      return exponent_;
    case RingKind::p_local:
      return std::nullopt;
    case RingKind::prime_field:
    case RingKind::rationals:
      return 1;
  }
  return std::nullopt;
}

bool RingDescriptor::is_domain() const noexcept { return !nilpotency_degree() || is_field(); }

bool RingDescriptor::is_finite() const noexcept {
  switch (kind_) {
    case RingKind::zmod_pk:
    case RingKind::prime_field:
      return true;
    case RingKind::trunc_poly:
      return !over_rationals();
    default:
      return false;
  }
}

std::optional<std::uint64_t> RingDescriptor::cardinality() const noexcept {
  if (!is_finite()) return std::nullopt;
  if (kind_ != RingKind::trunc_poly) return static_cast<std::uint64_t>(modulus_);
  __int128 size = 1;
  for (int i = 0; i < exponent_; ++i) {
    size *= prime_;
    if (size > (__int128{1} << 63)) return std::nullopt;
  }
  return static_cast<std::uint64_t>(size);
}

std::optional<std::uint64_t> RingDescriptor::residue_cardinality() const noexcept {
  if (prime_ == 0) return std::nullopt;
  return static_cast<std::uint64_t>(prime_);
}

RingDescriptor RingDescriptor::residue_field() const {
  return prime_ == 0 ? rationals() : prime_field(prime_);
}

std::string RingDescriptor::spec_string() const {
  switch (kind_) {
    case RingKind::zmod_pk:
      return "zmod-pk:" + std::to_string(prime_) + ":" + std::to_string(exponent_);
    case RingKind::p_local:
      return "p-local:" + std::to_string(prime_);
    case RingKind::trunc_poly:
      if (over_rationals()) return "trunc-poly:q:" + std::to_string(exponent_);
      return "trunc-poly:fp:" + std::to_string(prime_) + ":" + std::to_string(exponent_);
    case RingKind::prime_field:
      return "prime-field:" + std::to_string(prime_);
    case RingKind::rationals:
      return "rationals";
  }
  return {};
}

RingDescriptor RingDescriptor::parse_spec(std::string_view spec) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(c);
    }
  }
  parts.push_back(current);

  auto number = [&](std::size_t i) -> std::int64_t {
    if (i >= parts.size()) throw ParseError("ring spec '" + std::string(spec) + "': missing field");
    const std::string& s = parts[i];
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("ring spec '" + std::string(spec) + "': expected a positive integer, got '" +
                       s + "'");
    if (s.size() > 12) throw ParseError("ring spec '" + std::string(spec) + "': number too large");
    return std::stoll(s);
  };
  auto expect_fields = [&](std::size_t n) {
    if (parts.size() != n)
      throw ParseError("ring spec '" + std::string(spec) + "': expected " + std::to_string(n) +
                       " fields");
  };

  const std::string& kind = parts[0];
  try {
    if (kind == "zmod-pk") {
      expect_fields(3);
      return zmod_pk(number(1), static_cast<int>(number(2)));
    }
    if (kind == "p-local") {
      expect_fields(2);
      return p_local(number(1));
    }
    if (kind == "trunc-poly") {
      if (parts.size() >= 2 && parts[1] == "fp") {
        expect_fields(4);
        return trunc_poly_fp(number(2), static_cast<int>(number(3)));
      }
      if (parts.size() >= 2 && parts[1] == "q") {
        expect_fields(3);
        return trunc_poly_q(static_cast<int>(number(2)));
      }
      throw ParseError("ring spec '" + std::string(spec) + "': trunc-poly base must be 'fp' or 'q'");
    }
    if (kind == "prime-field") {
      expect_fields(2);
      return prime_field(number(1));
    }
    if (kind == "rationals") {
      expect_fields(1);
      return rationals();
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError("ring spec '" + std::string(spec) + "': " + e.what());
  }
  throw ParseError("ring spec '" + std::string(spec) + "': unknown ring kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(RingDescriptor ring, Value value)
    : ring_(ring), value_(std::move(value)) {}

RingElement RingElement::zero(const RingDescriptor& ring) { return from_integer(ring, 0); }
RingElement RingElement::one(const RingDescriptor& ring) { return from_integer(ring, 1); }

RingElement RingElement::from_integer(const RingDescriptor& ring, std::int64_t value) {
  switch (ring.kind()) {
    case RingKind::zmod_pk:
    case RingKind::prime_field:
      return RingElement(ring, mod_reduce(value, ring.modulus()));
    case RingKind::p_local:
    case RingKind::rationals:
      return RingElement(ring, mpq_class(mpz_class(static_cast<long>(value))));
    case RingKind::trunc_poly:
      if (ring.over_rationals()) {
        std::vector<mpq_class> c(ring.exponent());
        c[0] = mpq_class(mpz_class(static_cast<long>(value)));
        return RingElement(ring, std::move(c));
      } else {
        std::vector<std::int64_t> c(ring.exponent(), 0);
        c[0] = mod_reduce(value, ring.prime());
        return RingElement(ring, std::move(c));
      }
  }
  throw std::logic_error("unreachable");
}

RingElement RingElement::from_rational(const RingDescriptor& ring, const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  switch (ring.kind()) {
    case RingKind::zmod_pk:
    case RingKind::prime_field:
      return RingElement(ring, rational_mod(q, ring.prime(), ring.modulus()));
    case RingKind::p_local:
      if (mpz_divisible(q.get_den(), ring.prime()))
        throw NotAUnitError("denominator " + q.get_den().get_str() + " is divisible by " +
                            std::to_string(ring.prime()) + " in " + ring.spec_string());
      return RingElement(ring, q);
    case RingKind::rationals:
      return RingElement(ring, q);
    case RingKind::trunc_poly:
      return polynomial(ring, {q});
  }
  throw std::logic_error("unreachable");
}

RingElement RingElement::polynomial(const RingDescriptor& ring, const std::vector<mpq_class>& coeffs) {
  if (ring.kind() != RingKind::trunc_poly) {
    mpq_class sum = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      if (i > 0) throw ParseError("ring " + ring.spec_string() + " has no variable t");
      sum += coeffs[i];
    }
    return from_rational(ring, sum);
  }
  const auto n = static_cast<std::size_t>(ring.exponent());
  if (ring.over_rationals()) {
    std::vector<mpq_class> c(n);
    for (std::size_t i = 0; i < std::min(n, coeffs.size()); ++i) {
      c[i] = coeffs[i];
      c[i].canonicalize();
    }
    return RingElement(ring, std::move(c));
  }
  std::vector<std::int64_t> c(n, 0);
  for (std::size_t i = 0; i < std::min(n, coeffs.size()); ++i)
    c[i] = rational_mod(coeffs[i], ring.prime(), ring.prime());
  return RingElement(ring, std::move(c));
}

RingElement RingElement::uniformizer_power(const RingDescriptor& ring, int a) {
  if (a < 0) throw std::invalid_argument("negative uniformizer exponent");
  auto nil = ring.nilpotency_degree();
  if (nil && a >= *nil) return zero(ring);
  if (a == 0) return one(ring);
  switch (ring.kind()) {
    case RingKind::zmod_pk: {
      std::int64_t v = 1;
      for (int i = 0; i < a; ++i) v *= ring.prime();
      return RingElement(ring, v);
    }
    case RingKind::p_local: {
      mpz_class v;
      mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(ring.prime()),
                    static_cast<unsigned long>(a));
      return RingElement(ring, mpq_class(v));
    }
    case RingKind::trunc_poly: {
      std::vector<mpq_class> c(a + 1);
      c[a] = 1;
      return polynomial(ring, c);
    }
    default:
      break;
  }
  throw std::logic_error("unreachable");
}

bool RingElement::is_zero() const {
  return std::visit(
      [](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>)
          return v == 0;
        else if constexpr (std::is_same_v<T, mpq_class>)
          return sgn(v) == 0;
        else
          return std::all_of(v.begin(), v.end(), [](const auto& c) { return c == 0; });
      },
      value_);
}

bool RingElement::is_one() const { return *this == one(ring_); }

int RingElement::valuation() const {
  if (is_zero()) return kInfiniteValuation;
  switch (ring_.kind()) {
    case RingKind::prime_field:
    case RingKind::rationals:
      return 0;
    case RingKind::zmod_pk: {
      std::int64_t v = std::get<std::int64_t>(value_);
      int order = 0;
      while (v % ring_.prime() == 0) {
        v /= ring_.prime();
        ++order;
      }
      return order;
    }
    case RingKind::p_local:
      return mpz_order(std::get<mpq_class>(value_).get_num(), ring_.prime());
    case RingKind::trunc_poly:
      return std::visit(
          [](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::vector<std::int64_t>> ||
                          std::is_same_v<T, std::vector<mpq_class>>) {
              for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) return static_cast<int>(i);
            }
            return kInfiniteValuation;
          },
          value_);
  }
  return kInfiniteValuation;
}

RingElement RingElement::operator-() const { return zero(ring_) - *this; }

RingElement operator+(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  const RingDescriptor& ring = x.ring_;
  switch (ring.kind()) {
    case RingKind::zmod_pk:
    case RingKind::prime_field: {
      std::int64_t s = std::get<std::int64_t>(x.value_) + std::get<std::int64_t>(y.value_);
      if (s >= ring.modulus()) s -= ring.modulus();
      return RingElement(ring, s);
    }
    case RingKind::p_local:
    case RingKind::rationals:
      return RingElement(ring, mpq_class(std::get<mpq_class>(x.value_) + std::get<mpq_class>(y.value_)));
    case RingKind::trunc_poly:
      if (ring.over_rationals()) {
        auto c = std::get<std::vector<mpq_class>>(x.value_);
        const auto& d = std::get<std::vector<mpq_class>>(y.value_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
        return RingElement(ring, std::move(c));
      } else {
        auto c = std::get<std::vector<std::int64_t>>(x.value_);
        const auto& d = std::get<std::vector<std::int64_t>>(y.value_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + d[i]) % ring.prime();
        return RingElement(ring, std::move(c));
      }
  }
  throw std::logic_error("unreachable");
}

RingElement operator-(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  const RingDescriptor& ring = x.ring_;
  switch (ring.kind()) {
    case RingKind::zmod_pk:
    case RingKind::prime_field: {
      std::int64_t s = std::get<std::int64_t>(x.value_) - std::get<std::int64_t>(y.value_);
      if (s < 0) s += ring.modulus();
      return RingElement(ring, s);
    }
    case RingKind::p_local:
    case RingKind::rationals:
      return RingElement(ring, mpq_class(std::get<mpq_class>(x.value_) - std::get<mpq_class>(y.value_)));
    case RingKind::trunc_poly:
      if (ring.over_rationals()) {
        auto c = std::get<std::vector<mpq_class>>(x.value_);
        const auto& d = std::get<std::vector<mpq_class>>(y.value_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= d[i];
        return RingElement(ring, std::move(c));
      } else {
        auto c = std::get<std::vector<std::int64_t>>(x.value_);
        const auto& d = std::get<std::vector<std::int64_t>>(y.value_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod_reduce(c[i] - d[i], ring.prime());
        return RingElement(ring, std::move(c));
      }
  }
  throw std::logic_error("unreachable");
}

RingElement operator*(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  const RingDescriptor& ring = x.ring_;
  switch (ring.kind()) {
    case RingKind::zmod_pk:
    case RingKind::prime_field:
      return RingElement(ring, mod_mul(std::get<std::int64_t>(x.value_),
                                       std::get<std::int64_t>(y.value_), ring.modulus()));
    case RingKind::p_local:
    case RingKind::rationals:
      return RingElement(ring, mpq_class(std::get<mpq_class>(x.value_) * std::get<mpq_class>(y.value_)));
    case RingKind::trunc_poly:
      if (ring.over_rationals()) {
        const auto& a = std::get<std::vector<mpq_class>>(x.value_);
        const auto& b = std::get<std::vector<mpq_class>>(y.value_);
        std::vector<mpq_class> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] == 0) continue;
          for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
        }
        return RingElement(ring, std::move(c));
      } else {
        const auto& a = std::get<std::vector<std::int64_t>>(x.value_);
        const auto& b = std::get<std::vector<std::int64_t>>(y.value_);
        std::vector<std::int64_t> c(a.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] == 0) continue;
          for (std::size_t j = 0; i + j < a.size(); ++j)
            c[i + j] = (c[i + j] + mod_mul(a[i], b[j], ring.prime())) % ring.prime();
        }
        return RingElement(ring, std::move(c));
      }
  }
  throw std::logic_error("unreachable");
}

bool operator==(const RingElement& x, const RingElement& y) {
  return x.ring_ == y.ring_ && x.value_ == y.value_;
}

RingElement arith(const RingElement& x, const RingElement& y, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return x + y;
    case ArithOp::sub:
      return x - y;
    case ArithOp::mul:
      return x * y;
  }
  throw std::logic_error("unreachable");
}

namespace {

template <typename Coeff>
std::string polynomial_string(const std::vector<Coeff>& c) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    std::string coeff;
    bool negative = false;
    if constexpr (std::is_same_v<Coeff, mpq_class>) {
      negative = sgn(c[i]) < 0;
      coeff = rational_string(negative ? mpq_class(-c[i]) : c[i]);
    } else {
      coeff = std::to_string(c[i]);
    }
    if (negative)
      out << '-';
    else if (!first)
      out << '+';
    first = false;
    if (i == 0) {
      out << coeff;
      continue;
    }
    if (coeff != "1") out << coeff << '*';
    out << 't';
    if (i > 1) out << '^' << i;
  }
  return first ? "0" : out.str();
}

}  // namespace

std::string RingElement::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::int64_t>)
          return std::to_string(v);
        else if constexpr (std::is_same_v<T, mpq_class>)
          return rational_string(v);
        else
          return polynomial_string(v);
      },
      value_);
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  // Sum of terms as a coefficient vector (index = power of t).
  std::vector<mpq_class> parse() {
    if (s_.empty()) fail("empty element");
    std::vector<mpq_class> coeffs;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [coeff, power] = term();
      if (coeffs.size() <= power) coeffs.resize(power + 1);
      coeffs[power] += sign * coeff;
    }
    return coeffs;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse element '" + s_ + "' at position " + std::to_string(pos_) +
                     ": " + why);
  }

  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  mpz_class digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  std::pair<mpq_class, std::size_t> term() {
    mpq_class coeff = 1;
    bool has_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      mpz_class num = digits();
      mpz_class den = 1;
      if (at('/')) {
        ++pos_;
        den = digits();
        if (den == 0) fail("zero denominator");
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      has_coeff = true;
      if (!at('*')) return {coeff, 0};
      ++pos_;
    }
    if (!at('t')) fail(has_coeff ? "expected 't' after '*'" : "expected a number or 't'");
    ++pos_;
    std::size_t power = 1;
    if (at('^')) {
      ++pos_;
      mpz_class e = digits();
      if (e > 100000) fail("exponent too large");
      power = e.get_ui();
    }
    return {coeff, power};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElement RingElement::parse(const RingDescriptor& ring, std::string_view text) {
  auto coeffs = TermParser(text).parse();
  try {
    return polynomial(ring, coeffs);
  } catch (const NotAUnitError& e) {
    throw ParseError("cannot parse element '" + std::string(text) + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------

RingElement inverse(const RingElement& x) {
  if (!x.is_unit())
    throw NotAUnitError(x.to_string() + " is not a unit in " + x.ring().spec_string());
  const RingDescriptor& ring = x.ring();
  switch (ring.kind()) {
    case RingKind::zmod_pk:
    case RingKind::prime_field:
      return RingElement::from_integer(ring, mod_inverse(std::get<std::int64_t>(x.value()), ring.modulus()));
    case RingKind::p_local:
    case RingKind::rationals:
      return RingElement::from_rational(ring, 1 / std::get<mpq_class>(x.value()));
    case RingKind::trunc_poly: {
      // Power series inversion: b0 = 1/c0, b_i = -(1/c0) sum_{j=1..i} c_j b_{i-j}.
      const auto n = static_cast<std::size_t>(ring.exponent());
      if (ring.over_rationals()) {
        const auto& c = std::get<std::vector<mpq_class>>(x.value());
        std::vector<mpq_class> b(n);
        mpq_class c0_inv = 1 / c[0];
        b[0] = c0_inv;
        for (std::size_t i = 1; i < n; ++i) {
          mpq_class acc = 0;
          for (std::size_t j = 1; j <= i; ++j) acc += c[j] * b[i - j];
          b[i] = -c0_inv * acc;
        }
        return RingElement::polynomial(ring, b);
      }
      const auto& c = std::get<std::vector<std::int64_t>>(x.value());
      const std::int64_t p = ring.prime();
      std::vector<mpq_class> b(n);
      std::vector<std::int64_t> bi(n, 0);
      std::int64_t c0_inv = mod_inverse(c[0], p);
      bi[0] = c0_inv;
      for (std::size_t i = 1; i < n; ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc = (acc + mod_mul(c[j], bi[i - j], p)) % p;
        bi[i] = mod_reduce(-mod_mul(c0_inv, acc, p), p);
      }
      for (std::size_t i = 0; i < n; ++i) b[i] = mpq_class(mpz_class(static_cast<long>(bi[i])));
      return RingElement::polynomial(ring, b);
    }
  }
  throw std::logic_error("unreachable");
}

RingElement residue(const RingElement& x) {
  const RingDescriptor& ring = x.ring();
  const RingDescriptor k = ring.residue_field();
  switch (ring.kind()) {
    case RingKind::zmod_pk:
    case RingKind::prime_field:
      return RingElement::from_integer(k, std::get<std::int64_t>(x.value()));
    case RingKind::p_local:
    case RingKind::rationals:
      return RingElement::from_rational(k, std::get<mpq_class>(x.value()));
    case RingKind::trunc_poly:
      if (ring.over_rationals())
        return RingElement::from_rational(k, std::get<std::vector<mpq_class>>(x.value())[0]);
      return RingElement::from_integer(k, std::get<std::vector<std::int64_t>>(x.value())[0]);
  }
  throw std::logic_error("unreachable");
}

RingElement lift(const RingDescriptor& ring, const RingElement& y) {
  if (!(y.ring() == ring.residue_field()))
    throw RingMismatchError("lift: " + y.ring().spec_string() + " is not the residue field of " +
                            ring.spec_string());
  if (std::holds_alternative<std::int64_t>(y.value()))
    return RingElement::from_integer(ring, std::get<std::int64_t>(y.value()));
  return RingElement::from_rational(ring, std::get<mpq_class>(y.value()));
}

std::pair<int, RingElement> split_uniformizer(const RingElement& x) {
  const int v = x.valuation();
  if (v == kInfiniteValuation) throw std::invalid_argument("split_uniformizer: zero element");
  const RingDescriptor& ring = x.ring();
  if (v == 0) return {0, x};
  switch (ring.kind()) {
    case RingKind::zmod_pk: {
      std::int64_t u = std::get<std::int64_t>(x.value());
      for (int i = 0; i < v; ++i) u /= ring.prime();
      return {v, RingElement::from_integer(ring, u)};
    }
    case RingKind::p_local: {
      mpz_class pv;
      mpz_ui_pow_ui(pv.get_mpz_t(), static_cast<unsigned long>(ring.prime()),
                    static_cast<unsigned long>(v));
      return {v, RingElement::from_rational(ring, std::get<mpq_class>(x.value()) / pv)};
    }
    case RingKind::trunc_poly: {
      std::vector<mpq_class> shifted;
      std::visit(
          [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, std::vector<std::int64_t>> ||
                          std::is_same_v<T, std::vector<mpq_class>>) {
              for (std::size_t i = static_cast<std::size_t>(v); i < c.size(); ++i)
                shifted.emplace_back(c[i]);
            }
          },
          x.value());
      return {v, RingElement::polynomial(ring, shifted)};
    }
    default:
      break;
  }
  throw std::logic_error("unreachable");
}

RingElement exact_quotient(const RingElement& x, const RingElement& y) {
  require_same_ring(x, y);
  if (x.is_zero()) return RingElement::zero(x.ring());
  if (y.is_zero()) throw std::domain_error("exact_quotient: division by zero");
  auto [vx, ux] = split_uniformizer(x);
  auto [vy, uy] = split_uniformizer(y);
  if (vx < vy)
    throw std::domain_error("exact_quotient: " + y.to_string() + " does not divide " + x.to_string());
  return RingElement::uniformizer_power(x.ring(), vx - vy) * ux * inverse(uy);
}

RingElement element_at(const RingDescriptor& ring, std::uint64_t index) {
  auto size = ring.cardinality();
  if (!size) throw std::invalid_argument("element_at: " + ring.spec_string() + " is not enumerable");
  if (index >= *size) throw std::out_of_range("element_at: index out of range");
  if (ring.kind() != RingKind::trunc_poly)
    return RingElement::from_integer(ring, static_cast<std::int64_t>(index));
  std::vector<mpq_class> c(ring.exponent());
  const auto p = static_cast<std::uint64_t>(ring.prime());
  for (auto& coeff : c) {
    coeff = mpq_class(mpz_class(static_cast<unsigned long>(index % p)));
    index /= p;
  }
  return RingElement::polynomial(ring, c);
}

std::uint64_t index_of(const RingElement& x) {
  const RingDescriptor& ring = x.ring();
  if (!ring.is_finite()) throw std::invalid_argument("index_of: " + ring.spec_string() + " is not enumerable");
  if (std::holds_alternative<std::int64_t>(x.value()))
    return static_cast<std::uint64_t>(std::get<std::int64_t>(x.value()));
  const auto& c = std::get<std::vector<std::int64_t>>(x.value());
  std::uint64_t index = 0;
  for (std::size_t i = c.size(); i-- > 0;)
    index = index * static_cast<std::uint64_t>(ring.prime()) + static_cast<std::uint64_t>(c[i]);
  return index;
}

}  // namespace basechange
