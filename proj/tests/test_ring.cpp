#include <doctest.h>

#include <vector>

#include "basechange/ring.hpp"

using namespace basechange;

namespace {

RingElement el(const RingDescriptor& r, const char* text) { return RingElement::parse(r, text); }

std::vector<RingDescriptor> small_finite_rings() {
  return {RingDescriptor::zmod_pk(2, 3), RingDescriptor::zmod_pk(3, 2), RingDescriptor::prime_field(5),
          RingDescriptor::trunc_poly_fp(2, 3), RingDescriptor::trunc_poly_fp(3, 2)};
}

// Naive product in F_p[t]/(t^n), coefficients ascending.
std::vector<std::int64_t> naive_poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                         std::int64_t p) {
  std::vector<std::int64_t> c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return c;
}

}  // namespace

TEST_CASE("worked arithmetic") {
  const auto z8 = RingDescriptor::zmod_pk(2, 3);
  CHECK(el(z8, "5") * el(z8, "3") == el(z8, "7"));
  CHECK(inverse(el(z8, "3")) == el(z8, "3"));
  CHECK_THROWS_AS(inverse(el(z8, "2")), NotAUnitError);
  CHECK(valuation(el(z8, "4")) == 2);
  CHECK(valuation(el(z8, "0")) == kInfiniteValuation);

  const auto z3 = RingDescriptor::p_local(3);
  CHECK(el(z3, "1/2") + el(z3, "1/4") == el(z3, "3/4"));
  CHECK(residue(el(z3, "5/2")) == RingElement::one(RingDescriptor::prime_field(3)));
  CHECK_THROWS_AS(el(z3, "1/3"), ParseError);
  CHECK_THROWS_AS(RingElement::from_rational(z3, mpq_class(1, 3)), NotAUnitError);
  CHECK(valuation(el(RingDescriptor::p_local(5), "50/3")) == 2);

  const auto f2t2 = RingDescriptor::trunc_poly_fp(2, 2);
  const auto x = el(f2t2, "1+t");
  CHECK((x * x).is_one());

  const auto f2t3 = RingDescriptor::trunc_poly_fp(2, 3);
  CHECK(inverse(el(f2t3, "1+t")) == el(f2t3, "1+t+t^2"));
  CHECK(valuation(el(f2t3, "t^2+t")) == 1);
  CHECK(el(f2t3, "t^3").is_zero());
}

TEST_CASE("ring descriptors") {
  CHECK(RingDescriptor::zmod_pk(2, 3).nilpotency_degree() == 3);
  CHECK(RingDescriptor::trunc_poly_q(4).nilpotency_degree() == 4);
  CHECK(RingDescriptor::prime_field(7).nilpotency_degree() == 1);
  CHECK(RingDescriptor::rationals().is_field());
  CHECK_FALSE(RingDescriptor::p_local(2).nilpotency_degree().has_value());
  CHECK(RingDescriptor::p_local(2).is_domain());
  CHECK_FALSE(RingDescriptor::zmod_pk(3, 2).is_domain());
  CHECK(RingDescriptor::zmod_pk(3, 2).cardinality() == 9u);
  CHECK(RingDescriptor::trunc_poly_fp(5, 3).cardinality() == 125u);
  CHECK_FALSE(RingDescriptor::p_local(2).cardinality().has_value());
  CHECK(RingDescriptor::trunc_poly_fp(5, 3).residue_field() == RingDescriptor::prime_field(5));
  CHECK(RingDescriptor::trunc_poly_q(2).residue_field() == RingDescriptor::rationals());

  CHECK_THROWS_AS(RingDescriptor::zmod_pk(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(RingDescriptor::zmod_pk(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(RingDescriptor::prime_field(1), std::invalid_argument);
}

TEST_CASE("ring spec strings round trip") {
  for (const char* s : {"zmod-pk:2:3", "p-local:7", "trunc-poly:fp:5:3", "trunc-poly:q:2", "prime-field:11", "rationals"}) {
    CAPTURE(s);
    CHECK(RingDescriptor::parse_spec(s).spec_string() == s);
  }
  CHECK_THROWS_AS(RingDescriptor::parse_spec("zmod-pk:6:2"), ParseError);
  CHECK_THROWS_AS(RingDescriptor::parse_spec("zmod-pk:2"), ParseError);
  CHECK_THROWS_AS(RingDescriptor::parse_spec("trunc-poly:zz:2:2"), ParseError);
  CHECK_THROWS_AS(RingDescriptor::parse_spec("galois:4"), ParseError);
}

TEST_CASE("element parsing") {
  const auto q = RingDescriptor::trunc_poly_q(3);
  CHECK(el(q, "1/2 - 3*t + t^2").to_string() == el(q, "t^2-3*t+1/2").to_string());
  CHECK(el(q, "t^5").is_zero());
  CHECK(el(RingDescriptor::zmod_pk(2, 2), "-1") == el(RingDescriptor::zmod_pk(2, 2), "3"));
  CHECK(el(RingDescriptor::zmod_pk(3, 2), "1/2") * el(RingDescriptor::zmod_pk(3, 2), "2") ==
        RingElement::one(RingDescriptor::zmod_pk(3, 2)));
  CHECK_THROWS_AS(el(RingDescriptor::zmod_pk(2, 2), "t"), ParseError);
  CHECK_THROWS_AS(el(q, "1 +"), ParseError);
  CHECK_THROWS_AS(el(q, "2*x"), ParseError);
  CHECK_THROWS_AS(el(q, "1/0"), ParseError);
}

TEST_CASE("print then parse is the identity") {
  for (const auto& r : small_finite_rings()) {
    const auto n = *r.cardinality();
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto x = element_at(r, i);
      CAPTURE(r.spec_string());
      CAPTURE(x.to_string());
      CHECK(RingElement::parse(r, x.to_string()) == x);
      CHECK(index_of(x) == i);
    }
  }
  const auto pl = RingDescriptor::p_local(3);
  for (const char* s : {"0", "-7/4", "9/10", "27"}) CHECK(el(pl, el(pl, s).to_string().c_str()) == el(pl, s));
  const auto tq = RingDescriptor::trunc_poly_q(3);
  for (const char* s : {"0", "-t", "1/3-2/5*t^2", "t^2"}) CHECK(el(tq, el(tq, s).to_string().c_str()) == el(tq, s));
}

TEST_CASE("zmod-pk agrees with integer arithmetic") {
  for (std::int64_t m : {8, 9, 25, 27}) {
    const std::int64_t p = (m % 2 == 0) ? 2 : (m % 3 == 0 ? 3 : 5);
    int k = 0;
    for (std::int64_t q = 1; q < m; q *= p) ++k;
    const auto r = RingDescriptor::zmod_pk(p, k);
    for (std::int64_t a = 0; a < m; ++a)
      for (std::int64_t b = 0; b < m; ++b) {
        const auto x = RingElement::from_integer(r, a), y = RingElement::from_integer(r, b);
        REQUIRE(x + y == RingElement::from_integer(r, (a + b) % m));
        REQUIRE(x - y == RingElement::from_integer(r, (a - b + m) % m));
        REQUIRE(x * y == RingElement::from_integer(r, (a * b) % m));
      }
    for (std::int64_t a = 0; a < m; ++a) {
      int v = 0;
      for (std::int64_t x = a; x != 0 && x % p == 0; x /= p) ++v;
      CHECK(RingElement::from_integer(r, a).valuation() == (a == 0 ? kInfiniteValuation : v));
    }
  }
}

TEST_CASE("trunc-poly over F_p agrees with naive convolution") {
  const auto r = RingDescriptor::trunc_poly_fp(3, 3);
  for (std::uint64_t i = 0; i < 27; ++i)
    for (std::uint64_t j = 0; j < 27; ++j) {
      const auto x = element_at(r, i), y = element_at(r, j);
      const auto& a = std::get<std::vector<std::int64_t>>(x.value());
      const auto& b = std::get<std::vector<std::int64_t>>(y.value());
      REQUIRE(std::get<std::vector<std::int64_t>>((x * y).value()) == naive_poly_mul(a, b, 3));
    }
}

TEST_CASE("ring axioms hold exhaustively on small rings") {
  for (const auto& r : small_finite_rings()) {
    CAPTURE(r.spec_string());
    const auto n = *r.cardinality();
    const auto zero = RingElement::zero(r), one = RingElement::one(r);
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto x = element_at(r, i);
      REQUIRE(x + zero == x);
      REQUIRE(x * one == x);
      REQUIRE(x + (-x) == zero);
      if (x.is_unit()) {
        REQUIRE((x * inverse(x)).is_one());
      } else {
        REQUIRE_THROWS_AS(inverse(x), NotAUnitError);
      }
      if (!x.is_zero()) {
        const auto [v, u] = split_uniformizer(x);
        REQUIRE(v == x.valuation());
        REQUIRE(u.is_unit());
        REQUIRE(u * RingElement::uniformizer_power(r, v) == x);
      }
      for (std::uint64_t j = 0; j < n; ++j) {
        const auto y = element_at(r, j);
        REQUIRE(x + y == y + x);
        REQUIRE(x * y == y * x);
        if (!x.is_zero() && !y.is_zero() && !(x * y).is_zero())
          REQUIRE((x * y).valuation() == x.valuation() + y.valuation());
        if (y.valuation() <= x.valuation() && !y.is_zero()) REQUIRE(exact_quotient(x, y) * y == x);
        for (std::uint64_t l = 0; l < n; ++l) {
          const auto z = element_at(r, l);
          REQUIRE((x + y) + z == x + (y + z));
          REQUIRE((x * y) * z == x * (y * z));
          REQUIRE(x * (y + z) == x * y + x * z);
        }
      }
    }
  }
}

TEST_CASE("p-local arithmetic agrees with rationals") {
  const auto r = RingDescriptor::p_local(2);
  const std::vector<mpq_class> values{mpq_class(0), mpq_class(1), mpq_class(-6, 5), mpq_class(12), mpq_class(7, 3),
                                      mpq_class(-1, 9)};
  for (const auto& a : values)
    for (const auto& b : values) {
      const auto x = RingElement::from_rational(r, a), y = RingElement::from_rational(r, b);
      CHECK(x + y == RingElement::from_rational(r, a + b));
      CHECK(x * y == RingElement::from_rational(r, a * b));
    }
  CHECK(inverse(RingElement::from_rational(r, mpq_class(3, 5))) == RingElement::from_rational(r, mpq_class(5, 3)));
  CHECK(RingElement::from_rational(r, mpq_class(-24, 7)).valuation() == 3);
  CHECK(residue(RingElement::from_rational(r, mpq_class(-1, 3))) == RingElement::one(RingDescriptor::prime_field(2)));
}

TEST_CASE("trunc-poly over Q inverse is a power series inverse") {
  const auto r = RingDescriptor::trunc_poly_q(4);
  const auto x = el(r, "2 - t + 1/3*t^3");
  CHECK((x * inverse(x)).is_one());
  CHECK(inverse(el(r, "1-t")) == el(r, "1+t+t^2+t^3"));
  CHECK_THROWS_AS(inverse(el(r, "t")), NotAUnitError);
}

TEST_CASE("residue and lift") {
  for (const auto& r : small_finite_rings()) {
    const auto k = r.residue_field();
    for (std::uint64_t i = 0; i < *k.cardinality(); ++i) {
      const auto y = element_at(k, i);
      CHECK(residue(lift(r, y)) == y);
    }
    for (std::uint64_t i = 0; i < *r.cardinality(); ++i) {
      const auto x = element_at(r, i);
      CHECK(residue(x).is_zero() == (x.valuation() > 0));
    }
  }
}

TEST_CASE("mixing rings is rejected") {
  const auto a = RingElement::one(RingDescriptor::zmod_pk(2, 2));
  const auto b = RingElement::one(RingDescriptor::zmod_pk(2, 3));
  CHECK_THROWS_AS(a + b, RingMismatchError);
  CHECK_THROWS_AS(arith(a, b, ArithOp::mul), RingMismatchError);
}
