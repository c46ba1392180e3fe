#include <doctest.h>

#include "basechange/analysis.hpp"
#include "basechange/oracle.hpp"
#include "basechange/random.hpp"

using namespace basechange;

TEST_CASE("golden complex by enumeration") {
  const auto z4 = RingDescriptor::zmod_pk(2, 2);
  const FreeComplex c(z4, 0, {1, 1}, {Matrix::from_integers(z4, {{2}})});
  for (auto exec : {Execution::serial, Execution::parallel}) {
    // ker = {0, 2}, im = {0, 2}.
    CHECK(brute_cohomology_order(c, 0, kDefaultEnumerationCap, exec) == 2);
    CHECK(brute_cohomology_order(c, 1, kDefaultEnumerationCap, exec) == 2);
    // ker d^0 + 2A = {0, 2} but (d^0)^{-1}(2A) = A.
    CHECK_FALSE(brute_phi_surjective(c, 0, kDefaultEnumerationCap, exec));
    CHECK(brute_phi_surjective(c, 1, kDefaultEnumerationCap, exec));
  }
}

TEST_CASE("oracle limits") {
  const auto z8 = RingDescriptor::zmod_pk(2, 3);
  CHECK(free_module_size(z8, 3) == 512u);
  CHECK(free_module_size(z8, 0) == 1u);
  CHECK_FALSE(free_module_size(z8, 40).has_value());
  CHECK_FALSE(free_module_size(RingDescriptor::p_local(2), 1).has_value());

  const auto c = FreeComplex::zero(z8, 0, {6, 6});
  CHECK_FALSE(oracle_can_enumerate(c, 1));
  CHECK(oracle_can_enumerate(c, 1, 1u << 18));
  CHECK_THROWS_AS(brute_cohomology_order(c, 1), OracleTooLargeError);
  CHECK(brute_cohomology_order(c, 1, 1u << 18) == (1u << 18));

  const auto pl = FreeComplex::zero(RingDescriptor::p_local(2), 0, {1});
  CHECK_FALSE(oracle_can_enumerate(pl, 0));
  CHECK_THROWS_AS(brute_cohomology_order(pl, 0), std::invalid_argument);
}

TEST_CASE("oracle matches presentations and both surjectivity paths") {
  for (const auto& r : {RingDescriptor::zmod_pk(2, 2), RingDescriptor::zmod_pk(3, 2), RingDescriptor::trunc_poly_fp(2, 2),
                        RingDescriptor::prime_field(5)}) {
    FuzzConfig cfg;
    cfg.ring = r;
    cfg.max_rank = 3;
    cfg.split_bias = 0.5;
    for (std::uint64_t t = 0; t < 25; ++t) {
      const auto c = random_complex(cfg, t);
      for (int p = c.min_degree(); p <= c.max_degree(); ++p) {
        if (!oracle_can_enumerate(c, p)) continue;
        CAPTURE(r.spec_string());
        CAPTURE(t);
        CAPTURE(p);
        const auto order = brute_cohomology_order(c, p, kDefaultEnumerationCap, Execution::serial);
        CHECK(module_order(r, cohomology(c, p)) == order);
        const bool brute = brute_phi_surjective(c, p, kDefaultEnumerationCap, Execution::serial);
        CHECK(brute == phi_surjective(c, p));
        CHECK(brute == phi_surjective_via_block(c, p));
      }
    }
  }
}

TEST_CASE("serial and parallel oracles agree") {
  FuzzConfig cfg;
  cfg.ring = RingDescriptor::zmod_pk(2, 3);
  cfg.max_rank = 5;
  for (std::uint64_t t = 0; t < 30; ++t) {
    const auto c = random_complex(cfg, t);
    for (int p = c.min_degree(); p <= c.max_degree(); ++p) {
      if (!oracle_can_enumerate(c, p)) continue;
      CHECK(brute_cohomology_order(c, p, kDefaultEnumerationCap, Execution::serial) ==
            brute_cohomology_order(c, p, kDefaultEnumerationCap, Execution::parallel));
      CHECK(brute_phi_surjective(c, p, kDefaultEnumerationCap, Execution::serial) ==
            brute_phi_surjective(c, p, kDefaultEnumerationCap, Execution::parallel));
    }
  }
}

TEST_CASE("rings too large for arithmetic tables") {
  const auto r = RingDescriptor::zmod_pk(2, 11);
  const FreeComplex c(r, 0, {1, 1}, {Matrix::from_integers(r, {{2}})});
  for (auto exec : {Execution::serial, Execution::parallel}) {
    CHECK(brute_cohomology_order(c, 0, kDefaultEnumerationCap, exec) == 2);
    CHECK(brute_cohomology_order(c, 1, kDefaultEnumerationCap, exec) == 2);
    CHECK_FALSE(brute_phi_surjective(c, 0, kDefaultEnumerationCap, exec));
    CHECK(brute_phi_surjective(c, 1, kDefaultEnumerationCap, exec));
  }
}

TEST_CASE("trivial complexes by enumeration") {
  const auto z4 = RingDescriptor::zmod_pk(2, 2);
  const auto id = Matrix::identity(z4, 2);
  const FreeComplex exact(z4, 0, {2, 2}, {id});
  const auto zero = FreeComplex::zero(z4, 0, {2, 2});
  for (int p = 0; p <= 1; ++p) {
    CHECK(brute_cohomology_order(exact, p) == 1);
    CHECK(brute_phi_surjective(exact, p));
    CHECK(brute_phi_surjective(zero, p));
  }
  CHECK(brute_cohomology_order(FreeComplex::zero(RingDescriptor::zmod_pk(3, 2), 0, {1}), 0) == 9);
}
