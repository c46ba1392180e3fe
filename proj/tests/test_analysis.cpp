#include <doctest.h>

#include "basechange/analysis.hpp"

using namespace basechange;

namespace {

const RingDescriptor z4 = RingDescriptor::zmod_pk(2, 2);

FreeComplex golden() { return FreeComplex(z4, 0, {1, 1}, {Matrix::from_integers(z4, {{2}})}); }

}  // namespace

TEST_CASE("golden complex phi reports") {
  const auto c = golden();
  const auto phi0 = phi_report(c, 0);
  CHECK(phi0.dim_source == 1);
  CHECK(phi0.dim_target == 1);
  CHECK_FALSE(phi0.surjective);
  CHECK_FALSE(phi0.isomorphism);
  CHECK_FALSE(phi0.violation.has_value());

  const auto phi1 = phi_report(c, 1);
  CHECK(phi1.surjective);
  CHECK(phi1.isomorphism);

  CHECK(residue_cohomology_dimension(c, 0) == 1);
  CHECK(residue_cohomology_dimension(c, 1) == 1);
}

TEST_CASE("golden complex surjectivity criteria") {
  const auto c = golden();
  const auto v0 = lemma2_check(c, 0);
  CHECK_FALSE(v0.cond_i);
  CHECK_FALSE(v0.cond_ii);
  CHECK_FALSE(v0.cond_iii);
  CHECK_FALSE(v0.cond_iv);
  CHECK(v0.agree);

  const auto v1 = lemma2_check(c, 1);
  CHECK(v1.cond_i);
  CHECK(v1.cond_ii);
  CHECK(v1.cond_iii);
  CHECK(v1.cond_iv);
  CHECK(v1.agree);
  CHECK(phi_surjective_via_block(c, 1));
  CHECK_FALSE(phi_surjective_via_block(c, 0));
}

TEST_CASE("golden complex freeness check") {
  const auto c = golden();
  const auto b0 = theorem_b_check(c, 0);
  CHECK(b0.status == CheckStatus::skipped);

  const auto b1 = theorem_b_check(c, 1);
  CHECK(b1.status == CheckStatus::holds);
  CHECK_FALSE(b1.lower_surjective);
  CHECK_FALSE(b1.cohomology_free);
  CHECK(b1.quotients_checked.empty());
}

TEST_CASE("degree below the support has surjective phi") {
  const auto c = golden();
  CHECK(phi_surjective(c, -1));
  CHECK(phi_report(c, -1).isomorphism);
}

TEST_CASE("split maps give free cohomology that commutes with quotients") {
  const FreeComplex c(z4, 0, {2, 2}, {Matrix::from_integers(z4, {{1, 0}, {0, 0}})});
  CHECK(cohomology(c, 0) == ModulePresentation{1, {}});
  CHECK(cohomology(c, 1) == ModulePresentation{1, {}});
  for (int p = 0; p <= 1; ++p) {
    CHECK(phi_report(c, p).isomorphism);
    const auto b = theorem_b_check(c, p);
    CHECK(b.status == CheckStatus::holds);
    CHECK(b.cohomology_free);
    CHECK(b.quotients_checked == std::vector<int>{1, 2});
  }
}

TEST_CASE("corollary examples") {
  const FreeComplex iso(z4, 0, {1, 1}, {Matrix::from_integers(z4, {{1}})});
  const auto r1 = corollary_check(iso);
  CHECK(r1.status == CheckStatus::holds);
  CHECK(cohomology(iso, 1).is_zero());
  CHECK(cohomology(iso, 0).is_zero());

  const FreeComplex proj(z4, 0, {2, 1}, {Matrix::from_integers(z4, {{1, 0}})});
  const auto r2 = corollary_check(proj);
  CHECK(r2.status == CheckStatus::holds);
  CHECK(cohomology(proj, 0) == ModulePresentation{1, {}});
  CHECK(r2.quotients_checked == std::vector<int>{1, 2});

  CHECK(corollary_check(golden()).status == CheckStatus::skipped);
  const FreeComplex shifted(z4, 1, {1, 1}, {Matrix::from_integers(z4, {{1}})});
  CHECK(corollary_check(shifted).status == CheckStatus::skipped);
}

TEST_CASE("fields: every phi is an isomorphism") {
  const auto f = RingDescriptor::prime_field(3);
  const FreeComplex c(f, 0, {2, 3, 1},
                      {Matrix::from_integers(f, {{1, 0}, {0, 1}, {0, 0}}), Matrix::from_integers(f, {{0, 0, 1}})});
  for (int p = 0; p <= 2; ++p) {
    CAPTURE(p);
    CHECK(phi_report(c, p).isomorphism);
    CHECK(lemma2_check(c, p).cond_iv);
    CHECK(cohomology(c, p).is_free());
  }
}

TEST_CASE("p-local example where phi fails at a middle degree") {
  const auto r = RingDescriptor::p_local(2);
  const FreeComplex c(r, 0, {1, 1, 1}, {Matrix(r, 1, 1), Matrix::from_integers(r, {{2}})});
  CHECK(cohomology(c, 1).is_zero());
  const auto phi = phi_report(c, 1);
  CHECK(phi.dim_source == 0);
  CHECK(phi.dim_target == 1);
  CHECK_FALSE(phi.surjective);
  CHECK(lemma2_check(c, 1).agree);
  CHECK(cohomology(c, 2) == ModulePresentation{0, {1}});
  CHECK(phi_report(c, 2).isomorphism);
}

TEST_CASE("check status names") {
  CHECK(std::string(to_string(CheckStatus::holds)) == "holds");
  CHECK(std::string(to_string(CheckStatus::skipped)) == "skipped");
  CHECK(std::string(to_string(CheckStatus::violated)) == "violated");
}
