#include <doctest.h>

#include <set>
#include <vector>

#include "basechange/complex.hpp"
#include "basechange/linalg.hpp"
#include "basechange/random.hpp"

using namespace basechange;

namespace {

// All vectors of A^n for a finite ring, as column matrices.
std::vector<Matrix> all_vectors(const RingDescriptor& r, std::size_t n) {
  const auto q = *r.cardinality();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::vector<Matrix> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix v(r, n, 1);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= q) v(i, 0) = element_at(r, c % q);
    out.push_back(v);
  }
  return out;
}

std::vector<std::uint64_t> key(const Matrix& v) {
  std::vector<std::uint64_t> k;
  for (std::size_t i = 0; i < v.rows(); ++i) k.push_back(index_of(v(i, 0)));
  return k;
}

std::set<std::vector<std::uint64_t>> brute_kernel(const Matrix& a) {
  std::set<std::vector<std::uint64_t>> out;
  for (const Matrix& v : all_vectors(a.ring(), a.cols()))
    if ((a * v).is_zero()) out.insert(key(v));
  return out;
}

std::set<std::vector<std::uint64_t>> brute_span(const Matrix& g) {
  std::set<std::vector<std::uint64_t>> out;
  for (const Matrix& c : all_vectors(g.ring(), g.cols())) out.insert(key(g * c));
  return out;
}

bool is_diagonal(const Matrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && !d(i, j).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  const auto z8 = RingDescriptor::zmod_pk(2, 3);
  const auto a = Matrix::from_integers(z8, {{2, 0}, {0, 1}});
  const auto snf = smith_normal_form(a);
  CHECK(snf.D == Matrix::from_integers(z8, {{1, 0}, {0, 2}}));
  CHECK(snf.exponents == std::vector<int>{0, 1});
  CHECK(snf.P * a * snf.Q == snf.D);

  const auto z4 = RingDescriptor::zmod_pk(2, 2);
  CHECK(smith_normal_form(Matrix::from_integers(z4, {{2}})).D == Matrix::from_integers(z4, {{2}}));
  const auto zero = smith_normal_form(Matrix::from_integers(z4, {{4}}));
  CHECK(zero.D.is_zero());
  CHECK(zero.rank() == 0);

  const auto empty = smith_normal_form(Matrix(z4, 0, 3));
  CHECK(empty.Q.rows() == 3);
  CHECK(empty.rank() == 0);
}

TEST_CASE("smith normal form normalizes pivots over p-local and trunc-poly") {
  const auto r = RingDescriptor::p_local(3);
  const auto a = Matrix::from_rows(r, 2,
                                   {{RingElement::parse(r, "6/5"), RingElement::parse(r, "9")},
                                    {RingElement::parse(r, "3"), RingElement::parse(r, "-18/7")}});
  const auto snf = smith_normal_form(a);
  CHECK(snf.P * a * snf.Q == snf.D);
  CHECK(snf.D(0, 0) == RingElement::uniformizer_power(r, snf.exponents[0]));
  CHECK(snf.exponents[0] == 1);

  const auto t = RingDescriptor::trunc_poly_q(3);
  const auto b = Matrix::from_rows(t, 1, {{RingElement::parse(t, "2*t+t^2")}});
  const auto snf_b = smith_normal_form(b);
  CHECK(snf_b.D(0, 0) == RingElement::parse(t, "t"));
}

TEST_CASE("kernel generators examples") {
  const auto z4 = RingDescriptor::zmod_pk(2, 2);
  const auto k = kernel_module(Matrix::from_integers(z4, {{2}}));
  CHECK(k.generators == Matrix::from_integers(z4, {{2}}));
  CHECK(k.annihilator_exponent == std::vector<int>{1});

  CHECK(kernel_generators(Matrix::from_integers(RingDescriptor::p_local(2), {{2}})).cols() == 0);
  CHECK(kernel_generators(Matrix(z4, 1, 2)) == Matrix::identity(z4, 2));

  const auto z8 = RingDescriptor::zmod_pk(2, 3);
  const auto k8 = kernel_module(Matrix::from_integers(z8, {{2}}));
  CHECK(k8.generators == Matrix::from_integers(z8, {{4}}));
  CHECK(k8.annihilator_exponent == std::vector<int>{1});
}

TEST_CASE("kernel generators span the enumerated kernel") {
  Rng rng(7);
  for (const auto& r : {RingDescriptor::zmod_pk(2, 2), RingDescriptor::zmod_pk(2, 3), RingDescriptor::trunc_poly_fp(2, 2),
                        RingDescriptor::prime_field(3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto rows = rng.below(4), cols = 1 + rng.below(3);
      const auto a = random_matrix(r, rows, cols, rng);
      const auto km = kernel_module(a);
      CAPTURE(a.to_string());
      REQUIRE((a * km.generators).is_zero());
      CHECK(brute_span(km.generators) == brute_kernel(a));
      for (std::size_t j = 0; j < km.generators.cols(); ++j) {
        const int e = km.annihilator_exponent[j];
        if (e == 0) continue;
        const auto g = km.generators.column(j);
        Matrix scaled = g;
        for (std::size_t i = 0; i < g.rows(); ++i) scaled(i, 0) = g(i, 0) * RingElement::uniformizer_power(r, e);
        CHECK(scaled.is_zero());
        for (std::size_t i = 0; i < g.rows(); ++i) scaled(i, 0) = g(i, 0) * RingElement::uniformizer_power(r, e - 1);
        CHECK_FALSE(scaled.is_zero());
      }
    }
  }
}

TEST_CASE("cokernel order matches enumerated image") {
  Rng rng(11);
  for (const auto& r : {RingDescriptor::zmod_pk(2, 3), RingDescriptor::zmod_pk(3, 2), RingDescriptor::trunc_poly_fp(2, 3)}) {
    for (int trial = 0; trial < 30; ++trial) {
      const auto rows = 1 + rng.below(3), cols = rng.below(3);
      const auto a = random_matrix(r, rows, cols, rng);
      const auto image = brute_span(a).size();
      std::uint64_t target = 1;
      for (std::size_t i = 0; i < rows; ++i) target *= *r.cardinality();
      CAPTURE(a.to_string());
      CHECK(module_order(r, cokernel_presentation(a)) == target / image);
    }
  }
}

TEST_CASE("smith normal form contract on random matrices") {
  Rng rng(3);
  for (const auto& r : {RingDescriptor::zmod_pk(2, 3), RingDescriptor::trunc_poly_fp(5, 3), RingDescriptor::p_local(2),
                        RingDescriptor::trunc_poly_q(2)}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = random_matrix(r, rng.below(6), rng.below(6), rng);
      const auto snf = smith_normal_form(a);
      CAPTURE(a.to_string());
      REQUIRE(snf.P * a * snf.Q == snf.D);
      CHECK(is_diagonal(snf.D));
      CHECK(is_invertible(snf.P));
      CHECK(is_invertible(snf.Q));
      for (std::size_t i = 0; i < snf.rank(); ++i) {
        CHECK(snf.D(i, i) == RingElement::uniformizer_power(r, snf.exponents[i]));
        if (i > 0) CHECK(snf.exponents[i - 1] <= snf.exponents[i]);
      }
      for (std::size_t i = snf.rank(); i < std::min(a.rows(), a.cols()); ++i) CHECK(snf.D(i, i).is_zero());
    }
  }
}

TEST_CASE("invert and solve") {
  Rng rng(5);
  const auto r = RingDescriptor::zmod_pk(3, 2);
  int inverted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_matrix(r, 3, 3, rng);
    if (is_invertible(a)) {
      ++inverted;
      CHECK(a * invert(a) == Matrix::identity(r, 3));
      CHECK(invert(a) * a == Matrix::identity(r, 3));
    } else {
      CHECK_THROWS_AS(invert(a), NotInvertibleError);
    }
    const auto x = random_matrix(r, 3, 2, rng);
    const auto b = a * x;
    const auto sol = solve(a, b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);
  }
  CHECK(inverted > 10);
  CHECK_THROWS_AS(is_invertible(Matrix(r, 2, 3)), DimensionError);

  const auto z4 = RingDescriptor::zmod_pk(2, 2);
  CHECK_FALSE(solve(Matrix::from_integers(z4, {{2}}), Matrix::from_integers(z4, {{1}})).has_value());
}

TEST_CASE("field linear algebra") {
  const auto f = RingDescriptor::prime_field(5);
  const auto a = Matrix::from_integers(f, {{1, 2, 3}, {2, 4, 0}});
  CHECK(field_rank(a) == 2);
  const auto ker = field_kernel_basis(a);
  CHECK(ker.cols() == 1);
  CHECK((a * ker).is_zero());
  CHECK(field_determinant(Matrix::from_integers(f, {{1, 2}, {3, 4}})) == RingElement::from_integer(f, -2));
  CHECK(extend_to_basis(Matrix::from_integers(f, {{0}, {1}, {1}})) == std::vector<std::size_t>{0, 1});

  const auto q = RingDescriptor::rationals();
  const auto b = Matrix::from_integers(q, {{1, 1}, {1, 1}});
  CHECK(field_rank(b) == 1);
  CHECK(field_determinant(b).is_zero());
}

TEST_CASE("block decomposition example") {
  const auto z8 = RingDescriptor::zmod_pk(2, 3);
  const auto bd = block_decompose(Matrix::from_integers(z8, {{2}}));
  CHECK(bd.r == 1);
  CHECK(bd.s == 0);
  CHECK(bd.t == 1);
  CHECK(bd.N == Matrix::from_integers(z8, {{2}}));
  CHECK(bd.M.rows() == 0);
}

TEST_CASE("block decomposition contract on random matrices") {
  Rng rng(9);
  for (const auto& r : {RingDescriptor::zmod_pk(2, 3), RingDescriptor::zmod_pk(3, 2), RingDescriptor::trunc_poly_fp(5, 3),
                        RingDescriptor::p_local(2), RingDescriptor::rationals()}) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto d = random_matrix(r, rng.below(6), rng.below(6), rng);
      const auto bd = block_decompose(d);
      CAPTURE(d.to_string());
      CHECK(is_invertible(bd.P));
      CHECK(is_invertible(bd.Q));
      CHECK(bd.Q * bd.Q_inverse == Matrix::identity(r, d.rows()));
      CHECK(bd.Q_inverse * d * bd.P == block_normal_form(bd.M, bd.N));
      CHECK(bd.s == field_rank(mat_reduce(d)));
      CHECK(bd.r + bd.s == d.cols());
      CHECK(bd.s + bd.t == d.rows());
      for (const Matrix* m : {&bd.M, &bd.N})
        for (std::size_t i = 0; i < m->rows(); ++i)
          for (std::size_t j = 0; j < m->cols(); ++j) CHECK((*m)(i, j).valuation() >= 1);
    }
  }
}

TEST_CASE("invertibility is decided by the residue determinant") {
  Rng rng(13);
  for (const auto& r : {RingDescriptor::zmod_pk(2, 2), RingDescriptor::trunc_poly_fp(3, 2), RingDescriptor::p_local(2)}) {
    int yes = 0, no = 0;
    for (int trial = 0; trial < 80; ++trial) {
      const auto n = 1 + rng.below(4);
      const auto a = random_matrix(r, n, n, rng);
      const bool residue_invertible = !field_determinant(mat_reduce(a)).is_zero();
      CHECK(is_invertible(a) == residue_invertible);
      // A right inverse exists exactly when the matrix is invertible.
      CHECK(solve(a, Matrix::identity(r, n)).has_value() == residue_invertible);
      (residue_invertible ? yes : no)++;
    }
    CHECK(yes > 0);
    CHECK(no > 0);
  }
}
