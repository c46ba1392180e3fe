#include "basechange/analysis.hpp"

#include <sstream>

#include "basechange/linalg.hpp"

namespace basechange {

namespace {

std::string degree_name(const char* symbol, int p) { return std::string(symbol) + "^" + std::to_string(p); }

// First n at which H^p does not commute with A -> A/m^n, if any.
std::optional<std::string> commutation_failure(const FreeComplex& c, int p, const ModulePresentation& h,
                                               std::vector<int>& checked) {
  for (int n : representable_quotients(c.ring())) {
    const ModulePresentation expected = tensor_presentation(h, c.ring(), n);
    const ModulePresentation actual = cohomology(tensor_quotient(c, n), p);
    if (!(expected == actual)) {
      return "H^" + std::to_string(p) + " (x) A/m^" + std::to_string(n) + " = " + expected.to_string() +
             " but H^" + std::to_string(p) + " of the quotient complex is " + actual.to_string();
    }
    checked.push_back(n);
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::holds:
      return "holds";
    case CheckStatus::skipped:
      return "skipped";
    case CheckStatus::violated:
      return "violated";
  }
  return "?";
}

std::size_t residue_cohomology_dimension(const FreeComplex& c, int p) {
  const std::size_t rank_out = field_rank(mat_reduce(c.differential(p)));
  const std::size_t rank_in = field_rank(mat_reduce(c.differential(p - 1)));
  return c.rank(p) - rank_out - rank_in;
}

bool phi_surjective(const FreeComplex& c, int p) {
  const Matrix d = c.differential(p);
  const std::size_t kernel_residue_dim = c.rank(p) - field_rank(mat_reduce(d));
  return field_rank(mat_reduce(kernel_generators(d))) == kernel_residue_dim;
}

bool phi_surjective_via_block(const FreeComplex& c, int p) {
  return block_decompose(c.differential(p)).N.is_zero();
}

bool cond_iii(const FreeComplex& c, int p) {
  const Matrix d = c.differential(p);
  const BlockDecomposition bd = block_decompose(d);
  if (!bd.N.is_zero()) return false;
  // Right multiplication by [[Id, 0], [-M, Id]] clears M; its left columns
  // then span ker d^p.
  const RingDescriptor& ring = d.ring();
  Matrix shear = Matrix::identity(ring, bd.r + bd.s);
  shear.set_block(bd.r, 0, Matrix(ring, bd.s, bd.r) - bd.M);
  const Matrix source_basis = bd.P * shear;
  const Matrix expected = block_normal_form(Matrix(ring, bd.s, bd.r), Matrix(ring, bd.t, bd.r));
  return is_invertible(source_basis) && bd.Q_inverse * d * source_basis == expected;
}

bool cond_iv(const FreeComplex& c, int p) {
  const SmithForm snf = smith_normal_form(c.differential(p));
  for (int a : snf.exponents)
    if (a != 0) return false;
  return true;
}

PhiReport phi_report(const FreeComplex& c, int p) {
  PhiReport report;
  report.degree = p;
  report.dim_source = cohomology(c, p).residue_dimension();
  report.dim_target = residue_cohomology_dimension(c, p);
  report.surjective = phi_surjective(c, p);
  report.isomorphism = report.surjective && report.dim_source == report.dim_target;
  if (report.surjective && report.dim_source != report.dim_target) {
    std::ostringstream msg;
    msg << degree_name("phi", p) << " is surjective but dim H^p(F)(x)k = " << report.dim_source
        << " differs from dim H^p(F(x)k) = " << report.dim_target;
    report.violation = msg.str();
  }
  return report;
}

Lemma2Verdict lemma2_check(const FreeComplex& c, int p) {
  Lemma2Verdict v;
  const PhiReport phi = phi_report(c, p);
  v.cond_i = phi.isomorphism;
  v.cond_ii = phi.surjective;
  v.cond_iii = cond_iii(c, p);
  v.cond_iv = cond_iv(c, p);
  v.agree = v.cond_i == v.cond_ii && v.cond_ii == v.cond_iii && v.cond_iii == v.cond_iv;
  if (!v.agree) {
    std::ostringstream msg;
    msg << "conditions disagree at degree " << p << ": (i)=" << v.cond_i << " (ii)=" << v.cond_ii
        << " (iii)=" << v.cond_iii << " (iv)=" << v.cond_iv;
    v.violation = msg.str();
  }
  if (phi_surjective_via_block(c, p) != v.cond_ii) {
    std::ostringstream msg;
    msg << "block N = 0 test disagrees with kernel-rank surjectivity at degree " << p;
    v.agree = false;
    v.violation = v.violation ? *v.violation + "; " + msg.str() : msg.str();
  }
  return v;
}

TheoremBReport theorem_b_check(const FreeComplex& c, int p) {
  TheoremBReport report;
  report.degree = p;
  if (!phi_surjective(c, p)) {
    report.message = degree_name("phi", p) + " is not surjective";
    return report;
  }
  report.lower_surjective = phi_surjective(c, p - 1);
  const ModulePresentation h = cohomology(c, p);
  report.cohomology_free = h.is_free();
  if (report.lower_surjective != report.cohomology_free) {
    report.status = CheckStatus::violated;
    report.message = degree_name("phi", p - 1) + (report.lower_surjective ? " is" : " is not") +
                     " surjective but H^" + std::to_string(p) + " = " + h.to_string() +
                     (report.cohomology_free ? " is free" : " is not free");
    return report;
  }
  if (report.lower_surjective) {
    if (auto failure = commutation_failure(c, p, h, report.quotients_checked)) {
      report.status = CheckStatus::violated;
      report.message = *failure;
      return report;
    }
  }
  report.status = CheckStatus::holds;
  return report;
}

CorollaryReport corollary_check(const FreeComplex& c) {
  CorollaryReport report;
  if (c.min_degree() != 0) {
    report.message = "complex does not start in degree 0";
    return report;
  }
  const ModulePresentation residue_h1 = cohomology(tensor_residue(c), 1);
  if (!residue_h1.is_zero()) {
    report.message = "dim H^1(F (x) k) = " + std::to_string(residue_h1.free_rank) + " is nonzero";
    return report;
  }
  const ModulePresentation h1 = cohomology(c, 1);
  if (!h1.is_zero()) {
    report.status = CheckStatus::violated;
    report.message = "H^1(F (x) k) = 0 but H^1 = " + h1.to_string();
    return report;
  }
  const ModulePresentation h0 = cohomology(c, 0);
  if (!h0.is_free()) {
    report.status = CheckStatus::violated;
    report.message = "H^1(F (x) k) = 0 but H^0 = " + h0.to_string() + " is not free";
    return report;
  }
  if (auto failure = commutation_failure(c, 0, h0, report.quotients_checked)) {
    report.status = CheckStatus::violated;
    report.message = *failure;
    return report;
  }
  report.status = CheckStatus::holds;
  return report;
}

}  // namespace basechange
