#include "basechange/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace basechange {

namespace {

void require_field(const Matrix& a, const char* what) {
  if (!a.ring().is_field())
    throw std::invalid_argument(std::string(what) + ": " + a.ring().spec_string() + " is not a field");
}

void require_square(const Matrix& a, const char* what) {
  if (!a.is_square())
    throw DimensionError(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", not square");
}

Matrix unit_vectors(const RingDescriptor& ring, std::size_t n, const std::vector<std::size_t>& indices) {
  Matrix e(ring, n, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) e(indices[j], j) = RingElement::one(ring);
  return e;
}

}  // namespace

Matrix mat_reduce(const Matrix& a) {
  return a.map(a.ring().residue_field(), [](const RingElement& x) { return residue(x); });
}

Matrix mat_lift(const RingDescriptor& ring, const Matrix& a) {
  return a.map(ring, [&](const RingElement& y) { return lift(ring, y); });
}

// ---------------------------------------------------------------------------

RowEchelon row_echelon(const Matrix& a) {
  require_field(a, "row_echelon");
  RowEchelon out{a, {}};
  Matrix& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    m.scale_row(row, inverse(m(row, col)));
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != row && !m(i, col).is_zero()) m.add_row_multiple(i, row, -m(i, col));
    out.pivot_columns.push_back(col);
    ++row;
  }
  return out;
}

std::size_t field_rank(const Matrix& a) { return row_echelon(a).rank(); }

RingElement field_determinant(const Matrix& a) {
  require_field(a, "field_determinant");
  require_square(a, "field_determinant");
  Matrix m = a;
  RingElement det = RingElement::one(a.ring());
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t pivot = col;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) return RingElement::zero(a.ring());
    if (pivot != col) {
      m.swap_rows(col, pivot);
      det = -det;
    }
    det *= m(col, col);
    const RingElement inv = inverse(m(col, col));
    for (std::size_t i = col + 1; i < m.rows(); ++i)
      if (!m(i, col).is_zero()) m.add_row_multiple(i, col, -(m(i, col) * inv));
  }
  return det;
}

Matrix field_kernel_basis(const Matrix& a) {
  RowEchelon e = row_echelon(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  Matrix basis(a.ring(), n, n - e.rank());
  std::size_t j = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis(free, j) = RingElement::one(a.ring());
    for (std::size_t i = 0; i < e.rank(); ++i) basis(e.pivot_columns[i], j) = -e.reduced(i, free);
    ++j;
  }
  return basis;
}

std::vector<std::size_t> extend_to_basis(const Matrix& vectors) {
  require_field(vectors, "extend_to_basis");
  const std::size_t n = vectors.rows();
  std::vector<std::size_t> added;
  Matrix current = vectors;
  std::size_t rank = field_rank(current);
  for (std::size_t i = 0; i < n && rank < n; ++i) {
    Matrix candidate = hconcat(current, unit_vectors(vectors.ring(), n, {i}));
    std::size_t r = field_rank(candidate);
    if (r > rank) {
      current = std::move(candidate);
      rank = r;
      added.push_back(i);
    }
  }
  return added;
}

// ---------------------------------------------------------------------------

bool is_invertible(const Matrix& a) {
  require_square(a, "is_invertible");
  return !field_determinant(mat_reduce(a)).is_zero();
}

Matrix invert(const Matrix& a) {
  require_square(a, "invert");
  const std::size_t n = a.rows();
  Matrix m = a;
  Matrix inv = Matrix::identity(a.ring(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !m(pivot, col).is_unit()) ++pivot;
    if (pivot == n) throw NotInvertibleError("matrix is not invertible: residue is singular");
    m.swap_rows(col, pivot);
    inv.swap_rows(col, pivot);
    const RingElement scale = inverse(m(col, col));
    m.scale_row(col, scale);
    inv.scale_row(col, scale);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      const RingElement f = -m(i, col);
      m.add_row_multiple(i, col, f);
      inv.add_row_multiple(i, col, f);
    }
  }
  return inv;
}

SmithForm smith_normal_form(const Matrix& a) {
  const RingDescriptor& ring = a.ring();
  const std::size_t rows = a.rows(), cols = a.cols();
  SmithForm out{Matrix::identity(ring, rows), Matrix::identity(ring, cols), a, {}};
  Matrix& D = out.D;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    int best = kInfiniteValuation;
    std::size_t bi = k, bj = k;
    for (std::size_t i = k; i < rows && best > 0; ++i)
      for (std::size_t j = k; j < cols; ++j) {
        const int v = D(i, j).valuation();
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    if (best == kInfiniteValuation) break;

    D.swap_rows(k, bi);
    out.P.swap_rows(k, bi);
    D.swap_cols(k, bj);
    out.Q.swap_cols(k, bj);

    auto [exponent, unit] = split_uniformizer(D(k, k));
    const RingElement unit_inv = inverse(unit);
    D.scale_row(k, unit_inv);
    out.P.scale_row(k, unit_inv);
    const RingElement pivot = D(k, k);

    for (std::size_t i = k + 1; i < rows; ++i) {
      if (D(i, k).is_zero()) continue;
      const RingElement f = -exact_quotient(D(i, k), pivot);
      D.add_row_multiple(i, k, f);
      out.P.add_row_multiple(i, k, f);
    }
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (D(k, j).is_zero()) continue;
      const RingElement f = -exact_quotient(D(k, j), pivot);
      D.add_col_multiple(j, k, f);
      out.Q.add_col_multiple(j, k, f);
    }
    out.exponents.push_back(exponent);
  }
  return out;
}

KernelModule kernel_module(const Matrix& a) {
  const RingDescriptor& ring = a.ring();
  const SmithForm snf = smith_normal_form(a);
  const auto nil = ring.nilpotency_degree();

  std::vector<Matrix> columns;
  KernelModule out{Matrix(ring, a.cols(), 0), {}};
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (j < snf.rank()) {
      // pi^a y = 0 forces y in (pi^{c-a}) on a ring with m^c = 0, y = 0 on a domain.
      const int exponent = snf.exponents[j];
      if (!nil || exponent == 0) continue;
      Matrix g = snf.Q.column(j);
      g.scale_col(0, RingElement::uniformizer_power(ring, *nil - exponent));
      columns.push_back(std::move(g));
      out.annihilator_exponent.push_back(exponent);
    } else {
      columns.push_back(snf.Q.column(j));
      out.annihilator_exponent.push_back(0);
    }
  }
  Matrix gens(ring, a.cols(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) gens.set_block(0, j, columns[j]);
  out.generators = std::move(gens);
  return out;
}

Matrix kernel_generators(const Matrix& a) { return kernel_module(a).generators; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("solve: row counts differ");
  const RingDescriptor& ring = a.ring();
  const SmithForm snf = smith_normal_form(a);
  const Matrix pb = snf.P * b;
  Matrix y(ring, a.cols(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const RingElement& rhs = pb(i, j);
      if (i < snf.rank()) {
        if (rhs.valuation() < snf.exponents[i]) return std::nullopt;
        y(i, j) = exact_quotient(rhs, snf.D(i, i));
      } else if (!rhs.is_zero()) {
        return std::nullopt;
      }
    }
  return snf.Q * y;
}

Matrix block_normal_form(const Matrix& M, const Matrix& N) {
  const std::size_t s = M.rows(), r = M.cols(), t = N.rows();
  if (N.cols() != r) throw DimensionError("block_normal_form: M and N have different widths");
  Matrix out(M.ring(), s + t, r + s);
  out.set_block(0, 0, M);
  out.set_block(s, 0, N);
  out.set_block(0, r, Matrix::identity(M.ring(), s));
  return out;
}

BlockDecomposition block_decompose(const Matrix& d) {
  const RingDescriptor& ring = d.ring();
  const Matrix reduced = mat_reduce(d);

  const Matrix kernel = field_kernel_basis(reduced);
  const std::vector<std::size_t> source_completion = extend_to_basis(kernel);
  const std::size_t r = kernel.cols();
  const std::size_t s = source_completion.size();

  Matrix P = hconcat(mat_lift(ring, kernel), unit_vectors(ring, d.cols(), source_completion));
  const Matrix image = d * P.block(0, r, d.cols(), s);
  const std::vector<std::size_t> target_completion = extend_to_basis(mat_reduce(image));
  const std::size_t t = target_completion.size();
  Matrix Q = hconcat(image, unit_vectors(ring, d.rows(), target_completion));

  Matrix Q_inverse = invert(Q);
  const Matrix normal = Q_inverse * d * P;
  Matrix M = normal.block(0, 0, s, r);
  Matrix N = normal.block(s, 0, t, r);
  if (!(normal == block_normal_form(M, N)))
    throw std::logic_error("block_decompose: change of basis did not produce the block form");
  return BlockDecomposition{std::move(P), std::move(Q), std::move(Q_inverse), r, s, t,
                            std::move(M), std::move(N)};
}

}  // namespace basechange
