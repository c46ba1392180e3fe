#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "basechange/matrix.hpp"

namespace basechange {

// Entrywise reduction modulo m; the result lives over ring().residue_field().
Matrix mat_reduce(const Matrix& a);
// Entrywise lift along the fixed section k -> A.
Matrix mat_lift(const RingDescriptor& ring, const Matrix& a);

// --- Linear algebra over a field (is_field() rings). ---------------------

struct RowEchelon {
  Matrix reduced;                         // reduced row echelon form
  std::vector<std::size_t> pivot_columns; // one per nonzero row, ascending
  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

// Gauss-Jordan; the pivot in each column is the first nonzero entry at or
// below the current row.
RowEchelon row_echelon(const Matrix& a);
std::size_t field_rank(const Matrix& a);
RingElement field_determinant(const Matrix& a);
// Basis of the null space as columns, one per non-pivot column.
Matrix field_kernel_basis(const Matrix& a);
// Standard unit vectors (indices, ascending) completing the columns of
// `vectors` (assumed independent) to a basis of k^n.
std::vector<std::size_t> extend_to_basis(const Matrix& vectors);

// --- Linear algebra over the local ring. ---------------------------------

// A square matrix is invertible over A iff its residue determinant is nonzero.
bool is_invertible(const Matrix& a);
// Gauss-Jordan with unit pivots. Throws NotInvertibleError.
Matrix invert(const Matrix& a);

// P * A * Q = D with D = diag(pi^a_1, ..., pi^a_rank, 0, ...), a_i nondecreasing.
struct SmithForm {
  Matrix P;
  Matrix Q;
  Matrix D;
  std::vector<int> exponents;  // a_1 <= ... <= a_rank (nonzero diagonal entries)
  std::size_t rank() const noexcept { return exponents.size(); }
};

// Pivot rule: minimal valuation in the remaining block, first in row-major order.
SmithForm smith_normal_form(const Matrix& a);

// Generators of {x : A x = 0} together with their annihilators.
struct KernelModule {
  Matrix generators;  // cols(A) x u
  // annihilator_exponent[j] = a means generator j spans a copy of A/(pi^a);
  // 0 means it spans a free summand.
  std::vector<int> annihilator_exponent;
};

KernelModule kernel_module(const Matrix& a);
Matrix kernel_generators(const Matrix& a);

// Some X with A * X = B, or nullopt when the system has no solution.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Bases of source and target with Q^{-1} d P = [[M, Id_s], [N, 0]] and all
// entries of M and N in m. Columns of P: first r span the lift of ker(d mod m),
// the remaining s complete a basis. The first s columns of Q are d(P_W).
struct BlockDecomposition {
  Matrix P;
  Matrix Q;
  Matrix Q_inverse;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  Matrix M;  // s x r
  Matrix N;  // t x r
};

BlockDecomposition block_decompose(const Matrix& d);

// The block matrix [[M, Id_s], [N, 0_{t x s}]].
Matrix block_normal_form(const Matrix& M, const Matrix& N);

}  // namespace basechange
