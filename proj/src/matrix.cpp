#include "basechange/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace basechange {

namespace {

void require_ring(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring()))
    throw RingMismatchError("ring mismatch: " + a.ring().spec_string() + " vs " +
                            b.ring().spec_string());
}

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Matrix::Matrix(const RingDescriptor& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, RingElement::zero(ring)) {}

Matrix Matrix::identity(const RingDescriptor& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = RingElement::one(ring);
  return m;
}

Matrix Matrix::from_integers(const RingDescriptor& ring, std::size_t rows, std::size_t cols,
                             std::initializer_list<std::int64_t> entries) {
  if (entries.size() != rows * cols)
    throw DimensionError("from_integers: expected " + std::to_string(rows * cols) + " entries");
  Matrix m(ring, rows, cols);
  std::size_t i = 0;
  for (std::int64_t e : entries) m.entries_[i++] = RingElement::from_integer(ring, e);
  return m;
}

Matrix Matrix::from_integers(const RingDescriptor& ring,
                             std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  Matrix m(ring, rows.size(), cols);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw DimensionError("from_integers: ragged rows");
    std::size_t j = 0;
    for (std::int64_t e : row) m(i, j++) = RingElement::from_integer(ring, e);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const RingDescriptor& ring, std::size_t cols,
                         const std::vector<std::vector<RingElement>>& rows) {
  Matrix m(ring, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(rows[i][j].ring() == ring)) throw RingMismatchError("from_rows: entry from another ring");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const RingElement& x) { return x.is_zero(); });
}

Matrix Matrix::block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const {
  if (row + nrows > rows_ || col + ncols > cols_) throw DimensionError("block out of range of " + shape(*this));
  Matrix out(ring_, nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row + i, col + j);
  return out;
}

void Matrix::set_block(std::size_t row, std::size_t col, const Matrix& m) {
  require_ring(*this, m);
  if (row + m.rows_ > rows_ || col + m.cols_ > cols_) throw DimensionError("set_block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(row + i, col + j) = m(i, j);
}

Matrix Matrix::transpose() const {
  Matrix out(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void Matrix::scale_row(std::size_t row, const RingElement& factor) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(row, j) *= factor;
}

void Matrix::scale_col(std::size_t col, const RingElement& factor) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, col) *= factor;
}

void Matrix::add_row_multiple(std::size_t dst, std::size_t src, const RingElement& factor) {
  if (factor.is_zero()) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!(*this)(src, j).is_zero()) (*this)(dst, j) += factor * (*this)(src, j);
}

void Matrix::add_col_multiple(std::size_t dst, std::size_t src, const RingElement& factor) {
  if (factor.is_zero()) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, src).is_zero()) (*this)(i, dst) += factor * (*this)(i, src);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_ring(a, b);
  if (a.cols_ != b.rows_) throw DimensionError("cannot multiply " + shape(a) + " by " + shape(b));
  Matrix out(a.ring_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const RingElement& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_ring(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("cannot add " + shape(a) + " and " + shape(b));
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_ring(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("cannot subtract " + shape(b) + " from " + shape(a));
  Matrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << (*this)(i, j).to_string();
    out << ']';
  }
  out << ']';
  return out.str();
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  require_ring(a, b);
  if (a.rows() != b.rows()) throw DimensionError("hconcat: row counts differ");
  Matrix out(a.ring(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

}  // namespace basechange
