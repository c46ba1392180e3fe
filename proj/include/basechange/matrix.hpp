#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "basechange/ring.hpp"

namespace basechange {

// Dense row-major matrix over a RingDescriptor. Columns index the source
// basis, rows the target basis. Zero-sized dimensions are allowed.
class Matrix {
 public:
  Matrix(const RingDescriptor& ring, std::size_t rows, std::size_t cols);

  static Matrix identity(const RingDescriptor& ring, std::size_t n);
  // Entries given as integers, mapped into the ring.
  static Matrix from_integers(const RingDescriptor& ring, std::size_t rows, std::size_t cols,
                              std::initializer_list<std::int64_t> entries);
  static Matrix from_integers(const RingDescriptor& ring,
                              std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_rows(const RingDescriptor& ring, std::size_t cols,
                          const std::vector<std::vector<RingElement>>& rows);

  const RingDescriptor& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const RingElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  RingElement& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  bool is_zero() const;

  Matrix block(std::size_t row, std::size_t col, std::size_t nrows, std::size_t ncols) const;
  Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }
  void set_block(std::size_t row, std::size_t col, const Matrix& m);
  Matrix transpose() const;

  // Elementary operations.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void scale_row(std::size_t row, const RingElement& factor);
  void scale_col(std::size_t col, const RingElement& factor);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const RingElement& factor);
  // col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const RingElement& factor);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  // Apply a ring map entrywise.
  template <typename F>
  Matrix map(const RingDescriptor& target, F&& f) const {
    Matrix out(target, rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = f(entries_[i]);
    return out;
  }

  std::string to_string() const;

 private:
  RingDescriptor ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<RingElement> entries_;
};

// Columns of a and b side by side; a.rows() must equal b.rows().
Matrix hconcat(const Matrix& a, const Matrix& b);

}  // namespace basechange
