#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace kgraph {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

// Dense row-major matrix of arbitrary-precision integers. Zero-sized
// dimensions (0 x n, n x 0) are valid values.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<IntVector>& columns);
  static IntMatrix column_vector(const IntVector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  IntMatrix transpose() const;
  IntMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                  std::size_t ncols) const;
  // Select rows / columns by index, in the given order.
  IntMatrix select(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += c * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& c);
  // col[dst] += c * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& c, const IntMatrix& a);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntVector operator*(const IntMatrix& a, const IntVector& x);

IntMatrix hstack(const IntMatrix& left, const IntMatrix& right);
IntMatrix vstack(const IntMatrix& top, const IntMatrix& bottom);

std::string to_string(const IntMatrix& m);
std::string to_string(const IntVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace kgraph
