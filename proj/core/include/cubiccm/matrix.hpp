#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cubiccm/bigint.hpp"

namespace cubiccm {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(const std::vector<IntVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;

  IntMatrix transposed() const;
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);

Integer dot(const IntVector& x, const IntVector& y);

// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

// Diagonal of the Smith normal form: min(rows, cols) non-negative entries,
// each dividing the next, zeros last.
IntVector smith_diagonal(const IntMatrix& m);

std::size_t integer_rank(const IntMatrix& m);

// Basis (as columns) of the integer kernel {x in Z^n : m x = 0}. The basis
// comes from a unimodular column transform, so the kernel is saturated.
IntMatrix integer_kernel(const IntMatrix& m);

// "a,b;c,d" -> 2x2 matrix. Rows separated by ';', entries by ','.
IntMatrix parse_matrix(const std::string& text);
std::string format_matrix(const IntMatrix& m);

}  // namespace cubiccm
