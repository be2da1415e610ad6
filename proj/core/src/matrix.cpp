#include "cubiccm/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cubiccm {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols) {
  return from_rows(cols).transposed();
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix/vector shape mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

Integer dot(const IntVector& x, const IntVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Extended gcd: returns (g, s, t) with s*a + t*b = g >= 0.
struct Bezout {
  Integer g, s, t;
};

Bezout bezout(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

void swap_rows(IntMatrix& a, std::size_t i, std::size_t k) {
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(i, j), a(k, j));
}

void swap_cols(IntMatrix& a, std::size_t j, std::size_t k) {
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, j), a(i, k));
}

// Column operation on columns (j, k) by the unimodular 2x2 [[s, -y], [t, x]]
// applied from the right: new_j = s*col_j + t*col_k, new_k = -y*col_j + x*col_k.
void combine_cols(IntMatrix& a, std::size_t j, std::size_t k, const Integer& s,
                  const Integer& t, const Integer& x, const Integer& y) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Integer cj = a(i, j), ck = a(i, k);
    a(i, j) = s * cj + t * ck;
    a(i, k) = x * ck - y * cj;
  }
}

void combine_rows(IntMatrix& a, std::size_t i, std::size_t k, const Integer& s,
                  const Integer& t, const Integer& x, const Integer& y) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Integer ri = a(i, j), rk = a(k, j);
    a(i, j) = s * ri + t * rk;
    a(k, j) = x * rk - y * ri;
  }
}

}  // namespace

IntVector smith_diagonal(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (sgn(a(i, j)) != 0 && (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(a, t, pi);
    swap_cols(a, t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        clean = false;
        if (mpz_divisible_p(a(i, t).get_mpz_t(), a(t, t).get_mpz_t())) {
          // Plain elimination leaves row t alone, so the pivot cannot cycle.
          const Integer q = a(i, t) / a(t, t);
          for (std::size_t c = t; c < cols; ++c) a(i, c) -= q * a(t, c);
          continue;
        }
        const Bezout b = bezout(a(t, t), a(i, t));
        const Integer x = a(t, t) / b.g, y = a(i, t) / b.g;
        combine_rows(a, t, i, b.s, b.t, x, y);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        clean = false;
        if (mpz_divisible_p(a(t, j).get_mpz_t(), a(t, t).get_mpz_t())) {
          const Integer q = a(t, j) / a(t, t);
          for (std::size_t r = t; r < rows; ++r) a(r, j) -= q * a(r, t);
          continue;
        }
        const Bezout b = bezout(a(t, t), a(t, j));
        const Integer x = a(t, t) / b.g, y = a(t, j) / b.g;
        combine_cols(a, t, j, b.s, b.t, x, y);
      }
      if (!clean) continue;
      // Divisibility: pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            for (std::size_t c = 0; c < cols; ++c) a(t, c) += a(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (sgn(a(t, t)) < 0) a(t, t) = -a(t, t);
  }
  IntVector diag(n);
  for (std::size_t t = 0; t < n; ++t) diag[t] = a(t, t);
  return diag;
}

std::size_t integer_rank(const IntMatrix& m) {
  std::size_t r = 0;
  for (const auto& d : smith_diagonal(m))
    if (sgn(d) != 0) ++r;
  return r;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(cols);
  std::size_t pivot = 0;
  for (std::size_t r = 0; r < rows && pivot < cols; ++r) {
    for (std::size_t j = pivot + 1; j < cols; ++j) {
      if (sgn(a(r, j)) == 0) continue;
      const Bezout b = bezout(a(r, pivot), a(r, j));
      const Integer x = a(r, pivot) / b.g, y = a(r, j) / b.g;
      combine_cols(a, pivot, j, b.s, b.t, x, y);
      combine_cols(u, pivot, j, b.s, b.t, x, y);
    }
    if (sgn(a(r, pivot)) != 0) ++pivot;
  }
  IntMatrix kernel(cols, cols - pivot);
  for (std::size_t j = pivot; j < cols; ++j)
    for (std::size_t i = 0; i < cols; ++i) kernel(i, j - pivot) = u(i, j);
  return kernel;
}

IntVector parse_int_vector(const std::string& text) {
  IntVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty vector entry");
    Integer z;
    if (z.set_str(item.substr(first, last - first + 1), 10) != 0)
      throw std::invalid_argument("bad integer: " + item);
    v.push_back(z);
  }
  return v;
}

IntMatrix parse_matrix(const std::string& text) {
  std::vector<IntVector> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_int_vector(row));
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  return IntMatrix::from_rows(rows);
}

std::string format_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m(i, j).get_str();
    }
  }
  return out;
}

}  // namespace cubiccm
