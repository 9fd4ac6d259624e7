#pragma once

// Exact integer linear algebra over arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cjac {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{0})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const T& k) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
  }
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const T& k) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }
  void negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<BigInt>;

inline BigMatrix to_big(const IntMatrix& m) {
  BigMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

/// Fraction-free Gaussian elimination (Bareiss). Every intermediate division is exact.
inline BigInt bareiss_determinant(BigMatrix a) {
  const std::size_t n = a.rows();
  if (n == 0) return BigInt{1};
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return BigInt{0};
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Smith normal form U * A * V = D with U, V unimodular and d_1 | d_2 | ... on the
/// diagonal. U^{-1} is tracked alongside U so that lifts back from the diagonal basis
/// need no inversion.
struct SmithForm {
  std::vector<BigInt> diagonal;  // length min(rows, cols), nonnegative
  BigMatrix u;
  BigMatrix u_inverse;
  BigMatrix v;
};

namespace detail {

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

inline SmithForm smith_normal_form(BigMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm out{{}, BigMatrix::identity(m), BigMatrix::identity(m), BigMatrix::identity(n)};
  auto& u = out.u;
  auto& ui = out.u_inverse;
  auto& v = out.v;

  // Row operations are mirrored on U; the inverse operation hits U^{-1} as a column op.
  auto row_swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    ui.swap_cols(i, j);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    a.add_row(dst, src, k);
    u.add_row(dst, src, k);
    ui.add_col(src, dst, -k);
  };
  auto row_negate = [&](std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    ui.negate_col(i);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    a.add_col(dst, src, k);
    v.add_col(dst, src, k);
  };

  const std::size_t steps = std::min(m, n);
  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      // Pivot on the smallest nonzero absolute value in the trailing block.
      bool found = false;
      std::size_t pr = k, pc = k;
      BigInt best;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (a(i, j) == 0) continue;
          BigInt x = abs(a(i, j));
          if (!found || x < best) {
            found = true;
            best = x;
            pr = i;
            pc = j;
          }
        }
      if (!found) break;
      row_swap(k, pr);
      col_swap(k, pc);
      if (a(k, k) < 0) row_negate(k);

      bool dirty = false;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (a(i, k) == 0) continue;
        BigInt q = detail::floor_div(a(i, k), a(k, k));
        row_add(i, k, -q);
        if (a(i, k) != 0) dirty = true;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j) == 0) continue;
        BigInt q = detail::floor_div(a(k, j), a(k, k));
        col_add(j, k, -q);
        if (a(k, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Enforce divisibility of the trailing block by the pivot.
      std::size_t bad_row = m;
      for (std::size_t i = k + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (a(i, j) % a(k, k) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      row_add(k, bad_row, BigInt{1});
    }
  }
  out.diagonal.resize(steps);
  for (std::size_t k = 0; k < steps; ++k) out.diagonal[k] = a(k, k);
  return out;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace cjac
