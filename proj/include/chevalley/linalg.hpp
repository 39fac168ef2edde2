#pragma once

// Dense exact linear algebra over a field context (see fields.hpp), integer
// Smith normal form, and Smith normal form over the valuation ring of a valued
// field.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chevalley/fields.hpp"

namespace chevalley {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

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

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class F>
using FieldMatrix = Matrix<typename F::value_type>;

template <class F>
FieldMatrix<F> zero_matrix(const F& field, std::size_t rows, std::size_t cols) {
  return FieldMatrix<F>(rows, cols, field.zero());
}

template <class F>
FieldMatrix<F> identity_matrix(const F& field, std::size_t n) {
  auto m = zero_matrix(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

template <class F>
FieldMatrix<F> multiply(const F& field, const FieldMatrix<F>& a, const FieldMatrix<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  auto out = zero_matrix(field, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
    }
  return out;
}

// Row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(const F& field, FieldMatrix<F>& m, bool reduced = false) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && field.is_zero(m(sel, col))) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(row, sel);
    const auto pivot_inv = field.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = field.mul(m(row, c), pivot_inv);
    for (std::size_t r = reduced ? 0 : row + 1; r < m.rows(); ++r) {
      if (r == row || field.is_zero(m(r, col))) continue;
      const auto factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = field.sub(m(r, c), field.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(const F& field, FieldMatrix<F> m) {
  return row_reduce(field, m).size();
}

template <class F>
typename F::value_type determinant(const F& field, FieldMatrix<F> m) {
  if (!m.square()) throw std::invalid_argument("determinant: matrix is not square");
  const std::size_t n = m.rows();
  auto det = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && field.is_zero(m(sel, col))) ++sel;
    if (sel == n) return field.zero();
    if (sel != col) {
      m.swap_rows(sel, col);
      det = field.neg(det);
    }
    det = field.mul(det, m(col, col));
    const auto pivot_inv = field.inv(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (field.is_zero(m(r, col))) continue;
      const auto factor = field.mul(m(r, col), pivot_inv);
      for (std::size_t c = col; c < n; ++c) m(r, c) = field.sub(m(r, c), field.mul(factor, m(col, c)));
    }
  }
  return det;
}

// Some solution x of a x = b, or nullopt when inconsistent.
template <class F>
std::optional<std::vector<typename F::value_type>> solve(const F& field, const FieldMatrix<F>& a,
                                                         const std::vector<typename F::value_type>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  auto aug = zero_matrix(field, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = row_reduce(field, aug, true);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  std::vector<typename F::value_type> x(a.cols(), field.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, a.cols());
  return x;
}

// Basis of {x : m x = 0}.
template <class F>
std::vector<std::vector<typename F::value_type>> kernel_basis(const F& field, FieldMatrix<F> m) {
  const auto pivots = row_reduce(field, m, true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::value_type>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::value_type> v(m.cols(), field.zero());
    v[free] = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(m(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<FieldMatrix<F>> inverse(const F& field, const FieldMatrix<F>& m) {
  if (!m.square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  auto aug = zero_matrix(field, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = field.one();
  }
  const auto pivots = row_reduce(field, aug, true);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  auto out = zero_matrix(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form over Z.  Returns the diagonal d_1 | d_2 | ... (length
// min(rows, cols)), nonnegative, zeros last.

inline std::vector<mpz_class> smith_divisors(Matrix<mpz_class> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // pivot: smallest nonzero |entry| in the trailing block
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (m(r, c) != 0 && (!best || abs(m(r, c)) < abs(m(best->first, best->second)))) best = {r, c};
      if (!best) {
        std::vector<mpz_class> out;
        for (std::size_t i = 0; i < t; ++i) out.push_back(abs(m(i, i)));
        out.resize(n, 0);
        return out;
      }
      m.swap_rows(t, best->first);
      m.swap_cols(t, best->second);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m(r, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t c = t; c < cols; ++c) m(r, c) -= q * m(t, c);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m(t, c) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        for (std::size_t r = t; r < rows; ++r) m(r, c) -= q * m(r, t);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the remaining block by the pivot
      std::optional<std::size_t> bad_row;
      for (std::size_t r = t + 1; r < rows && !bad_row; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
            bad_row = r;
            break;
          }
      if (!bad_row) break;
      for (std::size_t c = t; c < cols; ++c) m(t, c) += m(*bad_row, c);
    }
  }
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(abs(m(i, i)));
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form over the valuation ring of a valued field: the valuations
// of the elementary divisors, ascending, nullopt meaning a zero divisor
// (infinite valuation).  Pivoting on an entry of minimal valuation keeps every
// elimination multiplier integral, so the row and column operations are
// unimodular over the valuation ring.

template <class F>
std::vector<std::optional<std::int64_t>> local_smith_valuations(const F& field, FieldMatrix<F> m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t n = std::min(rows, cols);
  std::vector<std::optional<std::int64_t>> out;
  for (std::size_t t = 0; t < n; ++t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::int64_t best_v = 0;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        if (field.is_zero(m(r, c))) continue;
        const auto v = field.valuation(m(r, c));
        if (!best || v < best_v) {
          best = {r, c};
          best_v = v;
        }
      }
    if (!best) break;
    m.swap_rows(t, best->first);
    m.swap_cols(t, best->second);
    const auto pivot_inv = field.inv(m(t, t));
    for (std::size_t r = t + 1; r < rows; ++r) {
      if (field.is_zero(m(r, t))) continue;
      const auto factor = field.mul(m(r, t), pivot_inv);
      for (std::size_t c = t; c < cols; ++c) m(r, c) = field.sub(m(r, c), field.mul(factor, m(t, c)));
    }
    for (std::size_t c = t + 1; c < cols; ++c) m(t, c) = field.zero();
    out.emplace_back(best_v);
  }
  out.resize(n, std::nullopt);
  return out;
}

}  // namespace chevalley
