#ifndef PERMOD_LINALG_HPP
#define PERMOD_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace permod {

/// Dense row-major matrix over any of the exact field element types.
template <class K>
class Matrix {
public:
  Matrix(size_t rows, size_t cols, const K& fill)
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<K>>& rows, const K& exemplar) {
    if (rows.empty()) return Matrix(0, 0, exemplar);
    Matrix m(rows.size(), rows[0].size(), exemplar.zero());
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
      for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  K& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const K& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_, e_.empty() ? K() : e_[0].zero());
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

private:
  size_t rows_, cols_;
  std::vector<K> e_;
};

/// Shared Gaussian elimination kernel: reduces m in place to (reduced) row
/// echelon form with first-nonzero-pivot selection scanning top-to-bottom,
/// left-to-right.  Pivot rows are normalized to leading 1.  Returns the pivot
/// columns; `sign` and `pivot_product` reconstruct the determinant of square
/// inputs (product of pivots before normalization, with swap parity).
template <class K>
struct EchelonResult {
  std::vector<size_t> pivot_cols;
  int sign = 1;
  K pivot_product;
  explicit EchelonResult(const K& one) : pivot_product(one) {}
};

template <class K>
EchelonResult<K> echelonize(Matrix<K>& m, bool reduced) {
  EchelonResult<K> res(m.rows() && m.cols() ? m.at(0, 0).one() : K());
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t pr = row;
    while (pr < m.rows() && m.at(pr, col).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != row) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(row, j));
      res.sign = -res.sign;
    }
    const K pivot = m.at(row, col);
    res.pivot_product = res.pivot_product * pivot;
    const K inv = pivot.inverse();
    for (size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
    for (size_t i = reduced ? 0 : row + 1; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      const K f = m.at(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        m.at(i, j) = m.at(i, j) - f * m.at(row, j);
    }
    res.pivot_cols.push_back(col);
    ++row;
  }
  return res;
}

template <class K>
size_t rank(Matrix<K> m) {
  return echelonize(m, /*reduced=*/false).pivot_cols.size();
}

/// Exact determinant: cofactor expansion for n <= 3, elimination with pivot
/// sign tracking otherwise.
template <class K>
K det_exact(Matrix<K> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("empty matrix");
  if (n == 1) return m.at(0, 0);
  if (n == 2)
    return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (n == 3) {
    K a = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1));
    K b = m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0));
    K c = m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    return a - b + c;
  }
  auto res = echelonize(m, /*reduced=*/false);
  if (res.pivot_cols.size() < n) return m.at(0, 0).zero();
  K det = res.pivot_product;
  if (res.sign < 0) det = -det;
  return det;
}

/// Basis of the right null space in the reduced echelon convention: one
/// vector per free column, that free variable set to 1, in column order.
template <class K>
std::vector<std::vector<K>> null_space(Matrix<K> m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  const K zero = m.at(0, 0).zero();
  const K one = m.at(0, 0).one();
  auto res = echelonize(m, /*reduced=*/true);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : res.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<K>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<K> v(m.cols(), zero);
    v[free] = one;
    for (size_t r = 0; r < res.pivot_cols.size(); ++r)
      v[res.pivot_cols[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Reduce a list of vectors to a canonical RREF basis of their span.
template <class K>
std::vector<std::vector<K>> span_basis(const std::vector<std::vector<K>>& vecs,
                                       const K& exemplar) {
  if (vecs.empty()) return {};
  Matrix<K> m = Matrix<K>::from_rows(vecs, exemplar);
  auto res = echelonize(m, /*reduced=*/true);
  std::vector<std::vector<K>> rows;
  for (size_t r = 0; r < res.pivot_cols.size(); ++r) {
    std::vector<K> v;
    v.reserve(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(r, j));
    rows.push_back(std::move(v));
  }
  return rows;
}

/// Basis of span(A) intersect span(B), via the null space of the stacked
/// system sum a_i A_i - sum b_j B_j = 0.
template <class K>
std::vector<std::vector<K>> subspace_intersect(
    const std::vector<std::vector<K>>& A, const std::vector<std::vector<K>>& B,
    const K& exemplar) {
  if (A.empty() || B.empty()) return {};
  const size_t n = A[0].size();
  for (const auto& v : A)
    if (v.size() != n) throw std::invalid_argument("mismatched dimensions");
  for (const auto& v : B)
    if (v.size() != n) throw std::invalid_argument("mismatched dimensions");
  const K zero = exemplar.zero();
  Matrix<K> m(n, A.size() + B.size(), zero);
  for (size_t c = 0; c < n; ++c) {
    for (size_t i = 0; i < A.size(); ++i) m.at(c, i) = A[i][c];
    for (size_t j = 0; j < B.size(); ++j) m.at(c, A.size() + j) = -B[j][c];
  }
  auto null = null_space(std::move(m));
  std::vector<std::vector<K>> vecs;
  for (const auto& sol : null) {
    std::vector<K> v(n, zero);
    for (size_t i = 0; i < A.size(); ++i)
      for (size_t c = 0; c < n; ++c) v[c] = v[c] + sol[i] * A[i][c];
    vecs.push_back(std::move(v));
  }
  return span_basis(vecs, exemplar);
}

}  // namespace permod

#endif
