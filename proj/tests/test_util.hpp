#ifndef PERMOD_TESTS_TEST_UTIL_HPP
#define PERMOD_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "permod/linalg.hpp"

namespace permod::testutil {

inline std::string fixture(const std::string& rel) {
  return std::string(PERMOD_REPO_ROOT) + "/fixtures/" + rel;
}

/// Deterministic generator; the seed is part of the test.
inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline uint64_t draw(std::mt19937_64& g, uint64_t bound) { return g() % bound; }

/// Independent determinant oracle: cofactor expansion along the first row.
template <class K>
K det_cofactor(const Matrix<K>& m) {
  const size_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  K acc = m.at(0, 0).zero();
  for (size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    Matrix<K> sub(n - 1, n - 1, m.at(0, 0).zero());
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(r - 1, cc++) = m.at(r, c);
      }
    }
    K term = m.at(0, j) * det_cofactor(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

/// Independent rank oracle: plain row reduction, no pivot normalization.
template <class K>
size_t rank_bruteforce(Matrix<K> m) {
  size_t rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    for (size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      K f = m.at(r, col) * m.at(row, col).inverse();
      for (size_t j = 0; j < m.cols(); ++j)
        m.at(r, j) = m.at(r, j) - f * m.at(row, j);
    }
    ++rank;
    ++row;
  }
  return rank;
}

}  // namespace permod::testutil

#endif
