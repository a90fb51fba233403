#pragma once

// Shared fixture builders for the test suites.

#include <string>
#include <vector>

#include "fss/matrix.hpp"

namespace fss::testsupport {

inline Scalar q(long num, long den = 1) { return Scalar::rational(mpq_class(num, den)); }

inline Matrix mat_q(const std::vector<std::vector<long>>& rows) {
  FieldSpec spec = FieldSpec::rationals();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), spec);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = q(rows[i][j]);
  return m;
}

inline Matrix mat_p(std::uint64_t p, const std::vector<std::vector<long>>& rows) {
  FieldSpec spec = FieldSpec::gf(p);
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), spec);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = Scalar::of_int(spec, rows[i][j]);
  return m;
}

inline Vec vec_q(const std::vector<long>& entries) {
  Vec v;
  for (long e : entries) v.push_back(q(e));
  return v;
}

// permutation matrix over Q for a map given in one-line notation
// (img[j] = image of point j, 0-based); acts by e_j -> e_img[j]
inline Matrix perm_matrix_q(const std::vector<int>& img) {
  int n = static_cast<int>(img.size());
  Matrix m(n, n, FieldSpec::rationals());
  for (int j = 0; j < n; ++j) m.at(img[static_cast<std::size_t>(j)], j) = q(1);
  return m;
}

// D8 acting on the square's vertices: r = (1234), s = (13), 0-based
inline Matrix d8_perm_r() { return perm_matrix_q({1, 2, 3, 0}); }
inline Matrix d8_perm_s() { return perm_matrix_q({2, 1, 0, 3}); }

// the 2-dimensional realization r -> [[0,-1],[1,0]], s -> [[1,0],[0,-1]]
inline Matrix d8_v_r() { return mat_q({{0, -1}, {1, 0}}); }
inline Matrix d8_v_s() { return mat_q({{1, 0}, {0, -1}}); }

}  // namespace fss::testsupport
