#pragma once

#include <optional>
#include <vector>

#include "fss/scalar.hpp"

namespace fss {

using Vec = std::vector<Scalar>;

// Dense row-major exact matrix.  Desk-scale dimensions; no sparsity,
// no asymptotically fast multiplication.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const FieldSpec& spec);

  static Matrix identity(int n, const FieldSpec& spec);
  static Matrix zeros(int rows, int cols, const FieldSpec& spec);
  static Matrix from_rows(const std::vector<Vec>& rows, const FieldSpec& spec);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& spec() const { return spec_; }

  Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-() const;
  Matrix scaled(const Scalar& c) const;
  Matrix transpose() const;
  Scalar trace() const;
  Vec apply(const Vec& v) const;  // column-vector action
  Vec flatten() const { return a_; }
  Vec row(int i) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;
  // lambda with m = lambda * I, when the matrix is scalar
  std::optional<Scalar> scalar_of_identity() const;

  std::string str() const;

 private:
  int rows_ = 0, cols_ = 0;
  FieldSpec spec_{};
  std::vector<Scalar> a_;
};

// vector helpers
Vec vec_zeros(int n, const FieldSpec& spec);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Scalar& c);
bool vec_is_zero(const Vec& a);
int vec_first_nonzero(const Vec& a);  // -1 when zero

struct RrefResult {
  Matrix r;
  int rank = 0;
  std::vector<int> pivots;
};

// unique reduced row echelon form, leftmost pivots
RrefResult rref(const Matrix& m);

// one solution of a x = b with free variables set to zero, or nullopt
std::optional<Vec> solve(const Matrix& a, const Vec& b);

// canonical nullspace basis (one vector per free column, ascending)
std::vector<Vec> kernel(const Matrix& a);

// two-sided inverse, or nullopt when singular
std::optional<Matrix> matrix_inverse(const Matrix& m);

}  // namespace fss
