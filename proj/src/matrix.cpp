#include "fss/matrix.hpp"

#include <sstream>

namespace fss {

Matrix::Matrix(int rows, int cols, const FieldSpec& spec)
    : rows_(rows), cols_(cols), spec_(spec),
      a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(spec)) {
  if (rows < 0 || cols < 0) fail(ErrorCode::ShapeMismatch, "negative matrix shape");
}

Matrix Matrix::identity(int n, const FieldSpec& spec) {
  Matrix m(n, n, spec);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(spec);
  return m;
}

Matrix Matrix::zeros(int rows, int cols, const FieldSpec& spec) {
  return Matrix(rows, cols, spec);
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, const FieldSpec& spec) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c, spec);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      fail(ErrorCode::ShapeMismatch, "ragged rows");
    }
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::ShapeMismatch, "matrix add");
  Matrix m(rows_, cols_, spec_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::ShapeMismatch, "matrix sub");
  Matrix m(rows_, cols_, spec_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] - o.a_[k];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::ShapeMismatch, "matrix mul");
  Matrix m(rows_, o.cols_, spec_);
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        m.at(i, j) += aik * bkj;
      }
    }
  }
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m(rows_, cols_, spec_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(rows_, cols_, spec_);
  for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * c;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_, spec_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(spec_);
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) fail(ErrorCode::ShapeMismatch, "matrix apply");
  Vec w(rows_, Scalar::zero(spec_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      w[i] += at(i, j) * v[j];
    }
  }
  return w;
}

Vec Matrix::row(int i) const {
  Vec r(cols_, Scalar::zero(spec_));
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || spec_ != o.spec_) return false;
  return a_ == o.a_;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : a_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

std::optional<Scalar> Matrix::scalar_of_identity() const {
  if (rows_ != cols_ || rows_ == 0) return std::nullopt;
  Scalar lambda = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? at(i, j) != lambda : !at(i, j).is_zero()) return std::nullopt;
    }
  return lambda;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    os << "]" << (i + 1 == rows_ ? "]" : "\n");
  }
  return os.str();
}

Vec vec_zeros(int n, const FieldSpec& spec) {
  return Vec(static_cast<std::size_t>(n), Scalar::zero(spec));
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "vector add");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "vector sub");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scaled(const Vec& a, const Scalar& c) {
  Vec r(a);
  for (Scalar& s : r) s *= c;
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const Scalar& s : a) {
    if (!s.is_zero()) return false;
  }
  return true;
}

int vec_first_nonzero(const Vec& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

namespace {

// Gauss-Jordan on rows [0, rows) of m, leftmost pivot per row.
// Returns pivot columns.
std::vector<int> rref_in_place(Matrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
    }
    Scalar inv = m.at(r, c).inv();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.r = m;
  res.pivots = rref_in_place(res.r);
  res.rank = static_cast<int>(res.pivots.size());
  return res;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) fail(ErrorCode::ShapeMismatch, "solve shapes");
  Matrix aug(a.rows(), a.cols() + 1, a.spec());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = rref_in_place(aug);
  for (int p : pivots) {
    if (p == a.cols()) return std::nullopt;  // inconsistent
  }
  Vec x = vec_zeros(a.cols(), a.spec());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    x[pivots[k]] = aug.at(static_cast<int>(k), a.cols());
  }
  return x;
}

std::vector<Vec> kernel(const Matrix& a) {
  RrefResult rr = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : rr.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int c = 0; c < a.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v = vec_zeros(a.cols(), a.spec());
    v[c] = Scalar::one(a.spec());
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
      v[rr.pivots[k]] = -rr.r.at(static_cast<int>(k), c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> matrix_inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Matrix aug(n, 2 * n, m.spec());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.spec());
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1)) {
    return std::nullopt;
  }
  Matrix inv(n, n, m.spec());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

}  // namespace fss
