#include "fss/subspace.hpp"

#include <deque>

namespace fss {

Subspace Subspace::span(int ambient, const FieldSpec& spec, const std::vector<Vec>& vectors) {
  Subspace s(ambient, spec);
  for (const Vec& v : vectors) s.insert(v);
  return s;
}

bool Subspace::insert(Vec v) {
  if (static_cast<int>(v.size()) != ambient_) fail(ErrorCode::ShapeMismatch, "subspace insert");
  v = reduce(std::move(v));
  int lead = vec_first_nonzero(v);
  if (lead < 0) return false;
  Scalar inv = v[lead].inv();
  for (Scalar& c : v) c *= inv;
  // keep existing rows fully reduced against the new pivot
  for (Vec& row : rows_) {
    if (row[lead].is_zero()) continue;
    Scalar f = row[lead];
    for (int j = 0; j < ambient_; ++j) row[j] -= f * v[j];
  }
  std::size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<long>(pos), lead);
  return true;
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar& c = v[pivots_[k]];
    if (c.is_zero()) continue;
    Scalar f = c;
    for (int j = 0; j < ambient_; ++j) v[j] -= f * rows_[k][j];
  }
  return v;
}

bool Subspace::contains(const Vec& v) const {
  return vec_is_zero(reduce(v));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  Vec work = v;
  Vec coords(rows_.size(), Scalar::zero(spec_));
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar c = work[pivots_[k]];
    if (c.is_zero()) continue;
    coords[k] = c;
    for (int j = 0; j < ambient_; ++j) work[j] -= c * rows_[k][j];
  }
  if (!vec_is_zero(work)) return std::nullopt;
  return coords;
}

bool Subspace::contains_subspace(const Subspace& other) const {
  for (const Vec& row : other.rows_) {
    if (!contains(row)) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && spec_ == o.spec_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

int Subspace::cmp_basis(const Subspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim() ? -1 : 1;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    for (int j = 0; j < ambient_; ++j) {
      int c = rows_[k][j].cmp(o.rows_[k][j]);
      if (c != 0) return c;
    }
  }
  return 0;
}

Subspace spin(const std::vector<Vec>& seeds, const std::vector<Matrix>& action) {
  if (seeds.empty()) fail(ErrorCode::ShapeMismatch, "spin needs at least one seed");
  int n = static_cast<int>(seeds[0].size());
  FieldSpec spec = seeds[0].empty() ? FieldSpec::rationals() : seeds[0][0].spec();
  for (const Matrix& g : action) {
    if (g.rows() != n || g.cols() != n) fail(ErrorCode::ShapeMismatch, "spin action shape");
    spec = g.spec();
  }
  Subspace space(n, spec);
  std::deque<Vec> work;
  for (const Vec& s : seeds) {
    if (space.insert(s)) work.push_back(s);
  }
  while (!work.empty()) {
    Vec v = std::move(work.front());
    work.pop_front();
    for (const Matrix& g : action) {
      Vec w = g.apply(v);
      if (space.insert(w)) work.push_back(std::move(w));
    }
  }
  return space;
}

}  // namespace fss
