#include "fss/closure.hpp"

#include <deque>

namespace fss {

Closure algebra_closure(const std::vector<Matrix>& gens, bool track_words, int word_cap) {
  if (gens.empty()) fail(ErrorCode::ShapeMismatch, "closure needs at least one generator");
  int d = gens[0].rows();
  FieldSpec spec = gens[0].spec();
  for (const Matrix& g : gens) {
    if (g.rows() != d || g.cols() != d || g.spec() != spec) {
      fail(ErrorCode::ShapeMismatch, "closure generators must be square of equal size");
    }
  }
  if (word_cap <= 0) word_cap = d * d;

  Closure c;
  c.span = Subspace(d * d, spec);
  std::deque<int> work;

  auto push = [&](Matrix m, Word w) {
    if (!c.span.insert(m.flatten())) return;
    c.basis.push_back(std::move(m));
    c.words.push_back(track_words ? std::move(w) : Word{});
    work.push_back(static_cast<int>(c.basis.size()) - 1);
  };

  push(Matrix::identity(d, spec), {});
  while (!work.empty()) {
    int i = work.front();
    work.pop_front();
    if (static_cast<int>(c.words[static_cast<std::size_t>(i)].size()) > word_cap) {
      fail(ErrorCode::ClosureCapExceeded,
           "closure did not stabilize within the word-length cap " + std::to_string(word_cap));
    }
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
      Matrix prod = c.basis[static_cast<std::size_t>(i)] * gens[static_cast<std::size_t>(g)];
      Word w = c.words[static_cast<std::size_t>(i)];
      w.push_back(g);
      push(std::move(prod), std::move(w));
    }
  }
  return c;
}

SpanSolver::SpanSolver(const std::vector<Matrix>& items) {
  if (items.empty()) fail(ErrorCode::ShapeMismatch, "SpanSolver needs items");
  std::vector<Vec> rows;
  rows.reserve(items.size());
  for (const Matrix& m : items) rows.push_back(m.flatten());
  build(rows, items[0].rows() * items[0].cols(), items[0].spec());
}

SpanSolver::SpanSolver(const std::vector<Vec>& items, int ambient, const FieldSpec& spec) {
  build(items, ambient, spec);
}

void SpanSolver::build(const std::vector<Vec>& rows, int ambient, const FieldSpec& spec) {
  ambient_ = ambient;
  spec_ = spec;
  count_ = static_cast<int>(rows.size());
  for (int idx = 0; idx < count_; ++idx) {
    Vec v = rows[static_cast<std::size_t>(idx)];
    if (static_cast<int>(v.size()) != ambient_) fail(ErrorCode::ShapeMismatch, "SpanSolver item size");
    Vec combo = vec_zeros(count_, spec_);
    combo[static_cast<std::size_t>(idx)] = Scalar::one(spec_);
    // reduce against existing rref rows, tracking the combination
    for (std::size_t k = 0; k < rref_rows_.size(); ++k) {
      Scalar f = v[static_cast<std::size_t>(pivots_[k])];
      if (f.is_zero()) continue;
      for (int j = 0; j < ambient_; ++j) v[static_cast<std::size_t>(j)] -= f * rref_rows_[k][static_cast<std::size_t>(j)];
      for (int j = 0; j < count_; ++j) combo[static_cast<std::size_t>(j)] -= f * combos_[k][static_cast<std::size_t>(j)];
    }
    int lead = vec_first_nonzero(v);
    if (lead < 0) continue;  // dependent item
    Scalar inv = v[static_cast<std::size_t>(lead)].inv();
    for (Scalar& s : v) s *= inv;
    for (Scalar& s : combo) s *= inv;
    // eliminate the new pivot from earlier rows
    for (std::size_t k = 0; k < rref_rows_.size(); ++k) {
      Scalar f = rref_rows_[k][static_cast<std::size_t>(lead)];
      if (f.is_zero()) continue;
      for (int j = 0; j < ambient_; ++j) rref_rows_[k][static_cast<std::size_t>(j)] -= f * v[static_cast<std::size_t>(j)];
      for (int j = 0; j < count_; ++j) combos_[k][static_cast<std::size_t>(j)] -= f * combo[static_cast<std::size_t>(j)];
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
    rref_rows_.insert(rref_rows_.begin() + static_cast<long>(pos), std::move(v));
    combos_.insert(combos_.begin() + static_cast<long>(pos), std::move(combo));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), lead);
  }
}

std::optional<Vec> SpanSolver::coords(const Matrix& target) const {
  return coords(target.flatten());
}

std::optional<Vec> SpanSolver::coords(const Vec& target) const {
  if (static_cast<int>(target.size()) != ambient_) fail(ErrorCode::ShapeMismatch, "SpanSolver target size");
  Vec work = target;
  Vec result = vec_zeros(count_, spec_);
  for (std::size_t k = 0; k < rref_rows_.size(); ++k) {
    Scalar f = work[static_cast<std::size_t>(pivots_[k])];
    if (f.is_zero()) continue;
    for (int j = 0; j < ambient_; ++j) work[static_cast<std::size_t>(j)] -= f * rref_rows_[k][static_cast<std::size_t>(j)];
    for (int j = 0; j < count_; ++j) result[static_cast<std::size_t>(j)] += f * combos_[k][static_cast<std::size_t>(j)];
  }
  if (!vec_is_zero(work)) return std::nullopt;
  return result;
}

std::optional<Vec> express_in_span(const Matrix& target, const std::vector<Matrix>& basis) {
  if (basis.empty()) fail(ErrorCode::ShapeMismatch, "express_in_span with empty basis");
  for (const Matrix& b : basis) {
    if (b.rows() != target.rows() || b.cols() != target.cols()) {
      fail(ErrorCode::ShapeMismatch, "express_in_span shape mismatch");
    }
  }
  return SpanSolver(basis).coords(target);
}

}  // namespace fss
