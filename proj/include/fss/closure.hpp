#pragma once

#include <optional>
#include <vector>

#include "fss/subspace.hpp"
#include "fss/word.hpp"

namespace fss {

// Basis of the unital matrix algebra generated by a set of square
// matrices, together with the word that produced each basis element.
// basis[i] is the exact evaluation of words[i] over the generators.
struct Closure {
  std::vector<Matrix> basis;
  std::vector<Word> words;
  Subspace span;  // flattened basis matrices
  int dim() const { return static_cast<int>(basis.size()); }
};

// Breadth-first closure by right-multiplication with the generators,
// identity always included.  word_cap guards against runaway growth;
// 0 means the d^2 default (closure inside d x d matrices stabilizes
// within d^2 products).
Closure algebra_closure(const std::vector<Matrix>& gens, bool track_words = true,
                        int word_cap = 0);

// Repeated coordinate extraction against a fixed spanning list.
class SpanSolver {
 public:
  SpanSolver() = default;
  explicit SpanSolver(const std::vector<Matrix>& items);
  explicit SpanSolver(const std::vector<Vec>& items, int ambient, const FieldSpec& spec);

  int rank() const { return static_cast<int>(rref_rows_.size()); }
  std::optional<Vec> coords(const Matrix& target) const;
  std::optional<Vec> coords(const Vec& target) const;

 private:
  void build(const std::vector<Vec>& rows, int ambient, const FieldSpec& spec);

  int ambient_ = 0;
  int count_ = 0;
  FieldSpec spec_{};
  std::vector<Vec> rref_rows_;
  std::vector<int> pivots_;
  std::vector<Vec> combos_;  // rref_rows_[k] = sum combos_[k][j] * item_j
};

// coefficients c with sum c_i * basis_i = target, or nullopt
std::optional<Vec> express_in_span(const Matrix& target, const std::vector<Matrix>& basis);

}  // namespace fss
