#pragma once

#include <optional>
#include <vector>

#include "fss/matrix.hpp"

namespace fss {

// A subspace of K^n held as a reduced-row-echelon basis with tracked
// pivot columns.  The basis is unique for the subspace, so equality
// and tie-breaking are deterministic.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient, const FieldSpec& spec) : ambient_(ambient), spec_(spec) {}

  static Subspace span(int ambient, const FieldSpec& spec, const std::vector<Vec>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const FieldSpec& spec() const { return spec_; }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Sift v into the basis; true when the subspace grew.
  bool insert(Vec v);

  bool contains(const Vec& v) const;
  // coefficients of v over basis(), or nullopt when v is outside
  std::optional<Vec> coordinates(const Vec& v) const;
  // residual of v after reduction against the basis
  Vec reduce(Vec v) const;

  bool contains_subspace(const Subspace& other) const;
  bool operator==(const Subspace& o) const;

  // lexicographic comparison of the concatenated RREF bases; total
  // order for equal ambient/dim, used for deterministic tie-breaks
  int cmp_basis(const Subspace& o) const;

 private:
  int ambient_ = 0;
  FieldSpec spec_{};
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// Smallest subspace containing the seeds and invariant under every
// action matrix, computed by FIFO worklist closure.
Subspace spin(const std::vector<Vec>& seeds, const std::vector<Matrix>& action);

}  // namespace fss
