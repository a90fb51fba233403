#pragma once

#include "fss/algebra.hpp"
#include "fss/meataxe.hpp"

namespace fss {

// restriction of a module matrix to an invariant subspace, in its
// RREF-basis coordinates
Matrix restrict_to_submodule(const Matrix& mo, const Subspace& sub);

// evaluate a generator word through both representations
Elem eval_word_elems(const std::vector<Elem>& gens, const Word& w);

// Expressions of the matrix units E_ij over the word-tracked closure
// of the generator images on N.  coeff(i, j) is a coefficient vector
// over image_closure.basis.
struct MatrixUnitExprs {
  int n = 0;  // dim N
  Closure image_closure;
  std::vector<Vec> coeffs;  // index i*n + j

  const Vec& coeff(int i, int j) const { return coeffs[static_cast<std::size_t>(i * n + j)]; }
};

// Requires the image of the algebra on N to be the full matrix ring
// (density for a split simple); raises ImageNotFull otherwise.
MatrixUnitExprs matrix_units_in_image(const AlgebraView& a, const SimpleSubmodule& n);

// a preimage in A of E_ij: the unit expression evaluated over the
// algebra generators
Elem unit_preimage(const AlgebraView& a, const MatrixUnitExprs& exprs, int i, int j);

// Exact pairwise-orthogonal idempotents of A/J(A) mapping to the E_ii:
// the two-sided ideal ker(A/J -> M_n(K)) is split off by its own
// identity u, and each naive preimage is corrected to (1-u) e (1-u).
// Returned elements are representatives in A.
std::vector<Elem> frame_mod_radical(const AlgebraView& a, const SimpleSubmodule& n,
                                    const MatrixUnitExprs& exprs, const RadicalInfo& rad);

// Binomial idempotent lift: e with e^2 - e in J becomes an exact
// idempotent congruent to e mod J.  A short Newton polish runs after
// the closed formula, then the result is hard-verified.
Elem lift_idempotent(const AlgebraView& a, const Elem& e, const RadicalInfo& rad);

// Lifted Pierce frame over a split simple submodule.
struct Frame {
  std::vector<Elem> diag;       // e_1 .. e_n, exactly orthogonal idempotents
  Elem e0;                      // 1 - sum(diag)
  std::vector<Elem> units_col;  // lifts of E_i1; [0] is e_1 itself
  std::vector<Elem> units_row;  // lifts of E_1i; [0] is e_1 itself
};

Frame lift_frame(const AlgebraView& a, const SimpleSubmodule& n, const RadicalInfo& rad);

// exact re-verification of every frame invariant
void verify_frame(const AlgebraView& a, const SimpleSubmodule& n, const Frame& frame);

}  // namespace fss
