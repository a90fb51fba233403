#pragma once

#include <string>
#include <vector>

#include "fss/algebra.hpp"
#include "fss/meataxe.hpp"

namespace fss::oracle {

// Permutation on {0, ..., n-1}, one-line notation: img[j] is the image
// of point j.
struct Perm {
  std::vector<int> img;

  static Perm identity(int n);
  // 1-based cycle notation, e.g. "(1,2,3,4)" or "(1,2)*(3,4)";
  // '*'-joined cycles compose right-to-left like functions
  static Perm from_cycles(const std::string& text, int n);

  int degree() const { return static_cast<int>(img.size()); }
  int operator()(int x) const { return img[static_cast<std::size_t>(x)]; }
  bool operator==(const Perm& o) const = default;
  bool operator<(const Perm& o) const { return img < o.img; }
};

Perm compose(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))

// number of points mentioned by a cycle string (largest label), at least 1
int points_needed(const std::string& text);

// Group-algebra fixture: enumerate the generated permutation group
// (order capped at 10000), emit the left regular representation as the
// faithful side and the point-permutation matrices as the module side.
struct AlgebraFixture {
  FieldSpec field;
  std::vector<std::string> names;
  std::vector<Matrix> faithful;
  std::vector<Matrix> module;
  std::size_t group_order = 0;
};

AlgebraFixture perm_group_fixture(const std::vector<Perm>& gens,
                                  const FieldSpec& field = FieldSpec::rationals());

// dimension of the unital closure, recomputed from scratch
int oracle_dim(const std::vector<Matrix>& faithful_gens);

// Enumerates every nonzero vector of N over GF(p) and spins it; true
// iff each one generates all of N.  p^dim(N) is capped at 3^8.
bool exhaustive_simplicity(const SimpleSubmodule& n);

// the golden dihedral fixture: regular representation of <(1234),(13)>
// with the 2-dimensional module r -> [[0,-1],[1,0]], s -> [[1,0],[0,-1]]
BlackBoxAlgebra d8_algebra_2dim_module();

}  // namespace fss::oracle
