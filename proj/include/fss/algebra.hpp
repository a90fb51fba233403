#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fss/closure.hpp"
#include "fss/rng.hpp"

namespace fss {

// An algebra element carried in lockstep through both representations:
// fa is the faithful matrix (the equality test), mo its action on the
// module.  expr, when present, is a formal combination of generator
// words evaluating exactly to fa; it is provenance only and is dropped
// once products grow past a size cap.
struct Elem {
  Matrix fa;
  Matrix mo;
  std::optional<FreePoly> expr;

  Elem() = default;
  Elem(Matrix f, Matrix m) : fa(std::move(f)), mo(std::move(m)) {}
  Elem(Matrix f, Matrix m, std::optional<FreePoly> e)
      : fa(std::move(f)), mo(std::move(m)), expr(std::move(e)) {}

  Elem operator+(const Elem& o) const;
  Elem operator-(const Elem& o) const;
  Elem operator*(const Elem& o) const;
  Elem operator-() const;
  Elem scaled(const Scalar& c) const;
  bool operator==(const Elem& o) const { return fa == o.fa; }
  bool is_zero() const { return fa.is_zero(); }

  static constexpr std::size_t kExprCap = 128;
};

// Working view of one algebra in the chain: generator elements, a
// word-tracked basis of the unital closure in the faithful
// representation, the matching module images, and a coordinate solver.
class AlgebraView {
 public:
  AlgebraView() = default;
  AlgebraView(FieldSpec spec, std::vector<Elem> gens);

  const FieldSpec& field() const { return spec_; }
  const std::vector<Elem>& gens() const { return gens_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int faithful_dim() const { return fa_dim_; }
  int module_dim() const { return mo_dim_; }

  const std::vector<Elem>& basis() const { return basis_; }
  const std::vector<Word>& words() const { return words_; }
  const Elem& one() const { return one_; }

  // coordinates of an element over the closure basis (faithful side)
  std::optional<Vec> coords(const Matrix& fa) const { return solver_.coords(fa); }
  Vec coords_checked(const Elem& e) const;
  Elem from_coords(const Vec& c) const;
  Elem from_scalar(const Scalar& c) const;

  // module action of a coordinate vector on a module vector
  Vec act(const Vec& algebra_coords, const Vec& module_vec) const;

  // two-sided inverse in the algebra, or nullopt; an element invertible
  // as a faithful matrix is automatically invertible inside the algebra
  std::optional<Elem> inverse(const Elem& e) const;

 private:
  FieldSpec spec_{};
  int fa_dim_ = 0, mo_dim_ = 0;
  std::vector<Elem> gens_;
  std::vector<Elem> basis_;
  std::vector<Word> words_;
  SpanSolver solver_;
  Elem one_;
};

// The validated input algebra: named generators in a faithful
// representation plus their module action.
class BlackBoxAlgebra {
 public:
  BlackBoxAlgebra(FieldSpec spec, std::vector<std::string> names,
                  std::vector<Matrix> faithful, std::vector<Matrix> module);

  const AlgebraView& view() const { return view_; }
  const FieldSpec& field() const { return spec_; }
  const std::vector<std::string>& gen_names() const { return names_; }
  int dim() const { return view_.dim(); }
  int faithful_dim() const { return view_.faithful_dim(); }
  int module_dim() const { return view_.module_dim(); }

 private:
  FieldSpec spec_{};
  std::vector<std::string> names_;
  AlgebraView view_;
};

// Ann_A(x) = coefficient vectors c over the basis with (sum c_i b_i) x = 0
Subspace annihilator(const AlgebraView& a, const Vec& x);

struct RadicalInfo {
  Subspace subspace;               // J(A) in basis coordinates
  std::vector<int> power_dims;     // dims of J, J^2, J^4, ... down to 0
  Vec reduce(const Vec& coords) const { return subspace.reduce(coords); }
  int dim() const { return subspace.dim(); }
};

// Jacobson radical via the trace bilinear form, then certified
// nilpotent by repeated squaring of the ideal.  Valid in char 0 or
// p > dim A; an invalid candidate raises RadicalNotNilpotent.
RadicalInfo radical(const AlgebraView& a);

// true iff every matrix is lambda * identity
bool is_scalar_action(const std::vector<Matrix>& module_mats);

}  // namespace fss
