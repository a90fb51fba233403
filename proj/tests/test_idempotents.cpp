#include <doctest.h>

#include "fss/idempotents.hpp"
#include "fss/oracle.hpp"
#include "fss/rng.hpp"
#include "support.hpp"

using namespace fss;
using namespace fss::testsupport;

namespace {

// full upper-triangular 3x3 algebra over Q, faithful on itself
BlackBoxAlgebra upper3() {
  FieldSpec q = FieldSpec::rationals();
  std::vector<std::vector<std::vector<long>>> gens{
      {{1, 0, 0}, {0, 0, 0}, {0, 0, 0}}, {{0, 0, 0}, {0, 1, 0}, {0, 0, 0}},
      {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}},
      {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}}};
  std::vector<Matrix> mats;
  for (const auto& g : gens) mats.push_back(mat_q(g));
  return BlackBoxAlgebra(q, {"e11", "e22", "e33", "e12", "e23"}, mats, mats);
}

BlackBoxAlgebra upper2() {
  FieldSpec q = FieldSpec::rationals();
  std::vector<Matrix> mats{mat_q({{1, 0}, {0, 0}}), mat_q({{0, 1}, {0, 0}}),
                           mat_q({{0, 0}, {0, 1}})};
  return BlackBoxAlgebra(q, {"e11", "e12", "e22"}, mats, mats);
}

Elem elem_from_fa(const AlgebraView& a, const Matrix& fa) {
  Vec c = *a.coords(fa);
  return a.from_coords(c);
}

}  // namespace

TEST_CASE("matrix units in the image, dihedral case") {
  BlackBoxAlgebra d8 = oracle::d8_algebra_2dim_module();
  std::vector<Matrix> module_gens;
  for (const Elem& g : d8.view().gens()) module_gens.push_back(g.mo);
  auto n = simple_submodule(module_gens, 0, 32);
  REQUIRE(n.has_value());
  REQUIRE(n->dim() == 2);

  MatrixUnitExprs exprs = matrix_units_in_image(d8.view(), *n);
  CHECK(exprs.image_closure.dim() == 4);
  CHECK(exprs.coeffs.size() == 4);
  // each preimage maps to the right matrix unit on N
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Elem p = unit_preimage(d8.view(), exprs, i, j);
      Matrix expect = Matrix::zeros(2, 2, d8.field());
      expect.at(i, j) = Scalar::one(d8.field());
      CHECK(restrict_to_submodule(p.mo, n->subspace) == expect);
    }
  }
}

TEST_CASE("matrix units for a 1-dim module are the identity word") {
  FieldSpec q = FieldSpec::rationals();
  BlackBoxAlgebra one(q, {"e"}, {Matrix::identity(1, q)}, {Matrix::identity(1, q)});
  Subspace line(1, q);
  line.insert(vec_q({1}));
  auto n = certify_submodule({Matrix::identity(1, q)}, line, 0);
  REQUIRE(n.has_value());
  MatrixUnitExprs exprs = matrix_units_in_image(one.view(), *n);
  CHECK(exprs.image_closure.dim() == 1);
  CHECK(exprs.image_closure.words[0].empty());
  CHECK(exprs.coeff(0, 0)[0].is_one());
}

TEST_CASE("deficient image raises ImageNotFull") {
  // rotation-only C4: the image on the 2-dim module is commutative
  FieldSpec q = FieldSpec::rationals();
  BlackBoxAlgebra c4(q, {"r"}, {d8_v_r()}, {d8_v_r()});
  Subspace full(2, q);
  full.insert(vec_q({1, 0}));
  full.insert(vec_q({0, 1}));
  auto n = certify_submodule({d8_v_r()}, full, 0);
  REQUIRE(n.has_value());
  try {
    matrix_units_in_image(c4.view(), *n);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ImageNotFull);
  }
}

TEST_CASE("frame mod radical corrects naive preimages") {
  BlackBoxAlgebra d8 = oracle::d8_algebra_2dim_module();
  std::vector<Matrix> module_gens;
  for (const Elem& g : d8.view().gens()) module_gens.push_back(g.mo);
  auto n = simple_submodule(module_gens, 0, 32);
  REQUIRE(n.has_value());
  RadicalInfo rad = radical(d8.view());
  MatrixUnitExprs exprs = matrix_units_in_image(d8.view(), *n);
  std::vector<Elem> bar = frame_mod_radical(d8.view(), *n, exprs, rad);
  REQUIRE(bar.size() == 2);
  // with J = 0, the corrected elements are exactly idempotent in A
  for (const Elem& e : bar) CHECK(e * e == e);
  CHECK((bar[0] * bar[1]).fa.is_zero());
}

TEST_CASE("frame mod radical with a faithful full matrix image has u = 0") {
  // A = M_2 acting on its column space: kernel ideal is zero, so the
  // naive preimages come back unchanged
  FieldSpec q = FieldSpec::rationals();
  BlackBoxAlgebra m2(q, {"r", "s"}, {d8_v_r(), d8_v_s()}, {d8_v_r(), d8_v_s()});
  Subspace full(2, q);
  full.insert(vec_q({1, 0}));
  full.insert(vec_q({0, 1}));
  auto n = certify_submodule({d8_v_r(), d8_v_s()}, full, 0);
  REQUIRE(n.has_value());
  RadicalInfo rad = radical(m2.view());
  CHECK(rad.dim() == 0);
  MatrixUnitExprs exprs = matrix_units_in_image(m2.view(), *n);
  std::vector<Elem> bar = frame_mod_radical(m2.view(), *n, exprs, rad);
  for (int i = 0; i < 2; ++i) {
    CHECK(bar[static_cast<std::size_t>(i)] ==
          unit_preimage(m2.view(), exprs, i, i));
  }
}

TEST_CASE("lift_idempotent examples") {
  BlackBoxAlgebra ut = upper3();
  RadicalInfo rad = radical(ut.view());
  CHECK(rad.dim() == 3);

  // already idempotent: unchanged
  Elem e11 = ut.view().gens()[0];
  CHECK(lift_idempotent(ut.view(), e11, rad) == e11);

  // zero lifts to zero
  Elem zero = ut.view().from_scalar(Scalar::zero(ut.field()));
  CHECK(lift_idempotent(ut.view(), zero, rad).fa.is_zero());

  // e = E11 + E12 + E23: frozen expected lift is E11 + E12 + E13
  Elem e = elem_from_fa(ut.view(), mat_q({{1, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
  Elem lifted = lift_idempotent(ut.view(), e, rad);
  CHECK(lifted.fa == mat_q({{1, 1, 1}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(lifted * lifted == lifted);
  // congruent mod the strict upper-triangular radical
  auto diff = ut.view().coords((lifted - e).fa);
  REQUIRE(diff.has_value());
  CHECK(rad.subspace.contains(*diff));

  // a defect outside the radical raises
  Elem two = ut.view().from_scalar(Scalar::of_int(ut.field(), 2));
  try {
    lift_idempotent(ut.view(), two, rad);
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotNilpotentDefect);
  }
}

TEST_CASE("lift commutes with complement on 50 seeded defects") {
  BlackBoxAlgebra ut = upper3();
  RadicalInfo rad = radical(ut.view());
  Rng rng(99);
  FieldSpec q = ut.field();
  for (int t = 0; t < 50; ++t) {
    // random diagonal 0/1 part plus random strictly upper part
    Matrix m(3, 3, q);
    for (int i = 0; i < 3; ++i) m.at(i, i) = Scalar::of_int(q, rng.int_in(0, 1));
    m.at(0, 1) = Scalar::of_int(q, rng.int_in(-3, 3));
    m.at(0, 2) = Scalar::of_int(q, rng.int_in(-3, 3));
    m.at(1, 2) = Scalar::of_int(q, rng.int_in(-3, 3));
    Elem e = elem_from_fa(ut.view(), m);
    Elem lifted = lift_idempotent(ut.view(), e, rad);
    CHECK(lifted * lifted == lifted);
    Elem comp = lift_idempotent(ut.view(), ut.view().one() - e, rad);
    CHECK(comp == ut.view().one() - lifted);
    auto diff = ut.view().coords((lifted - e).fa);
    REQUIRE(diff.has_value());
    CHECK(rad.subspace.contains(*diff));
  }
}

TEST_CASE("lift_frame on the dihedral fixture") {
  BlackBoxAlgebra d8 = oracle::d8_algebra_2dim_module();
  std::vector<Matrix> module_gens;
  for (const Elem& g : d8.view().gens()) module_gens.push_back(g.mo);
  auto n = simple_submodule(module_gens, 0, 32);
  REQUIRE(n.has_value());
  RadicalInfo rad = radical(d8.view());
  Frame frame = lift_frame(d8.view(), *n, rad);
  // verify_frame ran inside; spot-check the shape again here
  CHECK(frame.diag.size() == 2);
  Elem sum = frame.e0 + frame.diag[0] + frame.diag[1];
  CHECK(sum.fa.is_identity());
}

TEST_CASE("lift_frame across a nonzero radical") {
  // upper-triangular 2x2 with its 1-dim submodule of the column space
  FieldSpec q = FieldSpec::rationals();
  std::vector<Matrix> fa{mat_q({{1, 0}, {0, 0}}), mat_q({{0, 1}, {0, 0}}),
                         mat_q({{0, 0}, {0, 1}})};
  // module = column space K^2; span{e1} is invariant and simple
  BlackBoxAlgebra ut(q, {"e11", "e12", "e22"}, fa, fa);
  RadicalInfo rad = radical(ut.view());
  CHECK(rad.dim() == 1);
  Subspace line(2, q);
  line.insert(vec_q({1, 0}));
  std::vector<Matrix> module_gens;
  for (const Elem& g : ut.view().gens()) module_gens.push_back(g.mo);
  auto n = certify_submodule(module_gens, line, 0);
  REQUIRE(n.has_value());
  Frame frame = lift_frame(ut.view(), *n, rad);
  CHECK(frame.diag.size() == 1);
  CHECK(frame.diag[0].fa == mat_q({{1, 0}, {0, 0}}));
  CHECK(frame.e0.fa == mat_q({{0, 0}, {0, 1}}));
}

TEST_CASE("lift_frame with n = 1 on a general algebra") {
  BlackBoxAlgebra d8 = oracle::d8_algebra_2dim_module();
  // hand the frame builder the trivial line inside the 2-dim module:
  // it is not invariant, so pick instead the span of a fixed vector of
  // the trivial-acting subalgebra; use the 1-dim algebra case instead
  FieldSpec q = FieldSpec::rationals();
  BlackBoxAlgebra one(q, {"e"}, {Matrix::identity(3, q)}, {Matrix::identity(2, q)});
  Subspace line(2, q);
  line.insert(vec_q({1, 0}));
  auto n = certify_submodule({Matrix::identity(2, q)}, line, 0);
  REQUIRE(n.has_value());
  RadicalInfo rad = radical(one.view());
  Frame frame = lift_frame(one.view(), *n, rad);
  CHECK(frame.diag.size() == 1);
  CHECK(frame.diag[0].fa.is_identity());
  CHECK(frame.e0.fa.is_zero());
  CHECK(frame.units_col[0] == frame.diag[0]);
}
