#include <doctest.h>

#include "fss/algebra.hpp"
#include "fss/oracle.hpp"
#include "support.hpp"

using namespace fss;
using namespace fss::testsupport;

TEST_CASE("build_algebra on the dihedral fixture") {
  BlackBoxAlgebra a = oracle::d8_algebra_2dim_module();
  CHECK(a.dim() == 8);
  CHECK(a.faithful_dim() == 8);
  CHECK(a.module_dim() == 2);

  // every faithful generator lies in the basis span
  for (const Elem& g : a.view().gens()) {
    CHECK(a.view().coords(g.fa).has_value());
  }
  // words evaluate exactly to the basis elements, both sides
  std::vector<Matrix> fa_gens, mo_gens;
  for (const Elem& g : a.view().gens()) {
    fa_gens.push_back(g.fa);
    mo_gens.push_back(g.mo);
  }
  for (int i = 0; i < a.dim(); ++i) {
    CHECK(eval_word(fa_gens, a.view().words()[static_cast<std::size_t>(i)]) ==
          a.view().basis()[static_cast<std::size_t>(i)].fa);
    CHECK(eval_word(mo_gens, a.view().words()[static_cast<std::size_t>(i)]) ==
          a.view().basis()[static_cast<std::size_t>(i)].mo);
  }
}

TEST_CASE("build_algebra trivial and error cases") {
  FieldSpec q = FieldSpec::rationals();
  BlackBoxAlgebra one(q, {"e"}, {Matrix::identity(1, q)}, {Matrix::identity(1, q)});
  CHECK(one.dim() == 1);

  // mismatched generator counts
  CHECK_THROWS_AS(BlackBoxAlgebra(q, {"a", "b"}, {Matrix::identity(2, q)},
                                  {Matrix::identity(2, q), Matrix::identity(2, q)}),
                  Error);

  // ragged faithful sizes
  CHECK_THROWS_AS(BlackBoxAlgebra(q, {"a", "b"}, {Matrix::identity(2, q), Matrix::identity(3, q)},
                                  {Matrix::identity(2, q), Matrix::identity(2, q)}),
                  Error);

  // GF(2) is too small for the 3-dimensional upper-triangular algebra
  try {
    BlackBoxAlgebra(FieldSpec::gf(2), {"e11", "e12", "e22"},
                    {mat_p(2, {{1, 0}, {0, 0}}), mat_p(2, {{0, 1}, {0, 0}}),
                     mat_p(2, {{0, 0}, {0, 1}})},
                    {mat_p(2, {{1, 0}, {0, 0}}), mat_p(2, {{0, 1}, {0, 0}}),
                     mat_p(2, {{0, 0}, {0, 1}})});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FieldTooSmall);
  }
}

TEST_CASE("homomorphism spot check rejects inconsistent module matrices") {
  // faithful side has r^4 = 1; a unipotent module matrix for r breaks it
  auto fix = oracle::perm_group_fixture(
      {oracle::Perm::from_cycles("(1,2,3,4)", 4), oracle::Perm::from_cycles("(1,3)", 4)});
  std::vector<Matrix> bad_module{mat_q({{1, 1}, {0, 1}}), mat_q({{1, 0}, {0, 1}})};
  try {
    BlackBoxAlgebra(FieldSpec::rationals(), fix.names, fix.faithful, bad_module);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAHomomorphism);
  }
}

TEST_CASE("annihilator examples") {
  BlackBoxAlgebra a = oracle::d8_algebra_2dim_module();

  // x = 0 annihilated by everything
  Subspace all = annihilator(a.view(), vec_zeros(2, a.field()));
  CHECK(all.dim() == 8);

  // dihedral point v1: rank of the orbit map is 2, so dim Ann = 6
  Vec v1 = vec_q({1, 0});
  Subspace ann = annihilator(a.view(), v1);
  CHECK(ann.dim() == 6);
  for (const Vec& c : ann.basis()) {
    CHECK(vec_is_zero(a.view().act(c, v1)));
  }

  // faithful simple cyclic: the full 2x2 matrix algebra on its column space
  FieldSpec q = FieldSpec::rationals();
  BlackBoxAlgebra m2(q, {"r", "s"}, {d8_v_r(), d8_v_s()}, {d8_v_r(), d8_v_s()});
  CHECK(m2.dim() == 4);
  CHECK(annihilator(m2.view(), vec_q({1, 0})).dim() == 2);
  // a cyclic vector of the simple faithful module of a division-free
  // commutative example: 1-dim algebra acting on K^1
  BlackBoxAlgebra one(q, {"e"}, {Matrix::identity(1, q)}, {Matrix::identity(1, q)});
  CHECK(annihilator(one.view(), vec_q({1})).dim() == 0);

  // the regular module: a basis vector at the identity has trivial
  // annihilator, by faithfulness of left multiplication
  auto fx = oracle::perm_group_fixture({oracle::Perm::from_cycles("(1,2,3,4)", 4),
                                        oracle::Perm::from_cycles("(1,3)", 4)});
  BlackBoxAlgebra reg(fx.field, fx.names, fx.faithful, fx.faithful);
  Vec e1 = vec_zeros(8, q);
  e1[0] = Scalar::one(q);
  CHECK(annihilator(reg.view(), e1).dim() == 0);
}

TEST_CASE("radical examples") {
  // char-0 group algebra is semisimple
  BlackBoxAlgebra d8 = oracle::d8_algebra_2dim_module();
  RadicalInfo j = radical(d8.view());
  CHECK(j.dim() == 0);

  // upper-triangular 2x2: J = span{E12}
  FieldSpec q = FieldSpec::rationals();
  BlackBoxAlgebra ut(q, {"e11", "e12", "e22"},
                     {mat_q({{1, 0}, {0, 0}}), mat_q({{0, 1}, {0, 0}}), mat_q({{0, 0}, {0, 1}})},
                     {mat_q({{1, 0}, {0, 0}}), mat_q({{0, 1}, {0, 0}}), mat_q({{0, 0}, {0, 1}})});
  CHECK(ut.dim() == 3);
  RadicalInfo jut = radical(ut.view());
  CHECK(jut.dim() == 1);
  Elem rad_elem = ut.view().from_coords(jut.subspace.basis()[0]);
  CHECK(rad_elem.fa.scaled(rad_elem.fa.at(0, 1).inv()) == mat_q({{0, 1}, {0, 0}}));
  // nilpotency certificate ends at zero
  REQUIRE(!jut.power_dims.empty());
  CHECK(jut.power_dims.front() == 1);
  CHECK(jut.power_dims.back() == 0);

  // 1-dimensional algebra
  BlackBoxAlgebra one(q, {"e"}, {Matrix::identity(1, q)}, {Matrix::identity(1, q)});
  CHECK(radical(one.view()).dim() == 0);
}

TEST_CASE("radical raises when the trace criterion breaks") {
  // K*I inside M_2 over GF(2): tr(I*I) = 2 = 0, so the trace kernel is
  // the whole algebra, which is not nilpotent
  FieldSpec f2 = FieldSpec::gf(2);
  BlackBoxAlgebra a(f2, {"e"}, {Matrix::identity(2, f2)}, {Matrix::identity(2, f2)});
  try {
    radical(a.view());
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RadicalNotNilpotent);
  }
}

TEST_CASE("scalar action detection") {
  FieldSpec q = FieldSpec::rationals();
  CHECK(is_scalar_action({Matrix::identity(3, q).scaled(Scalar::of_int(q, 2)),
                          Matrix::identity(3, q).scaled(Scalar::of_int(q, 4))}));
  CHECK(!is_scalar_action({d8_v_s()}));
  CHECK(is_scalar_action({}));
}

TEST_CASE("algebra inverse stays inside the algebra") {
  BlackBoxAlgebra d8 = oracle::d8_algebra_2dim_module();
  const Elem& r = d8.view().gens()[0];
  auto rinv = d8.view().inverse(r);
  REQUIRE(rinv.has_value());
  CHECK((rinv->fa * r.fa).is_identity());
  CHECK((rinv->mo * r.mo).is_identity());
  CHECK(d8.view().coords(rinv->fa).has_value());

  // nilpotent element has no inverse
  FieldSpec q = FieldSpec::rationals();
  BlackBoxAlgebra ut(q, {"e11", "e12", "e22"},
                     {mat_q({{1, 0}, {0, 0}}), mat_q({{0, 1}, {0, 0}}), mat_q({{0, 0}, {0, 1}})},
                     {mat_q({{1, 0}, {0, 0}}), mat_q({{0, 1}, {0, 0}}), mat_q({{0, 0}, {0, 1}})});
  CHECK(!ut.view().inverse(ut.view().gens()[1]).has_value());
}

TEST_CASE("element expressions evaluate to the faithful matrix when present") {
  BlackBoxAlgebra d8 = oracle::d8_algebra_2dim_module();
  std::vector<Matrix> fa_gens;
  for (const Elem& g : d8.view().gens()) fa_gens.push_back(g.fa);

  // generators, basis elements, and small combinations keep their
  // provenance expression in sync with the matrix
  for (const Elem& g : d8.view().gens()) {
    REQUIRE(g.expr.has_value());
    CHECK(g.expr->eval(fa_gens) == g.fa);
  }
  const Elem& r = d8.view().gens()[0];
  const Elem& s = d8.view().gens()[1];
  Elem combo = (r * s).scaled(Scalar::of_int(d8.field(), 3)) - s + d8.view().one();
  REQUIRE(combo.expr.has_value());
  CHECK(combo.expr->eval(fa_gens) == combo.fa);

  // an inverse has no derivable expression
  auto rinv = d8.view().inverse(r);
  REQUIRE(rinv.has_value());
  CHECK(!rinv->expr.has_value());

  // from_coords builds a tracked combination of basis words
  Vec coords = vec_zeros(d8.dim(), d8.field());
  coords[0] = Scalar::of_int(d8.field(), 2);
  coords[3] = Scalar::of_int(d8.field(), -5);
  Elem e = d8.view().from_coords(coords);
  REQUIRE(e.expr.has_value());
  CHECK(e.expr->eval(fa_gens) == e.fa);
}
