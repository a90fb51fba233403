#include <doctest.h>

#include "fss/closure.hpp"
#include "fss/oracle.hpp"
#include "fss/rng.hpp"
#include "fss/subspace.hpp"
#include "support.hpp"

using namespace fss;
using namespace fss::testsupport;

namespace {

Matrix rand_matrix(Rng& rng, int r, int c, const FieldSpec& spec) {
  Matrix m(r, c, spec);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      if (spec.kind == FieldKind::rational) {
        m.at(i, j) = Scalar::of_int(spec, rng.int_in(-4, 4));
      } else {
        m.at(i, j) = Scalar::residue(rng.below(spec.p), spec.p);
      }
    }
  return m;
}

}  // namespace

TEST_CASE("rref basics") {
  Matrix id3 = Matrix::identity(3, FieldSpec::rationals());
  RrefResult r1 = rref(id3);
  CHECK(r1.r == id3);
  CHECK(r1.rank == 3);

  Matrix z = Matrix::zeros(2, 2, FieldSpec::rationals());
  RrefResult r2 = rref(z);
  CHECK(r2.r == z);
  CHECK(r2.rank == 0);

  Matrix m = mat_q({{1, 2}, {2, 4}});
  RrefResult r3 = rref(m);
  CHECK(r3.rank == 1);
  CHECK(r3.r == mat_q({{1, 2}, {0, 0}}));
  CHECK(r3.pivots == std::vector<int>{0});
}

TEST_CASE("solve basics") {
  FieldSpec spec = FieldSpec::rationals();
  Matrix id2 = Matrix::identity(2, spec);
  Vec b = vec_q({3, 5});
  auto x = solve(id2, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  Matrix z = Matrix::zeros(2, 2, spec);
  CHECK(!solve(z, vec_q({1, 0})).has_value());

  // free variable zeroed
  Matrix m = mat_q({{1, 1}, {0, 0}});
  auto y = solve(m, vec_q({2, 0}));
  REQUIRE(y.has_value());
  CHECK(*y == vec_q({2, 0}));

  CHECK_THROWS_AS(solve(m, vec_q({1, 2, 3})), Error);
}

TEST_CASE("solve and rref against 500 seeded systems") {
  Rng rng(7);
  int solved = 0;
  for (int trial = 0; trial < 500; ++trial) {
    FieldSpec spec = trial % 2 == 0 ? FieldSpec::rationals() : FieldSpec::gf(101);
    int n = 1 + static_cast<int>(rng.below(5));
    int m = 1 + static_cast<int>(rng.below(5));
    Matrix a = rand_matrix(rng, n, m, spec);

    // rref rows stay in the row space and have the claimed rank
    RrefResult rr = rref(a);
    Subspace rows_a(m, spec);
    for (int i = 0; i < n; ++i) rows_a.insert(a.row(i));
    CHECK(rows_a.dim() == rr.rank);
    for (int i = 0; i < rr.rank; ++i) CHECK(rows_a.contains(rr.r.row(i)));

    // a consistent right-hand side is solved exactly
    Vec xs = vec_zeros(m, spec);
    for (int j = 0; j < m; ++j) {
      xs[static_cast<std::size_t>(j)] = spec.kind == FieldKind::rational
                                            ? Scalar::of_int(spec, rng.int_in(-3, 3))
                                            : Scalar::residue(rng.below(spec.p), spec.p);
    }
    Vec b = a.apply(xs);
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == b);
    ++solved;

    // kernel vectors really annihilate
    for (const Vec& k : kernel(a)) CHECK(vec_is_zero(a.apply(k)));
  }
  CHECK(solved == 500);
}

TEST_CASE("spin examples") {
  // D8 on the 4-dim permutation module, seed e1 - e3
  std::vector<Matrix> action{d8_perm_r(), d8_perm_s()};
  Subspace s = spin({vec_q({1, 0, -1, 0})}, action);
  CHECK(s.dim() == 2);
  CHECK(s.contains(vec_q({0, 1, 0, -1})));
  CHECK(!s.contains(vec_q({1, 0, 0, 0})));

  // zero seed
  Subspace z = spin({vec_q({0, 0, 0, 0})}, action);
  CHECK(z.dim() == 0);

  // S3 natural module, all-ones seed is fixed
  std::vector<Matrix> s3{perm_matrix_q({1, 2, 0}), perm_matrix_q({1, 0, 2})};
  Subspace fixed = spin({vec_q({1, 1, 1})}, s3);
  CHECK(fixed.dim() == 1);
}

TEST_CASE("spin result is action-invariant") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    FieldSpec spec = trial % 2 == 0 ? FieldSpec::rationals() : FieldSpec::gf(5);
    int n = 2 + static_cast<int>(rng.below(4));
    std::vector<Matrix> action{rand_matrix(rng, n, n, spec), rand_matrix(rng, n, n, spec)};
    Vec seed = rand_matrix(rng, 1, n, spec).row(0);
    Subspace s = spin({seed}, action);
    for (const Vec& v : s.basis()) {
      for (const Matrix& g : action) CHECK(s.contains(g.apply(v)));
    }
  }
}

TEST_CASE("algebra closure examples") {
  FieldSpec spec = FieldSpec::rationals();

  Closure trivial = algebra_closure({Matrix::identity(3, spec)});
  CHECK(trivial.dim() == 1);
  CHECK(trivial.words[0].empty());

  // the 2-dim dihedral realization generates all of M_2
  Closure dense = algebra_closure({d8_v_r(), d8_v_s()});
  CHECK(dense.dim() == 4);

  // regular representation of D8 spans the full 8-dimensional group algebra
  auto fx = oracle::perm_group_fixture({oracle::Perm::from_cycles("(1,2,3,4)", 4),
                                        oracle::Perm::from_cycles("(1,3)", 4)});
  Closure reg = algebra_closure(fx.faithful);
  CHECK(reg.dim() == 8);
}

TEST_CASE("closure is multiplicatively closed and words evaluate to basis") {
  std::vector<Matrix> gens{d8_v_r(), d8_v_s()};
  Closure c = algebra_closure(gens);
  std::vector<Matrix> basis = c.basis;
  for (const Matrix& a : basis) {
    for (const Matrix& b : basis) {
      CHECK(express_in_span(a * b, basis).has_value());
    }
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(eval_word(gens, c.words[i]) == basis[i]);
  }
}

TEST_CASE("closure word cap raises when forced") {
  FieldSpec spec = FieldSpec::rationals();
  // nilpotent-free growth: with cap 0 forced to 1, deep words abort
  std::vector<Matrix> gens{d8_perm_r(), d8_perm_s()};
  CHECK_THROWS_AS(algebra_closure(gens, true, 1), Error);
}

TEST_CASE("express_in_span examples") {
  std::vector<Matrix> basis = algebra_closure({d8_v_r(), d8_v_s()}).basis;
  auto c0 = express_in_span(basis[0], basis);
  REQUIRE(c0.has_value());
  CHECK((*c0)[0].is_one());
  for (std::size_t i = 1; i < c0->size(); ++i) CHECK((*c0)[i].is_zero());

  // E_11 has a unique expression in the dim-4 closure
  Matrix e11 = mat_q({{1, 0}, {0, 0}});
  auto c = express_in_span(e11, basis);
  REQUIRE(c.has_value());
  Matrix acc = Matrix::zeros(2, 2, FieldSpec::rationals());
  for (std::size_t i = 0; i < basis.size(); ++i) acc = acc + basis[i].scaled((*c)[i]);
  CHECK(acc == e11);

  // a target outside the span of a smaller list
  std::vector<Matrix> small{Matrix::identity(2, FieldSpec::rationals())};
  CHECK(!express_in_span(e11, small).has_value());
}

TEST_CASE("matrix inverse examples") {
  Matrix id = Matrix::identity(3, FieldSpec::rationals());
  CHECK(*matrix_inverse(id) == id);

  Matrix jordan = mat_q({{0, 1}, {0, 0}});
  CHECK(!matrix_inverse(jordan).has_value());

  Matrix r = d8_perm_r();
  auto rinv = matrix_inverse(r);
  REQUIRE(rinv.has_value());
  CHECK(*rinv == r * r * r);  // r^4 = 1
  CHECK((*rinv * r).is_identity());
}

TEST_CASE("subspace coordinates and containment") {
  Subspace s(3, FieldSpec::rationals());
  s.insert(vec_q({1, 2, 0}));
  s.insert(vec_q({0, 0, 3}));
  auto c = s.coordinates(vec_q({2, 4, 3}));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == q(2));
  CHECK((*c)[1] == q(3));
  CHECK(!s.coordinates(vec_q({1, 0, 0})).has_value());

  Subspace t(3, FieldSpec::rationals());
  t.insert(vec_q({1, 2, 3}));
  CHECK(s.contains_subspace(t));
  CHECK(!t.contains_subspace(s));
}
