#include "fss/idempotents.hpp"

namespace fss {

Matrix restrict_to_submodule(const Matrix& mo, const Subspace& sub) {
  int r = sub.dim();
  Matrix out(r, r, mo.spec());
  for (int j = 0; j < r; ++j) {
    auto c = sub.coordinates(mo.apply(sub.basis()[static_cast<std::size_t>(j)]));
    if (!c) fail(ErrorCode::Internal, "matrix does not preserve the submodule");
    for (int i = 0; i < r; ++i) out.at(i, j) = (*c)[static_cast<std::size_t>(i)];
  }
  return out;
}

Elem eval_word_elems(const std::vector<Elem>& gens, const Word& w) {
  if (gens.empty()) fail(ErrorCode::ShapeMismatch, "word evaluation needs generators");
  FieldSpec spec = gens[0].fa.spec();
  Elem acc(Matrix::identity(gens[0].fa.rows(), spec), Matrix::identity(gens[0].mo.rows(), spec),
           FreePoly::unit(spec));
  for (int g : w) acc = acc * gens[static_cast<std::size_t>(g)];
  return acc;
}

MatrixUnitExprs matrix_units_in_image(const AlgebraView& a, const SimpleSubmodule& n) {
  MatrixUnitExprs out;
  out.n = n.dim();
  out.image_closure = algebra_closure(n.actions, true);
  SpanSolver solver(out.image_closure.basis);
  FieldSpec spec = a.field();
  for (int i = 0; i < out.n; ++i) {
    for (int j = 0; j < out.n; ++j) {
      Matrix eij = Matrix::zeros(out.n, out.n, spec);
      eij.at(i, j) = Scalar::one(spec);
      auto c = solver.coords(eij);
      if (!c) {
        fail(ErrorCode::ImageNotFull,
             "the generator images on N do not span the full matrix ring; "
             "E_" + std::to_string(i + 1) + std::to_string(j + 1) + " is not expressible");
      }
      out.coeffs.push_back(std::move(*c));
    }
  }
  return out;
}

Elem unit_preimage(const AlgebraView& a, const MatrixUnitExprs& exprs, int i, int j) {
  const Vec& c = exprs.coeff(i, j);
  FieldSpec spec = a.field();
  Elem acc(Matrix::zeros(a.faithful_dim(), a.faithful_dim(), spec),
           Matrix::zeros(a.module_dim(), a.module_dim(), spec), FreePoly());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    Elem word_elem = eval_word_elems(a.gens(), exprs.image_closure.words[k]);
    acc = acc + word_elem.scaled(c[k]);
  }
  return acc;
}

std::vector<Elem> frame_mod_radical(const AlgebraView& a, const SimpleSubmodule& n,
                                    const MatrixUnitExprs& exprs, const RadicalInfo& rad) {
  FieldSpec spec = a.field();
  int r = exprs.n;
  int dim = a.dim();

  // kernel of A -> End(N) in basis coordinates
  Matrix rho(r * r, dim, spec);
  for (int k = 0; k < dim; ++k) {
    Matrix img = restrict_to_submodule(a.basis()[static_cast<std::size_t>(k)].mo, n.subspace);
    Vec flat = img.flatten();
    for (int row = 0; row < r * r; ++row) rho.at(row, k) = flat[static_cast<std::size_t>(row)];
  }

  // its image in A/J, as reduced coordinate representatives
  Subspace ideal_bar(dim, spec);
  for (const Vec& k : kernel(rho)) ideal_bar.insert(rad.reduce(k));

  // identity u of that ideal (u = 0 when the ideal vanishes) by the
  // linear system u y = y = y u mod J over the ideal basis
  Elem u = a.from_scalar(Scalar::zero(spec));
  int t = ideal_bar.dim();
  if (t > 0) {
    std::vector<Elem> ybasis;
    for (const Vec& c : ideal_bar.basis()) ybasis.push_back(a.from_coords(c));
    Matrix sys(2 * t * dim, t, spec);
    Vec rhs = vec_zeros(2 * t * dim, spec);
    for (int k = 0; k < t; ++k) {
      Vec yk = ideal_bar.basis()[static_cast<std::size_t>(k)];
      for (int l = 0; l < t; ++l) {
        Vec left = rad.reduce(a.coords_checked(ybasis[static_cast<std::size_t>(l)] *
                                               ybasis[static_cast<std::size_t>(k)]));
        Vec right = rad.reduce(a.coords_checked(ybasis[static_cast<std::size_t>(k)] *
                                                ybasis[static_cast<std::size_t>(l)]));
        for (int d = 0; d < dim; ++d) {
          sys.at(2 * k * dim + d, l) = left[static_cast<std::size_t>(d)];
          sys.at((2 * k + 1) * dim + d, l) = right[static_cast<std::size_t>(d)];
        }
      }
      for (int d = 0; d < dim; ++d) {
        rhs[static_cast<std::size_t>(2 * k * dim + d)] = yk[static_cast<std::size_t>(d)];
        rhs[static_cast<std::size_t>((2 * k + 1) * dim + d)] = yk[static_cast<std::size_t>(d)];
      }
    }
    auto alpha = solve(sys, rhs);
    if (!alpha) {
      fail(ErrorCode::NoIdealIdentity,
           "the complement ideal in A/J has no identity; the radical is suspect");
    }
    Vec ucoords = vec_zeros(dim, spec);
    for (int l = 0; l < t; ++l) {
      if ((*alpha)[static_cast<std::size_t>(l)].is_zero()) continue;
      ucoords = vec_add(ucoords, vec_scaled(ideal_bar.basis()[static_cast<std::size_t>(l)],
                                            (*alpha)[static_cast<std::size_t>(l)]));
    }
    u = a.from_coords(ucoords);
  }

  Elem mask = a.one() - u;
  std::vector<Elem> out;
  for (int i = 0; i < r; ++i) {
    Elem naive = unit_preimage(a, exprs, i, i);
    out.push_back(mask * naive * mask);
  }
  return out;
}

Elem lift_idempotent(const AlgebraView& a, const Elem& e, const RadicalInfo& rad) {
  FieldSpec spec = a.field();
  Elem defect = e * e - e;
  {
    auto c = a.coords(defect.fa);
    if (!c || !rad.subspace.contains(*c)) {
      fail(ErrorCode::NotNilpotentDefect, "e^2 - e does not lie in the radical");
    }
  }

  // nilpotency degree of the defect
  int nil = 1;
  Elem power = defect;
  while (!power.fa.is_zero()) {
    ++nil;
    if (nil > a.dim() + 2) {
      fail(ErrorCode::NotNilpotentDefect, "defect power did not reach zero");
    }
    power = power * defect;
  }

  // e^nil * sum_{j=0}^{nil-1} C(2 nil - 1, j) e^(nil-1-j) (1-e)^j
  std::vector<Elem> epow{a.one()};
  for (int k = 1; k <= nil; ++k) epow.push_back(epow.back() * e);
  Elem comp = a.one() - e;
  std::vector<Elem> cpow{a.one()};
  for (int k = 1; k < nil; ++k) cpow.push_back(cpow.back() * comp);

  Elem sum = a.from_scalar(Scalar::zero(spec));
  for (int j = 0; j < nil; ++j) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * nil - 1),
                 static_cast<unsigned long>(j));
    Scalar c = Scalar::of_mpz(spec, binom);
    if (c.is_zero()) continue;
    sum = sum + (epow[static_cast<std::size_t>(nil - 1 - j)] * cpow[static_cast<std::size_t>(j)])
                    .scaled(c);
  }
  Elem lifted = epow[static_cast<std::size_t>(nil)] * sum;

  // Newton polish until exactly idempotent
  int rounds = 2;
  for (int k = 1; k < nil; k *= 2) ++rounds;
  while (rounds-- > 0) {
    Elem sq = lifted * lifted;
    if (sq == lifted) break;
    lifted = sq.scaled(Scalar::of_int(spec, 3)) - (sq * lifted).scaled(Scalar::of_int(spec, 2));
  }
  if (lifted * lifted != lifted) {
    fail(ErrorCode::LiftDiverged, "polish did not reach an exact idempotent");
  }
  auto diff = a.coords((lifted - e).fa);
  if (!diff || !rad.subspace.contains(*diff)) {
    fail(ErrorCode::LiftDiverged, "lift left its congruence class mod J");
  }
  return lifted;
}

Frame lift_frame(const AlgebraView& a, const SimpleSubmodule& n, const RadicalInfo& rad) {
  FieldSpec spec = a.field();
  int r = n.dim();

  // the radical must kill the simple submodule
  for (const Vec& c : rad.subspace.basis()) {
    Matrix img = restrict_to_submodule(a.from_coords(c).mo, n.subspace);
    if (!img.is_zero()) fail(ErrorCode::Internal, "radical does not annihilate N");
  }

  MatrixUnitExprs exprs = matrix_units_in_image(a, n);
  std::vector<Elem> bar = frame_mod_radical(a, n, exprs, rad);

  Frame frame;
  Elem partial = a.from_scalar(Scalar::zero(spec));
  for (int i = 0; i < r; ++i) {
    // orthogonalize against the already-lifted idempotents, then lift
    Elem mask = a.one() - partial;
    Elem candidate = i == 0 ? bar[static_cast<std::size_t>(i)]
                            : mask * bar[static_cast<std::size_t>(i)] * mask;
    Elem lifted = lift_idempotent(a, candidate, rad);
    frame.diag.push_back(lifted);
    partial = partial + lifted;
  }
  frame.e0 = a.one() - partial;

  frame.units_col.push_back(frame.diag[0]);
  frame.units_row.push_back(frame.diag[0]);
  for (int i = 1; i < r; ++i) {
    Elem col = frame.diag[static_cast<std::size_t>(i)] * unit_preimage(a, exprs, i, 0) *
               frame.diag[0];
    Elem row = frame.diag[0] * unit_preimage(a, exprs, 0, i) *
               frame.diag[static_cast<std::size_t>(i)];
    frame.units_col.push_back(std::move(col));
    frame.units_row.push_back(std::move(row));
  }

  verify_frame(a, n, frame);
  return frame;
}

void verify_frame(const AlgebraView& a, const SimpleSubmodule& n, const Frame& frame) {
  FieldSpec spec = a.field();
  int r = n.dim();
  if (static_cast<int>(frame.diag.size()) != r) {
    fail(ErrorCode::Internal, "frame size disagrees with dim N");
  }
  Elem sum = frame.e0;
  for (const Elem& e : frame.diag) sum = sum + e;
  if (!sum.fa.is_identity()) fail(ErrorCode::Internal, "frame does not sum to 1");
  std::vector<Elem> all = frame.diag;
  all.push_back(frame.e0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      Elem prod = all[i] * all[j];
      if (i == j ? prod != all[i] : !prod.fa.is_zero()) {
        fail(ErrorCode::Internal, "frame is not a set of orthogonal idempotents");
      }
    }
  }
  for (int i = 0; i < r; ++i) {
    Matrix eii = Matrix::zeros(r, r, spec);
    eii.at(i, i) = Scalar::one(spec);
    if (restrict_to_submodule(frame.diag[static_cast<std::size_t>(i)].mo, n.subspace) != eii) {
      fail(ErrorCode::Internal, "frame image on N is not E_ii");
    }
    Matrix ei1 = Matrix::zeros(r, r, spec);
    ei1.at(i, 0) = Scalar::one(spec);
    if (restrict_to_submodule(frame.units_col[static_cast<std::size_t>(i)].mo, n.subspace) != ei1) {
      fail(ErrorCode::Internal, "unit lift image on N is not E_i1");
    }
    Matrix e1i = Matrix::zeros(r, r, spec);
    e1i.at(0, i) = Scalar::one(spec);
    if (restrict_to_submodule(frame.units_row[static_cast<std::size_t>(i)].mo, n.subspace) != e1i) {
      fail(ErrorCode::Internal, "unit lift image on N is not E_1i");
    }
  }
}

}  // namespace fss
