#include "fss/algebra.hpp"

namespace fss {

namespace {

std::optional<FreePoly> combine_expr(const std::optional<FreePoly>& a,
                                     const std::optional<FreePoly>& b,
                                     char op) {
  if (!a || !b) return std::nullopt;
  FreePoly r;
  switch (op) {
    case '+': r = *a + *b; break;
    case '-': r = *a - *b; break;
    case '*': r = *a * *b; break;
    default: return std::nullopt;
  }
  if (r.size() > Elem::kExprCap) return std::nullopt;
  return r;
}

}  // namespace

Elem Elem::operator+(const Elem& o) const {
  return Elem(fa + o.fa, mo + o.mo, combine_expr(expr, o.expr, '+'));
}

Elem Elem::operator-(const Elem& o) const {
  return Elem(fa - o.fa, mo - o.mo, combine_expr(expr, o.expr, '-'));
}

Elem Elem::operator*(const Elem& o) const {
  return Elem(fa * o.fa, mo * o.mo, combine_expr(expr, o.expr, '*'));
}

Elem Elem::operator-() const {
  std::optional<FreePoly> e;
  if (expr) e = expr->scaled(-Scalar::one(fa.spec()));
  return Elem(-fa, -mo, std::move(e));
}

Elem Elem::scaled(const Scalar& c) const {
  std::optional<FreePoly> e;
  if (expr) e = expr->scaled(c);
  return Elem(fa.scaled(c), mo.scaled(c), std::move(e));
}

AlgebraView::AlgebraView(FieldSpec spec, std::vector<Elem> gens)
    : spec_(spec), gens_(std::move(gens)) {
  if (gens_.empty()) fail(ErrorCode::InconsistentDims, "algebra needs at least one generator");
  fa_dim_ = gens_[0].fa.rows();
  mo_dim_ = gens_[0].mo.rows();
  for (const Elem& g : gens_) {
    if (g.fa.rows() != fa_dim_ || g.fa.cols() != fa_dim_ ||
        g.mo.rows() != mo_dim_ || g.mo.cols() != mo_dim_) {
      fail(ErrorCode::InconsistentDims, "generator matrices have mixed shapes");
    }
  }
  std::vector<Matrix> fa_gens;
  for (const Elem& g : gens_) fa_gens.push_back(g.fa);
  Closure c = algebra_closure(fa_gens, true);
  words_ = c.words;
  std::vector<Matrix> mo_gens;
  for (const Elem& g : gens_) mo_gens.push_back(g.mo);
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    FreePoly expr;
    expr.add_term(words_[i], Scalar::one(spec_));
    basis_.push_back(Elem(c.basis[i], eval_word(mo_gens, words_[i]), expr));
  }
  solver_ = SpanSolver(c.basis);
  one_ = Elem(Matrix::identity(fa_dim_, spec_), Matrix::identity(mo_dim_, spec_),
              FreePoly::unit(spec_));
}

Vec AlgebraView::coords_checked(const Elem& e) const {
  auto c = solver_.coords(e.fa);
  if (!c) fail(ErrorCode::Internal, "element escaped its own algebra span");
  return *c;
}

Elem AlgebraView::from_coords(const Vec& c) const {
  if (static_cast<int>(c.size()) != dim()) fail(ErrorCode::ShapeMismatch, "coordinate length");
  Elem acc(Matrix::zeros(fa_dim_, fa_dim_, spec_), Matrix::zeros(mo_dim_, mo_dim_, spec_),
           FreePoly());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    acc = acc + basis_[i].scaled(c[i]);
  }
  return acc;
}

Elem AlgebraView::from_scalar(const Scalar& c) const { return one_.scaled(c); }

Vec AlgebraView::act(const Vec& algebra_coords, const Vec& module_vec) const {
  Vec out = vec_zeros(mo_dim_, spec_);
  for (std::size_t i = 0; i < algebra_coords.size(); ++i) {
    if (algebra_coords[i].is_zero()) continue;
    out = vec_add(out, vec_scaled(basis_[i].mo.apply(module_vec), algebra_coords[i]));
  }
  return out;
}

std::optional<Elem> AlgebraView::inverse(const Elem& e) const {
  auto fa_inv = matrix_inverse(e.fa);
  if (!fa_inv) return std::nullopt;
  // e invertible in M_d forces e invertible in A, and the module image
  // of the inverse is the matrix inverse of the module image
  auto mo_inv = matrix_inverse(e.mo);
  if (!mo_inv) fail(ErrorCode::Internal, "module image of a unit is singular");
  return Elem(std::move(*fa_inv), std::move(*mo_inv));
}

BlackBoxAlgebra::BlackBoxAlgebra(FieldSpec spec, std::vector<std::string> names,
                                 std::vector<Matrix> faithful, std::vector<Matrix> module)
    : spec_(spec), names_(std::move(names)) {
  if (faithful.size() != module.size() || faithful.size() != names_.size() || faithful.empty()) {
    fail(ErrorCode::InconsistentDims, "generator name/faithful/module counts differ");
  }
  int d = faithful[0].rows();
  int m = module[0].rows();
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < faithful.size(); ++i) {
    if (faithful[i].rows() != d || faithful[i].cols() != d) {
      fail(ErrorCode::InconsistentDims, "faithful matrices must be square of one size");
    }
    if (module[i].rows() != m || module[i].cols() != m) {
      fail(ErrorCode::InconsistentDims, "module matrices must be square of one size");
    }
    if (faithful[i].spec() != spec_ || module[i].spec() != spec_) {
      fail(ErrorCode::InconsistentDims, "matrix entries disagree with the field spec");
    }
    FreePoly expr = FreePoly::generator(spec_, static_cast<int>(i));
    gens.push_back(Elem(faithful[i], module[i], expr));
  }
  view_ = AlgebraView(spec_, std::move(gens));

  if (spec_.kind == FieldKind::prime && spec_.p <= static_cast<std::uint64_t>(view_.dim())) {
    fail(ErrorCode::FieldTooSmall,
         "GF(" + std::to_string(spec_.p) + ") needs p > dim A = " + std::to_string(view_.dim()));
  }

  // The word map faithful -> module must respect products on the
  // computed basis, otherwise the module matrices do not define a
  // module for this algebra.  Check all pairs when cheap, else a
  // seeded sample of 100.
  int n = view_.dim();
  auto check_pair = [&](int i, int j) {
    const Elem& a = view_.basis()[static_cast<std::size_t>(i)];
    const Elem& b = view_.basis()[static_cast<std::size_t>(j)];
    Matrix prod_fa = a.fa * b.fa;
    Vec c = view_.coords(prod_fa).value_or(Vec{});
    if (c.empty()) fail(ErrorCode::Internal, "closure not multiplicatively closed");
    Matrix expect = Matrix::zeros(m, m, spec_);
    for (int k = 0; k < n; ++k) {
      if (c[static_cast<std::size_t>(k)].is_zero()) continue;
      expect = expect + view_.basis()[static_cast<std::size_t>(k)].mo.scaled(c[static_cast<std::size_t>(k)]);
    }
    if (expect != a.mo * b.mo) {
      fail(ErrorCode::NotAHomomorphism,
           "module matrices violate an algebra relation on basis pair (" +
               std::to_string(i) + ", " + std::to_string(j) + ")");
    }
  };
  if (n * n <= 100) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) check_pair(i, j);
  } else {
    Rng rng(0x686f6d636865636bULL);
    for (int t = 0; t < 100; ++t) {
      check_pair(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                 static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    }
  }
}

Subspace annihilator(const AlgebraView& a, const Vec& x) {
  if (static_cast<int>(x.size()) != a.module_dim()) {
    fail(ErrorCode::ShapeMismatch, "annihilator point has wrong dimension");
  }
  // columns of the evaluation map c -> (sum c_i b_i) x
  Matrix eval(a.module_dim(), a.dim(), a.field());
  for (int i = 0; i < a.dim(); ++i) {
    Vec bx = a.basis()[static_cast<std::size_t>(i)].mo.apply(x);
    for (int r = 0; r < a.module_dim(); ++r) eval.at(r, i) = bx[static_cast<std::size_t>(r)];
  }
  Subspace ann(a.dim(), a.field());
  for (const Vec& k : kernel(eval)) ann.insert(k);
  return ann;
}

RadicalInfo radical(const AlgebraView& a) {
  if (a.field().kind == FieldKind::prime &&
      a.field().p <= static_cast<std::uint64_t>(a.dim())) {
    fail(ErrorCode::FieldTooSmall, "trace-form radical needs p > dim A");
  }
  int n = a.dim();
  int d = a.faithful_dim();
  Matrix gram(n, n, a.field());
  for (int i = 0; i < n; ++i) {
    const Matrix& bi = a.basis()[static_cast<std::size_t>(i)].fa;
    for (int j = i; j < n; ++j) {
      const Matrix& bj = a.basis()[static_cast<std::size_t>(j)].fa;
      // tr(bi bj) without forming the product
      Scalar t = Scalar::zero(a.field());
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) {
          if (bi.at(r, c).is_zero() || bj.at(c, r).is_zero()) continue;
          t += bi.at(r, c) * bj.at(c, r);
        }
      gram.at(i, j) = t;
      gram.at(j, i) = t;
    }
  }
  RadicalInfo info;
  info.subspace = Subspace(n, a.field());
  for (const Vec& k : kernel(gram)) info.subspace.insert(k);

  // nilpotency certificate: square the ideal span until it vanishes
  std::vector<Matrix> current;
  for (const Vec& c : info.subspace.basis()) current.push_back(a.from_coords(c).fa);
  info.power_dims.push_back(static_cast<int>(current.size()));
  while (!current.empty()) {
    Subspace next_span(a.faithful_dim() * a.faithful_dim(), a.field());
    std::vector<Matrix> next;
    for (const Matrix& u : current) {
      for (const Matrix& v : current) {
        Matrix w = u * v;
        if (next_span.insert(w.flatten())) next.push_back(std::move(w));
      }
    }
    if (!next.empty() && static_cast<int>(next.size()) >= static_cast<int>(current.size())) {
      fail(ErrorCode::RadicalNotNilpotent,
           "trace-form kernel is not nilpotent; the radical precondition is violated");
    }
    info.power_dims.push_back(static_cast<int>(next.size()));
    current = std::move(next);
  }
  return info;
}

bool is_scalar_action(const std::vector<Matrix>& module_mats) {
  for (const Matrix& m : module_mats) {
    if (!m.scalar_of_identity().has_value()) return false;
  }
  return true;
}

}  // namespace fss
