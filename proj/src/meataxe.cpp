#include "fss/meataxe.hpp"

#include <deque>

#include "fss/rng.hpp"

namespace fss {

namespace {

// first 2*dim words over the generators in breadth-first order
std::vector<Matrix> word_pool(const std::vector<Matrix>& actions, int count) {
  int n = actions[0].rows();
  FieldSpec spec = actions[0].spec();
  std::vector<Matrix> pool{Matrix::identity(n, spec)};
  std::size_t next = 0;
  while (static_cast<int>(pool.size()) < count && next < pool.size()) {
    for (const Matrix& g : actions) {
      pool.push_back(pool[next] * g);
      if (static_cast<int>(pool.size()) >= count) break;
    }
    ++next;
  }
  return pool;
}

Matrix random_element(const std::vector<Matrix>& actions, Rng& rng) {
  int n = actions[0].rows();
  FieldSpec spec = actions[0].spec();
  std::vector<Matrix> pool = word_pool(actions, 2 * n);
  Matrix theta = Matrix::zeros(n, n, spec);
  for (const Matrix& w : pool) {
    Scalar c = spec.kind == FieldKind::rational
                   ? Scalar::of_int(spec, rng.int_in(-3, 3))
                   : Scalar::residue(rng.below(spec.p), spec.p);
    if (c.is_zero()) continue;
    theta = theta + w.scaled(c);
  }
  return theta;
}

Subspace full_space(int n, const FieldSpec& spec) {
  Subspace s(n, spec);
  for (int i = 0; i < n; ++i) {
    Vec e = vec_zeros(n, spec);
    e[static_cast<std::size_t>(i)] = Scalar::one(spec);
    s.insert(e);
  }
  return s;
}

std::vector<Matrix> transposed(const std::vector<Matrix>& actions) {
  std::vector<Matrix> t;
  t.reserve(actions.size());
  for (const Matrix& g : actions) t.push_back(g.transpose());
  return t;
}

// lift a subspace expressed in sub's coordinates back to sub's ambient
Subspace lift_through(const Subspace& inner, const Subspace& sub) {
  Subspace out(sub.ambient(), sub.spec());
  for (const Vec& c : inner.basis()) {
    Vec v = vec_zeros(sub.ambient(), sub.spec());
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      v = vec_add(v, vec_scaled(sub.basis()[k], c[k]));
    }
    out.insert(v);
  }
  return out;
}

// One randomized descent: find some simple submodule of the module
// given by actions, spending random elements from the budget.  The
// result lives in the current ambient coordinates.
std::optional<Subspace> descend(const std::vector<Matrix>& actions, Rng& rng, int& budget) {
  int n = actions[0].rows();
  FieldSpec spec = actions[0].spec();
  if (n == 1) return full_space(1, spec);

  auto recurse_into = [&](const Subspace& proper) -> std::optional<Subspace> {
    std::vector<Matrix> sub_actions = restrict_actions(actions, proper);
    auto inner = descend(sub_actions, rng, budget);
    if (!inner) return std::nullopt;
    return lift_through(*inner, proper);
  };

  while (budget > 0) {
    --budget;
    Matrix theta = random_element(actions, rng);
    if (theta.is_zero()) continue;
    Poly cp = charpoly(theta);
    std::vector<Poly> factors = distinct_irreducible_factors(cp, rng);
    for (const Poly& p : factors) {
      Matrix ptheta = p.eval(theta);
      std::vector<Vec> ker = kernel(ptheta);
      if (ker.empty()) continue;
      Subspace v_spin = spin({ker[0]}, actions);
      if (v_spin.dim() < n) return recurse_into(v_spin);
      if (static_cast<int>(ker.size()) != p.degree()) continue;  // Norton needs nullity = degree
      std::vector<Vec> kert = kernel(ptheta.transpose());
      if (kert.empty()) continue;
      Subspace w_spin = spin({kert[0]}, transposed(actions));
      if (w_spin.dim() == n) return full_space(n, spec);  // certified simple
      // the perp of a transposed-invariant subspace is invariant
      Subspace perp(n, spec);
      for (const Vec& k : kernel(Matrix::from_rows(w_spin.basis(), spec))) perp.insert(k);
      if (perp.dim() == 0 || perp.dim() == n) continue;
      return recurse_into(perp);
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Matrix> restrict_actions(const std::vector<Matrix>& actions, const Subspace& sub) {
  int r = sub.dim();
  std::vector<Matrix> out;
  out.reserve(actions.size());
  for (const Matrix& g : actions) {
    Matrix m(r, r, g.spec());
    for (int j = 0; j < r; ++j) {
      auto c = sub.coordinates(g.apply(sub.basis()[static_cast<std::size_t>(j)]));
      if (!c) fail(ErrorCode::Internal, "restriction to a non-invariant subspace");
      for (int i = 0; i < r; ++i) m.at(i, j) = (*c)[static_cast<std::size_t>(i)];
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::optional<SimpleSubmodule> certify_submodule(const std::vector<Matrix>& actions,
                                                 const Subspace& sub, std::uint64_t seed) {
  SimpleSubmodule n;
  n.subspace = sub;
  n.actions = restrict_actions(actions, sub);
  int r = sub.dim();
  if (r == 0) return std::nullopt;
  if (r == 1) {
    n.witness.trivial = true;
    return n;
  }
  Rng rng(Rng::mix(seed, 0xce27f1caULL));
  for (int tries = 0; tries < 64; ++tries) {
    Matrix theta = random_element(n.actions, rng);
    if (theta.is_zero()) continue;
    Poly cp = charpoly(theta);
    for (const Poly& p : distinct_irreducible_factors(cp, rng)) {
      Matrix ptheta = p.eval(theta);
      std::vector<Vec> ker = kernel(ptheta);
      if (static_cast<int>(ker.size()) != p.degree()) continue;
      if (spin({ker[0]}, n.actions).dim() != r) return std::nullopt;  // not simple
      std::vector<Vec> kert = kernel(ptheta.transpose());
      if (kert.empty()) continue;
      if (spin({kert[0]}, transposed(n.actions)).dim() != r) return std::nullopt;
      n.witness.trivial = false;
      n.witness.theta = theta;
      n.witness.factor = p;
      n.witness.v = ker[0];
      n.witness.w = kert[0];
      return n;
    }
  }
  return std::nullopt;  // could not certify within the try cap
}

bool recheck_witness(const SimpleSubmodule& n) {
  int r = n.dim();
  if (n.witness.trivial) return r == 1;
  const NortonWitness& w = n.witness;
  Matrix ptheta = w.factor.eval(w.theta);
  if (!vec_is_zero(ptheta.apply(w.v))) return false;
  if (!vec_is_zero(ptheta.transpose().apply(w.w))) return false;
  if (static_cast<int>(kernel(ptheta).size()) != w.factor.degree()) return false;
  if (spin({w.v}, n.actions).dim() != r) return false;
  if (spin({w.w}, transposed(n.actions)).dim() != r) return false;
  return true;
}

std::optional<SimpleSubmodule> simple_submodule(const std::vector<Matrix>& actions,
                                                std::uint64_t seed, int budget,
                                                bool require_split_candidates) {
  if (actions.empty()) return std::nullopt;
  int m = actions[0].rows();
  for (const Matrix& g : actions) {
    if (g.rows() != m || g.cols() != m) fail(ErrorCode::ShapeMismatch, "meataxe actions");
  }
  if (m < 1) return std::nullopt;

  Rng rng(Rng::mix(seed, 0x6d656174ULL));
  std::vector<SimpleSubmodule> candidates;
  int remaining = budget;
  std::uint64_t cert_salt = 0;
  while (remaining > 0) {
    int before = remaining;
    auto found = descend(actions, rng, remaining);
    if (remaining == before) --remaining;  // guarantee progress
    if (!found) continue;
    bool seen = false;
    for (const SimpleSubmodule& c : candidates) {
      if (c.subspace == *found) {
        seen = true;
        break;
      }
    }
    if (seen) continue;
    auto cert = certify_submodule(actions, *found, Rng::mix(seed, ++cert_salt));
    if (!cert) continue;
    if (require_split_candidates && cert->dim() >= 2) {
      EndoRingInfo endo = endo_ring(*cert);
      if (endo.dim_over_k != 1) continue;  // needs a field extension, unusable here
    }
    candidates.push_back(std::move(*cert));
    if (candidates.back().dim() == m) break;  // nothing larger exists
  }

  const SimpleSubmodule* best = nullptr;
  for (const SimpleSubmodule& c : candidates) {
    if (c.dim() < 2) continue;
    if (!best || c.dim() > best->dim() ||
        (c.dim() == best->dim() && c.subspace.cmp_basis(best->subspace) < 0)) {
      best = &c;
    }
  }
  if (!best) return std::nullopt;
  return *best;
}

EndoRingInfo endo_ring(const SimpleSubmodule& n) {
  int r = n.dim();
  FieldSpec spec = n.subspace.spec();
  // unknowns C[i][j] flattened row-major; equations C g - g C = 0
  int rows = static_cast<int>(n.actions.size()) * r * r;
  Matrix sys(rows, r * r, spec);
  int eq = 0;
  for (const Matrix& g : n.actions) {
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        for (int k = 0; k < r; ++k) {
          // + C[i][k] g[k][j]
          sys.at(eq, i * r + k) += g.at(k, j);
          // - g[i][k] C[k][j]
          sys.at(eq, k * r + j) -= g.at(i, k);
        }
        ++eq;
      }
    }
  }
  EndoRingInfo info;
  for (const Vec& c : kernel(sys)) {
    Matrix e(r, r, spec);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) e.at(i, j) = c[static_cast<std::size_t>(i * r + j)];
    info.basis.push_back(std::move(e));
  }
  info.dim_over_k = static_cast<int>(info.basis.size());
  return info;
}

void require_split(const EndoRingInfo& info) {
  if (info.dim_over_k != 1) {
    fail(ErrorCode::NonSplitSimple,
         "endomorphism ring has dimension " + std::to_string(info.dim_over_k) +
             " over the ground field; field extension is unsupported");
  }
}

}  // namespace fss
