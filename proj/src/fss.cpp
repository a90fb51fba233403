#include "fss/fss.hpp"

#include <map>

#include "fss/oracle.hpp"
#include "fss/rng.hpp"

namespace fss {

const char* u_tag_name(UTag tag) {
  switch (tag) {
    case UTag::unit: return "unit";
    case UTag::sigma_st: return "sigma-st";
    case UTag::defect: return "defect";
    case UTag::annihilating_st: return "annihilating-st";
  }
  return "unknown";
}

const char* stop_reason_name(StopReason reason) {
  switch (reason) {
    case StopReason::scalar_action: return "scalar-action";
    case StopReason::no_progress: return "no-progress";
  }
  return "unknown";
}

bool VerificationFlags::all_true() const {
  auto ok = [](const std::optional<bool>& f) { return !f.has_value() || *f; };
  return ok(gamma_surjective) && ok(u_membership) && ok(sigma_st_annihilates) &&
         ok(chain_contained);
}

Elem Transversal::tau(const AlgebraView& a, const Vec& v) const {
  auto c = coords_in_n(v);
  if (!c) fail(ErrorCode::Internal, "tau applied outside the cyclic module");
  Elem acc = a.from_scalar(Scalar::zero(a.field()));
  for (std::size_t i = 0; i < c->size(); ++i) {
    if ((*c)[i].is_zero()) continue;
    acc = acc + t_elems[i].scaled((*c)[i]);
  }
  return acc;
}

Transversal build_transversal(const AlgebraView& a, const Frame& frame, const SimpleSubmodule& n,
                              const Vec& x0) {
  FieldSpec spec = a.field();
  int r = n.dim();

  auto n_coords = n.subspace.coordinates(x0);
  if (!n_coords) fail(ErrorCode::ShapeMismatch, "base point is not in the simple submodule");

  Vec x = x0;
  if ((*n_coords)[0].is_zero()) {
    // re-seed: project a basis vector through e_1
    bool found = false;
    for (const Vec& y : n.subspace.basis()) {
      Vec candidate = frame.diag[0].mo.apply(y);
      if (!vec_is_zero(candidate)) {
        x = candidate;
        found = true;
        break;
      }
    }
    if (!found) {
      fail(ErrorCode::DegenerateBasePoint, "e_1 kills every basis vector of N");
    }
  } else {
    x = frame.diag[0].mo.apply(x0);  // now e_1 x = x exactly
  }

  Transversal tr;
  tr.x = x;
  tr.nspace = n.subspace;
  for (int i = 0; i < r; ++i) {
    tr.nbasis.push_back(frame.units_col[static_cast<std::size_t>(i)].mo.apply(x));
  }
  tr.ncoords = SpanSolver(tr.nbasis, n.subspace.ambient(), spec);

  tr.t_elems.push_back(a.one());  // tau(n_1) patched to 1, so tau(x) = 1
  tr.upgraded.push_back(true);
  for (int i = 1; i < r; ++i) {
    Elem chosen = frame.units_col[static_cast<std::size_t>(i)];
    bool up = false;
    // first invertible basis word sending x to n_i
    for (const Elem& w : a.basis()) {
      if (w.mo.apply(x) != tr.nbasis[static_cast<std::size_t>(i)]) continue;
      if (!a.inverse(w).has_value()) continue;
      chosen = w;
      up = true;
      break;
    }
    tr.t_elems.push_back(chosen);
    tr.upgraded.push_back(up);
  }

  // postconditions: tau(x) = 1 and tau(n_i) x = n_i
  for (int i = 0; i < r; ++i) {
    if (tr.t_elems[static_cast<std::size_t>(i)].mo.apply(x) !=
        tr.nbasis[static_cast<std::size_t>(i)]) {
      fail(ErrorCode::Internal, "transversal image does not act correctly on x");
    }
  }
  if (!tr.tau(a, x).fa.is_identity()) fail(ErrorCode::Internal, "tau(x) != 1");
  return tr;
}

namespace {

// tau through the frame units only (no patch, no upgrades):
// sum coords_i e_{i1}; invertible in the image whenever coords[0] != 0
Elem frame_tau(const AlgebraView& a, const Frame& frame, const Vec& coords) {
  Elem acc = a.from_scalar(Scalar::zero(a.field()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    acc = acc + frame.units_col[i].scaled(coords[i]);
  }
  return acc;
}

}  // namespace

Section build_section(const AlgebraView& a, const std::vector<Elem>& s_gens, const Frame& frame,
                      const Transversal& tr) {
  FieldSpec spec = a.field();
  Section sec;
  int t_count = static_cast<int>(tr.t_elems.size());
  for (int si = 0; si < static_cast<int>(s_gens.size()); ++si) {
    for (int ti = 0; ti < t_count; ++ti) {
      SectionEntry e;
      e.s = si;
      e.t = ti;
      e.st = s_gens[static_cast<std::size_t>(si)] * tr.t_elems[static_cast<std::size_t>(ti)];
      Vec stx = e.st.mo.apply(tr.x);
      auto coords = tr.coords_in_n(stx);
      if (!coords) fail(ErrorCode::Internal, "st x escaped the cyclic module");
      if (vec_is_zero(*coords)) {
        e.annihilating = true;
        sec.entries.push_back(std::move(e));
        continue;
      }
      e.tau_coords = *coords;
      e.tau_stx = tr.tau(a, stx);

      std::optional<Elem> sigma_inv;
      // inverted-transversal: tau(st x) itself, then the product st
      if (auto inv = a.inverse(e.tau_stx)) {
        sigma_inv = e.tau_stx;
        e.sigma = std::move(*inv);
        e.strategy = SectionStrategy::inverted_transversal;
      } else if (auto inv2 = a.inverse(e.st)) {
        sigma_inv = e.st;
        e.sigma = std::move(*inv2);
        e.strategy = SectionStrategy::inverted_transversal;
      } else {
        // idempotent completion from the Pierce frame
        Elem candidate = a.from_scalar(Scalar::zero(spec));
        if (!(*coords)[0].is_zero()) {
          candidate = a.one() - frame.diag[0] + frame_tau(a, frame, *coords);
        } else {
          int piv = vec_first_nonzero(*coords);
          // lifted transposition (1 piv)
          Elem p = a.one() - frame.diag[0] - frame.diag[static_cast<std::size_t>(piv)] +
                   frame.units_row[static_cast<std::size_t>(piv)] +
                   frame.units_col[static_cast<std::size_t>(piv)];
          Vec swapped = *coords;
          std::swap(swapped[0], swapped[static_cast<std::size_t>(piv)]);
          candidate = p * (a.one() - frame.diag[0] + frame_tau(a, frame, swapped));
        }
        if (candidate.mo.apply(tr.x) != stx) {
          fail(ErrorCode::Internal, "completion candidate acts wrongly on x");
        }
        auto inv3 = a.inverse(candidate);
        if (!inv3) {
          fail(ErrorCode::SectionSingular,
               "no invertible section value for generator " + std::to_string(si) +
                   " against transversal index " + std::to_string(ti));
        }
        sigma_inv = candidate;
        e.sigma = std::move(*inv3);
        e.strategy = SectionStrategy::idempotent_completion;
      }
      e.sigma_inv = std::move(*sigma_inv);
      e.defect = e.sigma_inv - e.tau_stx;

      // exact postconditions
      if (!(e.sigma * e.sigma_inv).fa.is_identity() ||
          !(e.sigma_inv * e.sigma).fa.is_identity()) {
        fail(ErrorCode::Internal, "sigma inverse pair is inconsistent");
      }
      if (!vec_is_zero(e.defect.mo.apply(tr.x))) {
        fail(ErrorCode::Internal, "section defect does not annihilate x");
      }
      if (e.strategy == SectionStrategy::inverted_transversal) {
        ++sec.inverted_count;
      } else {
        ++sec.completion_count;
      }
      sec.entries.push_back(std::move(e));
    }
  }
  return sec;
}

namespace {

// cand = scale * kept, for nonzero cand and kept
std::optional<Scalar> scalar_multiple_of(const Elem& cand, const Elem& kept) {
  Vec cf = cand.fa.flatten();
  Vec kf = kept.fa.flatten();
  int lead = vec_first_nonzero(kf);
  if (lead < 0) return std::nullopt;
  if (cf[static_cast<std::size_t>(lead)].is_zero()) return std::nullopt;
  Scalar scale = cf[static_cast<std::size_t>(lead)] / kf[static_cast<std::size_t>(lead)];
  if (cand.fa == kept.fa.scaled(scale) && cand.mo == kept.mo.scaled(scale)) return scale;
  return std::nullopt;
}

Scalar action_eigenvalue(const Elem& u, const Vec& x) {
  Vec ux = u.mo.apply(x);
  int lead = vec_first_nonzero(x);
  if (lead < 0) fail(ErrorCode::Internal, "zero base point");
  Scalar lambda = ux[static_cast<std::size_t>(lead)] / x[static_cast<std::size_t>(lead)];
  if (ux != vec_scaled(x, lambda)) {
    fail(ErrorCode::Internal, "U element does not act as a scalar on x");
  }
  return lambda;
}

}  // namespace

std::pair<std::vector<UGen>, int> fss_generators(const AlgebraView& a, const Transversal& tr,
                                                 Section& sec) {
  std::vector<UGen> u;
  int raw = 0;

  auto keep = [&](const Elem& cand, UTag tag, int* index_out, Scalar* scale_out) {
    ++raw;
    FieldSpec spec = a.field();
    if (cand.is_zero()) {
      if (index_out) *index_out = -1;
      if (scale_out) *scale_out = Scalar::zero(spec);
      return;
    }
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (auto scale = scalar_multiple_of(cand, u[k].elem)) {
        if (index_out) *index_out = static_cast<int>(k);
        if (scale_out) *scale_out = *scale;
        return;
      }
    }
    UGen g;
    g.elem = cand;
    g.tag = tag;
    g.lambda = action_eigenvalue(cand, tr.x);
    u.push_back(std::move(g));
    if (index_out) *index_out = static_cast<int>(u.size()) - 1;
    if (scale_out) *scale_out = Scalar::one(spec);
  };

  keep(a.one(), UTag::unit, nullptr, nullptr);
  for (SectionEntry& e : sec.entries) {
    if (e.annihilating) {
      keep(e.st, UTag::annihilating_st, &e.u_annihilating, &e.u_annihilating_scale);
      continue;
    }
    Elem sigma_st = e.sigma * e.st;
    keep(sigma_st, UTag::sigma_st, &e.u_sigma_st, &e.u_sigma_st_scale);
    keep(e.defect, UTag::defect, &e.u_defect, &e.u_defect_scale);
  }
  return {std::move(u), raw};
}

bool gamma_surjective(const AlgebraView& level_algebra, const Transversal& tr,
                      const AlgebraView& u_algebra) {
  int d = level_algebra.faithful_dim();
  Subspace span(d * d, level_algebra.field());
  for (const Elem& t : tr.t_elems) {
    for (const Elem& b : u_algebra.basis()) {
      span.insert((t.fa * b.fa).flatten());
    }
  }
  return span.dim() == level_algebra.dim();
}

namespace {

FSSLevel build_level(const AlgebraView& algebra, const std::vector<Elem>& gens,
                     const SimpleSubmodule& n, int index, bool full_verify) {
  FSSLevel level;
  level.index = index;
  level.algebra = algebra;
  level.s_gens = gens;
  level.simple = n;
  EndoRingInfo endo = endo_ring(n);
  require_split(endo);
  level.endo_dim = endo.dim_over_k;

  RadicalInfo rad = radical(algebra);
  level.frame = lift_frame(algebra, n, rad);

  Vec x0 = n.subspace.basis()[0];
  level.tr = build_transversal(algebra, level.frame, n, x0);
  level.sec = build_section(algebra, gens, level.frame, level.tr);
  auto [u, raw] = fss_generators(algebra, level.tr, level.sec);
  level.u = std::move(u);
  level.u_raw_count = raw;

  std::vector<Elem> u_elems;
  for (const UGen& g : level.u) u_elems.push_back(g.elem);
  level.u_algebra = AlgebraView(algebra.field(), u_elems);

  // verification suite
  level.flags.sigma_st_annihilates = true;
  for (const SectionEntry& e : level.sec.entries) {
    if (e.annihilating) continue;
    Elem check = e.sigma * e.st - algebra.one();
    if (!vec_is_zero(check.mo.apply(level.tr.x))) {
      level.flags.sigma_st_annihilates = false;
    }
  }
  if (full_verify) {
    level.flags.gamma_surjective = gamma_surjective(algebra, level.tr, level.u_algebra);
    bool membership = true;
    for (const Elem& b : level.u_algebra.basis()) {
      Vec bx = b.mo.apply(level.tr.x);
      int lead = vec_first_nonzero(level.tr.x);
      Scalar lambda = bx[static_cast<std::size_t>(lead)] / level.tr.x[static_cast<std::size_t>(lead)];
      if (bx != vec_scaled(level.tr.x, lambda)) {
        membership = false;
        break;
      }
    }
    level.flags.u_membership = membership;
    bool chain = true;
    for (const Elem& b : level.u_algebra.basis()) {
      if (!algebra.coords(b.fa).has_value()) {
        chain = false;
        break;
      }
    }
    level.flags.chain_contained = chain;
  }
  return level;
}

}  // namespace

Decomposition decompose(const BlackBoxAlgebra& a, const DecomposeConfig& config) {
  Decomposition d;
  d.field = a.field();
  d.seed = config.seed;

  AlgebraView current = a.view();
  std::vector<Elem> gens = a.view().gens();

  while (true) {
    std::vector<Matrix> module_mats;
    for (const Elem& g : gens) module_mats.push_back(g.mo);
    if (is_scalar_action(module_mats)) {
      d.reason = StopReason::scalar_action;
      break;
    }
    if (static_cast<int>(d.levels.size()) >= config.max_levels) {
      fail(ErrorCode::MaxDepthExceeded,
           "decomposition exceeded " + std::to_string(config.max_levels) + " levels");
    }

    int index = static_cast<int>(d.levels.size()) + 1;
    std::optional<FSSLevel> level;
    bool stopped = false;
    for (int retry = 0; retry <= config.section_retries; ++retry) {
      std::uint64_t level_seed =
          Rng::mix(config.seed, static_cast<std::uint64_t>(index) * 1000 +
                                    static_cast<std::uint64_t>(retry));
      auto n = simple_submodule(module_mats, level_seed, config.budget, true);
      if (!n) {
        if (retry == 0) {
          stopped = true;  // nothing usable: apply the stopping rule
          break;
        }
        continue;
      }
      try {
        level = build_level(current, gens, *n, index, config.full_verify);
        break;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::SectionSingular && retry < config.section_retries) {
          continue;  // re-seed the search and try a different frame
        }
        throw;
      }
    }
    if (stopped || !level) {
      d.reason = StopReason::no_progress;
      break;
    }

    // strict progress: K<U> is a proper subalgebra when dim N >= 2
    if (level->u_algebra.dim() >= current.dim()) {
      fail(ErrorCode::Internal, "FSS level did not shrink the algebra");
    }

    gens.clear();
    for (const UGen& g : level->u) gens.push_back(g.elem);
    current = level->u_algebra;
    d.cyclic_dims.push_back(level->cyclic_dim());
    d.levels.push_back(std::move(*level));
  }

  d.terminal_gens = gens;
  d.terminal_level_dim = current.dim();
  if (config.oracle_terminal_dim) {
    std::vector<Matrix> fa;
    for (const Elem& g : gens) fa.push_back(g.fa);
    d.terminal_dim = oracle::oracle_dim(fa);
  }
  d.bound = dimension_bound(d);
  return d;
}

std::optional<long long> dimension_bound(const Decomposition& d) {
  if (!d.terminal_dim.has_value()) return std::nullopt;
  long long bound = *d.terminal_dim;
  for (int dim : d.cyclic_dims) bound *= dim;
  return bound;
}

RewriteResult rewrite(const FreePoly& expr, const FSSLevel& level, int term_cap) {
  struct Term {
    Scalar coef;
    Word s;              // pending generator symbols
    int t = 0;           // transversal index
    std::vector<int> u;  // U symbols, leftmost applied first
  };
  int t_count = static_cast<int>(level.tr.t_elems.size());

  std::vector<Term> terms;
  for (const auto& [word, coef] : expr.terms()) {
    for (int g : word) {
      if (g < 0 || g >= static_cast<int>(level.s_gens.size())) {
        fail(ErrorCode::ShapeMismatch, "rewrite expression uses a symbol outside S");
      }
    }
    terms.push_back(Term{coef, word, 0, {}});
  }

  bool pending = true;
  while (pending) {
    pending = false;
    std::vector<Term> next;
    for (Term& term : terms) {
      if (term.s.empty()) {
        next.push_back(std::move(term));
        continue;
      }
      pending = true;
      int s_last = term.s.back();
      Word rest(term.s.begin(), term.s.end() - 1);
      const SectionEntry& e = level.sec.entry(s_last, term.t, t_count);
      if (e.annihilating) {
        if (e.u_annihilating < 0) continue;  // st = 0: the term vanishes
        Term t2;
        t2.coef = term.coef * e.u_annihilating_scale;
        t2.s = rest;
        t2.t = 0;
        t2.u = term.u;
        t2.u.insert(t2.u.begin(), e.u_annihilating);
        next.push_back(std::move(t2));
        continue;
      }
      // st = sum_k tau_k t_k (sigma(st) st) + defect (sigma(st) st)
      Scalar sig_scale = e.u_sigma_st_scale;
      for (int k = 0; k < static_cast<int>(e.tau_coords.size()); ++k) {
        const Scalar& ck = e.tau_coords[static_cast<std::size_t>(k)];
        if (ck.is_zero()) continue;
        Term t2;
        t2.coef = term.coef * ck * sig_scale;
        t2.s = rest;
        t2.t = k;
        t2.u = term.u;
        t2.u.insert(t2.u.begin(), e.u_sigma_st);
        next.push_back(std::move(t2));
      }
      if (e.u_defect >= 0) {
        Term t2;
        t2.coef = term.coef * e.u_defect_scale * sig_scale;
        t2.s = rest;
        t2.t = 0;
        t2.u = term.u;
        t2.u.insert(t2.u.begin(), e.u_sigma_st);
        t2.u.insert(t2.u.begin(), e.u_defect);
        next.push_back(std::move(t2));
      }
    }
    if (static_cast<int>(next.size()) > term_cap) {
      fail(ErrorCode::TermBlowup,
           "rewriting exceeded " + std::to_string(term_cap) + " terms");
    }
    terms = std::move(next);
  }

  // combine like monomials
  std::map<std::pair<int, std::vector<int>>, Scalar> combined;
  for (const Term& term : terms) {
    auto key = std::make_pair(term.t, term.u);
    auto it = combined.find(key);
    if (it == combined.end()) {
      combined.emplace(key, term.coef);
    } else {
      it->second += term.coef;
    }
  }
  RewriteResult out;
  for (const auto& [key, coef] : combined) {
    if (coef.is_zero()) continue;
    out.monomials.push_back(RewriteMonomial{coef, key.first, key.second});
  }
  return out;
}

Elem eval_rewrite(const RewriteResult& r, const FSSLevel& level) {
  const AlgebraView& a = level.algebra;
  Elem acc = a.from_scalar(Scalar::zero(a.field()));
  for (const RewriteMonomial& m : r.monomials) {
    Elem prod = level.tr.t_elems[static_cast<std::size_t>(m.t)];
    for (int ui : m.u) prod = prod * level.u[static_cast<std::size_t>(ui)].elem;
    acc = acc + prod.scaled(m.coef);
  }
  return acc;
}

}  // namespace fss
