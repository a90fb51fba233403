#pragma once

#include <optional>

#include "fss/idempotents.hpp"

namespace fss {

// Linear transversal tau: N -> A with tau(x) = 1 and tau(m) x = m.
// tau(n_1) is patched to 1; higher tau images prefer an invertible
// basis word acting correctly on x (this keeps section defects at
// zero and lets the section invert tau values directly), falling back
// to the Pierce unit lifts e_{i1}.
struct Transversal {
  Vec x;
  Subspace nspace;              // N = Ax
  std::vector<Vec> nbasis;      // n_i = e_{i1} x
  std::vector<Elem> t_elems;    // tau(n_i); index 0 is the identity
  std::vector<bool> upgraded;   // true when t_elems[i] is an invertible word
  SpanSolver ncoords;           // coordinates over nbasis

  std::optional<Vec> coords_in_n(const Vec& v) const { return ncoords.coords(v); }
  Elem tau(const AlgebraView& a, const Vec& v) const;
};

enum class SectionStrategy { inverted_transversal, idempotent_completion };

struct SectionEntry {
  int s = 0, t = 0;
  Elem st;                 // the product element
  bool annihilating = false;  // tau(st x) = 0
  SectionStrategy strategy = SectionStrategy::inverted_transversal;
  Vec tau_coords;          // coordinates of st x over nbasis (empty when annihilating)
  Elem tau_stx;
  Elem sigma;
  Elem sigma_inv;
  Elem defect;             // sigma_inv - tau_stx, annihilates x

  // U bookkeeping, filled by fss_generators: element = scale * u[index]
  int u_sigma_st = -1;
  Scalar u_sigma_st_scale;
  int u_defect = -1;       // -1 when the defect is zero
  Scalar u_defect_scale;
  int u_annihilating = -1;
  Scalar u_annihilating_scale;
};

struct Section {
  std::vector<SectionEntry> entries;  // s-major, t-minor
  int inverted_count = 0;
  int completion_count = 0;
  const SectionEntry& entry(int s, int t, int t_count) const {
    return entries[static_cast<std::size_t>(s * t_count + t)];
  }
};

enum class UTag { unit, sigma_st, defect, annihilating_st };

const char* u_tag_name(UTag tag);

struct UGen {
  Elem elem;
  UTag tag = UTag::unit;
  Scalar lambda;  // u - lambda * 1 annihilates x
};

struct VerificationFlags {
  std::optional<bool> gamma_surjective;
  std::optional<bool> u_membership;
  std::optional<bool> sigma_st_annihilates;
  std::optional<bool> chain_contained;
  bool all_true() const;
};

// One stage of the recursion: the current algebra, the cyclic module
// it acts on, and the generator set handed to the next stage.
struct FSSLevel {
  int index = 1;  // 1-based
  AlgebraView algebra;        // K<S_i>
  std::vector<Elem> s_gens;   // S_i
  SimpleSubmodule simple;     // N with Ax = N
  int endo_dim = 1;
  Frame frame;
  Transversal tr;
  Section sec;
  std::vector<UGen> u;
  int u_raw_count = 0;
  AlgebraView u_algebra;      // K<U_i>, the next stage's algebra
  VerificationFlags flags;

  int cyclic_dim() const { return simple.dim(); }
  int u_algebra_dim() const { return u_algebra.dim(); }
};

enum class StopReason { scalar_action, no_progress };

const char* stop_reason_name(StopReason reason);

struct Decomposition {
  FieldSpec field;
  std::uint64_t seed = 0;
  std::vector<FSSLevel> levels;
  StopReason reason = StopReason::scalar_action;
  std::vector<Elem> terminal_gens;
  int terminal_level_dim = 0;               // dim K<S_ell> from the pipeline closure
  std::vector<int> cyclic_dims;
  std::optional<long long> terminal_dim;    // oracle-computed when requested
  std::optional<long long> bound;           // product, when terminal_dim is present
};

struct DecomposeConfig {
  std::uint64_t seed = 0;
  int max_levels = 16;
  int budget = 32;
  bool full_verify = true;
  bool oracle_terminal_dim = true;
  int section_retries = 4;
};

Transversal build_transversal(const AlgebraView& a, const Frame& frame, const SimpleSubmodule& n,
                              const Vec& x0);

// Section sigma on the products st with tau(st x) != 0.  Strategy
// inverted-transversal inverts tau(st x) itself, else the product st;
// when neither is a unit the Pierce completion 1 - e_1 + tau_frame(st x)
// (with a lifted (1 i) twist when the first coordinate vanishes) is
// inverted instead.  Every entry is verified exactly; a candidate that
// stays singular in A raises SectionSingular.
Section build_section(const AlgebraView& a, const std::vector<Elem>& s_gens, const Frame& frame,
                      const Transversal& tr);

// U(S, T, sigma, tau) with provenance tags; exact duplicates, zeros
// and scalar multiples pruned (first kept wins).  Backfills the
// section's U indices.  Returns the generators and the raw count.
std::pair<std::vector<UGen>, int> fss_generators(const AlgebraView& a, const Transversal& tr,
                                                 Section& sec);

// rank test for Gamma: span{ tau(n_i) b_j } over a basis b_j of K<U>
// must be all of the level algebra
bool gamma_surjective(const AlgebraView& level_algebra, const Transversal& tr,
                      const AlgebraView& u_algebra);

Decomposition decompose(const BlackBoxAlgebra& a, const DecomposeConfig& config);

// product of the cyclic dimensions times the terminal dimension;
// nullopt when the terminal dimension was not computed (parameterized)
std::optional<long long> dimension_bound(const Decomposition& d);

// ---------------------------------------------------------------------------
// rewriting into T·U* form
// ---------------------------------------------------------------------------

struct RewriteMonomial {
  Scalar coef;
  int t = 0;                // index into tr.t_elems
  std::vector<int> u;       // indices into level.u, left to right
};

struct RewriteResult {
  std::vector<RewriteMonomial> monomials;
};

// Rewrites a formal combination of words over the level's S into a
// combination of (T element)(U elements...) monomials with identical
// evaluation.  term_cap aborts with TermBlowup.
RewriteResult rewrite(const FreePoly& expr, const FSSLevel& level, int term_cap = 200000);

Elem eval_rewrite(const RewriteResult& r, const FSSLevel& level);

}  // namespace fss
