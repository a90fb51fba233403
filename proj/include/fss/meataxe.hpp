#pragma once

#include <optional>

#include "fss/poly.hpp"
#include "fss/subspace.hpp"

namespace fss {

// Seed data proving simplicity of a submodule: a random element of
// the enveloping algebra restricted to N, an irreducible factor of its
// characteristic polynomial with nullity equal to its degree, and
// kernel vectors whose spins (plain and transposed) fill N.
struct NortonWitness {
  bool trivial = false;  // one-dimensional module, nothing to certify
  Matrix theta;
  Poly factor;
  Vec v;
  Vec w;
};

struct SimpleSubmodule {
  Subspace subspace;             // N inside the ambient module, RREF basis
  std::vector<Matrix> actions;   // generator actions restricted to N
  NortonWitness witness;

  int dim() const { return subspace.dim(); }
};

struct EndoRingInfo {
  int dim_over_k = 0;
  std::vector<Matrix> basis;  // commuting matrices on N
};

// restriction of square actions to an invariant subspace, in the
// subspace's RREF basis coordinates
std::vector<Matrix> restrict_actions(const std::vector<Matrix>& actions, const Subspace& sub);

// MeatAxe search for a simple submodule of dimension >= 2.  Collects
// candidates over the random-element budget, discards candidates whose
// endomorphism ring exceeds K when require_split is set, and picks the
// one of maximal dimension (ties: smallest RREF-lexicographic basis).
// Absence is a value: nullopt means the caller applies the stopping rule.
std::optional<SimpleSubmodule> simple_submodule(const std::vector<Matrix>& actions,
                                                std::uint64_t seed, int budget,
                                                bool require_split = true);

// certify an invariant subspace as simple and package it; used by
// simple_submodule and by tests that construct submodules by hand
std::optional<SimpleSubmodule> certify_submodule(const std::vector<Matrix>& actions,
                                                 const Subspace& sub, std::uint64_t seed);

// re-run the recorded certificate
bool recheck_witness(const SimpleSubmodule& n);

// End_A(N) by the linear commutant system
EndoRingInfo endo_ring(const SimpleSubmodule& n);

// raises NonSplitSimple unless dim End = 1
void require_split(const EndoRingInfo& info);

}  // namespace fss
