#pragma once

// Compiles a theory with freshness-annotated axioms into an equation-only
// theory: each axiom fe |- A # t ~ t' : s becomes the equation fe |- t ~ t' :
// s plus, when A is non-empty, the swap equation fe^{#A'} |- t ~ (A A')*t : s
// for the canonical fresh tuple A'. The swap axiom is named after the
// original with the suffix "_fresh".

#include "nomeq/fresh.hpp"

namespace nomeq {

// The deterministic choice of fresh tuple for a judgement's freshness set:
// the |atoms| least atoms outside supp(fe), atoms, and the support of t.
AtomTuple canonical_fresh_tuple(const FreshnessEnv& fe, const AtomSet& atoms,
                                const Term& t);

inline const char* kFreshAxiomSuffix = "_fresh";

// Requires a freshness-flavoured theory. Output is deterministic.
Theory compile_theory(const Theory& theory);

}  // namespace nomeq
