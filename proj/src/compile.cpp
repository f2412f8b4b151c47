#include "nomeq/compile.hpp"

namespace nomeq {

AtomTuple canonical_fresh_tuple(const FreshnessEnv& fe, const AtomSet& atoms,
                                const Term& t) {
  AtomSet avoid =
      fe_support(fe).union_with(atoms).union_with(term_support(t));
  return fresh_tuple(atoms.size(), avoid);
}

Theory compile_theory(const Theory& theory) {
  if (theory.flavour() != Flavour::Nel)
    throw NelError("compile_theory expects a freshness-flavoured theory");
  const Signature& sig = theory.sig();
  std::vector<std::pair<std::string, Judgement>> axioms;
  for (const auto& [name, j] : theory.axioms()) {
    axioms.emplace_back(
        name, Judgement::make(sig, j.fe(), {}, j.lhs(), j.rhs(), j.sort(),
                              Flavour::Neol));
    if (j.fresh().empty()) continue;  // the swap part would be trivial
    std::string fresh_name = name + kFreshAxiomSuffix;
    if (theory.find_axiom(fresh_name))
      throw NelError("axiom name '" + fresh_name + "' is already taken");
    AtomTuple src = ordered_tuple(j.fresh());
    AtomTuple dst = canonical_fresh_tuple(j.fe(), j.fresh(), j.lhs());
    Perm swap = gen_transposition(src, dst);
    axioms.emplace_back(
        fresh_name,
        Judgement::make(sig, fe_extend(j.fe(), dst.underlying_set()), {},
                        j.lhs(), object_act(swap, j.lhs()), j.sort(),
                        Flavour::Neol));
  }
  return Theory::make(theory.name(), theory.sig_ptr(), std::move(axioms),
                      Flavour::Neol);
}

}  // namespace nomeq
