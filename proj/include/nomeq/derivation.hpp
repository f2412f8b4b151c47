#pragma once

// Rule-labelled derivation trees. Every node carries its full instantiation
// data and its conclusion, so checking is a structural walk with no search.
// The forward constructors below build single nodes and compute their
// conclusions; they throw NelError on an invalid instance.

#include <map>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "nomeq/environment.hpp"

namespace nomeq {

struct RuleAxiom {
  std::string name;
};
struct RuleRefl {};
struct RuleSymm {};
struct RuleTrans {};
struct RuleWeak {
  FreshnessEnv target;
};
struct RuleSubst {
  Substitution sigma;
  Substitution sigma_prime;
  // Recorded fresh tuple per variable of the substituted environment; used
  // by the equation-only substitution rule, empty for the other flavour.
  std::map<Var, AtomTuple> fresh_tuples;
};
struct RuleAtmIntro {
  AtomSet atoms;
};
struct RuleAtmElim {
  AtomSet atoms;
};
struct RuleFreshEquivar {
  Perm perm;
};
struct RuleSusp {
  Perm p1, p2;
  Var var;
  Sort sort;
};

using Rule = std::variant<RuleAxiom, RuleRefl, RuleSymm, RuleTrans, RuleWeak,
                          RuleSubst, RuleAtmIntro, RuleAtmElim,
                          RuleFreshEquivar, RuleSusp>;

const char* rule_name(const Rule& r);

class Derivation {
 public:
  Derivation() = default;
  static Derivation make(Rule rule, std::vector<Derivation> premises,
                         Judgement conclusion);

  const Rule& rule() const { return node_->rule; }
  const std::vector<Derivation>& premises() const { return node_->premises; }
  const Judgement& conclusion() const { return node_->conclusion; }
  bool valid() const { return node_ != nullptr; }

 private:
  struct Node {
    Rule rule;
    std::vector<Derivation> premises;
    Judgement conclusion;
  };
  std::shared_ptr<const Node> node_;
};

std::size_t derivation_depth(const Derivation& d);
std::size_t derivation_size(const Derivation& d);

// Forward rule constructors. Premise order for substitution nodes: the
// equation hypotheses for each variable in environment order, then (for the
// equation-only rule) the freshness-as-equation hypotheses in the same
// order, then the main premise.
Derivation axiom_leaf(const Theory& th, const std::string& name);
Derivation refl_leaf(const Theory& th, FreshnessEnv fe, Term t, Sort s);
Derivation symm_node(const Theory& th, Derivation premise);
Derivation trans_node(const Theory& th, Derivation first, Derivation second);
Derivation weak_node(const Theory& th, Derivation premise, FreshnessEnv target);
Derivation susp_leaf(const Theory& th, Perm p1, Perm p2, Var x, Sort s);
Derivation fresh_equivar_leaf(const Theory& th, Perm p, AtomSet atoms, Var x,
                              Sort s);
Derivation atm_intro_node(const Theory& th, Derivation premise, AtomSet atoms);
// `base` is the conclusion environment; the premise environment must equal
// base extended with `atoms`.
Derivation atm_elim_node(const Theory& th, Derivation premise, AtomSet atoms,
                         FreshnessEnv base);
Derivation subst_node(const Theory& th, Substitution sigma,
                      Substitution sigma_prime,
                      std::map<Var, AtomTuple> fresh_tuples,
                      std::vector<Derivation> premises);

// Applies a permutation to every judgement and every piece of rule data via
// the meta-level action. Checking is invariant under this transform when the
// theory's axioms are transformed the same way.
Derivation act_derivation(const Theory& th, const Perm& p, const Derivation& d);
Judgement act_judgement(const Signature& sig, const Perm& p,
                        const Judgement& j);
Theory act_theory(const Perm& p, const Theory& th);

}  // namespace nomeq
