#include "nomeq/derivation.hpp"

#include <algorithm>
#include <functional>

namespace nomeq {

const char* rule_name(const Rule& r) {
  struct Namer {
    const char* operator()(const RuleAxiom&) const { return "axiom"; }
    const char* operator()(const RuleRefl&) const { return "refl"; }
    const char* operator()(const RuleSymm&) const { return "symm"; }
    const char* operator()(const RuleTrans&) const { return "trans"; }
    const char* operator()(const RuleWeak&) const { return "weak"; }
    const char* operator()(const RuleSubst&) const { return "subst"; }
    const char* operator()(const RuleAtmIntro&) const { return "atm-intro"; }
    const char* operator()(const RuleAtmElim&) const { return "atm-elim"; }
    const char* operator()(const RuleFreshEquivar&) const {
      return "#-equivar";
    }
    const char* operator()(const RuleSusp&) const { return "susp"; }
  };
  return std::visit(Namer{}, r);
}

Derivation Derivation::make(Rule rule, std::vector<Derivation> premises,
                            Judgement conclusion) {
  Derivation d;
  d.node_ = std::make_shared<const Node>(
      Node{std::move(rule), std::move(premises), std::move(conclusion)});
  return d;
}

std::size_t derivation_depth(const Derivation& d) {
  std::size_t best = 0;
  for (const Derivation& p : d.premises())
    best = std::max(best, derivation_depth(p));
  return best + 1;
}

std::size_t derivation_size(const Derivation& d) {
  std::size_t n = 1;
  for (const Derivation& p : d.premises()) n += derivation_size(p);
  return n;
}

namespace {

Judgement mk(const Theory& th, FreshnessEnv fe, AtomSet fresh, Term lhs,
             Term rhs, Sort sort) {
  return Judgement::make(th.sig(), std::move(fe), std::move(fresh),
                         std::move(lhs), std::move(rhs), std::move(sort),
                         th.flavour());
}

AtomSet judgement_meta_support(const Judgement& j) {
  return fe_support(j.fe())
      .union_with(j.fresh())
      .union_with(term_support(j.lhs()))
      .union_with(term_support(j.rhs()));
}

}  // namespace

Derivation axiom_leaf(const Theory& th, const std::string& name) {
  const Judgement* ax = th.find_axiom(name);
  if (!ax) throw NelError("axiom '" + name + "' not found in theory '" +
                          th.name() + "'");
  return Derivation::make(RuleAxiom{name}, {}, *ax);
}

Derivation refl_leaf(const Theory& th, FreshnessEnv fe, Term t, Sort s) {
  Judgement c = mk(th, std::move(fe), {}, t, t, std::move(s));
  return Derivation::make(RuleRefl{}, {}, std::move(c));
}

Derivation symm_node(const Theory& th, Derivation premise) {
  const Judgement& p = premise.conclusion();
  Judgement c = mk(th, p.fe(), p.fresh(), p.rhs(), p.lhs(), p.sort());
  return Derivation::make(RuleSymm{}, {std::move(premise)}, std::move(c));
}

Derivation trans_node(const Theory& th, Derivation first, Derivation second) {
  const Judgement& p1 = first.conclusion();
  const Judgement& p2 = second.conclusion();
  if (p1.fe() != p2.fe())
    throw NelError("trans: premise environments differ");
  if (p1.sort() != p2.sort()) throw NelError("trans: premise sorts differ");
  if (!(p1.rhs() == p2.lhs()))
    throw NelError("trans: middle terms do not match");
  Judgement c = mk(th, p1.fe(), p1.fresh().union_with(p2.fresh()), p1.lhs(),
                   p2.rhs(), p1.sort());
  return Derivation::make(RuleTrans{}, {std::move(first), std::move(second)},
                          std::move(c));
}

Derivation weak_node(const Theory& th, Derivation premise,
                     FreshnessEnv target) {
  const Judgement& p = premise.conclusion();
  if (!fe_leq(p.fe(), target))
    throw NelError("weak: premise environment is not below the target");
  Judgement c = mk(th, target, p.fresh(), p.lhs(), p.rhs(), p.sort());
  return Derivation::make(RuleWeak{std::move(target)}, {std::move(premise)},
                          std::move(c));
}

Derivation susp_leaf(const Theory& th, Perm p1, Perm p2, Var x, Sort s) {
  AtomSet ds = disagreement_set(p1, p2);
  FreshnessEnv fe({{x, FreshnessBinding{ds, s}}});
  Judgement c = mk(th, std::move(fe), {}, Term(p1, x), Term(p2, x), s);
  return Derivation::make(
      RuleSusp{std::move(p1), std::move(p2), std::move(x), std::move(s)}, {},
      std::move(c));
}

Derivation fresh_equivar_leaf(const Theory& th, Perm p, AtomSet atoms, Var x,
                              Sort s) {
  FreshnessEnv fe({{x, FreshnessBinding{atoms, s}}});
  Term t(p, x);
  Judgement c = mk(th, std::move(fe), act(p, atoms), t, t, std::move(s));
  return Derivation::make(RuleFreshEquivar{std::move(p)}, {}, std::move(c));
}

Derivation atm_intro_node(const Theory& th, Derivation premise,
                          AtomSet atoms) {
  const Judgement& p = premise.conclusion();
  AtomSet blocked = p.fresh()
                        .union_with(term_support(p.lhs()))
                        .union_with(term_support(p.rhs()));
  if (!atoms.disjoint_with(blocked))
    throw NelError("atm-intro: introduced atoms are not fresh for the premise");
  Judgement c = mk(th, fe_extend(p.fe(), atoms), p.fresh().union_with(atoms),
                   p.lhs(), p.rhs(), p.sort());
  return Derivation::make(RuleAtmIntro{std::move(atoms)},
                          {std::move(premise)}, std::move(c));
}

Derivation atm_elim_node(const Theory& th, Derivation premise, AtomSet atoms,
                         FreshnessEnv base) {
  const Judgement& p = premise.conclusion();
  if (!(fe_extend(base, atoms) == p.fe()))
    throw NelError(
        "atm-elim: premise environment is not the stated extension");
  AtomSet blocked = fe_support(base)
                        .union_with(p.fresh())
                        .union_with(term_support(p.lhs()))
                        .union_with(term_support(p.rhs()));
  if (!atoms.disjoint_with(blocked))
    throw NelError("atm-elim: eliminated atoms are not fresh");
  Judgement c = mk(th, std::move(base), p.fresh(), p.lhs(), p.rhs(), p.sort());
  return Derivation::make(RuleAtmElim{std::move(atoms)}, {std::move(premise)},
                          std::move(c));
}

Derivation subst_node(const Theory& th, Substitution sigma,
                      Substitution sigma_prime,
                      std::map<Var, AtomTuple> fresh_tuples,
                      std::vector<Derivation> premises) {
  if (premises.empty()) throw NelError("subst: missing main premise");
  const Judgement& main = premises.back().conclusion();
  const FreshnessEnv& dom_fe = main.fe();
  std::size_t n = dom_fe.bindings().size();
  bool equation_only = th.flavour() == Flavour::Neol;
  std::size_t expected = equation_only ? 2 * n + 1 : n + 1;
  if (premises.size() != expected)
    throw NelError("subst: expected " + std::to_string(expected) +
                   " premises, got " + std::to_string(premises.size()));
  if (!(underlying_sorting_env(dom_fe) == sigma.source()))
    throw NelError("subst: substitution source does not match main premise");
  if (!(sigma.source() == sigma_prime.source() &&
        sigma.target() == sigma_prime.target()))
    throw NelError("subst: the two substitutions have different environments");
  // The conclusion environment comes from the hypothesis premises; with no
  // variables to substitute there are none, and the target sorting
  // environment must pin it down via an explicit hypothesis-free judgement.
  FreshnessEnv target_fe;
  if (n > 0) {
    target_fe = premises.front().conclusion().fe();
  } else {
    // No hypotheses: conclusion environment is any environment whose sorting
    // part matches the substitution target. Use an all-empty freshness
    // environment over that sorting environment.
    std::map<Var, FreshnessBinding> map;
    for (const auto& [v, sort] : sigma.target())
      map.emplace(v, FreshnessBinding{{}, sort});
    target_fe = FreshnessEnv(std::move(map));
  }
  if (!(underlying_sorting_env(target_fe) == sigma.target()))
    throw NelError("subst: substitution target does not match premises");
  std::size_t i = 0;
  for (const auto& [v, b] : dom_fe.bindings()) {
    const Judgement& h = premises[i].conclusion();
    Judgement want =
        equation_only
            ? mk(th, target_fe, {}, sigma.image(v), sigma_prime.image(v),
                 b.sort)
            : mk(th, target_fe, b.atoms, sigma.image(v), sigma_prime.image(v),
                 b.sort);
    if (!(h == want))
      throw NelError("subst: hypothesis for '" + v.name +
                     "' has the wrong judgement");
    ++i;
  }
  if (equation_only) {
    if (fresh_tuples.size() != n)
      throw NelError("subst: one fresh tuple per substituted variable");
    std::size_t k = 0;
    for (const auto& [v, b] : dom_fe.bindings()) {
      auto it = fresh_tuples.find(v);
      if (it == fresh_tuples.end())
        throw NelError("subst: missing fresh tuple for '" + v.name + "'");
      const AtomTuple& g = it->second;
      if (g.size() != b.atoms.size())
        throw NelError("subst: fresh tuple size mismatch for '" + v.name +
                       "'");
      AtomSet blocked = fe_support(target_fe)
                            .union_with(b.atoms)
                            .union_with(term_support(sigma.image(v)));
      if (!g.underlying_set().disjoint_with(blocked))
        throw NelError("subst: recorded tuple for '" + v.name +
                       "' is not fresh enough");
      Perm swap = gen_transposition(ordered_tuple(b.atoms), g);
      Judgement want =
          mk(th, fe_extend(target_fe, g.underlying_set()), {}, sigma.image(v),
             object_act(swap, sigma.image(v)), b.sort);
      if (!(premises[n + k].conclusion() == want))
        throw NelError("subst: freshness hypothesis for '" + v.name +
                       "' has the wrong judgement");
      ++k;
    }
  } else if (!fresh_tuples.empty()) {
    throw NelError("subst: fresh tuples are only recorded in equation-only "
                   "derivations");
  }
  Judgement c = mk(th, target_fe, main.fresh(), substitute(main.lhs(), sigma),
                   substitute(main.rhs(), sigma_prime), main.sort());
  return Derivation::make(
      RuleSubst{std::move(sigma), std::move(sigma_prime),
                std::move(fresh_tuples)},
      std::move(premises), std::move(c));
}

Judgement act_judgement(const Signature& sig, const Perm& p,
                        const Judgement& j) {
  return Judgement::make(sig, fe_act(p, j.fe()), act(p, j.fresh()),
                         meta_act(p, j.lhs()), meta_act(p, j.rhs()), j.sort(),
                         j.flavour());
}

Theory act_theory(const Perm& p, const Theory& th) {
  std::vector<std::pair<std::string, Judgement>> axioms;
  for (const auto& [name, j] : th.axioms())
    axioms.emplace_back(name, act_judgement(th.sig(), p, j));
  return Theory::make(th.name(), th.sig_ptr(), std::move(axioms),
                      th.flavour());
}

Derivation act_derivation(const Theory& th, const Perm& p,
                          const Derivation& d) {
  std::vector<Derivation> premises;
  premises.reserve(d.premises().size());
  for (const Derivation& q : d.premises())
    premises.push_back(act_derivation(th, p, q));
  Perm pinv = p.inverse();
  auto conj = [&](const Perm& q) { return compose(compose(p, q), pinv); };
  struct Acted {
    const Theory& th;
    const Perm& p;
    const std::function<Perm(const Perm&)>& conj;
    Rule operator()(const RuleAxiom& r) const { return r; }
    Rule operator()(const RuleRefl& r) const { return r; }
    Rule operator()(const RuleSymm& r) const { return r; }
    Rule operator()(const RuleTrans& r) const { return r; }
    Rule operator()(const RuleWeak& r) const {
      return RuleWeak{fe_act(p, r.target)};
    }
    Rule operator()(const RuleSubst& r) const {
      std::map<Var, Term> m1, m2;
      for (const auto& [v, t] : r.sigma.map()) m1.emplace(v, meta_act(p, t));
      for (const auto& [v, t] : r.sigma_prime.map())
        m2.emplace(v, meta_act(p, t));
      std::map<Var, AtomTuple> tuples;
      for (const auto& [v, t] : r.fresh_tuples) tuples.emplace(v, act(p, t));
      return RuleSubst{
          Substitution::make(th.sig(), r.sigma.source(), r.sigma.target(),
                             std::move(m1)),
          Substitution::make(th.sig(), r.sigma_prime.source(),
                             r.sigma_prime.target(), std::move(m2)),
          std::move(tuples)};
    }
    Rule operator()(const RuleAtmIntro& r) const {
      return RuleAtmIntro{act(p, r.atoms)};
    }
    Rule operator()(const RuleAtmElim& r) const {
      return RuleAtmElim{act(p, r.atoms)};
    }
    Rule operator()(const RuleFreshEquivar& r) const {
      return RuleFreshEquivar{conj(r.perm)};
    }
    Rule operator()(const RuleSusp& r) const {
      return RuleSusp{conj(r.p1), conj(r.p2), r.var, r.sort};
    }
  };
  std::function<Perm(const Perm&)> conj_fn = conj;
  Rule rule = std::visit(Acted{th, p, conj_fn}, d.rule());
  return Derivation::make(std::move(rule), std::move(premises),
                          act_judgement(th.sig(), p, d.conclusion()));
}

}  // namespace nomeq
