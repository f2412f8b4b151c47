#include "nomeq/environment.hpp"

namespace nomeq {

const FreshnessBinding& FreshnessEnv::binding(const Var& v) const {
  auto it = map_.find(v);
  if (it == map_.end())
    throw NelError("variable '" + v.name + "' not bound in environment");
  return it->second;
}

FreshnessEnv FreshnessEnv::with(Var v, FreshnessBinding b) const {
  auto map = map_;
  map.insert_or_assign(std::move(v), std::move(b));
  return FreshnessEnv(std::move(map));
}

SortingEnv underlying_sorting_env(const FreshnessEnv& fe) {
  SortingEnv se;
  for (const auto& [v, b] : fe.bindings()) se.emplace(v, b.sort);
  return se;
}

bool fe_leq(const FreshnessEnv& fe1, const FreshnessEnv& fe2) {
  for (const auto& [v, b1] : fe1.bindings()) {
    if (!fe2.binds(v)) return false;
    const FreshnessBinding& b2 = fe2.binding(v);
    if (b1.sort != b2.sort) return false;
    if (!b1.atoms.subset_of(b2.atoms)) return false;
  }
  return true;
}

FreshnessEnv fe_extend(const FreshnessEnv& fe, const AtomSet& extra) {
  std::map<Var, FreshnessBinding> map;
  for (const auto& [v, b] : fe.bindings())
    map.emplace(v, FreshnessBinding{b.atoms.union_with(extra), b.sort});
  return FreshnessEnv(std::move(map));
}

FreshnessEnv fe_act(const Perm& p, const FreshnessEnv& fe) {
  std::map<Var, FreshnessBinding> map;
  for (const auto& [v, b] : fe.bindings())
    map.emplace(v, FreshnessBinding{act(p, b.atoms), b.sort});
  return FreshnessEnv(std::move(map));
}

AtomSet fe_support(const FreshnessEnv& fe) {
  AtomSet out;
  for (const auto& [v, b] : fe.bindings()) out = out.union_with(b.atoms);
  return out;
}

Judgement Judgement::make(const Signature& sig, FreshnessEnv fe, AtomSet fresh,
                          Term lhs, Term rhs, Sort sort, Flavour flavour) {
  if (flavour == Flavour::Neol && !fresh.empty())
    throw NelError("equation-only judgements carry no freshness set");
  SortingEnv se = underlying_sorting_env(fe);
  Sort sl = sort_check(sig, se, lhs);
  if (sl != sort)
    throw NelError("left side has sort '" + sl.name + "', judgement claims '" +
                   sort.name + "'");
  Sort sr = sort_check(sig, se, rhs);
  if (sr != sort)
    throw NelError("right side has sort '" + sr.name + "', judgement claims '" +
                   sort.name + "'");
  Judgement j;
  j.fe_ = std::move(fe);
  j.fresh_ = std::move(fresh);
  j.lhs_ = std::move(lhs);
  j.rhs_ = std::move(rhs);
  j.sort_ = std::move(sort);
  j.flavour_ = flavour;
  return j;
}

Theory Theory::make(std::string name, std::shared_ptr<const Signature> sig,
                    std::vector<std::pair<std::string, Judgement>> axioms,
                    Flavour flavour) {
  Theory t;
  t.name_ = std::move(name);
  t.sig_ = std::move(sig);
  t.flavour_ = flavour;
  for (auto& [axname, j] : axioms) {
    if (t.find_axiom(axname))
      throw NelError("duplicate axiom name '" + axname + "'");
    if (j.flavour() != flavour)
      throw NelError("axiom '" + axname + "' does not match theory flavour");
    t.axioms_.emplace_back(std::move(axname), std::move(j));
  }
  return t;
}

const Judgement* Theory::find_axiom(const std::string& name) const {
  for (const auto& [n, j] : axioms_)
    if (n == name) return &j;
  return nullptr;
}

}  // namespace nomeq
