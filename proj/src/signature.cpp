#include "nomeq/signature.hpp"

#include <algorithm>

namespace nomeq {

Signature Signature::make(std::vector<Sort> sorts,
                          std::vector<OpFamily> families) {
  Signature sig;
  sig.sorts_ = std::move(sorts);
  for (std::size_t i = 0; i < sig.sorts_.size(); ++i)
    for (std::size_t j = i + 1; j < sig.sorts_.size(); ++j)
      if (sig.sorts_[i] == sig.sorts_[j])
        throw NelError("duplicate sort '" + sig.sorts_[i].name + "'");
  sig.families_ = std::move(families);
  for (std::size_t i = 0; i < sig.families_.size(); ++i) {
    const OpFamily& f = sig.families_[i];
    if (sig.by_name_.count(f.name))
      throw NelError("duplicate operation family '" + f.name + "'");
    if (!sig.has_sort(f.result_sort))
      throw NelError("undeclared sort '" + f.result_sort.name + "' in family '" +
                     f.name + "'");
    for (const Sort& s : f.arg_sorts)
      if (!sig.has_sort(s))
        throw NelError("undeclared sort '" + s.name + "' in family '" + f.name +
                       "'");
    sig.by_name_.emplace(f.name, static_cast<FamilyId>(i));
  }
  return sig;
}

bool Signature::has_sort(const Sort& s) const {
  return std::find(sorts_.begin(), sorts_.end(), s) != sorts_.end();
}

FamilyId Signature::family_id(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end())
    throw NelError("unknown operation family '" + name + "'");
  return it->second;
}

bool Signature::has_family(const std::string& name) const {
  return by_name_.count(name) != 0;
}

OpSymbol make_op(const Signature& sig, const std::string& family,
                 AtomTuple params) {
  FamilyId id = sig.family_id(family);
  if (params.size() != sig.family(id).atom_arity)
    throw NelError("family '" + family + "' expects " +
                   std::to_string(sig.family(id).atom_arity) +
                   " atom parameters, got " + std::to_string(params.size()));
  return OpSymbol{id, std::move(params)};
}

OpSymbol op_act(const Perm& p, const OpSymbol& op) {
  return OpSymbol{op.family, act(p, op.params)};
}

AtomSet op_support(const OpSymbol& op) { return op.params.underlying_set(); }

std::pair<std::vector<Sort>, Sort> op_type(const Signature& sig,
                                           const OpSymbol& op) {
  const OpFamily& f = sig.family(op.family);
  return {f.arg_sorts, f.result_sort};
}

}  // namespace nomeq
