#pragma once

// Signatures: sorts plus atom-indexed families of operation symbols. A family
// named f with atom arity k stands for the symbols f[a1,...,ak] over all
// pairwise-distinct atom tuples; its type never depends on the tuple, so
// typing is equivariant by construction.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "nomeq/perm.hpp"

namespace nomeq {

struct Sort {
  std::string name;
  friend auto operator<=>(const Sort&, const Sort&) = default;
};

using FamilyId = std::uint32_t;

struct OpFamily {
  std::string name;
  std::size_t atom_arity = 0;
  std::vector<Sort> arg_sorts;
  Sort result_sort;
};

class Signature {
 public:
  // Throws NelError on duplicate names or references to undeclared sorts.
  static Signature make(std::vector<Sort> sorts, std::vector<OpFamily> families);

  bool has_sort(const Sort& s) const;
  const std::vector<Sort>& sorts() const { return sorts_; }
  const std::vector<OpFamily>& families() const { return families_; }
  const OpFamily& family(FamilyId id) const { return families_.at(id); }
  // Throws NelError for unknown names.
  FamilyId family_id(const std::string& name) const;
  bool has_family(const std::string& name) const;

 private:
  std::vector<Sort> sorts_;
  std::vector<OpFamily> families_;
  std::unordered_map<std::string, FamilyId> by_name_;
};

// One operation symbol: a family member picked out by its atom parameters.
struct OpSymbol {
  FamilyId family = 0;
  AtomTuple params;
  friend bool operator==(const OpSymbol&, const OpSymbol&) = default;
};

// Throws NelError if the tuple length does not match the family's atom arity.
OpSymbol make_op(const Signature& sig, const std::string& family,
                 AtomTuple params);

OpSymbol op_act(const Perm& p, const OpSymbol& op);
AtomSet op_support(const OpSymbol& op);
// (argument sorts, result sort); the same for every member of a family.
std::pair<std::vector<Sort>, Sort> op_type(const Signature& sig,
                                           const OpSymbol& op);

}  // namespace nomeq
