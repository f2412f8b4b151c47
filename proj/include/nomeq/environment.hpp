#pragma once

// Freshness environments assign each hypothesis variable a sort and a set of
// atoms assumed fresh for it. Judgements pair an environment with a possibly
// freshness-annotated equation; theories are named collections of judgements.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nomeq/term.hpp"

namespace nomeq {

struct FreshnessBinding {
  AtomSet atoms;
  Sort sort;
  friend bool operator==(const FreshnessBinding&,
                         const FreshnessBinding&) = default;
};

// A binding with an empty atom set is a real binding, distinct from an
// absent one.
class FreshnessEnv {
 public:
  FreshnessEnv() = default;
  explicit FreshnessEnv(std::map<Var, FreshnessBinding> map)
      : map_(std::move(map)) {}

  const std::map<Var, FreshnessBinding>& bindings() const { return map_; }
  bool binds(const Var& v) const { return map_.count(v) != 0; }
  const FreshnessBinding& binding(const Var& v) const;
  FreshnessEnv with(Var v, FreshnessBinding b) const;
  bool empty() const { return map_.empty(); }

  friend bool operator==(const FreshnessEnv&, const FreshnessEnv&) = default;

 private:
  std::map<Var, FreshnessBinding> map_;
};

SortingEnv underlying_sorting_env(const FreshnessEnv& fe);

// Environment order: domains grow, sorts agree, atom sets grow pointwise.
bool fe_leq(const FreshnessEnv& fe1, const FreshnessEnv& fe2);

// Unions `extra` into every binding's atom set.
FreshnessEnv fe_extend(const FreshnessEnv& fe, const AtomSet& extra);

FreshnessEnv fe_act(const Perm& p, const FreshnessEnv& fe);
AtomSet fe_support(const FreshnessEnv& fe);

enum class Flavour { Nel, Neol };

// fe |- fresh # lhs ~ rhs : sort. Construction checks that both sides sort at
// `sort` under fe, and that equation-only judgements carry no freshness set,
// so malformed judgements cannot be represented.
class Judgement {
 public:
  static Judgement make(const Signature& sig, FreshnessEnv fe, AtomSet fresh,
                        Term lhs, Term rhs, Sort sort,
                        Flavour flavour = Flavour::Nel);

  const FreshnessEnv& fe() const { return fe_; }
  const AtomSet& fresh() const { return fresh_; }
  const Term& lhs() const { return lhs_; }
  const Term& rhs() const { return rhs_; }
  const Sort& sort() const { return sort_; }
  Flavour flavour() const { return flavour_; }

  friend bool operator==(const Judgement&, const Judgement&) = default;

 private:
  Judgement() = default;
  FreshnessEnv fe_;
  AtomSet fresh_;
  Term lhs_, rhs_;
  Sort sort_;
  Flavour flavour_ = Flavour::Nel;
};

class Theory {
 public:
  // Axiom names must be unique; every axiom must match the theory flavour.
  static Theory make(std::string name, std::shared_ptr<const Signature> sig,
                     std::vector<std::pair<std::string, Judgement>> axioms,
                     Flavour flavour);

  const std::string& name() const { return name_; }
  const Signature& sig() const { return *sig_; }
  std::shared_ptr<const Signature> sig_ptr() const { return sig_; }
  const std::vector<std::pair<std::string, Judgement>>& axioms() const {
    return axioms_;
  }
  const Judgement* find_axiom(const std::string& name) const;
  Flavour flavour() const { return flavour_; }

 private:
  std::string name_;
  std::shared_ptr<const Signature> sig_;
  std::vector<std::pair<std::string, Judgement>> axioms_;
  Flavour flavour_ = Flavour::Nel;
};

}  // namespace nomeq
