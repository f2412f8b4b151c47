#pragma once

// Terms are suspensions (a permutation waiting on a variable) or constructed
// terms. Two permutation actions live on them: the object-level action pushes
// a permutation into suspensions by left composition, the meta-level action
// conjugates suspensions; terms form a nominal set under the latter.

#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "nomeq/signature.hpp"

namespace nomeq {

struct Var {
  std::string name;
  friend auto operator<=>(const Var&, const Var&) = default;
};

class Term;

struct Suspension {
  Perm perm;
  Var var;
};

struct Constructed {
  OpSymbol op;
  std::vector<Term> args;
};

class Term {
 public:
  Term() : Term(Var{"_"}) {}
  explicit Term(Var v) : Term(Perm{}, std::move(v)) {}
  Term(Perm p, Var v);
  Term(OpSymbol op, std::vector<Term> args);

  bool is_suspension() const;
  const Suspension& suspension() const;
  const Constructed& constructed() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  std::shared_ptr<const std::variant<Suspension, Constructed>> node_;
};

using SortingEnv = std::map<Var, Sort>;

// The unique sort of t under se, or a NelError naming the failure: unbound
// variable, unknown family, arity mismatch, or argument-sort mismatch.
Sort sort_check(const Signature& sig, const SortingEnv& se, const Term& t);

// A sort-respecting map from the variables of `source` into terms over
// `target`.
class Substitution {
 public:
  // Throws NelError if the map is not total on dom(source) or an image does
  // not sort at its variable's sort under target.
  static Substitution make(const Signature& sig, SortingEnv source,
                           SortingEnv target, std::map<Var, Term> map);

  const SortingEnv& source() const { return source_; }
  const SortingEnv& target() const { return target_; }
  const std::map<Var, Term>& map() const { return map_; }
  const Term& image(const Var& v) const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  SortingEnv source_, target_;
  std::map<Var, Term> map_;
};

Term object_act(const Perm& p, const Term& t);
Term meta_act(const Perm& p, const Term& t);

// Applies the substitution; throws NelError on a variable outside its domain.
Term substitute(const Term& t, const Substitution& s);

// Least support of t under the meta-level action: the union of the
// suspension permutations' supports and the operation symbols' parameters.
AtomSet term_support(const Term& t);

std::vector<Var> term_vars(const Term& t);

}  // namespace nomeq
