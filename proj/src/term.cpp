#include "nomeq/term.hpp"

#include <algorithm>

namespace nomeq {

Term::Term(Perm p, Var v)
    : node_(std::make_shared<const std::variant<Suspension, Constructed>>(
          Suspension{std::move(p), std::move(v)})) {}

Term::Term(OpSymbol op, std::vector<Term> args)
    : node_(std::make_shared<const std::variant<Suspension, Constructed>>(
          Constructed{std::move(op), std::move(args)})) {}

bool Term::is_suspension() const {
  return std::holds_alternative<Suspension>(*node_);
}

const Suspension& Term::suspension() const {
  return std::get<Suspension>(*node_);
}

const Constructed& Term::constructed() const {
  return std::get<Constructed>(*node_);
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_suspension() != b.is_suspension()) return false;
  if (a.is_suspension()) {
    const auto& sa = a.suspension();
    const auto& sb = b.suspension();
    return sa.var == sb.var && sa.perm == sb.perm;
  }
  const auto& ca = a.constructed();
  const auto& cb = b.constructed();
  return ca.op == cb.op && ca.args == cb.args;
}

Sort sort_check(const Signature& sig, const SortingEnv& se, const Term& t) {
  if (t.is_suspension()) {
    const auto& s = t.suspension();
    auto it = se.find(s.var);
    if (it == se.end()) throw NelError("unbound variable '" + s.var.name + "'");
    return it->second;
  }
  const auto& c = t.constructed();
  const auto& [arg_sorts, result] = op_type(sig, c.op);
  const std::string& fname = sig.family(c.op.family).name;
  if (arg_sorts.size() != c.args.size())
    throw NelError("arity mismatch: '" + fname + "' expects " +
                   std::to_string(arg_sorts.size()) + " arguments, got " +
                   std::to_string(c.args.size()));
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    Sort got = sort_check(sig, se, c.args[i]);
    if (got != arg_sorts[i])
      throw NelError("argument " + std::to_string(i + 1) + " of '" + fname +
                     "' has sort '" + got.name + "', expected '" +
                     arg_sorts[i].name + "'");
  }
  return result;
}

Substitution Substitution::make(const Signature& sig, SortingEnv source,
                                SortingEnv target, std::map<Var, Term> map) {
  for (const auto& [v, sort] : source) {
    auto it = map.find(v);
    if (it == map.end())
      throw NelError("substitution misses variable '" + v.name + "'");
    Sort got = sort_check(sig, target, it->second);
    if (got != sort)
      throw NelError("substitution image for '" + v.name + "' has sort '" +
                     got.name + "', expected '" + sort.name + "'");
  }
  for (const auto& [v, t] : map) {
    (void)t;
    if (!source.count(v))
      throw NelError("substitution maps '" + v.name +
                     "' outside its source environment");
  }
  Substitution s;
  s.source_ = std::move(source);
  s.target_ = std::move(target);
  s.map_ = std::move(map);
  return s;
}

const Term& Substitution::image(const Var& v) const {
  auto it = map_.find(v);
  if (it == map_.end())
    throw NelError("variable '" + v.name + "' outside substitution domain");
  return it->second;
}

Term object_act(const Perm& p, const Term& t) {
  if (t.is_suspension()) {
    const auto& s = t.suspension();
    return Term(compose(p, s.perm), s.var);
  }
  const auto& c = t.constructed();
  std::vector<Term> args;
  args.reserve(c.args.size());
  for (const Term& a : c.args) args.push_back(object_act(p, a));
  return Term(op_act(p, c.op), std::move(args));
}

Term meta_act(const Perm& p, const Term& t) {
  if (t.is_suspension()) {
    const auto& s = t.suspension();
    return Term(compose(compose(p, s.perm), p.inverse()), s.var);
  }
  const auto& c = t.constructed();
  std::vector<Term> args;
  args.reserve(c.args.size());
  for (const Term& a : c.args) args.push_back(meta_act(p, a));
  return Term(op_act(p, c.op), std::move(args));
}

Term substitute(const Term& t, const Substitution& s) {
  if (t.is_suspension()) {
    const auto& susp = t.suspension();
    return object_act(susp.perm, s.image(susp.var));
  }
  const auto& c = t.constructed();
  std::vector<Term> args;
  args.reserve(c.args.size());
  for (const Term& a : c.args) args.push_back(substitute(a, s));
  return Term(c.op, std::move(args));
}

AtomSet term_support(const Term& t) {
  if (t.is_suspension()) return t.suspension().perm.support();
  const auto& c = t.constructed();
  AtomSet out = op_support(c.op);
  for (const Term& a : c.args) out = out.union_with(term_support(a));
  return out;
}

static void collect_vars(const Term& t, std::vector<Var>& out) {
  if (t.is_suspension()) {
    out.push_back(t.suspension().var);
    return;
  }
  for (const Term& a : t.constructed().args) collect_vars(a, out);
}

std::vector<Var> term_vars(const Term& t) {
  std::vector<Var> out;
  collect_vars(t, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace nomeq
