#include "nomeq/checker.hpp"

#include <sstream>

namespace nomeq {

namespace {

struct Checker {
  const Theory& theory;
  Flavour flavour;
  std::vector<std::size_t> path;
  std::optional<CheckError> error;

  void fail(const Derivation& d, const std::string& why) {
    std::ostringstream os;
    os << "(" << rule_name(d.rule()) << ") " << why;
    error = CheckError{os.str(), path};
  }

  Judgement mk(FreshnessEnv fe, AtomSet fresh, Term lhs, Term rhs, Sort sort) {
    return Judgement::make(theory.sig(), std::move(fe), std::move(fresh),
                           std::move(lhs), std::move(rhs), std::move(sort),
                           flavour);
  }

  bool premise_count(const Derivation& d, std::size_t want) {
    if (d.premises().size() == want) return true;
    fail(d, "expected " + std::to_string(want) + " premises, got " +
                std::to_string(d.premises().size()));
    return false;
  }

  bool conclude(const Derivation& d, const Judgement& want) {
    if (d.conclusion() == want) return true;
    fail(d, "conclusion is not the judgement this rule instance derives");
    return false;
  }

  static std::string atoms_str(const AtomSet& s) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (Atom a : s) {
      if (!first) os << " ";
      os << "#" << a.index;
      first = false;
    }
    os << "}";
    return os.str();
  }

  void check(const Derivation& d) {
    if (error) return;
    for (std::size_t i = 0; i < d.premises().size(); ++i) {
      path.push_back(i);
      check(d.premises()[i]);
      path.pop_back();
      if (error) return;
    }
    try {
      check_node(d);
    } catch (const NelError& e) {
      fail(d, e.what());
    }
  }

  void check_node(const Derivation& d) {
    const Judgement& c = d.conclusion();
    if (c.flavour() != flavour) {
      fail(d, "judgement flavour does not match the theory");
      return;
    }
    if (const auto* r = std::get_if<RuleAxiom>(&d.rule())) {
      if (!premise_count(d, 0)) return;
      const Judgement* ax = theory.find_axiom(r->name);
      if (!ax) {
        fail(d, "axiom '" + r->name + "' not found");
        return;
      }
      if (!(c == *ax)) fail(d, "conclusion differs from axiom '" + r->name +
                                   "'");
      return;
    }
    if (std::get_if<RuleRefl>(&d.rule())) {
      if (!premise_count(d, 0)) return;
      if (!c.fresh().empty()) {
        fail(d, "refl derives a plain equation");
        return;
      }
      if (!(c.lhs() == c.rhs())) fail(d, "the two sides differ");
      return;
    }
    if (std::get_if<RuleSymm>(&d.rule())) {
      if (!premise_count(d, 1)) return;
      const Judgement& p = d.premises()[0].conclusion();
      conclude(d, mk(p.fe(), p.fresh(), p.rhs(), p.lhs(), p.sort()));
      return;
    }
    if (std::get_if<RuleTrans>(&d.rule())) {
      if (!premise_count(d, 2)) return;
      const Judgement& p1 = d.premises()[0].conclusion();
      const Judgement& p2 = d.premises()[1].conclusion();
      if (p1.fe() != p2.fe()) {
        fail(d, "premise environments differ");
        return;
      }
      if (p1.sort() != p2.sort()) {
        fail(d, "premise sorts differ");
        return;
      }
      if (!(p1.rhs() == p2.lhs())) {
        fail(d, "middle terms do not match");
        return;
      }
      conclude(d, mk(p1.fe(), p1.fresh().union_with(p2.fresh()), p1.lhs(),
                     p2.rhs(), p1.sort()));
      return;
    }
    if (const auto* r = std::get_if<RuleWeak>(&d.rule())) {
      if (!premise_count(d, 1)) return;
      const Judgement& p = d.premises()[0].conclusion();
      if (!fe_leq(p.fe(), r->target)) {
        fail(d, "premise environment is not below the recorded target");
        return;
      }
      conclude(d, mk(r->target, p.fresh(), p.lhs(), p.rhs(), p.sort()));
      return;
    }
    if (const auto* r = std::get_if<RuleAtmIntro>(&d.rule())) {
      if (flavour == Flavour::Neol) {
        fail(d, "rule is not part of the equation-only system");
        return;
      }
      if (!premise_count(d, 1)) return;
      const Judgement& p = d.premises()[0].conclusion();
      AtomSet blocked = p.fresh()
                            .union_with(term_support(p.lhs()))
                            .union_with(term_support(p.rhs()));
      AtomSet clash = r->atoms.intersect(blocked);
      if (!clash.empty()) {
        fail(d, "introduced atoms " + atoms_str(clash) +
                    " are not fresh for the premise");
        return;
      }
      conclude(d, mk(fe_extend(p.fe(), r->atoms),
                     p.fresh().union_with(r->atoms), p.lhs(), p.rhs(),
                     p.sort()));
      return;
    }
    if (const auto* r = std::get_if<RuleAtmElim>(&d.rule())) {
      if (!premise_count(d, 1)) return;
      const Judgement& p = d.premises()[0].conclusion();
      if (!(fe_extend(c.fe(), r->atoms) == p.fe())) {
        fail(d,
             "premise environment is not the conclusion environment extended "
             "by the eliminated atoms");
        return;
      }
      AtomSet blocked = fe_support(c.fe())
                            .union_with(p.fresh())
                            .union_with(term_support(p.lhs()))
                            .union_with(term_support(p.rhs()));
      AtomSet clash = r->atoms.intersect(blocked);
      if (!clash.empty()) {
        fail(d, "eliminated atoms " + atoms_str(clash) + " are not fresh");
        return;
      }
      conclude(d, mk(c.fe(), p.fresh(), p.lhs(), p.rhs(), p.sort()));
      return;
    }
    if (const auto* r = std::get_if<RuleFreshEquivar>(&d.rule())) {
      if (flavour == Flavour::Neol) {
        fail(d, "rule is not part of the equation-only system");
        return;
      }
      if (!premise_count(d, 0)) return;
      if (c.fe().bindings().size() != 1) {
        fail(d, "environment must bind exactly the suspended variable");
        return;
      }
      const auto& [x, b] = *c.fe().bindings().begin();
      conclude(d, mk(c.fe(), act(r->perm, b.atoms), Term(r->perm, x),
                     Term(r->perm, x), b.sort));
      return;
    }
    if (const auto* r = std::get_if<RuleSusp>(&d.rule())) {
      if (!premise_count(d, 0)) return;
      AtomSet ds = disagreement_set(r->p1, r->p2);
      FreshnessEnv fe({{r->var, FreshnessBinding{ds, r->sort}}});
      conclude(d, mk(std::move(fe), {}, Term(r->p1, r->var),
                     Term(r->p2, r->var), r->sort));
      return;
    }
    const auto& r = std::get<RuleSubst>(d.rule());
    if (d.premises().empty()) {
      fail(d, "missing main premise");
      return;
    }
    const Judgement& main = d.premises().back().conclusion();
    const FreshnessEnv& dom_fe = main.fe();
    std::size_t n = dom_fe.bindings().size();
    bool equation_only = flavour == Flavour::Neol;
    if (!premise_count(d, equation_only ? 2 * n + 1 : n + 1)) return;
    if (!(underlying_sorting_env(dom_fe) == r.sigma.source())) {
      fail(d, "substitution source does not match the main premise");
      return;
    }
    if (!(r.sigma.source() == r.sigma_prime.source() &&
          r.sigma.target() == r.sigma_prime.target())) {
      fail(d, "the two substitutions have different environments");
      return;
    }
    if (!(underlying_sorting_env(c.fe()) == r.sigma.target())) {
      fail(d, "substitution target does not match the conclusion environment");
      return;
    }
    std::size_t i = 0;
    for (const auto& [v, b] : dom_fe.bindings()) {
      Judgement want =
          equation_only
              ? mk(c.fe(), {}, r.sigma.image(v), r.sigma_prime.image(v),
                   b.sort)
              : mk(c.fe(), b.atoms, r.sigma.image(v), r.sigma_prime.image(v),
                   b.sort);
      if (!(d.premises()[i].conclusion() == want)) {
        fail(d, "hypothesis for '" + v.name + "' has the wrong judgement");
        return;
      }
      ++i;
    }
    if (equation_only) {
      if (r.fresh_tuples.size() != n) {
        fail(d, "one recorded fresh tuple per substituted variable");
        return;
      }
      std::size_t k = 0;
      for (const auto& [v, b] : dom_fe.bindings()) {
        auto it = r.fresh_tuples.find(v);
        if (it == r.fresh_tuples.end()) {
          fail(d, "missing fresh tuple for '" + v.name + "'");
          return;
        }
        const AtomTuple& g = it->second;
        if (g.size() != b.atoms.size()) {
          fail(d, "fresh tuple size mismatch for '" + v.name + "'");
          return;
        }
        AtomSet blocked = fe_support(c.fe())
                              .union_with(b.atoms)
                              .union_with(term_support(r.sigma.image(v)));
        AtomSet clash = g.underlying_set().intersect(blocked);
        if (!clash.empty()) {
          fail(d, "recorded tuple for '" + v.name + "' touches " +
                      atoms_str(clash) + ", so it is not fresh enough");
          return;
        }
        Perm swap = gen_transposition(ordered_tuple(b.atoms), g);
        Judgement want = mk(fe_extend(c.fe(), g.underlying_set()), {},
                            r.sigma.image(v),
                            object_act(swap, r.sigma.image(v)), b.sort);
        if (!(d.premises()[n + k].conclusion() == want)) {
          fail(d, "freshness hypothesis for '" + v.name +
                      "' has the wrong judgement");
          return;
        }
        ++k;
      }
    } else if (!r.fresh_tuples.empty()) {
      fail(d, "fresh tuples are only recorded in equation-only derivations");
      return;
    }
    conclude(d, mk(c.fe(), main.fresh(), substitute(main.lhs(), r.sigma),
                   substitute(main.rhs(), r.sigma_prime), main.sort()));
  }
};

std::optional<CheckError> run(const Theory& theory, const Derivation& d,
                              Flavour flavour) {
  if (theory.flavour() != flavour)
    return CheckError{"theory flavour does not match the requested checker",
                      {}};
  if (!d.valid()) return CheckError{"empty derivation", {}};
  Checker ck{theory, flavour, {}, std::nullopt};
  ck.check(d);
  return ck.error;
}

}  // namespace

std::string format_path(const CheckError& e) {
  std::string out = "root";
  for (std::size_t i : e.path) out += "." + std::to_string(i + 1);
  return out;
}

std::optional<CheckError> check_nel(const Theory& theory, const Derivation& d) {
  return run(theory, d, Flavour::Nel);
}

std::optional<CheckError> check_neol(const Theory& theory,
                                     const Derivation& d) {
  return run(theory, d, Flavour::Neol);
}

std::optional<CheckError> check_derivation(const Theory& theory,
                                           const Derivation& d) {
  return theory.flavour() == Flavour::Nel ? check_nel(theory, d)
                                          : check_neol(theory, d);
}

}  // namespace nomeq
