#pragma once

// Finite permutations of atoms, kept in a canonical fixpoint-free form: the
// map stores exactly the atoms a permutation moves, so structural equality is
// extensional equality and the support is the key set.

#include <utility>
#include <vector>

#include "nomeq/atom.hpp"

namespace nomeq {

class Perm {
 public:
  Perm() = default;  // identity

  // Builds a permutation from (source, image) pairs; fixpoints are dropped.
  // Throws NelError if the pairs do not describe a bijection.
  static Perm from_pairs(std::vector<std::pair<Atom, Atom>> pairs);
  static Perm transposition(Atom a, Atom b);

  Atom apply(Atom a) const;
  bool is_identity() const { return map_.empty(); }
  Perm inverse() const;
  AtomSet support() const;

  // Entries sorted by source atom.
  const std::vector<std::pair<Atom, Atom>>& entries() const { return map_; }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend Perm compose(const Perm& p2, const Perm& p1);

 private:
  std::vector<std::pair<Atom, Atom>> map_;  // sorted by first, no fixpoints
};

// compose(p2, p1) maps each atom a to p2(p1(a)).
Perm compose(const Perm& p2, const Perm& p1);

// Atoms where the two permutations disagree.
AtomSet disagreement_set(const Perm& p1, const Perm& p2);

// The product of the componentwise transpositions (src_1 dst_1)...(src_n
// dst_n), folded left to right. Requires equal lengths and disjoint
// underlying sets.
Perm gen_transposition(const AtomTuple& src, const AtomTuple& dst);

Atom act(const Perm& p, Atom a);
AtomSet act(const Perm& p, const AtomSet& s);
AtomTuple act(const Perm& p, const AtomTuple& t);

// Decomposition into disjoint cycles, each rotated to start at its least
// atom, cycles ordered by their first atom. Identity decomposes to {}.
std::vector<std::vector<Atom>> cycle_decomposition(const Perm& p);

}  // namespace nomeq
