#pragma once

// Atoms are the names that permutations act on. An atom is identified by its
// position in a fixed enumeration a0, a1, a2, ...; the total order on atoms is
// the order of those positions. Display names are kept in a per-session
// AtomNames table so that values themselves stay plain data.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace nomeq {

struct NelError : std::runtime_error {
  explicit NelError(const std::string& what) : std::runtime_error(what) {}
};

struct Atom {
  std::uint32_t index = 0;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

// Finite set of atoms, stored sorted and deduplicated. Value type; every
// operation returns a new set.
class AtomSet {
 public:
  AtomSet() = default;
  AtomSet(std::initializer_list<Atom> atoms);
  static AtomSet from(std::vector<Atom> atoms);

  bool contains(Atom a) const;
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }

  AtomSet with(Atom a) const;
  AtomSet union_with(const AtomSet& other) const;
  AtomSet intersect(const AtomSet& other) const;
  AtomSet minus(const AtomSet& other) const;
  bool disjoint_with(const AtomSet& other) const;
  bool subset_of(const AtomSet& other) const;

  const std::vector<Atom>& items() const { return atoms_; }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  friend bool operator==(const AtomSet&, const AtomSet&) = default;

 private:
  std::vector<Atom> atoms_;  // sorted, unique
};

// Tuple of pairwise distinct atoms.
class AtomTuple {
 public:
  AtomTuple() = default;
  // Throws NelError if the entries are not pairwise distinct.
  explicit AtomTuple(std::vector<Atom> atoms);
  AtomTuple(std::initializer_list<Atom> atoms);

  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  Atom operator[](std::size_t i) const { return atoms_[i]; }
  const std::vector<Atom>& items() const { return atoms_; }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  AtomSet underlying_set() const;

  friend bool operator==(const AtomTuple&, const AtomTuple&) = default;

 private:
  std::vector<Atom> atoms_;
};

// The tuple listing a set's atoms in the global order.
AtomTuple ordered_tuple(const AtomSet& set);

// Identifier <-> atom table for one parsing/printing session. Identifiers are
// assigned the least unused index at first use; atoms beyond the table print
// under generated names.
class AtomNames {
 public:
  Atom intern(const std::string& name);
  std::optional<Atom> find(const std::string& name) const;
  // Returns the display name, generating and recording one if the atom has
  // never been named. Generated names never collide with existing ones.
  std::string name(Atom a);
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace nomeq
