#include "nomeq/atom.hpp"

#include <algorithm>

namespace nomeq {

AtomSet::AtomSet(std::initializer_list<Atom> atoms) : atoms_(atoms) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

AtomSet AtomSet::from(std::vector<Atom> atoms) {
  AtomSet s;
  s.atoms_ = std::move(atoms);
  std::sort(s.atoms_.begin(), s.atoms_.end());
  s.atoms_.erase(std::unique(s.atoms_.begin(), s.atoms_.end()),
                 s.atoms_.end());
  return s;
}

bool AtomSet::contains(Atom a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

AtomSet AtomSet::with(Atom a) const {
  if (contains(a)) return *this;
  AtomSet out = *this;
  out.atoms_.insert(
      std::lower_bound(out.atoms_.begin(), out.atoms_.end(), a), a);
  return out;
}

AtomSet AtomSet::union_with(const AtomSet& other) const {
  AtomSet out;
  std::set_union(atoms_.begin(), atoms_.end(), other.atoms_.begin(),
                 other.atoms_.end(), std::back_inserter(out.atoms_));
  return out;
}

AtomSet AtomSet::intersect(const AtomSet& other) const {
  AtomSet out;
  std::set_intersection(atoms_.begin(), atoms_.end(), other.atoms_.begin(),
                        other.atoms_.end(), std::back_inserter(out.atoms_));
  return out;
}

AtomSet AtomSet::minus(const AtomSet& other) const {
  AtomSet out;
  std::set_difference(atoms_.begin(), atoms_.end(), other.atoms_.begin(),
                      other.atoms_.end(), std::back_inserter(out.atoms_));
  return out;
}

bool AtomSet::disjoint_with(const AtomSet& other) const {
  return intersect(other).empty();
}

bool AtomSet::subset_of(const AtomSet& other) const {
  return std::includes(other.atoms_.begin(), other.atoms_.end(),
                       atoms_.begin(), atoms_.end());
}

AtomTuple::AtomTuple(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  auto sorted = atoms_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw NelError("atom tuple entries must be pairwise distinct");
}

AtomTuple::AtomTuple(std::initializer_list<Atom> atoms)
    : AtomTuple(std::vector<Atom>(atoms)) {}

AtomSet AtomTuple::underlying_set() const { return AtomSet::from(atoms_); }

AtomTuple ordered_tuple(const AtomSet& set) {
  return AtomTuple(set.items());
}

Atom AtomNames::intern(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return Atom{it->second};
  auto idx = static_cast<std::uint32_t>(names_.size());
  names_.push_back(name);
  index_.emplace(name, idx);
  return Atom{idx};
}

std::optional<Atom> AtomNames::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return Atom{it->second};
}

std::string AtomNames::name(Atom a) {
  while (names_.size() <= a.index) {
    auto idx = names_.size();
    std::string candidate = "a" + std::to_string(idx);
    while (index_.count(candidate)) candidate = "_" + candidate;
    names_.push_back(candidate);
    index_.emplace(candidate, static_cast<std::uint32_t>(idx));
  }
  return names_[a.index];
}

}  // namespace nomeq
