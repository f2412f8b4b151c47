#include "nomeq/perm.hpp"

#include <algorithm>

namespace nomeq {

Perm Perm::from_pairs(std::vector<std::pair<Atom, Atom>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<Atom> keys, values;
  keys.reserve(pairs.size());
  values.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    keys.push_back(a);
    values.push_back(b);
  }
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
    throw NelError("permutation maps one atom to two images");
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw NelError("permutation maps two atoms to one image");
  if (keys != values)
    throw NelError("permutation image set differs from its key set");
  Perm p;
  for (const auto& [a, b] : pairs)
    if (a != b) p.map_.emplace_back(a, b);
  return p;
}

Perm Perm::transposition(Atom a, Atom b) {
  Perm p;
  if (a == b) return p;
  if (a < b) {
    p.map_ = {{a, b}, {b, a}};
  } else {
    p.map_ = {{b, a}, {a, b}};
  }
  return p;
}

Atom Perm::apply(Atom a) const {
  auto it = std::lower_bound(
      map_.begin(), map_.end(), a,
      [](const std::pair<Atom, Atom>& e, Atom key) { return e.first < key; });
  if (it != map_.end() && it->first == a) return it->second;
  return a;
}

Perm Perm::inverse() const {
  std::vector<std::pair<Atom, Atom>> flipped;
  flipped.reserve(map_.size());
  for (const auto& [a, b] : map_) flipped.emplace_back(b, a);
  std::sort(flipped.begin(), flipped.end());
  Perm p;
  p.map_ = std::move(flipped);
  return p;
}

AtomSet Perm::support() const {
  std::vector<Atom> keys;
  keys.reserve(map_.size());
  for (const auto& [a, b] : map_) {
    (void)b;
    keys.push_back(a);
  }
  return AtomSet::from(std::move(keys));
}

Perm compose(const Perm& p2, const Perm& p1) {
  Perm p;
  for (Atom a : p1.support().union_with(p2.support())) {
    Atom b = p2.apply(p1.apply(a));
    if (b != a) p.map_.emplace_back(a, b);  // carrier is sorted already
  }
  return p;
}

AtomSet disagreement_set(const Perm& p1, const Perm& p2) {
  std::vector<Atom> out;
  for (Atom a : p1.support().union_with(p2.support()))
    if (p1.apply(a) != p2.apply(a)) out.push_back(a);
  return AtomSet::from(std::move(out));
}

Perm gen_transposition(const AtomTuple& src, const AtomTuple& dst) {
  if (src.size() != dst.size())
    throw NelError("generalised transposition: tuple lengths differ");
  if (!src.underlying_set().disjoint_with(dst.underlying_set()))
    throw NelError("generalised transposition: tuples are not disjoint");
  Perm p;
  for (std::size_t i = 0; i < src.size(); ++i)
    p = compose(p, Perm::transposition(src[i], dst[i]));
  return p;
}

Atom act(const Perm& p, Atom a) { return p.apply(a); }

AtomSet act(const Perm& p, const AtomSet& s) {
  std::vector<Atom> out;
  out.reserve(s.size());
  for (Atom a : s) out.push_back(p.apply(a));
  return AtomSet::from(std::move(out));
}

AtomTuple act(const Perm& p, const AtomTuple& t) {
  std::vector<Atom> out;
  out.reserve(t.size());
  for (Atom a : t) out.push_back(p.apply(a));
  return AtomTuple(std::move(out));
}

std::vector<std::vector<Atom>> cycle_decomposition(const Perm& p) {
  std::vector<std::vector<Atom>> cycles;
  AtomSet seen;
  for (Atom start : p.support()) {
    if (seen.contains(start)) continue;
    std::vector<Atom> cycle;
    Atom a = start;
    do {
      cycle.push_back(a);
      seen = seen.with(a);
      a = p.apply(a);
    } while (a != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace nomeq
