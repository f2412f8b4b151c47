#pragma once

// Deterministic fresh-name allocation: fresh atoms are always the least
// atoms, in the global order, outside the avoid set.

#include <string>
#include <vector>

#include "nomeq/environment.hpp"

namespace nomeq {

class FreshAllocator {
 public:
  explicit FreshAllocator(AtomSet avoid) : avoid_(std::move(avoid)) {}

  Atom next();
  AtomTuple take(std::size_t n);

 private:
  AtomSet avoid_;
  std::uint32_t cursor_ = 0;
};

// The n least atoms outside `avoid`, in order.
AtomTuple fresh_tuple(std::size_t n, const AtomSet& avoid);

// Variable names v0, v1, ... skipping the given names.
Var fresh_var(const std::vector<std::string>& avoid_names);
std::vector<Var> fresh_vars(std::size_t n,
                            const std::vector<std::string>& avoid_names);

}  // namespace nomeq
