#include "nomeq/fresh.hpp"

#include <algorithm>

namespace nomeq {

Atom FreshAllocator::next() {
  while (avoid_.contains(Atom{cursor_})) ++cursor_;
  return Atom{cursor_++};
}

AtomTuple FreshAllocator::take(std::size_t n) {
  std::vector<Atom> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(next());
  return AtomTuple(std::move(out));
}

AtomTuple fresh_tuple(std::size_t n, const AtomSet& avoid) {
  return FreshAllocator(avoid).take(n);
}

Var fresh_var(const std::vector<std::string>& avoid_names) {
  return fresh_vars(1, avoid_names)[0];
}

std::vector<Var> fresh_vars(std::size_t n,
                            const std::vector<std::string>& avoid_names) {
  std::vector<Var> out;
  std::size_t counter = 0;
  while (out.size() < n) {
    std::string candidate = "v" + std::to_string(counter++);
    if (std::find(avoid_names.begin(), avoid_names.end(), candidate) ==
        avoid_names.end())
      out.push_back(Var{candidate});
  }
  return out;
}

}  // namespace nomeq
