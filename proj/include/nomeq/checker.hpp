#pragma once

// Rule-by-rule validation of derivation trees. The checker never searches or
// infers instantiation data: every node must be a correct instance of its rule
// as recorded, or checking fails with a per-node diagnostic.

#include <optional>
#include <string>
#include <vector>

#include "nomeq/derivation.hpp"

namespace nomeq {

struct CheckError {
  std::string message;
  // Premise indices from the root to the offending node.
  std::vector<std::size_t> path;
};

std::string format_path(const CheckError& e);

// Validates against the full rule system (freshness judgements allowed).
// The theory must have that flavour.
std::optional<CheckError> check_nel(const Theory& theory, const Derivation& d);

// Validates against the equation-only rule system.
std::optional<CheckError> check_neol(const Theory& theory,
                                     const Derivation& d);

// Dispatches on the theory's flavour.
std::optional<CheckError> check_derivation(const Theory& theory,
                                           const Derivation& d);

}  // namespace nomeq
