#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "wittkit/extension.hpp"
#include "wittkit/invariants.hpp"
#include "wittkit/realmax.hpp"

namespace wittkit {

struct CheckOptions {
    // When set, Laurent-extension checks (lifting, residues, Springer,
    // torsion product) run against model((var)).
    std::optional<std::string> extend_var;
    std::uint64_t seed = 0;
    // Exhaustive local-global scan dimension; 0 picks 6 for |G| <= 8 and 4
    // otherwise.
    unsigned local_global_dim = 0;
};

// Every theorem-shaped consequence the library knows how to verify on one
// model: validation axioms, the Artin cone identity, torsion closure
// consistency, local-global agreement, supreme-form structure, value-set
// growth, height/chain facts, 2-real-maximality, and (optionally) the
// Laurent extension package.
TheoremReport check_theorems_model(const ModelPtr& model, const CheckOptions& opts = {});

}  // namespace wittkit
