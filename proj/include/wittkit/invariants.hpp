#pragma once

#include "wittkit/witt.hpp"

namespace wittkit {

// u(F): maximal dimension of an anisotropic torsion form, read off the
// torsion subgroup. When a supreme form exists its dimension agrees
// (asserted; ConsistencyError otherwise).
unsigned u_invariant(const ModelPtr& model);

// Least k with s a sum of k squares. NotTotallyPositiveError when s is
// outside Sigma.
unsigned length(const ModelPtr& model, Elem s);

// p(F) = max length over Sigma.
unsigned pythagoras_number(const ModelPtr& model);

// h(F): exponent of W_t, asserted equal to the least 2-power >= p(F)
// (ConsistencyError on mismatch).
unsigned height(const ModelPtr& model);

// D(1) <= D(2) <= D(4) <= ... <= D(infinity) = Sigma, with consecutive
// indices. Each level is asserted to be a subgroup (ConsistencyError).
struct SumsChain {
    std::vector<ClassSet> levels;     // D(2^j), j = 0.., until Sigma is reached
    std::vector<unsigned> indices;    // [D(2^{j+1}) : D(2^j)]
    unsigned terminal_index = 1;      // [D(inf) : last level]
};

SumsChain sums_chain(const ModelPtr& model);

// Totally indefinite search result. When exact, no anisotropic totally
// indefinite form of larger dimension exists up to the cap (and the
// enumeration closed before reaching it); otherwise value = cap is
// witnessed by a totally indefinite form of that dimension.
struct HasseResult {
    unsigned value = 0;
    bool exact = true;
    unsigned cap = 0;
};

HasseResult hasse_number(const ModelPtr& model, unsigned dim_cap);

struct InvariantReport {
    unsigned u = 0;
    HasseResult hasse;
    bool hasse_computed = false;
    unsigned pythagoras = 0;
    unsigned height = 0;
    std::size_t square_classes = 0;
    std::size_t orderings = 0;
    SumsChain chain;
};

// hasse_cap = 0 skips the Hasse number search (it is the only invariant
// whose cost grows quickly with the group rank).
InvariantReport compute_invariants(const ModelPtr& model, unsigned hasse_cap);
unsigned default_hasse_cap(const ModelPtr& model);  // max(8, 2u)

// h <= 2^n with the equality criterion 2^{n-1} x <1> inside pi, and the
// representation-chain consequences when p > 2^{n-1}.
TheoremReport section5_checks(const ModelPtr& model);

}  // namespace wittkit
