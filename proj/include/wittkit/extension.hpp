#pragma once

#include <cstdint>

#include "wittkit/witt.hpp"

namespace wittkit {

// F((t)): G' = G x <t>, H' = H + G, with
//   q'(a t^e, b t^d) = (q(a,b), a^d * b^e * (-1)^{ed}).
// The restriction to unit classes is (q, trivial); orderings double.
// Throws NameCollisionError when varname is already a generator.
ModelPtr laurent_extend(const ModelPtr& model, const std::string& varname);

// base((t_1))...((t_{n-1})); tower(base, 1) = base.
ModelPtr tower(const ModelPtr& base, unsigned n);

// phi = psi1 + t*psi2 with unit residue forms over the base model.
struct ResiduePair {
    QuadraticForm first;
    QuadraticForm second;
};

ResiduePair residue_decompose(const QuadraticForm& phi);

struct SpringerOptions {
    // Exhaustive up to this dimension when |G'| <= 16, otherwise sampled.
    unsigned exhaustive_dim = 4;
    unsigned sample_count = 2000;
    unsigned sample_dim = 8;
    std::uint64_t seed = 0;
};

// Native isotropy agrees with the residue criterion: phi isotropic iff
// psi1 or psi2 is isotropic over the base.
TheoremReport springer_check(const ModelPtr& extended, const SpringerOptions& opts = {});

// The supreme form lifts to pi x <<t>> and the lifted supreme has equal
// residues isometric to the base supreme form.
TheoremReport prop_laurent_check(const ModelPtr& base, const ModelPtr& extended);

// W_t(F((t))) corresponds to W_t(F) x W_t(F) through residues; checked as
// a bijection of representative sets.
TheoremReport torsion_residue_bijection_check(const ModelPtr& extended);

}  // namespace wittkit
