#pragma once

#include <optional>
#include <utility>

#include "wittkit/form.hpp"

namespace wittkit {

// D(phi): exact set of represented square classes. Computed by
//   D<a> = {a},   D(<a> + psi) = U_{c in D(psi)} a * D<1, a*c>,
// with D<1,x> = {b : q(-x,b) = 0}. Memoized per model on the sorted entry
// multiset. Throws EmptyFormError on the zero form.
ClassSet rep_set(const QuadraticForm& phi);
bool represents(const QuadraticForm& phi, Elem b);
bool is_universal(const QuadraticForm& phi);

// phi has a nontrivial zero. Recursion: dim <= 1 is anisotropic;
// <a> + psi is isotropic iff psi is isotropic or -a in D(psi).
bool is_isotropic(const QuadraticForm& phi);

struct WittDecomposition {
    unsigned witt_index = 0;
    QuadraticForm anisotropic_part;
};

// phi = i x <1,-1> + phi_an with phi_an anisotropic; anisotropic part is
// returned canonical.
WittDecomposition witt_decompose(const QuadraticForm& phi);
unsigned witt_index(const QuadraticForm& phi);

// With b in D(psi), returns psi' with psi = <b> + psi' (constructive
// splitting along representation witnesses).
QuadraticForm split_off(const QuadraticForm& psi, Elem b);

// Equal dimension and hyperbolic difference.
bool isometric(const QuadraticForm& a, const QuadraticForm& b);

// Plain subform test: i_W(phi + (-psi)) = dim psi. Requires
// dim psi <= dim phi (DimensionError otherwise).
bool is_subform(const QuadraticForm& psi, const QuadraticForm& phi);

// Similarity variant: least a with a*psi a subform of phi, if any.
std::optional<Elem> similar_subform_witness(const QuadraticForm& psi, const QuadraticForm& phi);

// Isometry-invariant normal form: repeatedly splits off the least element
// of D(remaining). Forms are isometric iff their canonical entry vectors
// are equal.
QuadraticForm canonicalize(const QuadraticForm& phi);

int signature(const QuadraticForm& phi, const Ordering& sigma);
bool all_signatures_zero(const QuadraticForm& phi);
// Indefinite at every ordering (|signature| < dim everywhere). The zero
// form does not count.
bool is_totally_indefinite(const QuadraticForm& phi);

// Unsigned and signed discriminant, as square classes.
Elem discriminant(const QuadraticForm& phi);
Elem signed_discriminant(const QuadraticForm& phi);

// Witt-class invariant of the even Clifford algebra, expressed in H:
// the Hasse symbol sum_{i<j} q(a_i,a_j) plus the classical dim-mod-8
// correction. Constant on Witt classes.
HElem clifford_invariant(const QuadraticForm& phi);

// Membership of the Witt class in I^m, decided for m <= 3 via dimension
// parity, signed discriminant and the Clifford invariant. m > 3 throws
// UnsupportedError.
bool in_fundamental_ideal_power(const QuadraticForm& phi, int m);

// Slot vector with pfister_build(slots) isometric to phi, if phi is an
// anisotropic Pfister form; slot candidates a satisfy -a in D(phi). Throws
// DimensionError unless dim phi is a power of two.
std::optional<std::vector<Elem>> pfister_recognize(const QuadraticForm& phi);

// GP_n membership: scaling factor s in D(phi) and slots with
// s*phi = <<slots>>.
std::optional<std::pair<Elem, std::vector<Elem>>> pfister_similar(const QuadraticForm& phi);

// pi' with pi = <1> + pi' for a Pfister form pi (canonical).
QuadraticForm pure_part(const QuadraticForm& pfister);

}  // namespace wittkit
