#pragma once

#include <optional>
#include <vector>

#include "wittkit/forms_engine.hpp"
#include "wittkit/report.hpp"

namespace wittkit {

// A Witt class, held as its canonical anisotropic representative.
class WittClass {
public:
    static WittClass of(const QuadraticForm& phi);

    const QuadraticForm& representative() const { return rep_; }
    const ModelPtr& model() const { return rep_.model(); }
    std::size_t dim() const { return rep_.dim(); }
    bool is_zero() const { return rep_.empty(); }

    friend bool operator==(const WittClass& a, const WittClass& b) {
        return a.rep_ == b.rep_;
    }
    friend bool operator!=(const WittClass& a, const WittClass& b) { return !(a == b); }

    // (dim, entries) order; used for all deterministic listings.
    friend bool operator<(const WittClass& a, const WittClass& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.rep_.entries() < b.rep_.entries();
    }

private:
    explicit WittClass(QuadraticForm rep) : rep_(std::move(rep)) {}
    QuadraticForm rep_;
};

WittClass witt_sum(const WittClass& a, const WittClass& b);
WittClass witt_neg(const WittClass& a);

// Smallest 2-power k with k*c = 0, found by repeated doubling; nullopt once
// the cap is passed. Memoized per model at the default cap.
std::optional<unsigned> witt_order(const WittClass& c, unsigned cap = 64);

enum class TorsionMethod { Signature, Order, Both };

// Signature: all signatures vanish. Order: finite witt_order (throws
// CapExceededError when the cap is passed). Both: asserts agreement and
// throws LocalGlobalError on mismatch.
bool is_torsion(const QuadraticForm& phi, TorsionMethod method = TorsionMethod::Both);

// W_t F as a finite set of Witt classes, closed under sum and negation.
class TorsionSubgroup {
public:
    TorsionSubgroup(std::vector<WittClass> classes, unsigned exponent)
        : classes_(std::move(classes)), exponent_(exponent) {}

    const std::vector<WittClass>& classes() const { return classes_; }
    std::size_t size() const { return classes_.size(); }
    unsigned exponent() const { return exponent_; }
    bool contains(const WittClass& c) const;
    // Maximal representative dimension (the u-invariant); 0 on the trivial
    // group.
    std::size_t max_dim() const;

private:
    std::vector<WittClass> classes_;  // sorted (dim, entries)
    unsigned exponent_;
};

// Closure of {a<1,-s> : a in G, s in Sigma} under witt_sum, with every
// member verified signature-zero (LocalGlobalError otherwise). Trivial
// for pythagorean models; NonRealModelError for nonreal ones. With
// crosscheck unset, the BFS completeness cross-check runs automatically
// for |G| <= 16. Results are cached on the model.
const TorsionSubgroup& torsion_subgroup(const ModelPtr& model);
TorsionSubgroup compute_torsion_subgroup(const ModelPtr& model, bool bfs_crosscheck);

// Independent oracle: BFS over anisotropic forms by dimension, pruned by
// dim + max |signature| > dim_cap, collecting every class with all
// signatures zero. Returns canonical representatives sorted (dim, entries),
// including the zero form.
std::vector<QuadraticForm> torsion_bfs_oracle(const ModelPtr& model, unsigned dim_cap);

// The anisotropic torsion form containing every torsion representative as
// a similar subform, when one exists. Asserts uniqueness, the plain
// subform property and Pfister recognizability (ConsistencyError on
// violation, which would mean the model is not field-like).
std::optional<QuadraticForm> supreme_search(const ModelPtr& model);

// The structural consequences of a supreme torsion form, checked
// exhaustively: u = dim, Pfister, unique universal, I_t^{n+1} trivial,
// unique torsion n-fold Pfister, and the I_t^{n-1} dichotomy.
TheoremReport verify_supreme_properties(const ModelPtr& model, const QuadraticForm& pi);

// Pfister multiplier: slots psi with (phi x psi)_an isometric to the
// supreme form, minimal fold count first. Asserts the fold count n-k when
// phi lies in I^k (k <= 3) with dim phi < 2^{k+1}.
std::vector<Elem> pfister_multiplier(const ModelPtr& model, const QuadraticForm& phi,
                                     std::optional<unsigned> fold_cap = std::nullopt);

// Strict growth D(phi) < D(phi + beta) for every non-universal torsion
// representative phi and every anisotropic binary torsion beta.
TheoremReport kneser_check(const ModelPtr& model);

struct UniversalProbe {
    std::vector<QuadraticForm> universal_reps;
    std::optional<QuadraticForm> supreme;
    // Whether "unique universal => supreme" could be evaluated, and held.
    std::optional<bool> unique_universal_is_supreme;
};

UniversalProbe universal_probe(const ModelPtr& model);

// Anisotropic binary torsion forms up to isometry (scalings of <1,-s>,
// s in Sigma \ {1}), canonical and sorted.
std::vector<QuadraticForm> binary_torsion_forms(const ModelPtr& model);

}  // namespace wittkit
