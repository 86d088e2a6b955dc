#pragma once

#include "wittkit/witt.hpp"

namespace wittkit {

struct RealMaxVerdict {
    QuadraticForm form;
    bool verdict = false;
    std::string criterion;
    // Failing binary torsion form (subform criterion) or missing pure-part
    // element (Pfister criterion); set only when verdict is false.
    std::optional<QuadraticForm> witness;
    std::optional<Elem> missing_pure_element;
};

// phi is 2-real-maximal iff every anisotropic binary torsion form is
// similar to a subform of phi; a false verdict carries a failing <1,-a>.
// Throws on isotropic input.
RealMaxVerdict is_2_real_maximal(const ModelPtr& model, const QuadraticForm& phi);

// For anisotropic Pfister forms: -Sigma \ {-1's square class} must lie in
// D(pure part). Asserts agreement with the subform criterion
// (ConsistencyError on mismatch).
RealMaxVerdict pfister_pure_criterion(const ModelPtr& model, const QuadraticForm& pfister);

// The supreme form passes both criteria; also scans every anisotropic
// torsion Pfister representative and reports its verdict.
TheoremReport supreme_implies_realmax_check(const ModelPtr& model);

}  // namespace wittkit
