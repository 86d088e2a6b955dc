#include "wittkit/invariants.hpp"

#include <algorithm>
#include <set>

namespace wittkit {

unsigned u_invariant(const ModelPtr& model) {
    const auto& torsion = torsion_subgroup(model);
    const unsigned u = static_cast<unsigned>(torsion.max_dim());
    if (auto pi = supreme_search(model); pi && pi->dim() != u)
        throw ConsistencyError("supreme form dimension differs from the u-invariant");
    return u;
}

unsigned length(const ModelPtr& model, Elem s) {
    if (!positive_cone(model).contains(s))
        throw NotTotallyPositiveError("class " + model->group().element_word(s) +
                                      " is not totally positive");
    QuadraticForm ones(model, {0});
    for (unsigned k = 1;; ++k) {
        if (represents(ones, s)) return k;
        ones = orth_sum(ones, QuadraticForm(model, {0}));
    }
}

unsigned pythagoras_number(const ModelPtr& model) {
    unsigned p = 1;
    positive_cone(model).for_each([&](Elem s) { p = std::max(p, length(model, s)); });
    return p;
}

unsigned height(const ModelPtr& model) {
    const auto& torsion = torsion_subgroup(model);
    const unsigned h = torsion.exponent();
    unsigned least_pow = 1;
    const unsigned p = pythagoras_number(model);
    while (least_pow < p) least_pow *= 2;
    if (h != least_pow)
        throw ConsistencyError("W_t exponent " + std::to_string(h) +
                               " is not the least 2-power >= p = " + std::to_string(p));
    return h;
}

SumsChain sums_chain(const ModelPtr& model) {
    const ClassSet& sigma = positive_cone(model);
    SumsChain chain;
    // D(2^j) = totally positive classes of length <= 2^j.
    std::vector<unsigned> lengths(model->order(), 0);
    sigma.for_each([&](Elem s) { lengths[s] = length(model, s); });
    unsigned bound = 1;
    for (;;) {
        ClassSet level(model->order());
        sigma.for_each([&](Elem s) {
            if (lengths[s] <= bound) level.insert(s);
        });
        if (!level.is_subgroup())
            throw ConsistencyError("D(" + std::to_string(bound) + ") is not a subgroup");
        if (!chain.levels.empty()) {
            if (!chain.levels.back().is_subset_of(level))
                throw ConsistencyError("sums-of-squares chain is not increasing");
            chain.indices.push_back(
                static_cast<unsigned>(level.count() / chain.levels.back().count()));
        }
        const bool done = level == sigma;
        chain.levels.push_back(std::move(level));
        if (done) break;
        bound *= 2;
    }
    chain.terminal_index =
        static_cast<unsigned>(sigma.count() / chain.levels.back().count());  // always 1 here
    return chain;
}

HasseResult hasse_number(const ModelPtr& model, unsigned dim_cap) {
    HasseResult result;
    result.cap = dim_cap;

    // Level-by-level scan of anisotropic classes. A form of dimension d
    // survives while every |signature| <= 2*cap - d - 1 (it can still be
    // completed to a totally indefinite form at some dimension <= cap); at
    // d = cap this is total indefiniteness itself, so a nonempty final
    // level is a witness for the reported lower bound.
    std::set<std::vector<Elem>> level;
    for (Elem a = 0; a < model->order(); ++a) level.insert({a});
    bool closed = true;
    for (unsigned d = 1; d <= dim_cap && !level.empty(); ++d) {
        std::set<std::vector<Elem>> next;
        for (const auto& entries : level) {
            QuadraticForm phi(model, entries);
            bool keep = true;
            bool totally_indefinite = !model->orderings().empty();
            for (const auto& sigma : phi.model()->orderings()) {
                const int s = signature(phi, sigma);
                const unsigned abs_s = static_cast<unsigned>(s < 0 ? -s : s);
                if (abs_s + d + 1 > 2 * dim_cap) keep = false;
                if (abs_s >= d) totally_indefinite = false;
            }
            if (!keep) continue;
            if (totally_indefinite) result.value = std::max(result.value, d);
            if (d == dim_cap) {
                closed = false;
                continue;
            }
            const ClassSet dset = rep_set(phi);
            for (Elem x = 0; x < model->order(); ++x) {
                if (dset.contains(model->group().negate(x))) continue;
                next.insert(canonicalize(orth_sum(phi, QuadraticForm(model, {x}))).entries());
            }
        }
        level = std::move(next);
    }
    result.exact = closed;
    if (!closed) result.value = dim_cap;  // witnessed by a surviving level-cap form
    return result;
}

unsigned default_hasse_cap(const ModelPtr& model) {
    return std::max(8u, 2 * u_invariant(model));
}

InvariantReport compute_invariants(const ModelPtr& model, unsigned hasse_cap) {
    InvariantReport report;
    report.u = u_invariant(model);
    report.pythagoras = pythagoras_number(model);
    report.height = height(model);
    report.square_classes = model->order();
    report.orderings = model->orderings().size();
    report.chain = sums_chain(model);
    if (hasse_cap > 0) {
        report.hasse = hasse_number(model, hasse_cap);
        report.hasse_computed = true;
    }
    return report;
}

TheoremReport section5_checks(const ModelPtr& model) {
    TheoremReport report;
    report.title = "height and representation chain on " + model->name();
    auto pi = supreme_search(model);
    if (!pi) {
        report.skip("height bound h <= 2^n", "no supreme torsion form");
        return report;
    }
    unsigned n = 0;
    while ((std::size_t{1} << n) < pi->dim()) ++n;
    const unsigned h = height(model);
    const unsigned p = pythagoras_number(model);

    report.check("height bound h <= 2^n", h <= (1u << n),
                 "h=" + std::to_string(h) + " n=" + std::to_string(n));

    const unsigned half = n == 0 ? 1 : (1u << (n - 1));
    const bool equality = h == (1u << n);
    const bool half_ones_embed = is_subform(repeated(QuadraticForm(model, {0}), half), *pi);
    report.check("h = 2^n iff 2^{n-1} x <1> is a subform of pi", equality == half_ones_embed,
                 std::string("h=") + std::to_string(h) + " embed=" +
                     (half_ones_embed ? "yes" : "no"));

    if (p > half) {
        const auto chain = sums_chain(model);
        // Index of Sigma over D(2^{n-1}).
        ClassSet half_level(model->order());
        positive_cone(model).for_each([&](Elem s) {
            if (length(model, s) <= half) half_level.insert(s);
        });
        const unsigned index =
            static_cast<unsigned>(positive_cone(model).count() / half_level.count());
        report.check("[D(inf) : D(2^{n-1})] = 2", index == 2, "index=" + std::to_string(index));

        bool all_match = true;
        std::string witness;
        positive_cone(model).for_each([&](Elem x) {
            if (length(model, x) <= half) return;
            std::vector<Elem> slots{x};
            for (unsigned i = 1; i < n; ++i) slots.push_back(model->group().minus_one());
            if (!isometric(pfister_build(model, slots), *pi)) {
                all_match = false;
                witness = model->group().element_word(x);
            }
        });
        report.check("pi = <<x,-1,...,-1>> for every x of length > 2^{n-1}", all_match, witness);
    } else {
        report.skip("[D(inf) : D(2^{n-1})] = 2", "p <= 2^{n-1}");
    }
    return report;
}

}  // namespace wittkit
