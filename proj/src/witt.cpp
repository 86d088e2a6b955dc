#include "wittkit/witt.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "wittkit/detail/engine_cache.hpp"

namespace wittkit {

namespace {

void require_real(const ModelPtr& model) {
    if (!model->formally_real())
        throw NonRealModelError("model '" + model->name() + "' is not formally real");
}

unsigned max_abs_signature(const QuadraticForm& phi) {
    unsigned m = 0;
    for (const auto& sigma : phi.model()->orderings()) {
        int s = signature(phi, sigma);
        m = std::max(m, static_cast<unsigned>(s < 0 ? -s : s));
    }
    return m;
}

struct RepLess {
    bool operator()(const QuadraticForm& a, const QuadraticForm& b) const {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.entries() < b.entries();
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// Witt classes

WittClass WittClass::of(const QuadraticForm& phi) {
    return WittClass(witt_decompose(phi).anisotropic_part);
}

WittClass witt_sum(const WittClass& a, const WittClass& b) {
    if (a.model() != b.model()) throw ModelMismatchError("witt_sum across models");
    return WittClass::of(orth_sum(a.representative(), b.representative()));
}

WittClass witt_neg(const WittClass& a) { return WittClass::of(a.representative().negated()); }

std::optional<unsigned> witt_order(const WittClass& c, unsigned cap) {
    const auto& model = c.model();
    auto& cache = model->engine_cache();
    const bool cacheable = (cap == 64);
    if (cacheable) {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.witt_orders.find(c.representative().entries());
        if (it != cache.witt_orders.end()) return it->second;
    }
    std::optional<unsigned> result;
    unsigned k = 1;
    WittClass cur = c;
    while (k <= cap) {
        if (cur.is_zero()) {
            result = k;
            break;
        }
        cur = witt_sum(cur, cur);
        k *= 2;
    }
    if (cacheable) {
        std::lock_guard<std::mutex> lock(cache.mutex);
        cache.witt_orders.emplace(c.representative().entries(), result);
    }
    return result;
}

bool is_torsion(const QuadraticForm& phi, TorsionMethod method) {
    require_real(phi.model());
    switch (method) {
        case TorsionMethod::Signature:
            return all_signatures_zero(phi);
        case TorsionMethod::Order: {
            auto ord = witt_order(WittClass::of(phi));
            if (!ord) throw CapExceededError("witt_order cap passed for " + phi.str());
            return true;
        }
        case TorsionMethod::Both: {
            const bool by_sig = all_signatures_zero(phi);
            const auto ord = witt_order(WittClass::of(phi));
            const bool by_order = ord.has_value();
            if (by_sig != by_order)
                throw LocalGlobalError(
                    "signature and order criteria disagree on " + phi.str() +
                    " (local-global violation; model is not field-like)");
            return by_sig;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Torsion subgroup

bool TorsionSubgroup::contains(const WittClass& c) const {
    return std::binary_search(classes_.begin(), classes_.end(), c,
                              [](const WittClass& a, const WittClass& b) { return a < b; });
}

std::size_t TorsionSubgroup::max_dim() const {
    std::size_t m = 0;
    for (const auto& c : classes_) m = std::max(m, c.dim());
    return m;
}

std::vector<QuadraticForm> binary_torsion_forms(const ModelPtr& model) {
    require_real(model);
    const auto& g = model->group();
    std::set<std::vector<Elem>> seen;
    std::vector<QuadraticForm> out;
    positive_cone(model).for_each([&](Elem s) {
        if (s == g.identity()) return;  // <1,-1> scalings are hyperbolic
        for (Elem a = 0; a < model->order(); ++a) {
            QuadraticForm beta = canonicalize(QuadraticForm(model, {a, a ^ g.negate(s)}));
            if (seen.insert(beta.entries()).second) out.push_back(beta);
        }
    });
    std::sort(out.begin(), out.end(), RepLess{});
    return out;
}

TorsionSubgroup compute_torsion_subgroup(const ModelPtr& model, bool bfs_crosscheck) {
    require_real(model);
    std::vector<WittClass> classes;
    classes.push_back(WittClass::of(QuadraticForm(model, {})));
    if (!model->pythagorean()) {
        std::vector<WittClass> gens;
        for (const auto& beta : binary_torsion_forms(model)) gens.push_back(WittClass::of(beta));

        std::set<std::vector<Elem>> seen;
        seen.insert(std::vector<Elem>{});
        std::vector<WittClass> frontier = {classes.front()};
        while (!frontier.empty()) {
            std::vector<WittClass> next;
            for (const auto& c : frontier) {
                for (const auto& g : gens) {
                    WittClass s = witt_sum(c, g);
                    if (seen.insert(s.representative().entries()).second) {
                        classes.push_back(s);
                        next.push_back(s);
                    }
                }
            }
            frontier = std::move(next);
        }
    }
    std::sort(classes.begin(), classes.end());

    unsigned exponent = 1;
    for (const auto& c : classes) {
        if (!all_signatures_zero(c.representative()))
            throw LocalGlobalError("torsion closure produced a class with nonzero signature: " +
                                   c.representative().str());
        auto ord = witt_order(c);
        if (!ord)
            throw LocalGlobalError("torsion class with order beyond the cap: " +
                                   c.representative().str());
        exponent = std::max(exponent, *ord);
    }

    TorsionSubgroup result(classes, exponent);

    if (bfs_crosscheck) {
        const unsigned cap = static_cast<unsigned>(std::max<std::size_t>(2, result.max_dim()));
        auto oracle = torsion_bfs_oracle(model, cap);
        std::vector<QuadraticForm> closure_reps;
        for (const auto& c : classes) closure_reps.push_back(c.representative());
        if (oracle.size() != closure_reps.size() ||
            !std::equal(oracle.begin(), oracle.end(), closure_reps.begin()))
            throw LocalGlobalError(
                "torsion BFS oracle disagrees with the closure enumeration on model '" +
                model->name() + "'");
    }
    return result;
}

const TorsionSubgroup& torsion_subgroup(const ModelPtr& model) {
    std::lock_guard<std::mutex> lock(model->torsion_mutex);
    if (!model->torsion_cache) {
        const bool crosscheck = model->order() <= 16;
        model->torsion_cache = std::make_shared<const TorsionSubgroup>(
            compute_torsion_subgroup(model, crosscheck));
    }
    return *model->torsion_cache;
}

std::vector<QuadraticForm> torsion_bfs_oracle(const ModelPtr& model, unsigned dim_cap) {
    require_real(model);
    if (dim_cap < 2) throw CapTooSmallError("torsion BFS needs dim_cap >= 2");

    std::vector<QuadraticForm> found;
    found.push_back(canonicalize(QuadraticForm(model, {})));

    std::set<std::vector<Elem>> level;
    for (Elem a = 0; a < model->order(); ++a) level.insert({a});

    for (unsigned d = 1; d <= dim_cap && !level.empty(); ++d) {
        std::set<std::vector<Elem>> next;
        for (const auto& entries : level) {
            QuadraticForm phi(model, entries);
            if (d + max_abs_signature(phi) > dim_cap) continue;  // cannot reach zero in time
            if (all_signatures_zero(phi)) found.push_back(phi);
            if (d == dim_cap) continue;
            const ClassSet dset = rep_set(phi);
            for (Elem x = 0; x < model->order(); ++x) {
                if (dset.contains(model->group().negate(x))) continue;  // extension isotropic
                QuadraticForm ext = canonicalize(orth_sum(phi, QuadraticForm(model, {x})));
                next.insert(ext.entries());
            }
        }
        level = std::move(next);
    }
    std::sort(found.begin(), found.end(), RepLess{});
    return found;
}

// ---------------------------------------------------------------------------
// Supreme torsion forms

std::optional<QuadraticForm> supreme_search(const ModelPtr& model) {
    require_real(model);
    if (model->pythagorean()) return std::nullopt;
    const auto& torsion = torsion_subgroup(model);
    const std::size_t umax = torsion.max_dim();
    if (umax == 0) return std::nullopt;

    // A supreme form embeds every representative, so it has maximal
    // dimension among them.
    std::vector<QuadraticForm> winners;
    for (const auto& cand : torsion.classes()) {
        if (cand.dim() != umax) continue;
        bool all_embed = true;
        for (const auto& c : torsion.classes()) {
            if (c.is_zero()) continue;
            if (!similar_subform_witness(c.representative(), cand.representative())) {
                all_embed = false;
                break;
            }
        }
        if (all_embed) winners.push_back(cand.representative());
    }
    if (winners.empty()) return std::nullopt;
    if (winners.size() > 1)
        throw ConsistencyError("more than one supreme torsion form on model '" + model->name() +
                               "' (uniqueness violated; model is not field-like)");
    const QuadraticForm& pi = winners.front();
    for (const auto& c : torsion.classes())
        if (!c.is_zero() && !is_subform(c.representative(), pi))
            throw ConsistencyError("torsion representative " + c.representative().str() +
                                   " is similar to a subform of " + pi.str() +
                                   " but not a plain subform");
    if (!pfister_recognize(pi))
        throw ConsistencyError("supreme torsion form " + pi.str() + " is not a Pfister form");
    return pi;
}

TheoremReport verify_supreme_properties(const ModelPtr& model, const QuadraticForm& pi) {
    TheoremReport report;
    report.title = "supreme torsion form properties on " + model->name();
    const auto& torsion = torsion_subgroup(model);

    std::size_t n = 0;
    while ((std::size_t{1} << n) < pi.dim()) ++n;

    report.check("u-invariant equals dim of the supreme form",
                 torsion.max_dim() == pi.dim(),
                 "u=" + std::to_string(torsion.max_dim()) + " dim=" + std::to_string(pi.dim()));

    auto slots = pfister_recognize(pi);
    report.check("supreme form is a Pfister form", slots.has_value(),
                 slots ? pfister_literal(model, *slots) : "no slot vector found");

    std::vector<QuadraticForm> universal;
    for (const auto& c : torsion.classes())
        if (!c.is_zero() && is_universal(c.representative()))
            universal.push_back(c.representative());
    report.check("supreme form is the only universal anisotropic torsion form",
                 universal.size() == 1 && universal.front() == canonicalize(pi),
                 std::to_string(universal.size()) + " universal representative(s)");

    report.check("I_t^{n+1} trivial (u < 2^{n+1})",
                 torsion.max_dim() < (std::size_t{1} << (n + 1)));

    {
        bool unique = true;
        std::string witness;
        for (const auto& c : torsion.classes()) {
            if (c.is_zero() || c.dim() != pi.dim()) continue;
            if (!(c.representative() == canonicalize(pi))) {
                if (pfister_recognize(c.representative())) {
                    unique = false;
                    witness = c.representative().str();
                    break;
                }
            }
        }
        report.check("unique anisotropic torsion n-fold Pfister form", unique, witness);
    }

    if (n >= 1) {
        const int m = static_cast<int>(n) - 1;
        if (m > 3) {
            report.unsupported("I_t^{n-1} dichotomy", "I^m membership undecided for m > 3");
        } else {
            bool ok = true;
            std::string witness;
            for (const auto& c : torsion.classes()) {
                if (c.is_zero()) continue;
                if (!in_fundamental_ideal_power(c.representative(), m)) continue;
                if (c.representative() == canonicalize(pi)) continue;
                const bool similar_pfister =
                    c.dim() == (std::size_t{1} << m) && pfister_similar(c.representative());
                if (!similar_pfister) {
                    ok = false;
                    witness = c.representative().str();
                    break;
                }
            }
            report.check("anisotropic classes of I_t^{n-1} are the supreme form or similar to "
                         "(n-1)-fold Pfister forms",
                         ok, witness);
        }
    }
    return report;
}

std::vector<Elem> pfister_multiplier(const ModelPtr& model, const QuadraticForm& phi,
                                     std::optional<unsigned> fold_cap) {
    require_real(model);
    auto pi = supreme_search(model);
    if (!pi) throw Error("no supreme torsion form on model '" + model->name() + "'");
    if (!all_signatures_zero(phi) || WittClass::of(phi).is_zero())
        throw Error("pfister_multiplier needs a nonhyperbolic torsion form");
    std::size_t n = 0;
    while ((std::size_t{1} << n) < pi->dim()) ++n;
    const unsigned cap = fold_cap.value_or(static_cast<unsigned>(n) + 2);

    const QuadraticForm pi_canon = canonicalize(*pi);
    std::vector<Elem> slots;
    // Minimal fold count first; slot tuples nondecreasing for determinism.
    for (unsigned m = 0; m <= cap; ++m) {
        slots.assign(m, 0);
        std::optional<std::vector<Elem>> hit;
        auto try_tuple = [&](auto&& self, unsigned depth, Elem from) -> bool {
            if (depth == m) {
                QuadraticForm prod = tensor(phi, pfister_build(model, slots));
                if (witt_decompose(prod).anisotropic_part == pi_canon) {
                    hit = slots;
                    return true;
                }
                return false;
            }
            for (Elem a = from; a < model->order(); ++a) {
                slots[depth] = a;
                if (self(self, depth + 1, a)) return true;
            }
            return false;
        };
        if (try_tuple(try_tuple, 0, 0)) {
            // Fold-count consequence: phi in I^k with dim phi < 2^{k+1}
            // forces exactly n-k factors.
            int k = 0;
            for (int kk = 1; kk <= 3 && kk <= static_cast<int>(n); ++kk)
                if (in_fundamental_ideal_power(phi, kk)) k = kk;
            if (k >= 1 && phi.dim() < (std::size_t{1} << (k + 1)) &&
                m != static_cast<unsigned>(static_cast<int>(n) - k))
                throw ConsistencyError("pfister multiplier fold count " + std::to_string(m) +
                                       " differs from n-k = " +
                                       std::to_string(static_cast<int>(n) - k) + " for " +
                                       phi.str());
            return *hit;
        }
    }
    throw SearchExhaustedError("no Pfister multiplier within " + std::to_string(cap) + " folds");
}

TheoremReport kneser_check(const ModelPtr& model) {
    TheoremReport report;
    report.title = "value set growth (Kneser analogue) on " + model->name();
    require_real(model);
    if (model->pythagorean()) {
        report.skip("strict growth D(phi) < D(phi+beta)", "pythagorean model, no torsion forms");
        return report;
    }
    const auto& torsion = torsion_subgroup(model);
    const auto betas = binary_torsion_forms(model);
    unsigned scanned = 0;
    for (const auto& c : torsion.classes()) {
        const QuadraticForm& phi = c.representative();
        if (!phi.empty() && is_universal(phi)) continue;
        for (const auto& beta : betas) {
            const ClassSet grown = rep_set(orth_sum(phi, beta));
            bool strict;
            if (phi.empty()) {
                strict = grown.count() > 0;
            } else {
                const ClassSet base = rep_set(phi);
                strict = base.is_subset_of(grown) && base.count() < grown.count();
            }
            ++scanned;
            if (!strict) {
                report.fail("strict growth D(phi) < D(phi+beta)",
                            "phi=" + phi.str() + " beta=" + beta.str());
                return report;
            }
        }
    }
    report.pass("strict growth D(phi) < D(phi+beta)",
                std::to_string(scanned) + " pairs scanned");
    return report;
}

UniversalProbe universal_probe(const ModelPtr& model) {
    UniversalProbe probe;
    require_real(model);
    const auto& torsion = torsion_subgroup(model);
    for (const auto& c : torsion.classes())
        if (!c.is_zero() && is_universal(c.representative()))
            probe.universal_reps.push_back(c.representative());
    probe.supreme = supreme_search(model);
    if (probe.universal_reps.size() == 1)
        probe.unique_universal_is_supreme =
            probe.supreme && probe.universal_reps.front() == canonicalize(*probe.supreme);
    return probe;
}

}  // namespace wittkit
