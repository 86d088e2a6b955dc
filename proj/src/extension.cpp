#include "wittkit/extension.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace wittkit {

ModelPtr laurent_extend(const ModelPtr& model, const std::string& varname) {
    const auto& g = model->group();
    for (const auto& n : g.generator_names())
        if (n == varname)
            throw NameCollisionError("generator '" + varname + "' already exists");

    std::vector<std::string> names = g.generator_names();
    names.push_back(varname);
    SquareClassGroup extended(names, g.minus_one());

    // H' = H + G. Old symbol values sit in the low target_rank bits, the
    // G-valued residue component in the next rank bits.
    const int m = model->symbol().target_rank();
    const int k = g.rank();
    const auto& old = model->symbol().generator_values();
    std::vector<std::vector<HElem>> values(static_cast<std::size_t>(k + 1),
                                           std::vector<HElem>(static_cast<std::size_t>(k + 1), 0));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                old[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    // q'(g_i, t) = (0, g_i); q'(t, t) = (0, -1).
    for (int i = 0; i < k; ++i) {
        const HElem residue = static_cast<HElem>(Elem{1} << i) << m;
        values[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = residue;
        values[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = residue;
    }
    values[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] =
        static_cast<HElem>(g.minus_one()) << m;

    return FieldModel::create_extension(model->name() + "((" + varname + "))",
                                        std::move(extended), SymbolMap(m + k, values), model,
                                        varname);
}

ModelPtr tower(const ModelPtr& base, unsigned n) {
    if (n < 1) throw Error("tower height must be at least 1");
    ModelPtr m = base;
    for (unsigned i = 1; i < n; ++i) m = laurent_extend(m, "t" + std::to_string(i));
    return m;
}

ResiduePair residue_decompose(const QuadraticForm& phi) {
    const auto& model = phi.model();
    if (!model->is_extension())
        throw NotAnExtensionError("model '" + model->name() + "' is not a Laurent extension");
    const Elem t_bit = Elem{1} << model->extension_bit();
    std::vector<Elem> unit, residue;
    for (Elem e : phi.entries()) {
        if (e & t_bit)
            residue.push_back(e ^ t_bit);
        else
            unit.push_back(e);
    }
    return {QuadraticForm(model->base(), std::move(unit)),
            QuadraticForm(model->base(), std::move(residue))};
}

namespace {

// Lifts a base-model form entrywise into the extension (unit classes).
QuadraticForm lift(const ModelPtr& extended, const QuadraticForm& base_form) {
    return QuadraticForm(extended, base_form.entries());
}

bool residue_isotropy(const QuadraticForm& phi) {
    auto res = residue_decompose(phi);
    return is_isotropic(res.first) || is_isotropic(res.second);
}

}  // namespace

TheoremReport springer_check(const ModelPtr& extended, const SpringerOptions& opts) {
    TheoremReport report;
    report.title = "residue isotropy criterion on " + extended->name();
    if (!extended->is_extension())
        throw NotAnExtensionError("springer_check needs a Laurent extension");

    const std::size_t n = extended->order();
    if (n <= 16) {
        unsigned scanned = 0;
        std::vector<Elem> entries;
        auto scan = [&](auto&& self, unsigned depth) -> bool {
            if (depth > 0) {
                QuadraticForm phi(extended, entries);
                ++scanned;
                if (is_isotropic(phi) != residue_isotropy(phi)) {
                    report.fail("isotropy equals residue isotropy (exhaustive dim <= " +
                                    std::to_string(opts.exhaustive_dim) + ")",
                                "witness " + phi.str());
                    return false;
                }
            }
            if (depth == opts.exhaustive_dim) return true;
            entries.push_back(0);
            // Nondecreasing entries: isotropy is permutation-invariant.
            const Elem from = depth == 0 ? 0 : entries[depth - 1];
            for (Elem x = from; x < n; ++x) {
                entries[depth] = x;
                if (!self(self, depth + 1)) return false;
            }
            entries.pop_back();
            return true;
        };
        if (scan(scan, 0))
            report.pass("isotropy equals residue isotropy (exhaustive dim <= " +
                            std::to_string(opts.exhaustive_dim) + ")",
                        std::to_string(scanned) + " forms");
    } else {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<unsigned> dim_dist(1, opts.sample_dim);
        std::uniform_int_distribution<Elem> elem_dist(0, static_cast<Elem>(n - 1));
        for (unsigned i = 0; i < opts.sample_count; ++i) {
            std::vector<Elem> entries(dim_dist(rng));
            for (Elem& e : entries) e = elem_dist(rng);
            QuadraticForm phi(extended, entries);
            if (is_isotropic(phi) != residue_isotropy(phi)) {
                report.fail("isotropy equals residue isotropy (sampled)",
                            "witness " + phi.str());
                return report;
            }
        }
        report.pass("isotropy equals residue isotropy (sampled)",
                    std::to_string(opts.sample_count) + " forms, dim <= " +
                        std::to_string(opts.sample_dim) + ", seed " + std::to_string(opts.seed));
    }
    return report;
}

TheoremReport prop_laurent_check(const ModelPtr& base, const ModelPtr& extended) {
    TheoremReport report;
    report.title = "supreme form under Laurent extension " + extended->name();
    if (!extended->is_extension() || extended->base() != base)
        throw NotAnExtensionError("extended model does not extend the given base");

    auto pi = supreme_search(base);
    if (!pi) {
        report.skip("lift of the supreme form", "base has no supreme torsion form");
        return report;
    }
    auto lifted_supreme = supreme_search(extended);
    if (!lifted_supreme) {
        report.fail("extension has a supreme torsion form");
        return report;
    }
    report.pass("extension has a supreme torsion form", lifted_supreme->str());

    const Elem t = Elem{1} << extended->extension_bit();
    QuadraticForm expected =
        tensor(lift(extended, *pi), pfister_build(extended, std::vector<Elem>{t}));
    report.check("lifted supreme form is pi x <<t>>",
                 isometric(*lifted_supreme, expected),
                 "expected " + expected.str() + ", found " + lifted_supreme->str());

    auto res = residue_decompose(*lifted_supreme);
    const bool converse = isometric(res.first, res.second) && isometric(res.first, *pi);
    report.check("residues of the lifted supreme form are both the base supreme form", converse,
                 "psi1=" + res.first.str() + " psi2=" + res.second.str());
    return report;
}

TheoremReport torsion_residue_bijection_check(const ModelPtr& extended) {
    TheoremReport report;
    report.title = "torsion residue product structure on " + extended->name();
    if (!extended->is_extension())
        throw NotAnExtensionError("needs a Laurent extension");
    const ModelPtr base = extended->base();

    const auto& base_torsion = torsion_subgroup(base);
    const auto& ext_torsion = torsion_subgroup(extended);

    if (ext_torsion.size() != base_torsion.size() * base_torsion.size()) {
        report.fail("|W_t(F((t)))| = |W_t(F)|^2",
                    std::to_string(ext_torsion.size()) + " vs " +
                        std::to_string(base_torsion.size()) + "^2");
        return report;
    }
    report.pass("|W_t(F((t)))| = |W_t(F)|^2", std::to_string(ext_torsion.size()) + " classes");

    // Each pair (c1, c2) of base classes maps to c1 + t*c2; the map must hit
    // every extension class exactly once.
    const Elem t = Elem{1} << extended->extension_bit();
    std::set<std::vector<Elem>> seen;
    for (const auto& c1 : base_torsion.classes()) {
        for (const auto& c2 : base_torsion.classes()) {
            QuadraticForm combined =
                orth_sum(lift(extended, c1.representative()),
                         lift(extended, c2.representative()).scaled(t));
            WittClass cls = WittClass::of(combined);
            if (!ext_torsion.contains(cls)) {
                report.fail("residue pairs land in W_t(F((t)))",
                            "missing " + cls.representative().str());
                return report;
            }
            if (!seen.insert(cls.representative().entries()).second) {
                report.fail("residue pairing is injective",
                            "collision at " + cls.representative().str());
                return report;
            }
        }
    }
    report.pass("residue pairing is a bijection onto W_t(F((t)))");
    return report;
}

}  // namespace wittkit
