#include "wittkit/checks.hpp"

namespace wittkit {

namespace {

// Sigma equals the stabilized union of D(k x <1>) (the Artin identity at
// model level).
TheoremReport artin_check(const ModelPtr& model) {
    TheoremReport report;
    if (!model->formally_real()) {
        report.skip("positive cone equals stabilized sums of squares", "nonreal model");
        return report;
    }
    ClassSet sums(model->order());
    QuadraticForm ones(model, {0});
    for (;;) {
        ClassSet next = rep_set(ones);
        next |= sums;
        if (next == sums) break;
        sums = std::move(next);
        ones = orth_sum(ones, QuadraticForm(model, {0}));
    }
    report.check("positive cone equals stabilized sums of squares",
                 sums == positive_cone(model));
    return report;
}

TheoremReport local_global_scan(const ModelPtr& model, unsigned dim_cap) {
    TheoremReport report;
    if (!model->formally_real()) {
        report.skip("signature torsion iff finite order", "nonreal model");
        return report;
    }
    unsigned scanned = 0;
    std::vector<Elem> entries;
    bool ok = true;
    std::string witness;
    auto scan = [&](auto&& self, unsigned depth) -> void {
        if (!ok) return;
        if (depth > 0) {
            QuadraticForm phi(model, entries);
            ++scanned;
            try {
                is_torsion(phi, TorsionMethod::Both);
            } catch (const LocalGlobalError&) {
                ok = false;
                witness = phi.str();
                return;
            }
        }
        if (depth == dim_cap) return;
        entries.push_back(0);
        const Elem from = depth == 0 ? 0 : entries[depth - 1];
        for (Elem x = from; x < model->order() && ok; ++x) {
            entries[depth] = x;
            self(self, depth + 1);
        }
        entries.pop_back();
    };
    scan(scan, 0);
    report.check("signature torsion iff finite order (dim <= " + std::to_string(dim_cap) + ")",
                 ok, ok ? std::to_string(scanned) + " forms" : "witness " + witness);
    return report;
}

TheoremReport closure_vs_bfs(const ModelPtr& model) {
    TheoremReport report;
    if (!model->formally_real()) {
        report.skip("torsion closure equals BFS oracle", "nonreal model");
        return report;
    }
    if (model->order() > 16) {
        report.skip("torsion closure equals BFS oracle",
                    "|G| > 16; residue product structure is checked instead");
        return report;
    }
    try {
        compute_torsion_subgroup(model, /*bfs_crosscheck=*/true);
        report.pass("torsion closure equals BFS oracle");
    } catch (const ConsistencyError& e) {
        report.fail("torsion closure equals BFS oracle", e.what());
    }
    return report;
}

}  // namespace

TheoremReport check_theorems_model(const ModelPtr& model, const CheckOptions& opts) {
    TheoremReport report;
    report.title = "theorem checks on " + model->name();

    {
        const auto& v = model->validation();
        report.check("symbol axioms", v.all_pass());
    }
    report.merge(artin_check(model));

    if (model->formally_real()) {
        const unsigned lg_dim =
            opts.local_global_dim ? opts.local_global_dim : (model->order() <= 8 ? 6 : 4);
        report.merge(local_global_scan(model, lg_dim));
        report.merge(closure_vs_bfs(model));

        try {
            auto pi = supreme_search(model);
            if (pi) {
                report.pass("supreme torsion form", pi->str());
                report.merge(verify_supreme_properties(model, *pi));
                report.merge(section5_checks(model));
                report.merge(supreme_implies_realmax_check(model));
                auto probe = universal_probe(model);
                if (probe.unique_universal_is_supreme.has_value())
                    report.check("unique universal representative is the supreme form",
                                 *probe.unique_universal_is_supreme);
            } else {
                report.skip("supreme torsion form",
                            model->pythagorean() ? "pythagorean model" : "none found");
            }
        } catch (const ConsistencyError& e) {
            report.fail("supreme torsion form", e.what());
        }
        report.merge(kneser_check(model));
    } else {
        report.skip("torsion checks", "nonreal model");
    }

    if (opts.extend_var) {
        ModelPtr ext = laurent_extend(model, *opts.extend_var);
        report.check("extension passes validation", ext->valid());
        report.check("ordering count doubles",
                     ext->orderings().size() == 2 * model->orderings().size());
        if (model->formally_real())
            report.check("positive cone embeds unchanged",
                         [&] {
                             const auto& base_sigma = model->sums_of_squares();
                             ClassSet expect(ext->order());
                             base_sigma.for_each([&](Elem s) { expect.insert(s); });
                             return expect == ext->sums_of_squares();
                         }());
        SpringerOptions sopts;
        sopts.seed = opts.seed;
        report.merge(springer_check(ext, sopts));
        if (model->formally_real()) {
            report.merge(prop_laurent_check(model, ext));
            report.merge(torsion_residue_bijection_check(ext));
        }
    }
    return report;
}

}  // namespace wittkit
