#include "wittkit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "wittkit/catalog.hpp"
#include "wittkit/checks.hpp"
#include "wittkit/model_io.hpp"

namespace wittkit {

namespace {

struct CliState {
    std::string model_name;
    std::string file_path;
    bool machine = false;
    std::uint64_t seed = 0;

    ModelPtr model() const {
        if (!file_path.empty()) return load_model_file(file_path);
        if (model_name.empty()) throw Error("no model given; use --model or --file");
        return resolve_model(model_name);
    }
};

void add_model_options(CLI::App* cmd, CliState& st) {
    cmd->add_option("--model", st.model_name, "builtin model name (catalog or name((t)) syntax)");
    cmd->add_option("--file", st.file_path, "model file path");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

void print_report(const TheoremReport& r, bool machine, std::ostream& out) {
    if (machine) {
        for (const auto& c : r.checks)
            out << "check." << c.name << "=" << to_string(c.status) << "\n";
    } else {
        out << r;
    }
}

int report_exit(const TheoremReport& r) { return r.all_pass() ? 0 : 3; }

std::string set_words(const ModelPtr& m, const ClassSet& s) {
    std::vector<std::string> words;
    s.for_each([&](Elem e) { words.push_back(m->group().element_word(e)); });
    return join(words, ",");
}

std::string hasse_str(const HasseResult& h) {
    if (h.exact) return std::to_string(h.value);
    return ">=" + std::to_string(h.value);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact quadratic-form and Witt-ring computations over finite square-class "
                 "models"};
    app.name("wittkit");
    app.require_subcommand(1);

    CliState st;
    app.add_flag("--machine", st.machine, "emit key=value lines");
    app.add_option("--seed", st.seed, "seed for sampled checks (default 0)");

    std::string selected;

    // model ------------------------------------------------------------
    auto* model_cmd = app.add_subcommand("model", "model management");
    model_cmd->require_subcommand(1);
    auto* model_list = model_cmd->add_subcommand("list", "list builtin models");
    model_list->callback([&] { selected = "model.list"; });
    auto* model_show = model_cmd->add_subcommand("show", "print the model file");
    add_model_options(model_show, st);
    model_show->callback([&] { selected = "model.show"; });
    auto* model_validate = model_cmd->add_subcommand("validate", "run the axiom checks");
    add_model_options(model_validate, st);
    model_validate->callback([&] { selected = "model.validate"; });

    // form ---------------------------------------------------------------
    std::string form_literal_arg, other_literal_arg, element_word;
    auto* form_cmd = app.add_subcommand("form", "form queries");
    form_cmd->require_subcommand(1);
    auto add_form_option = [&](CLI::App* cmd, bool with_other = false) {
        add_model_options(cmd, st);
        cmd->add_option("--form", form_literal_arg, "form literal, e.g. \"<1,-2,5,-10>\"")
            ->required();
        if (with_other)
            cmd->add_option("--other", other_literal_arg, "second form literal")->required();
    };
    auto* form_isotropic = form_cmd->add_subcommand("isotropic", "does the form have a zero");
    add_form_option(form_isotropic);
    form_isotropic->callback([&] { selected = "form.isotropic"; });
    auto* form_isometric = form_cmd->add_subcommand("isometric", "are two forms isometric");
    add_form_option(form_isometric, true);
    form_isometric->callback([&] { selected = "form.isometric"; });
    auto* form_decompose = form_cmd->add_subcommand("decompose", "Witt decomposition");
    add_form_option(form_decompose);
    form_decompose->callback([&] { selected = "form.decompose"; });
    auto* form_represents =
        form_cmd->add_subcommand("represents", "value set, or membership with --element");
    add_form_option(form_represents);
    form_represents->add_option("--element", element_word, "square class word");
    form_represents->callback([&] { selected = "form.represents"; });
    auto* form_pfister = form_cmd->add_subcommand("pfister", "recognize a Pfister form");
    add_form_option(form_pfister);
    form_pfister->callback([&] { selected = "form.pfister"; });

    // torsion ------------------------------------------------------------
    auto* torsion_cmd = app.add_subcommand("torsion", "torsion subgroup");
    torsion_cmd->require_subcommand(1);
    auto* torsion_enum = torsion_cmd->add_subcommand("enumerate",
                                                     "canonical torsion representatives");
    add_model_options(torsion_enum, st);
    torsion_enum->callback([&] { selected = "torsion.enumerate"; });

    // supreme ------------------------------------------------------------
    auto* supreme_cmd = app.add_subcommand("supreme", "supreme torsion form");
    supreme_cmd->require_subcommand(1);
    auto* supreme_find = supreme_cmd->add_subcommand("find", "search for the supreme form");
    add_model_options(supreme_find, st);
    supreme_find->callback([&] { selected = "supreme.find"; });
    auto* supreme_verify =
        supreme_cmd->add_subcommand("verify", "verify the supreme form's properties");
    add_model_options(supreme_verify, st);
    supreme_verify->callback([&] { selected = "supreme.verify"; });

    // invariants -----------------------------------------------------------
    unsigned hasse_cap = 0;
    bool no_hasse = false;
    auto* inv_cmd = app.add_subcommand("invariants", "field invariant report");
    add_model_options(inv_cmd, st);
    inv_cmd->add_option("--hasse-cap", hasse_cap, "dimension cap for the Hasse number search "
                                                  "(default max(8, 2u))");
    inv_cmd->add_flag("--no-hasse", no_hasse, "skip the Hasse number search");
    inv_cmd->callback([&] { selected = "invariants"; });

    // realmax ---------------------------------------------------------------
    auto* realmax_cmd = app.add_subcommand("realmax", "2-real-maximality verdict");
    add_model_options(realmax_cmd, st);
    realmax_cmd->add_option("--form", form_literal_arg, "form literal")->required();
    realmax_cmd->callback([&] { selected = "realmax"; });

    // extend ------------------------------------------------------------------
    std::string var = "t";
    unsigned times = 1;
    auto* extend_cmd = app.add_subcommand("extend", "emit a Laurent-extended model file");
    add_model_options(extend_cmd, st);
    extend_cmd->add_option("--var", var, "variable name (default t)");
    extend_cmd->add_option("--times", times, "number of extensions (default 1)");
    extend_cmd->callback([&] { selected = "extend"; });

    // check-theorems -------------------------------------------------------
    std::string models_csv;
    std::string check_extend_var;
    auto* check_cmd = app.add_subcommand("check-theorems", "run the verification suite");
    check_cmd->add_option("--models", models_csv, "comma-separated model names")->required();
    check_cmd->add_option("--extend", check_extend_var,
                          "also verify the Laurent extension by this variable");
    check_cmd->callback([&] { selected = "check-theorems"; });

    // Global flags (--machine, --seed) may appear after a subcommand.
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sub : a->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            enable_fallthrough(sub);
        }
    };
    enable_fallthrough(&app);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (selected == "model.list") {
            if (st.machine) {
                out << "models=" << join(catalog_names(), ",") << "\n";
            } else {
                for (const auto& n : catalog_names()) out << n << "\n";
            }
            return 0;
        }
        if (selected == "model.show") {
            out << serialize_model(st.model());
            return 0;
        }
        if (selected == "model.validate") {
            // Parse without enforcing so a failing report is printable.
            ModelPtr m = st.file_path.empty()
                             ? st.model()
                             : [&] {
                                   std::ifstream in(st.file_path);
                                   if (!in) throw Error("cannot open '" + st.file_path + "'");
                                   std::ostringstream ss;
                                   ss << in.rdbuf();
                                   return parse_model(ss.str());
                               }();
            out << format_validation_report(m);
            return m->valid() ? 0 : 2;
        }
        if (selected == "form.isotropic") {
            ModelPtr m = st.model();
            const bool iso = is_isotropic(QuadraticForm::parse(m, form_literal_arg));
            out << (st.machine ? std::string("isotropic=") : std::string()) +
                       (iso ? "true" : "false")
                << "\n";
            return 0;
        }
        if (selected == "form.isometric") {
            ModelPtr m = st.model();
            const bool eq = isometric(QuadraticForm::parse(m, form_literal_arg),
                                      QuadraticForm::parse(m, other_literal_arg));
            out << (st.machine ? std::string("isometric=") : std::string()) +
                       (eq ? "true" : "false")
                << "\n";
            return 0;
        }
        if (selected == "form.decompose") {
            ModelPtr m = st.model();
            auto dec = witt_decompose(QuadraticForm::parse(m, form_literal_arg));
            if (st.machine) {
                out << "witt_index=" << dec.witt_index << "\n";
                out << "anisotropic_part=" << dec.anisotropic_part.str() << "\n";
            } else {
                out << "witt index       " << dec.witt_index << "\n";
                out << "anisotropic part " << dec.anisotropic_part.str() << "\n";
            }
            return 0;
        }
        if (selected == "form.represents") {
            ModelPtr m = st.model();
            QuadraticForm phi = QuadraticForm::parse(m, form_literal_arg);
            if (!element_word.empty()) {
                const Elem b = m->group().parse_word(element_word);
                const bool yes = represents(phi, b);
                out << (st.machine ? std::string("represents=") : std::string()) +
                           (yes ? "true" : "false")
                    << "\n";
            } else {
                out << (st.machine ? "rep_set=" : "D = ") << set_words(m, rep_set(phi)) << "\n";
            }
            return 0;
        }
        if (selected == "form.pfister") {
            ModelPtr m = st.model();
            auto slots = pfister_recognize(QuadraticForm::parse(m, form_literal_arg));
            const std::string text = slots ? pfister_literal(m, *slots) : "none";
            out << (st.machine ? "pfister=" + text : text) << "\n";
            return 0;
        }
        if (selected == "torsion.enumerate") {
            ModelPtr m = st.model();
            const auto& torsion = torsion_subgroup(m);
            if (st.machine) {
                std::vector<std::string> reps;
                for (const auto& c : torsion.classes()) reps.push_back(c.representative().str());
                out << "classes=" << join(reps, ";") << "\n";
                out << "count=" << torsion.size() << "\n";
                out << "exponent=" << torsion.exponent() << "\n";
            } else {
                for (const auto& c : torsion.classes()) out << c.representative().str() << "\n";
            }
            return 0;
        }
        if (selected == "supreme.find") {
            ModelPtr m = st.model();
            auto pi = supreme_search(m);
            const std::string text = pi ? canonicalize(*pi).str() : "none";
            out << (st.machine ? "supreme=" + text : text) << "\n";
            return 0;
        }
        if (selected == "supreme.verify") {
            ModelPtr m = st.model();
            auto pi = supreme_search(m);
            if (!pi) {
                out << (st.machine ? "supreme=none" : "none") << "\n";
                return 0;
            }
            TheoremReport report = verify_supreme_properties(m, *pi);
            auto probe = universal_probe(m);
            if (probe.unique_universal_is_supreme.has_value())
                report.check("unique universal representative is the supreme form",
                             *probe.unique_universal_is_supreme);
            if (st.machine) out << "supreme=" << canonicalize(*pi).str() << "\n";
            print_report(report, st.machine, out);
            return report_exit(report);
        }
        if (selected == "invariants") {
            ModelPtr m = st.model();
            const unsigned cap = no_hasse ? 0 : (hasse_cap ? hasse_cap : default_hasse_cap(m));
            auto rep = compute_invariants(m, cap);
            std::vector<std::string> level_sizes;
            for (const auto& lv : rep.chain.levels)
                level_sizes.push_back(std::to_string(lv.count()));
            std::vector<std::string> index_strs;
            for (unsigned i : rep.chain.indices) index_strs.push_back(std::to_string(i));
            if (st.machine) {
                out << "model=" << m->name() << "\n";
                out << "square_classes=" << rep.square_classes << "\n";
                out << "orderings=" << rep.orderings << "\n";
                out << "u=" << rep.u << "\n";
                if (rep.hasse_computed) {
                    out << "hasse_u=" << hasse_str(rep.hasse) << "\n";
                    out << "hasse_cap=" << rep.hasse.cap << "\n";
                }
                out << "p=" << rep.pythagoras << "\n";
                out << "h=" << rep.height << "\n";
                out << "chain_sizes=" << join(level_sizes, ",") << "\n";
                out << "chain_indices=" << join(index_strs, ",") << "\n";
            } else {
                out << std::left;
                out << std::setw(16) << "model" << m->name() << "\n";
                out << std::setw(16) << "square classes" << rep.square_classes << "\n";
                out << std::setw(16) << "orderings" << rep.orderings << "\n";
                out << std::setw(16) << "u" << rep.u << "\n";
                if (rep.hasse_computed)
                    out << std::setw(16) << "hasse u"
                        << hasse_str(rep.hasse) + " (cap " + std::to_string(rep.hasse.cap) + ")"
                        << "\n";
                out << std::setw(16) << "p" << rep.pythagoras << "\n";
                out << std::setw(16) << "h" << rep.height << "\n";
                out << std::setw(16) << "chain sizes" << join(level_sizes, ",") << "\n";
                out << std::setw(16) << "chain indices" << join(index_strs, ",") << "\n";
            }
            return 0;
        }
        if (selected == "realmax") {
            ModelPtr m = st.model();
            auto verdict = is_2_real_maximal(m, QuadraticForm::parse(m, form_literal_arg));
            if (st.machine) {
                out << "verdict=" << (verdict.verdict ? "true" : "false") << "\n";
                if (verdict.witness) out << "witness=" << verdict.witness->str() << "\n";
            } else {
                out << (verdict.verdict ? "2-real-maximal" : "not 2-real-maximal") << "\n";
                if (verdict.witness)
                    out << "failing binary torsion form: " << verdict.witness->str() << "\n";
            }
            return 0;
        }
        if (selected == "extend") {
            ModelPtr m = st.model();
            if (times == 1) {
                m = laurent_extend(m, var);
            } else {
                for (unsigned i = 1; i <= times; ++i)
                    m = laurent_extend(m, var + std::to_string(i));
            }
            out << serialize_model(m);
            return 0;
        }
        if (selected == "check-theorems") {
            std::vector<std::string> names;
            std::stringstream ss(models_csv);
            std::string piece;
            while (std::getline(ss, piece, ',')) names.push_back(piece);
            CheckOptions opts;
            opts.seed = st.seed;
            if (!check_extend_var.empty()) opts.extend_var = check_extend_var;
            bool all_pass = true;
            for (const auto& name : names) {
                ModelPtr m = resolve_model(name);
                TheoremReport report = check_theorems_model(m, opts);
                print_report(report, st.machine, out);
                if (!report.all_pass()) all_pass = false;
                out << "\n";
            }
            out << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
            return all_pass ? 0 : 3;
        }
        err << "error: no action selected\n";
        return 1;
    } catch (const ConsistencyError& e) {
        err << "consistency violation: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace wittkit
