#include <doctest.h>

#include "wittkit/catalog.hpp"
#include "wittkit/extension.hpp"
#include "wittkit/realmax.hpp"

using namespace wittkit;

namespace {

QuadraticForm pf(const ModelPtr& m, const char* literal) {
    return QuadraticForm::parse(m, literal);
}

// Anisotropic torsion Pfister representatives of the model.
std::vector<QuadraticForm> torsion_pfister_reps(const ModelPtr& m) {
    std::vector<QuadraticForm> out;
    for (const auto& c : torsion_subgroup(m).classes()) {
        if (c.is_zero()) continue;
        const auto d = c.dim();
        if ((d & (d - 1)) != 0) continue;
        if (pfister_recognize(c.representative())) out.push_back(c.representative());
    }
    return out;
}

}  // namespace

TEST_CASE("binary-subform criterion with witnesses") {
    auto q3r = catalog_model("q3r");
    CHECK(is_2_real_maximal(q3r, pf(q3r, "<1,1,-3,-3>")).verdict);
    {
        auto v = is_2_real_maximal(q3r, pf(q3r, "<1,-3>"));
        CHECK_FALSE(v.verdict);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->entries() == pf(q3r, "<1,-2>").entries());
        // The witness genuinely fails to embed.
        CHECK_FALSE(similar_subform_witness(*v.witness, pf(q3r, "<1,-3>")).has_value());
    }
    auto mr = catalog_model("minimal-real");
    CHECK(is_2_real_maximal(mr, pf(mr, "<1,-2>")).verdict);

    CHECK_THROWS_AS(is_2_real_maximal(q3r, pf(q3r, "<1,-1>")), Error);  // isotropic input
    auto reals = catalog_model("reals");
    CHECK_THROWS_AS(is_2_real_maximal(reals, pf(reals, "<1>")), NonRealModelError);
}

TEST_CASE("pure-part criterion on Pfister forms") {
    auto q5r = catalog_model("q5r");
    CHECK(pfister_pure_criterion(q5r, pf(q5r, "<<2,5>>")).verdict);
    auto q3r = catalog_model("q3r");
    CHECK(pfister_pure_criterion(q3r, pf(q3r, "<<3,-1>>")).verdict);
    auto mr = catalog_model("minimal-real");
    CHECK(pfister_pure_criterion(mr, pf(mr, "<<2>>")).verdict);
    {
        // <<2>> over q5r misses -5 in its pure part <-2>.
        auto v = pfister_pure_criterion(q5r, pf(q5r, "<<2>>"));
        CHECK_FALSE(v.verdict);
        CHECK(v.missing_pure_element.has_value());
    }
    CHECK_THROWS_AS(pfister_pure_criterion(q3r, pf(q3r, "<2,-2*3>")), NotPfisterError);
}

TEST_CASE("criteria agree on torsion Pfister forms of catalogs and 2-towers") {
    for (const char* name : {"minimal-real", "q3r", "q5r"}) {
        CAPTURE(name);
        for (ModelPtr m : {catalog_model(name), tower(catalog_model(name), 2)}) {
            for (const auto& rep : torsion_pfister_reps(m)) {
                CAPTURE(rep.str());
                // pfister_pure_criterion throws on disagreement.
                auto v = pfister_pure_criterion(m, rep);
                auto w = is_2_real_maximal(m, rep);
                CHECK(v.verdict == w.verdict);
            }
        }
    }
}

TEST_CASE("the supreme form is 2-real-maximal, smaller Pfister forms need not be") {
    for (const char* name : {"minimal-real", "q3r", "q5r"}) {
        CAPTURE(name);
        CHECK(supreme_implies_realmax_check(catalog_model(name)).all_pass());
    }
    // q5r: <<2>> = <1,-2> fails with witness <1,-5>.
    auto q5r = catalog_model("q5r");
    auto v = is_2_real_maximal(q5r, pf(q5r, "<1,-2>"));
    CHECK_FALSE(v.verdict);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->entries() == pf(q5r, "<1,-5>").entries());

    // Pythagorean models skip.
    CHECK(supreme_implies_realmax_check(catalog_model("reals")).all_pass());
}

TEST_CASE("2-real-maximality is monotone under anisotropic extension") {
    auto q3r = catalog_model("q3r");
    std::vector<QuadraticForm> aniso;
    std::vector<Elem> entries;
    auto rec = [&](auto&& self, unsigned depth) -> void {
        if (depth > 0) {
            QuadraticForm phi(q3r, entries);
            if (!is_isotropic(phi)) aniso.push_back(phi);
        }
        if (depth == 4) return;
        entries.push_back(0);
        const Elem from = depth == 0 ? 0 : entries[depth - 1];
        for (Elem x = from; x < q3r->order(); ++x) {
            entries[depth] = x;
            self(self, depth + 1);
        }
        entries.pop_back();
    };
    rec(rec, 0);
    for (const auto& phi : aniso) {
        if (!is_2_real_maximal(q3r, phi).verdict) continue;
        for (const auto& chi : aniso) {
            if (chi.dim() < phi.dim()) continue;
            if (!is_subform(phi, chi)) continue;
            CAPTURE(phi.str());
            CAPTURE(chi.str());
            REQUIRE(is_2_real_maximal(q3r, chi).verdict);
        }
    }
}
