#include <doctest.h>

#include "wittkit/catalog.hpp"
#include "wittkit/extension.hpp"
#include "wittkit/forms_engine.hpp"
#include "wittkit/model_io.hpp"

using namespace wittkit;

namespace {

// Independent ordering oracle: brute force over all 2^k characters,
// checking the definition directly against the symbol table.
std::vector<std::uint32_t> ordering_oracle(const ModelPtr& m) {
    std::vector<std::uint32_t> out;
    const auto n = m->order();
    for (std::uint32_t f = 0; f < n; ++f) {
        auto sign = [&](Elem a) { return (__builtin_popcount(f & a) & 1) ? -1 : +1; };
        if (sign(m->group().minus_one()) != -1) continue;
        bool ok = true;
        for (Elem a = 0; a < n && ok; ++a) {
            if (sign(a) != +1) continue;
            for (Elem b = 0; b < n && ok; ++b)
                if (m->q(m->group().negate(a), b) == 0 && sign(b) != +1) ok = false;
        }
        if (ok) out.push_back(f);
    }
    return out;
}

ClassSet cone_oracle(const ModelPtr& m) {
    // Stabilized union of D(k x <1>).
    ClassSet sums(m->order());
    QuadraticForm ones(m, {0});
    for (;;) {
        ClassSet next = rep_set(ones);
        next |= sums;
        if (next == sums) return sums;
        sums = std::move(next);
        ones = orth_sum(ones, QuadraticForm(m, {0}));
    }
}

}  // namespace

TEST_CASE("catalog models validate and carry the expected symbol data") {
    for (const auto& name : catalog_names()) {
        auto m = catalog_model(name);
        CAPTURE(name);
        CHECK(m->valid());
    }
    auto mr = catalog_model("minimal-real");
    CHECK(mr->order() == 4);
    const Elem minus_one = mr->group().minus_one();
    const Elem two = mr->group().parse_word("2");
    CHECK(mr->q(minus_one, minus_one) != 0);
    CHECK(mr->q(minus_one, two) == 0);
    CHECK(mr->q(two, two) == 0);

    auto q3r = catalog_model("q3r");
    CHECK(q3r->order() == 8);
    CHECK(q3r->formally_real());
    CHECK_FALSE(q3r->pythagorean());

    auto reals = catalog_model("reals");
    CHECK(reals->pythagorean());

    CHECK_THROWS_AS(catalog_model("nope"), UnknownModelError);
}

TEST_CASE("model files round-trip bit-exactly") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        auto m = catalog_model(name);
        const std::string text = serialize_model(m);
        auto reloaded = load_model(text);
        CHECK(serialize_model(reloaded) == text);
        CHECK(reloaded->order() == m->order());
        CHECK(reloaded->group().minus_one() == m->group().minus_one());
        for (Elem a = 0; a < m->order(); ++a)
            for (Elem b = 0; b < m->order(); ++b) CHECK(reloaded->q(a, b) == m->q(a, b));
    }
}

TEST_CASE("parser reports syntax errors with line numbers") {
    CHECK_THROWS_AS(load_model("generators a\nsymbol_rank 1\n"), ParseError);  // no model line
    try {
        load_model("model x\ngenerators a\nsymbol_rank 1\nbogus line here\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
    // unknown generator
    CHECK_THROWS_AS(load_model("model x\ngenerators a\nminus_one a\nsymbol_rank 1\nq a c 1\n"),
                    ParseError);
    // q on a non-generator word
    CHECK_THROWS_AS(
        load_model("model x\ngenerators a b\nminus_one a\nsymbol_rank 1\nq a*b b 1\n"),
        ParseError);
    // wrong bitstring width
    CHECK_THROWS_AS(load_model("model x\ngenerators a\nminus_one a\nsymbol_rank 2\nq a a 1\n"),
                    ParseError);
}

TEST_CASE("axiom violations are rejected with a witness") {
    // q(2,2) = 1 but q(2,-1) = 0 forces q(2,-2) != 0.
    const std::string text =
        "model broken\ngenerators -1 2\nminus_one -1\nsymbol_rank 1\nq -1 -1 1\nq 2 2 1\n";
    try {
        load_model(text);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("q(a,-a)") != std::string::npos);
    }
    auto m = parse_model(text);
    CHECK_FALSE(m->valid());
    bool found = false;
    for (const auto& c : m->validation().checks)
        if (!c.pass && !c.witness.empty()) found = true;
    CHECK(found);
}

TEST_CASE("asymmetric symbol tables fail validation with a witness pair") {
    SquareClassGroup g({"-1", "2"}, 0b01);
    std::vector<std::vector<HElem>> values(2, std::vector<HElem>(2, 0));
    values[0][0] = 1;
    values[0][1] = 1;  // asymmetric: q(-1,2) != q(2,-1)
    auto m = FieldModel::create("asym", std::move(g), SymbolMap(1, values));
    CHECK_FALSE(m->valid());
    bool symmetry_failed = false;
    for (const auto& c : m->validation().checks)
        if (c.name.find("symmetry") != std::string::npos && !c.pass && !c.witness.empty())
            symmetry_failed = true;
    CHECK(symmetry_failed);
}

TEST_CASE("orderings match the brute-force character oracle") {
    struct Expected {
        const char* name;
        std::size_t count;
    } table[] = {{"minimal-real", 1}, {"q3r", 1}, {"q5r", 1}, {"reals", 1}, {"reals-st", 4}};
    for (const auto& [name, count] : table) {
        CAPTURE(name);
        auto m = catalog_model(name);
        const auto oracle = ordering_oracle(m);
        REQUIRE(m->orderings().size() == count);
        REQUIRE(oracle.size() == count);
        for (std::size_t i = 0; i < count; ++i)
            CHECK(m->orderings()[i].functional() == oracle[i]);
    }
    // Cone closure forces sigma(2) = +1 over minimal-real (2 is a sum of
    // two squares) and sigma(2) = sigma(3) = +1 over q3r.
    auto q3r = catalog_model("q3r");
    const auto& sigma = q3r->orderings().front();
    CHECK(sigma.sign(q3r->group().parse_word("2")) == +1);
    CHECK(sigma.sign(q3r->group().parse_word("3")) == +1);
    CHECK(sigma.sign(q3r->group().minus_one()) == -1);
}

TEST_CASE("positive cone equals the stabilized sums of squares") {
    struct Expected {
        const char* name;
        std::vector<const char*> cone;
    } table[] = {
        {"minimal-real", {"1", "2"}},
        {"q3r", {"1", "2", "3", "2*3"}},
        {"q5r", {"1", "2", "5", "2*5"}},
        {"reals", {"1"}},
    };
    for (const auto& [name, cone_words] : table) {
        CAPTURE(name);
        auto m = catalog_model(name);
        ClassSet expect(m->order());
        for (const char* w : cone_words) expect.insert(m->group().parse_word(w));
        CHECK(positive_cone(m) == expect);
        CHECK(cone_oracle(m) == positive_cone(m));
    }
}

TEST_CASE("models without orderings are flagged nonreal") {
    // Trivial symbol map: cone closure forces every class positive, which
    // contradicts sigma(-1) = -1, so there is no ordering.
    const std::string text =
        "model nonreal\ngenerators -1 2\nminus_one -1\nsymbol_rank 1\n";
    auto m = load_model(text);
    CHECK(m->valid());
    CHECK_FALSE(m->formally_real());
    CHECK_THROWS_AS(positive_cone(m), NonRealModelError);
}

TEST_CASE("composite minus-one classes are supported") {
    const std::string text =
        "model custom\ngenerators a b\nminus_one a*b\nsymbol_rank 1\nq a a 1\n";
    auto m = load_model(text);
    CHECK(m->group().minus_one() == m->group().parse_word("a*b"));
    CHECK(serialize_model(load_model(serialize_model(m))) == serialize_model(m));
    // No '-' prefix in printing when minus-one is not a single generator.
    CHECK(m->group().element_word(m->group().parse_word("a*b")) == "a*b");
    // The sign prefix still parses.
    CHECK(m->group().parse_word("-a") == (m->group().parse_word("a") ^ m->group().minus_one()));
}

TEST_CASE("element words parse and print consistently") {
    auto q3r = catalog_model("q3r");
    const auto& g = q3r->group();
    for (Elem e = 0; e < q3r->order(); ++e) CHECK(g.parse_word(g.element_word(e)) == e);
    CHECK(g.element_word(g.parse_word("-2*3")) == "-2*3");
    CHECK(g.parse_word("-1") == g.minus_one());
    CHECK(g.parse_word("2*2") == 0);  // squares collapse
    CHECK_THROWS_AS(g.parse_word("7"), ParseError);
    CHECK_THROWS_AS(g.parse_word(""), ParseError);
    CHECK_THROWS_AS(g.parse_word("2**3"), ParseError);
}

TEST_CASE("ordering count doubles under Laurent extension") {
    for (const auto& name : {"minimal-real", "q3r", "q5r", "reals"}) {
        auto m = catalog_model(name);
        auto ext = laurent_extend(m, "t");
        CAPTURE(name);
        CHECK(ext->valid());
        CHECK(ext->orderings().size() == 2 * m->orderings().size());
    }
}
