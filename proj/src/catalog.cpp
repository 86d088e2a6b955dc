#include "wittkit/catalog.hpp"

#include "wittkit/extension.hpp"

namespace wittkit {

namespace {

// Bits of H for q3r/q5r: bit 0 = p-adic Hilbert symbol, bit 1 = real sign
// symbol (1 iff both arguments negative).

ModelPtr make_minimal_real() {
    SquareClassGroup g({"-1", "2"}, 0b01);
    std::vector<std::vector<HElem>> v(2, std::vector<HElem>(2, 0));
    v[0][0] = 1;  // q(-1,-1)
    return FieldModel::create("minimal-real", std::move(g), SymbolMap(1, v));
}

ModelPtr make_q3r() {
    // 3-adic square classes: -1 and 2 are both the nonsquare unit, 3 is the
    // prime. Nontrivial symbols: (unit,3) and (3,3).
    SquareClassGroup g({"-1", "2", "3"}, 0b001);
    std::vector<std::vector<HElem>> v(3, std::vector<HElem>(3, 0));
    auto set = [&](int i, int j, HElem h) {
        v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h;
        v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = h;
    };
    set(0, 0, 0b10);  // q(-1,-1): units split 3-adically; both negative
    set(0, 2, 0b01);  // q(-1,3): nonsquare unit vs prime
    set(1, 2, 0b01);  // q(2,3)
    set(2, 2, 0b01);  // q(3,3) = q(3,-1)
    return FieldModel::create("q3r", std::move(g), SymbolMap(2, v));
}

ModelPtr make_q5r() {
    // 5-adic square classes: -1 is a square, 2 is the nonsquare unit, 5 is
    // the prime. Nontrivial symbol: (2,5). (5,5) = (5,-1) splits.
    SquareClassGroup g({"-1", "2", "5"}, 0b001);
    std::vector<std::vector<HElem>> v(3, std::vector<HElem>(3, 0));
    auto set = [&](int i, int j, HElem h) {
        v[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = h;
        v[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = h;
    };
    set(0, 0, 0b10);  // q(-1,-1): real sign only
    set(1, 2, 0b01);  // q(2,5)
    return FieldModel::create("q5r", std::move(g), SymbolMap(2, v));
}

ModelPtr make_reals() {
    SquareClassGroup g({"-1"}, 0b1);
    std::vector<std::vector<HElem>> v(1, std::vector<HElem>(1, 1));
    return FieldModel::create("reals", std::move(g), SymbolMap(1, v));
}

ModelPtr make_reals_st() {
    ModelPtr m = laurent_extend(laurent_extend(make_reals(), "s"), "t");
    // Rename to the catalog id.
    return FieldModel::create_extension("reals-st", m->group(), m->symbol(), m->base(),
                                        m->extension_var());
}

}  // namespace

ModelPtr catalog_model(const std::string& name) {
    if (name == "minimal-real") return make_minimal_real();
    if (name == "q3r") return make_q3r();
    if (name == "q5r") return make_q5r();
    if (name == "reals") return make_reals();
    if (name == "reals-st") return make_reals_st();
    throw UnknownModelError("unknown catalog model '" + name + "'");
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"minimal-real", "q3r", "q5r", "reals",
                                                   "reals-st"};
    return names;
}

ModelPtr resolve_model(const std::string& name) {
    // base((v1))((v2))... requests iterated Laurent extensions.
    auto pos = name.find("((");
    if (pos == std::string::npos) return catalog_model(name);
    ModelPtr m = catalog_model(name.substr(0, pos));
    std::size_t at = pos;
    while (at < name.size()) {
        if (name.compare(at, 2, "((") != 0)
            throw UnknownModelError("bad extension syntax in '" + name + "'");
        auto close = name.find("))", at + 2);
        if (close == std::string::npos)
            throw UnknownModelError("bad extension syntax in '" + name + "'");
        m = laurent_extend(m, name.substr(at + 2, close - at - 2));
        at = close + 2;
    }
    return m;
}

}  // namespace wittkit
