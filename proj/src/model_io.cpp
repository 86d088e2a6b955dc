#include "wittkit/model_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace wittkit {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

struct RawModel {
    std::string name;
    std::vector<std::string> generators;
    std::string minus_one_word = "1";
    int symbol_rank = -1;
    struct QLine {
        std::string a, b, bits;
        int line;
    };
    std::vector<QLine> q_lines;
    bool has_model = false, has_generators = false, has_minus_one = false;
};

RawModel scan(const std::string& text) {
    RawModel raw;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        const std::string& key = toks[0];
        if (key == "model") {
            if (toks.size() != 2) throw ParseError("'model' expects one name", lineno);
            raw.name = toks[1];
            raw.has_model = true;
        } else if (key == "generators") {
            if (toks.size() < 2) throw ParseError("'generators' expects at least one id", lineno);
            raw.generators.assign(toks.begin() + 1, toks.end());
            raw.has_generators = true;
        } else if (key == "minus_one") {
            if (toks.size() != 2) throw ParseError("'minus_one' expects one word", lineno);
            raw.minus_one_word = toks[1];
            raw.has_minus_one = true;
        } else if (key == "symbol_rank") {
            if (toks.size() != 2) throw ParseError("'symbol_rank' expects one integer", lineno);
            try {
                raw.symbol_rank = std::stoi(toks[1]);
            } catch (const std::exception&) {
                throw ParseError("bad symbol_rank '" + toks[1] + "'", lineno);
            }
        } else if (key == "q") {
            if (toks.size() != 4)
                throw ParseError("'q' expects: q <word> <word> <bits>", lineno);
            raw.q_lines.push_back({toks[1], toks[2], toks[3], lineno});
        } else {
            throw ParseError("unknown directive '" + key + "'", lineno);
        }
    }
    if (!raw.has_model) throw ParseError("missing 'model' line");
    if (!raw.has_generators) throw ParseError("missing 'generators' line");
    if (raw.symbol_rank < 0) throw ParseError("missing 'symbol_rank' line");
    return raw;
}

ModelPtr build(const RawModel& raw) {
    // minus_one resolved before sign-prefixed words make sense.
    SquareClassGroup probe(raw.generators, 0);
    Elem minus_one = 0;
    if (raw.has_minus_one) {
        try {
            minus_one = probe.parse_word(raw.minus_one_word, /*allow_sign=*/false);
        } catch (const ParseError& e) {
            throw ParseError(std::string("minus_one: ") + e.what());
        }
    }
    SquareClassGroup group(raw.generators, minus_one);

    const auto k = raw.generators.size();
    std::vector<std::vector<HElem>> values(k, std::vector<HElem>(k, 0));
    for (const auto& ql : raw.q_lines) {
        Elem a, b;
        try {
            a = group.parse_word(ql.a);
            b = group.parse_word(ql.b);
        } catch (const ParseError& e) {
            throw ParseError(std::string(e.what()), ql.line);
        }
        if (__builtin_popcount(a) != 1 || __builtin_popcount(b) != 1)
            throw ParseError("q lines must reference single generators (table is incomplete "
                             "otherwise); got '" + ql.a + "' '" + ql.b + "'",
                             ql.line);
        if (static_cast<int>(ql.bits.size()) != raw.symbol_rank)
            throw ParseError("q value must have exactly " + std::to_string(raw.symbol_rank) +
                                 " bits",
                             ql.line);
        HElem v = 0;
        for (std::size_t i = 0; i < ql.bits.size(); ++i) {
            if (ql.bits[i] == '1')
                v |= HElem{1} << i;
            else if (ql.bits[i] != '0')
                throw ParseError("q value must be a bitstring", ql.line,
                                 static_cast<int>(i + 1));
        }
        const auto i = static_cast<std::size_t>(__builtin_ctz(a));
        const auto j = static_cast<std::size_t>(__builtin_ctz(b));
        values[i][j] = v;
        values[j][i] = v;
    }
    return FieldModel::create(raw.name, std::move(group), SymbolMap(raw.symbol_rank, values));
}

}  // namespace

ModelPtr parse_model(const std::string& text) { return build(scan(text)); }

ModelPtr load_model(const std::string& text) {
    ModelPtr m = parse_model(text);
    if (!m->valid()) {
        for (const auto& c : m->validation().checks)
            if (!c.pass)
                throw ValidationError("axiom violation: " + c.name +
                                      (c.witness.empty() ? "" : " at " + c.witness));
    }
    return m;
}

ModelPtr load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open model file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_model(ss.str());
}

std::string serialize_model(const ModelPtr& model) {
    const auto& g = model->group();
    const auto& values = model->symbol().generator_values();
    std::ostringstream os;
    os << "model " << model->name() << "\n";
    os << "generators";
    for (const auto& n : g.generator_names()) os << " " << n;
    os << "\n";
    // Raw generator product, no sign prefix: the minus_one line is parsed
    // before sign-prefixed words are meaningful.
    os << "minus_one ";
    if (g.minus_one() == 0) {
        os << "1";
    } else {
        bool first = true;
        for (int i = 0; i < g.rank(); ++i)
            if (g.minus_one() & (Elem{1} << i)) {
                if (!first) os << "*";
                os << g.generator_names()[static_cast<std::size_t>(i)];
                first = false;
            }
    }
    os << "\n";
    os << "symbol_rank " << model->symbol().target_rank() << "\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i; j < values.size(); ++j) {
            if (values[i][j] == 0) continue;
            os << "q " << g.generator_names()[i] << " " << g.generator_names()[j] << " ";
            for (int b = 0; b < model->symbol().target_rank(); ++b)
                os << ((values[i][j] >> b) & 1u);
            os << "\n";
        }
    }
    return os.str();
}

std::string format_validation_report(const ModelPtr& model) {
    std::ostringstream os;
    const auto& r = model->validation();
    for (const auto& c : r.checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.witness.empty()) os << "  [witness: " << c.witness << "]";
        os << "\n";
    }
    os << "formally_real=" << (r.formally_real ? "true" : "false") << "\n";
    os << "pythagorean=" << (r.pythagorean ? "true" : "false") << "\n";
    os << "orderings=" << model->orderings().size() << "\n";
    return os.str();
}

}  // namespace wittkit
