#include "wittkit/model.hpp"

#include <algorithm>

#include "wittkit/detail/engine_cache.hpp"

namespace wittkit {

// ---------------------------------------------------------------------------
// SquareClassGroup

SquareClassGroup::SquareClassGroup(std::vector<std::string> generator_names, Elem minus_one)
    : names_(std::move(generator_names)), minus_one_(minus_one) {
    if (names_.size() > 20)
        throw ValidationError("square class group rank > 20 is not supported");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty() || names_[i] == "1" ||
            names_[i].find('*') != std::string::npos)
            throw ValidationError("bad generator name '" + names_[i] + "'");
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw ValidationError("duplicate generator '" + names_[i] + "'");
    }
    if (minus_one_ >= order()) throw ValidationError("minus_one outside the group");
}

std::string SquareClassGroup::element_word(Elem e) const {
    if (e == 0) return "1";
    std::string out;
    Elem rest = e;
    if (__builtin_popcount(minus_one_) == 1 && (e & minus_one_)) {
        out += "-";
        rest = e ^ minus_one_;
    }
    if (rest == 0) return out + "1";
    bool first = true;
    for (int i = 0; i < rank(); ++i) {
        if (rest & (Elem{1} << i)) {
            if (!first) out += "*";
            out += names_[static_cast<std::size_t>(i)];
            first = false;
        }
    }
    return out;
}

Elem SquareClassGroup::parse_word(std::string_view word, bool allow_sign) const {
    if (word.empty()) throw ParseError("empty element word");
    Elem result = 0;
    std::size_t pos = 0;
    while (pos <= word.size()) {
        std::size_t star = word.find('*', pos);
        std::string_view factor =
            word.substr(pos, star == std::string_view::npos ? star : star - pos);
        if (factor.empty()) throw ParseError("empty factor in '" + std::string(word) + "'");

        // Exact generator name wins (a generator may literally be named "-1").
        bool matched = false;
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (factor == names_[i]) {
                result ^= Elem{1} << i;
                matched = true;
                break;
            }
        }
        if (!matched) {
            if (factor == "1") {
                // identity factor
            } else if (factor[0] == '-') {
                if (!allow_sign)
                    throw ParseError("sign prefix not allowed in '" + std::string(word) + "'");
                result ^= minus_one_;
                std::string_view rest = factor.substr(1);
                if (rest.empty())
                    throw ParseError("dangling '-' in '" + std::string(word) + "'");
                if (rest != "1") {
                    bool sub = false;
                    for (std::size_t i = 0; i < names_.size(); ++i) {
                        if (rest == names_[i]) {
                            result ^= Elem{1} << i;
                            sub = true;
                            break;
                        }
                    }
                    if (!sub)
                        throw ParseError("unknown generator '" + std::string(rest) + "'");
                }
            } else {
                throw ParseError("unknown generator '" + std::string(factor) + "'");
            }
        }
        if (star == std::string_view::npos) break;
        pos = star + 1;
        if (pos == word.size()) throw ParseError("trailing '*' in '" + std::string(word) + "'");
    }
    return result;
}

// ---------------------------------------------------------------------------
// SymbolMap

SymbolMap::SymbolMap(int target_rank, std::vector<std::vector<HElem>> generator_values)
    : target_rank_(target_rank), values_(std::move(generator_values)) {
    if (target_rank_ < 0 || target_rank_ > 30)
        throw ValidationError("symbol rank out of range");
    const std::size_t k = values_.size();
    for (const auto& row : values_)
        if (row.size() != k) throw ValidationError("symbol table is not square");
    const HElem limit = target_rank_ >= 30 ? ~HElem{0} : (HElem{1} << target_rank_);
    for (const auto& row : values_)
        for (HElem v : row)
            if (v >= limit) throw ValidationError("symbol value outside H");
}

HElem SymbolMap::eval(Elem a, Elem b) const {
    HElem acc = 0;
    const int k = static_cast<int>(values_.size());
    for (int i = 0; i < k; ++i) {
        if (!(a & (Elem{1} << i))) continue;
        for (int j = 0; j < k; ++j)
            if (b & (Elem{1} << j)) acc ^= values_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return acc;
}

// ---------------------------------------------------------------------------
// FieldModel

FieldModel::FieldModel(std::string name, SquareClassGroup group, SymbolMap symbol,
                       std::shared_ptr<const FieldModel> base, std::string varname)
    : name_(std::move(name)),
      group_(std::move(group)),
      symbol_(std::move(symbol)),
      base_(std::move(base)),
      varname_(std::move(varname)),
      cache_(std::make_unique<detail::EngineCache>()) {
    if (static_cast<std::size_t>(symbol_.generator_values().size()) !=
        static_cast<std::size_t>(group_.rank()))
        throw ValidationError("symbol table rank does not match the group rank");
    build_tables();
    run_validation();
    enumerate_orderings();
}

FieldModel::~FieldModel() = default;

std::shared_ptr<const FieldModel> FieldModel::create(std::string name, SquareClassGroup group,
                                                     SymbolMap symbol) {
    return std::shared_ptr<const FieldModel>(
        new FieldModel(std::move(name), std::move(group), std::move(symbol), nullptr, ""));
}

std::shared_ptr<const FieldModel> FieldModel::create_extension(
    std::string name, SquareClassGroup group, SymbolMap symbol,
    std::shared_ptr<const FieldModel> base, std::string varname) {
    return std::shared_ptr<const FieldModel>(new FieldModel(
        std::move(name), std::move(group), std::move(symbol), std::move(base), std::move(varname)));
}

void FieldModel::build_tables() {
    const int k = group_.rank();
    const std::size_t n = order();
    const auto& m = symbol_.generator_values();
    gen_table_.assign(static_cast<std::size_t>(k), std::vector<HElem>(n, 0));
    for (int j = 0; j < k; ++j) {
        auto& row = gen_table_[static_cast<std::size_t>(j)];
        for (Elem a = 1; a < n; ++a) {
            const Elem low = a & (~a + 1);
            const int i = __builtin_ctz(low);
            row[a] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ^ row[a ^ low];
        }
    }
    kernels_.assign(n, ClassSet(n));
    for (Elem x = 0; x < n; ++x)
        for (Elem b = 0; b < n; ++b)
            if (q(x, b) == 0) kernels_[x].insert(b);
}

HElem FieldModel::q(Elem a, Elem b) const {
    HElem acc = 0;
    Elem rest = b;
    while (rest) {
        const int j = __builtin_ctz(rest);
        acc ^= gen_table_[static_cast<std::size_t>(j)][a];
        rest &= rest - 1;
    }
    return acc;
}

void FieldModel::run_validation() {
    const std::size_t n = order();
    validation_.checks.clear();

    {
        ValidationCheck c{"symbol symmetry q(a,b)=q(b,a)", true, ""};
        for (Elem a = 0; a < n && c.pass; ++a)
            for (Elem b = a + 1; b < n; ++b)
                if (symbol_.eval(a, b) != symbol_.eval(b, a)) {
                    c.pass = false;
                    c.witness = "a=" + group_.element_word(a) + " b=" + group_.element_word(b);
                    break;
                }
        validation_.checks.push_back(std::move(c));
    }
    {
        ValidationCheck c{"symbol kills opposites q(a,-a)=0", true, ""};
        for (Elem a = 0; a < n; ++a)
            if (q(a, group_.negate(a)) != 0) {
                c.pass = false;
                c.witness = "a=" + group_.element_word(a);
                break;
            }
        validation_.checks.push_back(std::move(c));
    }
}

void FieldModel::enumerate_orderings() {
    // A character is a GF(2) functional on the generators. Keep those with
    // sigma(-1) = -1 whose positive cone is representation-closed:
    // sigma(a) = +1 and q(-a, b) = 0 imply sigma(b) = +1.
    const std::size_t n = order();
    orderings_.clear();
    for (std::uint32_t f = 0; f < n; ++f) {
        Ordering sigma(f);
        if (sigma.sign(group_.minus_one()) != -1) continue;
        bool closed = true;
        for (Elem a = 0; a < n && closed; ++a) {
            if (sigma.sign(a) != +1) continue;
            const ClassSet& dset = kernels_[group_.negate(a)];
            dset.for_each([&](Elem b) {
                if (sigma.sign(b) != +1) closed = false;
            });
        }
        if (closed) orderings_.push_back(sigma);
    }
    validation_.formally_real = !orderings_.empty();

    sigma_ = ClassSet(n);
    if (!orderings_.empty()) {
        for (Elem e = 0; e < n; ++e) {
            bool all_pos = true;
            for (const auto& o : orderings_)
                if (o.sign(e) != +1) {
                    all_pos = false;
                    break;
                }
            if (all_pos) sigma_.insert(e);
        }
    }
    validation_.pythagorean = pythagorean();
}

const std::vector<Ordering>& enumerate_orderings(const ModelPtr& model) {
    return model->orderings();
}

const ClassSet& positive_cone(const ModelPtr& model) {
    if (!model->formally_real())
        throw NonRealModelError("model '" + model->name() + "' has no orderings");
    return model->sums_of_squares();
}

const ValidationReport& validate_model(const ModelPtr& model) { return model->validation(); }

}  // namespace wittkit
