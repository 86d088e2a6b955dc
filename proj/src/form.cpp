#include "wittkit/form.hpp"

#include <algorithm>
#include <sstream>

namespace wittkit {

QuadraticForm::QuadraticForm(ModelPtr model, std::vector<Elem> entries)
    : model_(std::move(model)), entries_(std::move(entries)) {
    if (!model_) throw Error("form without a model");
    for (Elem e : entries_)
        if (e >= model_->order()) throw Error("form entry outside the square class group");
}

namespace {

std::vector<std::string_view> split_commas(std::string_view body) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= body.size()) {
        std::size_t comma = body.find(',', pos);
        std::string_view piece =
            body.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        // trim
        while (!piece.empty() && (piece.front() == ' ' || piece.front() == '\t'))
            piece.remove_prefix(1);
        while (!piece.empty() && (piece.back() == ' ' || piece.back() == '\t'))
            piece.remove_suffix(1);
        out.push_back(piece);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

QuadraticForm QuadraticForm::parse(const ModelPtr& model, std::string_view literal) {
    std::string_view s = literal;
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);

    const bool pfister = s.size() >= 4 && s.substr(0, 2) == "<<" && s.substr(s.size() - 2) == ">>";
    if (pfister) {
        std::string_view body = s.substr(2, s.size() - 4);
        std::vector<Elem> slots;
        if (!body.empty())
            for (auto piece : split_commas(body)) slots.push_back(model->group().parse_word(piece));
        return pfister_build(model, slots);
    }
    if (s.size() < 2 || s.front() != '<' || s.back() != '>')
        throw ParseError("form literal must look like <a,b,...>; got '" + std::string(literal) +
                         "'");
    std::string_view body = s.substr(1, s.size() - 2);
    std::vector<Elem> entries;
    if (!body.empty()) {
        bool any_nonempty = false;
        for (auto piece : split_commas(body)) {
            if (piece.empty()) throw ParseError("empty entry in form literal");
            entries.push_back(model->group().parse_word(piece));
            any_nonempty = true;
        }
        (void)any_nonempty;
    }
    return QuadraticForm(model, std::move(entries));
}

std::string QuadraticForm::str() const { return form_literal(model_, entries_); }

QuadraticForm QuadraticForm::scaled(Elem a) const {
    std::vector<Elem> out(entries_);
    for (Elem& e : out) e ^= a;
    return QuadraticForm(model_, std::move(out));
}

std::vector<Elem> QuadraticForm::sorted_entries() const {
    std::vector<Elem> out(entries_);
    std::sort(out.begin(), out.end());
    return out;
}

QuadraticForm orth_sum(const QuadraticForm& a, const QuadraticForm& b) {
    if (a.model() != b.model()) throw ModelMismatchError("orthogonal sum across models");
    std::vector<Elem> out(a.entries());
    out.insert(out.end(), b.entries().begin(), b.entries().end());
    return QuadraticForm(a.model(), std::move(out));
}

QuadraticForm tensor(const QuadraticForm& a, const QuadraticForm& b) {
    if (a.model() != b.model()) throw ModelMismatchError("tensor across models");
    std::vector<Elem> out;
    out.reserve(a.dim() * b.dim());
    for (Elem x : a.entries())
        for (Elem y : b.entries()) out.push_back(x ^ y);
    return QuadraticForm(a.model(), std::move(out));
}

QuadraticForm repeated(const QuadraticForm& a, unsigned times) {
    std::vector<Elem> out;
    out.reserve(a.dim() * times);
    for (unsigned i = 0; i < times; ++i)
        out.insert(out.end(), a.entries().begin(), a.entries().end());
    return QuadraticForm(a.model(), std::move(out));
}

QuadraticForm pfister_build(const ModelPtr& model, std::span<const Elem> slots) {
    std::vector<Elem> entries{0};  // <1>
    for (Elem a : slots) {
        const Elem neg_a = model->group().negate(a);
        const std::size_t n = entries.size();
        entries.reserve(2 * n);
        for (std::size_t i = 0; i < n; ++i) entries.push_back(entries[i] ^ neg_a);
    }
    return QuadraticForm(model, std::move(entries));
}

std::string form_literal(const ModelPtr& model, std::span<const Elem> entries) {
    std::ostringstream os;
    os << "<";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        os << model->group().element_word(entries[i]);
    }
    os << ">";
    return os.str();
}

std::string pfister_literal(const ModelPtr& model, std::span<const Elem> slots) {
    std::ostringstream os;
    os << "<<";
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) os << ",";
        os << model->group().element_word(slots[i]);
    }
    os << ">>";
    return os.str();
}

}  // namespace wittkit
