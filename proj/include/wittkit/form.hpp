#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wittkit/model.hpp"

namespace wittkit {

// A diagonalized quadratic form <a1,...,an> over a fixed model. Value
// semantics; the empty form is the zero form and is legal everywhere.
class QuadraticForm {
public:
    QuadraticForm(ModelPtr model, std::vector<Elem> entries);

    const ModelPtr& model() const { return model_; }
    const std::vector<Elem>& entries() const { return entries_; }
    std::size_t dim() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    // Form literal: `<1,-2,5,-10>` with signed generator words, or a
    // Pfister literal `<<2,5>>` (expanded on parse). `<>` is the zero form.
    static QuadraticForm parse(const ModelPtr& model, std::string_view literal);
    std::string str() const;

    QuadraticForm scaled(Elem a) const;
    QuadraticForm negated() const { return scaled(model_->group().minus_one()); }

    std::vector<Elem> sorted_entries() const;

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
        return a.model_ == b.model_ && a.entries_ == b.entries_;
    }

private:
    ModelPtr model_;
    std::vector<Elem> entries_;
};

// Orthogonal sum and tensor product of diagonal forms.
QuadraticForm orth_sum(const QuadraticForm& a, const QuadraticForm& b);
QuadraticForm tensor(const QuadraticForm& a, const QuadraticForm& b);
QuadraticForm repeated(const QuadraticForm& a, unsigned times);  // n x form

// n-fold Pfister form <<a1,...,an>> = <1,-a1> x ... x <1,-an>.
QuadraticForm pfister_build(const ModelPtr& model, std::span<const Elem> slots);

std::string form_literal(const ModelPtr& model, std::span<const Elem> entries);
std::string pfister_literal(const ModelPtr& model, std::span<const Elem> slots);

}  // namespace wittkit
