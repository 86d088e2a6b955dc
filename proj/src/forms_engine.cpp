#include "wittkit/forms_engine.hpp"

#include <algorithm>
#include <cmath>

#include "wittkit/detail/engine_cache.hpp"

namespace wittkit {

namespace {

// --- internals on sorted entry vectors ------------------------------------

ClassSet rep_set_sorted(const FieldModel& m, const std::vector<Elem>& sorted);

bool is_isotropic_sorted(const FieldModel& m, const std::vector<Elem>& sorted) {
    if (sorted.size() <= 1) return false;
    // Unrolled recursion: isotropic iff some -e[i] is represented by the
    // tail behind it.
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        std::vector<Elem> tail(sorted.begin() + static_cast<std::ptrdiff_t>(i) + 1, sorted.end());
        if (rep_set_sorted(m, tail).contains(m.group().negate(sorted[i]))) return true;
    }
    return false;
}

ClassSet rep_set_sorted(const FieldModel& m, const std::vector<Elem>& sorted) {
    auto& cache = m.engine_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.rep_sets.find(sorted);
        if (it != cache.rep_sets.end()) return it->second;
    }
    ClassSet out(m.order());
    if (sorted.size() == 1) {
        out.insert(sorted[0]);
    } else {
        const Elem a = sorted[0];
        std::vector<Elem> tail(sorted.begin() + 1, sorted.end());
        ClassSet tail_set = rep_set_sorted(m, tail);
        tail_set.for_each([&](Elem c) {
            // a * D<1, a*c> = a * kernel(-(a*c))
            out |= m.kernel(m.group().negate(a ^ c)).scaled(a);
        });
    }
    std::lock_guard<std::mutex> lock(cache.mutex);
    return cache.rep_sets.emplace(sorted, std::move(out)).first->second;
}

// pre: b in D(psi). Returns entries (unsorted) of psi' with psi = <b> + psi'.
std::vector<Elem> split_off_sorted(const FieldModel& m, const std::vector<Elem>& psi, Elem b) {
    if (psi.size() == 1) {
        if (psi[0] != b) throw Error("split_off: element not represented");
        return {};
    }
    const Elem head = psi[0];
    std::vector<Elem> rest(psi.begin() + 1, psi.end());
    if (head == b) return rest;
    const ClassSet rest_set = rep_set_sorted(m, rest);
    if (rest_set.contains(b)) {
        std::vector<Elem> inner = split_off_sorted(m, rest, b);
        inner.push_back(head);
        return inner;
    }
    // Mixed witness: least c in D(rest) with b in D<head, c>; then
    // <head, c> = <b, head*c*b>.
    const Elem neg = m.group().minus_one();
    std::vector<Elem> cs = rest_set.elements();
    for (Elem c : cs) {
        if (m.kernel((head ^ c) ^ neg).contains(head ^ b)) {
            std::vector<Elem> inner = split_off_sorted(m, rest, c);
            inner.push_back(head ^ c ^ b);
            return inner;
        }
    }
    throw Error("split_off: element not represented");
}

std::vector<Elem> canonical_sorted(const FieldModel& m, std::vector<Elem> sorted) {
    auto& cache = m.engine_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.canonical.find(sorted);
        if (it != cache.canonical.end()) return it->second;
    }
    const std::vector<Elem> key = sorted;
    std::vector<Elem> out;
    out.reserve(sorted.size());
    while (!sorted.empty()) {
        const Elem least = *rep_set_sorted(m, sorted).least();
        out.push_back(least);
        sorted = split_off_sorted(m, sorted, least);
        std::sort(sorted.begin(), sorted.end());
    }
    std::lock_guard<std::mutex> lock(cache.mutex);
    return cache.canonical.emplace(key, std::move(out)).first->second;
}

struct DecomposeResult {
    unsigned index;
    std::vector<Elem> anisotropic_sorted;
};

DecomposeResult decompose_sorted(const FieldModel& m, std::vector<Elem> sorted) {
    unsigned index = 0;
    for (;;) {
        if (sorted.size() <= 1) break;
        bool split = false;
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            std::vector<Elem> tail(sorted.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                   sorted.end());
            const Elem want = m.group().negate(sorted[i]);
            if (rep_set_sorted(m, tail).contains(want)) {
                std::vector<Elem> rest = split_off_sorted(m, tail, want);
                rest.insert(rest.end(), sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(i));
                std::sort(rest.begin(), rest.end());
                sorted = std::move(rest);
                ++index;
                split = true;
                break;
            }
        }
        if (!split) break;
    }
    return {index, std::move(sorted)};
}

void require_same_model(const QuadraticForm& a, const QuadraticForm& b) {
    if (a.model() != b.model())
        throw ModelMismatchError("forms belong to different models");
}

}  // namespace

// --- public surface --------------------------------------------------------

ClassSet rep_set(const QuadraticForm& phi) {
    if (phi.empty()) throw EmptyFormError("the zero form represents nothing");
    return rep_set_sorted(*phi.model(), phi.sorted_entries());
}

bool represents(const QuadraticForm& phi, Elem b) { return rep_set(phi).contains(b); }

bool is_universal(const QuadraticForm& phi) {
    return !phi.empty() && rep_set(phi).count() == phi.model()->order();
}

bool is_isotropic(const QuadraticForm& phi) {
    return is_isotropic_sorted(*phi.model(), phi.sorted_entries());
}

WittDecomposition witt_decompose(const QuadraticForm& phi) {
    auto res = decompose_sorted(*phi.model(), phi.sorted_entries());
    std::vector<Elem> canon = canonical_sorted(*phi.model(), std::move(res.anisotropic_sorted));
    return {res.index, QuadraticForm(phi.model(), std::move(canon))};
}

unsigned witt_index(const QuadraticForm& phi) {
    return decompose_sorted(*phi.model(), phi.sorted_entries()).index;
}

QuadraticForm split_off(const QuadraticForm& psi, Elem b) {
    if (psi.empty()) throw EmptyFormError("cannot split the zero form");
    if (!represents(psi, b))
        throw Error("split_off: " + psi.model()->group().element_word(b) + " not in D" + psi.str());
    std::vector<Elem> out = split_off_sorted(*psi.model(), psi.sorted_entries(), b);
    std::sort(out.begin(), out.end());
    return QuadraticForm(psi.model(), std::move(out));
}

bool isometric(const QuadraticForm& a, const QuadraticForm& b) {
    require_same_model(a, b);
    if (a.dim() != b.dim()) return false;
    if (a.sorted_entries() == b.sorted_entries()) return true;
    return witt_index(orth_sum(a, b.negated())) == a.dim();
}

bool is_subform(const QuadraticForm& psi, const QuadraticForm& phi) {
    require_same_model(psi, phi);
    if (psi.dim() > phi.dim())
        throw DimensionError("candidate subform exceeds the ambient dimension");
    if (psi.empty()) return true;
    return witt_index(orth_sum(phi, psi.negated())) == psi.dim();
}

std::optional<Elem> similar_subform_witness(const QuadraticForm& psi, const QuadraticForm& phi) {
    require_same_model(psi, phi);
    if (psi.dim() > phi.dim())
        throw DimensionError("candidate subform exceeds the ambient dimension");
    if (psi.empty()) return Elem{0};
    for (Elem a = 0; a < phi.model()->order(); ++a)
        if (is_subform(psi.scaled(a), phi)) return a;
    return std::nullopt;
}

QuadraticForm canonicalize(const QuadraticForm& phi) {
    return QuadraticForm(phi.model(), canonical_sorted(*phi.model(), phi.sorted_entries()));
}

int signature(const QuadraticForm& phi, const Ordering& sigma) {
    int s = 0;
    for (Elem e : phi.entries()) s += sigma.sign(e);
    return s;
}

bool all_signatures_zero(const QuadraticForm& phi) {
    for (const auto& sigma : phi.model()->orderings())
        if (signature(phi, sigma) != 0) return false;
    return true;
}

bool is_totally_indefinite(const QuadraticForm& phi) {
    if (phi.empty()) return false;
    for (const auto& sigma : phi.model()->orderings())
        if (static_cast<std::size_t>(std::abs(signature(phi, sigma))) >= phi.dim()) return false;
    return true;
}

Elem discriminant(const QuadraticForm& phi) {
    Elem d = 0;
    for (Elem e : phi.entries()) d ^= e;
    return d;
}

Elem signed_discriminant(const QuadraticForm& phi) {
    const auto n = phi.dim();
    Elem d = discriminant(phi);
    if (((n * (n - 1)) / 2) % 2 == 1) d ^= phi.model()->group().minus_one();
    return d;
}

HElem clifford_invariant(const QuadraticForm& phi) {
    const auto& m = *phi.model();
    const auto& es = phi.entries();
    HElem s = 0;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) s ^= m.q(es[i], es[j]);
    // Classical correction making this constant on Witt classes.
    const Elem neg = m.group().minus_one();
    const Elem d = discriminant(phi);
    switch (phi.dim() % 8) {
        case 1: case 2: break;
        case 3: case 4: s ^= m.q(neg, d ^ neg); break;
        case 5: case 6: s ^= m.q(neg, neg); break;
        case 7: case 0: s ^= m.q(neg, d); break;
    }
    return s;
}

bool in_fundamental_ideal_power(const QuadraticForm& phi, int m) {
    if (m <= 0) return true;
    if (m > 3)
        throw UnsupportedError("I^m membership is decided only for m <= 3");
    if (phi.dim() % 2 != 0) return false;
    if (m == 1) return true;
    if (signed_discriminant(phi) != 0) return false;
    if (m == 2) return true;
    return clifford_invariant(phi) == 0;
}

namespace {

bool recognize_dfs(const QuadraticForm& phi, const std::vector<Elem>& candidates,
                   std::size_t need, std::vector<Elem>& slots, const QuadraticForm& partial,
                   std::size_t from) {
    if (slots.size() == need) return isometric(partial, phi);
    for (std::size_t i = from; i < candidates.size(); ++i) {
        const Elem a = candidates[i];
        QuadraticForm next = tensor(partial, QuadraticForm(phi.model(),
                                                           {0, phi.model()->group().negate(a)}));
        if (next.dim() <= phi.dim() && is_subform(next, phi)) {
            slots.push_back(a);
            if (recognize_dfs(phi, candidates, need, slots, next, i)) return true;
            slots.pop_back();
        }
    }
    return false;
}

}  // namespace

std::optional<std::vector<Elem>> pfister_recognize(const QuadraticForm& phi) {
    const auto d = phi.dim();
    if (d == 0 || (d & (d - 1)) != 0)
        throw DimensionError("Pfister recognition needs dimension a power of two");
    if (!represents(phi, 0)) return std::nullopt;  // must represent 1
    std::size_t n = 0;
    while ((std::size_t{1} << n) < d) ++n;
    if (n == 0) return std::vector<Elem>{};  // <1>
    const ClassSet dset = rep_set(phi);
    std::vector<Elem> candidates;
    dset.for_each([&](Elem b) { candidates.push_back(phi.model()->group().negate(b)); });
    std::sort(candidates.begin(), candidates.end());
    std::vector<Elem> slots;
    QuadraticForm one(phi.model(), {0});
    if (recognize_dfs(phi, candidates, n, slots, one, 0)) return slots;
    return std::nullopt;
}

std::optional<std::pair<Elem, std::vector<Elem>>> pfister_similar(const QuadraticForm& phi) {
    const auto d = phi.dim();
    if (d == 0 || (d & (d - 1)) != 0)
        throw DimensionError("Pfister recognition needs dimension a power of two");
    for (Elem s : rep_set(phi).elements()) {
        // a scaling factor must be represented: s*phi represents 1
        auto slots = pfister_recognize(phi.scaled(s));
        if (slots) return std::make_pair(s, std::move(*slots));
    }
    return std::nullopt;
}

QuadraticForm pure_part(const QuadraticForm& pfister) {
    const auto d = pfister.dim();
    if (d == 0 || (d & (d - 1)) != 0 || !represents(pfister, 0))
        throw NotPfisterError("pure part requires a Pfister form");
    return canonicalize(split_off(pfister, 0));
}

}  // namespace wittkit
