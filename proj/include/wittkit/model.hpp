#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "wittkit/types.hpp"

namespace wittkit {

class TorsionSubgroup;  // witt.hpp

namespace detail {
struct EngineCache;
}

// Elementary abelian 2-group F*/F*^2 on named generators, with a
// distinguished class of -1. Elements are bitmasks over the generators.
class SquareClassGroup {
public:
    SquareClassGroup(std::vector<std::string> generator_names, Elem minus_one);

    int rank() const { return static_cast<int>(names_.size()); }
    std::size_t order() const { return std::size_t{1} << rank(); }
    Elem identity() const { return 0; }
    Elem minus_one() const { return minus_one_; }
    Elem negate(Elem a) const { return a ^ minus_one_; }
    const std::vector<std::string>& generator_names() const { return names_; }

    // Canonical word for an element: `1`, `-1`, `2*3`, `-2*3`, ...
    // The `-` prefix is used when the minus-one class is a single generator.
    std::string element_word(Elem e) const;

    // Parses a `*`-separated product of generator names, optional leading
    // `-` on a factor (multiplication by the minus-one class) and `1`.
    // With allow_sign = false the `-` prefix is rejected (used for the
    // minus_one line itself, where it would be circular).
    Elem parse_word(std::string_view word, bool allow_sign = true) const;

private:
    std::vector<std::string> names_;
    Elem minus_one_;
};

// Symmetric bilinear map q : G x G -> H given by its values on generator
// pairs and extended additively. Models the quaternion symbol:
// b in D<1,a>  iff  q(-a, b) = 0.
class SymbolMap {
public:
    SymbolMap(int target_rank, std::vector<std::vector<HElem>> generator_values);

    int target_rank() const { return target_rank_; }
    const std::vector<std::vector<HElem>>& generator_values() const { return values_; }

    // Bilinear expansion; used by validation. FieldModel precomputes a
    // faster table for the hot path.
    HElem eval(Elem a, Elem b) const;

private:
    int target_rank_;
    std::vector<std::vector<HElem>> values_;  // k x k, values_[i][j] = q(g_i, g_j)
};

// An ordering of the model: a character sigma on G with sigma(-1) = -1
// whose positive cone is closed under binary representation. Stored as a
// GF(2) functional; sigma(a) = (-1)^<functional, a>.
class Ordering {
public:
    explicit Ordering(std::uint32_t functional) : functional_(functional) {}
    std::uint32_t functional() const { return functional_; }
    int sign(Elem a) const {
        return (__builtin_popcount(functional_ & a) & 1) ? -1 : +1;
    }
    friend bool operator==(const Ordering& a, const Ordering& b) {
        return a.functional_ == b.functional_;
    }

private:
    std::uint32_t functional_;
};

struct ValidationCheck {
    std::string name;
    bool pass;
    std::string witness;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool formally_real = false;
    bool pythagorean = false;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// A finitely presented field model: square class group plus symbol map.
// Immutable after creation; all derived data (orderings, positive cone,
// validation report, kernel tables) is computed up front, so concurrent
// use is safe. Shared memo caches for the form algebra are internally
// synchronized.
class FieldModel {
public:
    // Builds the model and runs every axiom check. Never throws on axiom
    // failure; inspect validation(). load_model() enforces validity.
    static std::shared_ptr<const FieldModel> create(std::string name, SquareClassGroup group,
                                                    SymbolMap symbol);

    // Laurent extension bookkeeping; set by laurent_extend().
    static std::shared_ptr<const FieldModel> create_extension(
        std::string name, SquareClassGroup group, SymbolMap symbol,
        std::shared_ptr<const FieldModel> base, std::string varname);

    const std::string& name() const { return name_; }
    const SquareClassGroup& group() const { return group_; }
    const SymbolMap& symbol() const { return symbol_; }
    std::size_t order() const { return group_.order(); }

    HElem q(Elem a, Elem b) const;

    // {b : q(x, b) = 0}; D<1,a> = kernel(-a). Always a subgroup.
    const ClassSet& kernel(Elem x) const { return kernels_[x]; }
    bool in_binary_value_set(Elem a, Elem b) const {
        return kernels_[group_.negate(a)].contains(b);
    }

    const ValidationReport& validation() const { return validation_; }
    bool valid() const { return validation_.all_pass(); }

    const std::vector<Ordering>& orderings() const { return orderings_; }
    bool formally_real() const { return !orderings_.empty(); }
    // Totally positive classes; meaningful only for formally real models
    // (empty otherwise).
    const ClassSet& sums_of_squares() const { return sigma_; }
    bool pythagorean() const { return formally_real() && sigma_.count() == 1; }

    bool is_extension() const { return base_ != nullptr; }
    const std::shared_ptr<const FieldModel>& base() const { return base_; }
    const std::string& extension_var() const { return varname_; }
    // Bit index of the extension variable in this model's group.
    int extension_bit() const { return group_.rank() - 1; }

    detail::EngineCache& engine_cache() const { return *cache_; }

    // Torsion subgroup cache (filled by witt.cpp on first use).
    mutable std::mutex torsion_mutex;
    mutable std::shared_ptr<const TorsionSubgroup> torsion_cache;

    ~FieldModel();

private:
    FieldModel(std::string name, SquareClassGroup group, SymbolMap symbol,
               std::shared_ptr<const FieldModel> base, std::string varname);

    void build_tables();
    void run_validation();
    void enumerate_orderings();

    std::string name_;
    SquareClassGroup group_;
    SymbolMap symbol_;
    std::shared_ptr<const FieldModel> base_;
    std::string varname_;

    // q(g_j, a) for each generator j and element a; q(a,b) folds over the
    // set bits of b.
    std::vector<std::vector<HElem>> gen_table_;
    std::vector<ClassSet> kernels_;
    std::vector<Ordering> orderings_;
    ClassSet sigma_;
    ValidationReport validation_;
    std::unique_ptr<detail::EngineCache> cache_;
};

using ModelPtr = std::shared_ptr<const FieldModel>;

// Exact list of all orderings, lexicographic in the character functional.
// (Already computed at validation time; this re-exposes it as the
// module-level operation.)
const std::vector<Ordering>& enumerate_orderings(const ModelPtr& model);

// Sigma = classes positive at every ordering. Throws NonRealModelError if
// the model has no orderings.
const ClassSet& positive_cone(const ModelPtr& model);

// Full axiom report for an already-built model.
const ValidationReport& validate_model(const ModelPtr& model);

}  // namespace wittkit
