#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wittkit {

// A square class: bitmask over the group generators (generator i = bit i).
// The identity class ("1") is 0. Canonical element order is numeric order
// of this mask.
using Elem = std::uint32_t;

// A value of the symbol map: bitmask over a basis of the elementary
// abelian 2-group H.
using HElem = std::uint32_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(what), line(line), column(column) {}
    int line;
    int column;
};

struct ValidationError : Error { using Error::Error; };
struct ModelMismatchError : Error { using Error::Error; };
struct EmptyFormError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct NotPfisterError : Error { using Error::Error; };
struct NonRealModelError : Error { using Error::Error; };
struct NotTotallyPositiveError : Error { using Error::Error; };
struct UnsupportedError : Error { using Error::Error; };
struct CapExceededError : Error { using Error::Error; };
struct CapTooSmallError : Error { using Error::Error; };
struct SearchExhaustedError : Error { using Error::Error; };
struct ConsistencyError : Error { using Error::Error; };
struct LocalGlobalError : ConsistencyError { using ConsistencyError::ConsistencyError; };
struct NameCollisionError : Error { using Error::Error; };
struct NotAnExtensionError : Error { using Error::Error; };
struct UnknownModelError : Error { using Error::Error; };

// Subset of a square class group of order `universe` (a power of two),
// stored as a bitset indexed by the element mask.
class ClassSet {
public:
    ClassSet() = default;
    explicit ClassSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static ClassSet full(std::size_t universe) {
        ClassSet s(universe);
        for (Elem e = 0; e < universe; ++e) s.insert(e);
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(Elem e) const {
        return (words_[e >> 6] >> (e & 63)) & 1u;
    }
    void insert(Elem e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
        return n;
    }

    ClassSet& operator|=(const ClassSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    ClassSet& operator&=(const ClassSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    friend bool operator==(const ClassSet& a, const ClassSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    friend bool operator!=(const ClassSet& a, const ClassSet& b) { return !(a == b); }

    bool is_subset_of(const ClassSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    // {g*x : x in this}; group multiplication is XOR of masks.
    ClassSet scaled(Elem g) const {
        ClassSet out(universe_);
        for_each([&](Elem e) { out.insert(e ^ g); });
        return out;
    }

    template <typename F>
    void for_each(F f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                f(static_cast<Elem>(wi * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        out.reserve(count());
        for_each([&](Elem e) { out.push_back(e); });
        return out;
    }

    std::optional<Elem> least() const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
            if (words_[wi])
                return static_cast<Elem>(wi * 64 +
                                         static_cast<std::size_t>(__builtin_ctzll(words_[wi])));
        return std::nullopt;
    }

    // Closed under the group law (XOR) and contains the identity.
    bool is_subgroup() const {
        if (!contains(0)) return false;
        auto es = elements();
        for (Elem a : es)
            for (Elem b : es)
                if (!contains(a ^ b)) return false;
        return true;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace wittkit
