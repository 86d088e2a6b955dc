#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "wittkit/types.hpp"

namespace wittkit::detail {

struct VecHash {
    std::size_t operator()(const std::vector<Elem>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Elem e : v) {
            h ^= e;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Per-model memo caches for the form algebra. Keys are sorted entry
// multisets (canonical entries for witt_orders). Fills are idempotent, so
// a plain mutex suffices.
struct EngineCache {
    std::mutex mutex;
    std::unordered_map<std::vector<Elem>, ClassSet, VecHash> rep_sets;
    std::unordered_map<std::vector<Elem>, std::vector<Elem>, VecHash> canonical;
    std::unordered_map<std::vector<Elem>, std::optional<unsigned>, VecHash> witt_orders;
};

}  // namespace wittkit::detail
