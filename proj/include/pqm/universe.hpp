#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pqm/error.hpp"

namespace pqm {

/// Maximum universe size; index sets are packed into a single 64-bit word.
inline constexpr int kMaxUniverse = 64;

/// Finite indexed universe {u_0, ..., u_{n-1}} with optional display labels.
struct Universe {
    int n = 0;
    std::vector<std::string> labels;  // always size n once constructed

    bool operator==(const Universe& other) const = default;
};

inline Universe make_universe(int n, std::vector<std::string> labels = {}) {
    require(n >= 1, "BadUniverse", "universe needs at least one element");
    require(n <= kMaxUniverse, "BadUniverse", "universe size capped at 64");
    if (labels.empty()) {
        labels.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) labels.push_back("u" + std::to_string(i));
    }
    require(static_cast<int>(labels.size()) == n, "BadUniverse", "need exactly n labels");
    std::set<std::string> uniq(labels.begin(), labels.end());
    require(static_cast<int>(uniq.size()) == n, "BadUniverse", "labels must be distinct");
    return Universe{n, std::move(labels)};
}

/// Single-letter labels a, b, c, ... (n <= 26); the shorthand used for worked examples.
inline Universe letter_universe(int n) {
    require(n >= 1 && n <= 26, "BadUniverse", "letter labels limited to n <= 26");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
    return Universe{n, std::move(labels)};
}

inline void check_same_universe(const Universe& a, const Universe& b) {
    require(a == b, "UniverseMismatch", "operands live on different universes");
}

inline std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

}  // namespace pqm
