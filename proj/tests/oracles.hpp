#pragma once

// Test-only oracles, independent of the library's enumeration paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "cycdes/permcore.hpp"
#include "cycdes/tableaux.hpp"

namespace oracles {

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline void for_each_perm(int n, const std::function<void(const cycdes::Permutation&)>& fn) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(cycdes::Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

// Counts standard fillings by removing a maximal cell (no right or lower
// neighbor) and recursing; memoized on the remaining cell set.
inline long long syt_count_by_removal(const cycdes::SkewShape& shape) {
    using Key = std::vector<std::pair<int, int>>;
    static std::map<Key, long long> memo;
    std::function<long long(const Key&)> rec = [&](const Key& cells) -> long long {
        if (cells.empty()) return 1;
        auto it = memo.find(cells);
        if (it != memo.end()) return it->second;
        auto has = [&](int r, int c) {
            return std::binary_search(cells.begin(), cells.end(), std::make_pair(r, c));
        };
        long long total = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            auto [r, c] = cells[i];
            if (has(r, c + 1) || has(r + 1, c)) continue;  // not removable
            Key rest = cells;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            total += rec(rest);
        }
        memo[cells] = total;
        return total;
    };
    Key cells;
    for (const cycdes::Cell& c : shape.cells()) cells.emplace_back(c.row, c.col);
    return rec(cells);
}

// Product formula for straight shapes.
inline long long hook_length_count(const cycdes::Partition& lambda) {
    int n = 0;
    for (int p : lambda) n += p;
    std::vector<int> conj(static_cast<std::size_t>(lambda.empty() ? 0 : lambda[0]), 0);
    for (int p : lambda)
        for (int c = 0; c < p; ++c) ++conj[static_cast<std::size_t>(c)];
    long long numer = 1;
    for (int i = 2; i <= n; ++i) numer *= i;
    long long denom = 1;
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (int c = 0; c < lambda[r]; ++c)
            denom *= (lambda[r] - c) + (conj[static_cast<std::size_t>(c)] - static_cast<int>(r)) - 1;
    return numer / denom;
}

}  // namespace oracles
