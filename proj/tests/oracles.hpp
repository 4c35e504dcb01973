#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library's dynamic programs or constructions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline std::vector<Perm> all_permutations(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Perm> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline bool increasing_subset(const Perm& p, std::uint32_t mask) {
    int last = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!(mask >> i & 1u)) continue;
        if (p[i] <= last) return false;
        last = p[i];
    }
    return true;
}

struct Lis {
    int length = 0;
    std::uint64_t count = 0;
};

// Every index subset, kept when increasing.
inline Lis lis(const Perm& p) {
    Lis best;
    const std::uint32_t limit = 1u << p.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (!increasing_subset(p, mask)) continue;
        const int len = __builtin_popcount(mask);
        if (len > best.length) {
            best = {len, 1};
        } else if (len == best.length) {
            ++best.count;
        }
    }
    return best;
}

// Increasing subsets whose lowest index is `start` (0-based).
inline Lis lis_from(const Perm& p, std::size_t start) {
    Lis best;
    const std::uint32_t limit = 1u << p.size();
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (!(mask >> start & 1u) || (mask & ((1u << start) - 1u))) continue;
        if (!increasing_subset(p, mask)) continue;
        const int len = __builtin_popcount(mask);
        if (len > best.length) {
            best = {len, 1};
        } else if (len == best.length) {
            ++best.count;
        }
    }
    return best;
}

inline std::vector<int> ranks(const Perm& p) {
    std::vector<int> r;
    for (std::size_t i = 0; i < p.size(); ++i) r.push_back(lis_from(p, i).length);
    return r;
}

inline bool order_isomorphic(int a, int b, int c, const Perm& pat) {
    const int vals[3] = {a, b, c};
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if ((vals[x] < vals[y]) != (pat[x] < pat[y])) return false;
    return true;
}

inline std::optional<std::vector<std::size_t>> first_occurrence(const Perm& p, const Perm& pat) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (order_isomorphic(p[i], p[j], p[k], pat))
                    return std::vector<std::size_t>{i + 1, j + 1, k + 1};
    return std::nullopt;
}

inline std::vector<Perm> avoiders(int n, const Perm& pat) {
    std::vector<Perm> out;
    for (auto& p : all_permutations(n))
        if (!first_occurrence(p, pat)) out.push_back(p);
    return out;
}

// Filter of {1..n}^n by the two structural conditions.
inline std::vector<std::vector<int>> rank_family(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n, 1);
    while (true) {
        bool ok = cur.back() == 1;
        for (int i = 0; ok && i + 1 < n; ++i) ok = cur[i] - cur[i + 1] <= 1;
        if (ok) out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[i] == n) cur[i--] = 1;
        if (i < 0) break;
        ++cur[i];
    }
    return out;
}

// Segner recurrence, independent of the binomial route.
inline std::vector<std::uint64_t> catalan_table(int n) {
    std::vector<std::uint64_t> c(n + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int i = 0; i < m; ++i) c[m] += c[i] * c[m - 1 - i];
    return c;
}

// The unique 132-avoider with the given ranks, by search.
inline std::optional<Perm> preimage(const std::vector<int>& t) {
    for (auto& p : avoiders(static_cast<int>(t.size()), {1, 3, 2}))
        if (ranks(p) == t) return p;
    return std::nullopt;
}

}  // namespace oracle
