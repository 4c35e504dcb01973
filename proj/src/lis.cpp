#include "ulis/lis.hpp"

#include <algorithm>
#include <cstdint>

namespace ulis {

namespace {

// At most 2^n - 1 index sets exist, so 64-bit counts are exact below n = 64.
constexpr std::size_t kNarrowCountLimit = 64;

// ending[i] = (length, count) of longest increasing subsequences ending at i.
template <class Count>
LisStats lis_stats_impl(const Permutation& p) {
    const std::size_t n = p.size();
    if (n == 0) return {0, 1};
    std::vector<std::size_t> len(n, 1);
    std::vector<Count> cnt(n, Count(1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t h = 0; h < i; ++h) {
            if (p[h] >= p[i]) continue;
            if (len[h] + 1 > len[i]) {
                len[i] = len[h] + 1;
                cnt[i] = cnt[h];
            } else if (len[h] + 1 == len[i]) {
                cnt[i] += cnt[h];
            }
        }
    }
    const std::size_t best = *std::max_element(len.begin(), len.end());
    Count total(0);
    for (std::size_t i = 0; i < n; ++i)
        if (len[i] == best) total += cnt[i];
    return {best, BigInt(total)};
}

// rank[i] and the number of maximal subsequences starting at i.
template <class Count>
void starting_stats(const Permutation& p, std::vector<int>& rank, std::vector<Count>& cnt) {
    const std::size_t n = p.size();
    rank.assign(n, 1);
    cnt.assign(n, Count(1));
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (p[j] <= p[i]) continue;
            if (rank[j] + 1 > rank[i]) {
                rank[i] = rank[j] + 1;
                cnt[i] = cnt[j];
            } else if (rank[j] + 1 == rank[i]) {
                cnt[i] += cnt[j];
            }
        }
    }
}

}  // namespace

LisStats lis_stats(const Permutation& p) {
    if (p.size() < kNarrowCountLimit) return lis_stats_impl<std::uint64_t>(p);
    return lis_stats_impl<BigInt>(p);
}

bool has_ulis(const Permutation& p) { return lis_stats(p).count == 1; }

std::vector<int> rank_values(const Permutation& p) {
    const std::size_t n = p.size();
    std::vector<int> rank(n, 1);
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = i + 1; j < n; ++j)
            if (p[j] > p[i]) rank[i] = std::max(rank[i], rank[j] + 1);
    return rank;
}

BigInt count_maximal_starting_at(const Permutation& p, std::size_t pos) {
    if (pos < 1 || pos > p.size()) {
        throw InvalidInput("position " + std::to_string(pos) + " out of range 1.." +
                           std::to_string(p.size()));
    }
    std::vector<int> rank;
    if (p.size() < kNarrowCountLimit) {
        std::vector<std::uint64_t> cnt;
        starting_stats(p, rank, cnt);
        return BigInt(cnt[pos - 1]);
    }
    std::vector<BigInt> cnt;
    starting_stats(p, rank, cnt);
    return cnt[pos - 1];
}

}  // namespace ulis
