#pragma once

#include <cstddef>
#include <vector>

#include "ulis/permutation.hpp"
#include "ulis/types.hpp"

namespace ulis {

/// Length of a longest increasing subsequence and the number of distinct
/// index sets attaining it.
struct LisStats {
    std::size_t length = 0;
    BigInt count = 1;
};

/// Quadratic dynamic program. The empty permutation gives (0, 1).
LisStats lis_stats(const Permutation& p);

/// True iff exactly one index set attains the LIS length. The empty
/// permutation counts as having one (the empty subsequence).
bool has_ulis(const Permutation& p);

/// Position i holds the length of the longest increasing subsequence that
/// begins at p_i. Total on all permutations.
std::vector<int> rank_values(const Permutation& p);

/// Number of maximum-length increasing subsequences beginning at 1-based
/// position `pos`. Throws InvalidInput when pos is out of range.
BigInt count_maximal_starting_at(const Permutation& p, std::size_t pos);

}  // namespace ulis
