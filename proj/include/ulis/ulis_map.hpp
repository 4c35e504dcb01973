#pragma once

#include <cstddef>
#include <vector>

#include "ulis/permutation.hpp"
#include "ulis/rank_sequence.hpp"

namespace ulis {

/// Maximum value of a rank sequence and where it occurs.
struct MaxProfile {
    int k = 0;
    std::vector<std::size_t> occurrences;  // ascending, 1-based
    bool unique = false;
};

MaxProfile max_profile(const RankSequence& t);

/// f: with i < j the last two positions holding the maximum k, adds one to
/// every entry on [i, j). Defined only on sequences whose maximum repeats;
/// a unique maximum throws InvalidInput. The result is re-validated and
/// its new maximum k + 1 checked to be unique (ConstructionError if not).
RankSequence raise_final_max_block(const RankSequence& t);

/// Intermediate values of g, for tracing.
struct UlisMapTrace {
    RankSequence before;
    RankSequence after;
    Permutation image;
};

/// g = R^{-1} o f o R on 132-avoiders without a ULIS. The precondition is
/// recomputed: a 132 occurrence or an existing ULIS throws InvalidInput.
UlisMapTrace map_to_ulis_traced(const Permutation& p);
Permutation map_to_ulis(const Permutation& p);

}  // namespace ulis
