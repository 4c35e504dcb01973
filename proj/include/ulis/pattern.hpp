#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ulis/permutation.hpp"
#include "ulis/types.hpp"

namespace ulis {

/// Result of a containment query. `witness` holds 1-based ascending
/// positions and is present exactly when `contains` is true.
struct PatternVerdict {
    bool contains = false;
    std::optional<std::array<std::size_t, 3>> witness;
};

/// Order-isomorphism test of a 3-entry window against a length-3 pattern.
bool matches_pattern(int a, int b, int c, const Permutation& pattern);

/// Brute force over all position triples; the witness is the
/// lexicographically least matching triple. Throws InvalidInput unless
/// `pattern` has length 3.
PatternVerdict contains_pattern(const Permutation& p, const Permutation& pattern);

inline bool avoids(const Permutation& p, const Permutation& pattern) {
    return !contains_pattern(p, pattern).contains;
}

inline const Permutation& pattern_132() {
    static const Permutation p{1, 3, 2};
    return p;
}

/// Lexicographic stream of the permutations of length n avoiding a
/// length-3 pattern, built by depth-first extension with pruning. Single
/// consumer.
class AvoiderEnumerator {
public:
    /// Throws InvalidInput when n exceeds `cap` or the pattern is not of
    /// length 3.
    AvoiderEnumerator(std::size_t n, Permutation pattern,
                      std::size_t cap = default_limits().avoider_cap);

    std::optional<Permutation> next();

private:
    bool extends(std::size_t depth, int value) const;
    bool advance();

    std::size_t n_;
    Permutation pattern_;
    std::vector<int> prefix_;
    std::vector<bool> used_;
    bool started_ = false;
    bool finished_ = false;
};

/// Convenience wrappers over AvoiderEnumerator.
std::vector<Permutation> enumerate_avoiders(std::size_t n, const Permutation& pattern,
                                            std::size_t cap = default_limits().avoider_cap);
void for_each_avoider(std::size_t n, const Permutation& pattern,
                      const std::function<void(const Permutation&)>& visit,
                      std::size_t cap = default_limits().avoider_cap);

/// All six length-3 patterns in lexicographic order.
std::array<Permutation, 6> length3_patterns();

}  // namespace ulis
