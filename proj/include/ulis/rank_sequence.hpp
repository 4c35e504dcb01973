#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ulis/permutation.hpp"
#include "ulis/types.hpp"

namespace ulis {

/// Which structural condition of S_n a sequence breaks.
enum class RankCondition {
    Empty,        // the sequence has no entries
    NonPositive,  // an entry below 1
    SteepDrop,    // values[i] - values[i+1] > 1
    BadEnd,       // last entry is not 1
};

const char* condition_name(RankCondition c);

/// A failed membership check: the broken condition and the 1-based
/// position where it was detected (for SteepDrop, the left entry of the
/// offending pair).
struct RankViolation {
    RankCondition condition;
    std::size_t position;

    std::string describe() const;
    friend bool operator==(const RankViolation&, const RankViolation&) = default;
};

class InvalidRankSequence : public InvalidInput {
public:
    explicit InvalidRankSequence(RankViolation v);
    const RankViolation& violation() const noexcept { return violation_; }

private:
    RankViolation violation_;
};

/// First violated condition scanning left to right, if any.
std::optional<RankViolation> check_rank_values(std::span<const int> values);

/// A member of S_n: positive entries, adjacent drops of at most one,
/// final entry 1. Every entry then satisfies values[i] <= n - i + 1.
class RankSequence {
public:
    /// Throws InvalidRankSequence.
    explicit RankSequence(std::vector<int> values);

    std::size_t size() const noexcept { return values_.size(); }
    int at(std::size_t pos) const;  // 1-based
    int operator[](std::size_t index0) const noexcept { return values_[index0]; }
    std::span<const int> values() const noexcept { return values_; }

    friend bool operator==(const RankSequence&, const RankSequence&) = default;
    friend auto operator<=>(const RankSequence&, const RankSequence&) = default;

private:
    std::vector<int> values_;
};

inline RankSequence validate(std::vector<int> values) { return RankSequence(std::move(values)); }

std::string to_string(const RankSequence& t);

/// R(p). Throws InvalidRankSequence when the ranks of `p` fall outside S_n,
/// which can only happen when p contains 132; rank_values is total.
RankSequence rank_sequence(const Permutation& p);

/// Members of S_n in lexicographic order. Single consumer.
class RankSequenceEnumerator {
public:
    /// Throws InvalidInput unless 1 <= n <= cap.
    explicit RankSequenceEnumerator(std::size_t n,
                                    std::size_t cap = default_limits().sequence_cap);

    std::optional<RankSequence> next();

    /// Advances in place and exposes the raw values; avoids a copy per
    /// member in hot loops. Returns nullptr when exhausted.
    const std::vector<int>* next_values();

private:
    std::vector<int> current_;
    bool started_ = false;
    bool finished_ = false;
};

std::vector<RankSequence> enumerate_rank_sequences(
    std::size_t n, std::size_t cap = default_limits().sequence_cap);

/// C_n = binom(2n, n) / (n + 1), evaluated with exact integer steps only.
BigInt catalan(std::size_t n);

/// R^{-1}: the unique 132-avoiding permutation whose rank sequence is `t`.
///
/// Values are placed from n downward. n goes to the leftmost 1. After
/// placing a value of rank k at position q, the next value goes to the
/// leftmost unfilled rank-(k+1) position left of q if one exists;
/// otherwise to the leftmost unfilled position whose rank is exactly one
/// more than the largest rank already placed to its right.
///
/// With `verify` set, the result is recomputed through rank_sequence and
/// checked for 132; a mismatch throws ConstructionError. Debug builds
/// always verify.
Permutation invert(const RankSequence& t, bool verify = false);

}  // namespace ulis
