#include "ulis/rank_sequence.hpp"

#include <algorithm>

#include "ulis/lis.hpp"
#include "ulis/pattern.hpp"

namespace ulis {

const char* condition_name(RankCondition c) {
    switch (c) {
        case RankCondition::Empty: return "empty";
        case RankCondition::NonPositive: return "non-positive";
        case RankCondition::SteepDrop: return "drop-greater-than-one";
        case RankCondition::BadEnd: return "does-not-end-in-1";
    }
    return "unknown";
}

std::string RankViolation::describe() const {
    return std::string(condition_name(condition)) + " at position " + std::to_string(position);
}

InvalidRankSequence::InvalidRankSequence(RankViolation v)
    : InvalidInput("invalid rank sequence: " + v.describe()), violation_(v) {}

std::optional<RankViolation> check_rank_values(std::span<const int> values) {
    const std::size_t n = values.size();
    if (n == 0) return RankViolation{RankCondition::Empty, 0};
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] < 1) return RankViolation{RankCondition::NonPositive, i + 1};
        if (i + 1 < n && values[i] - values[i + 1] > 1)
            return RankViolation{RankCondition::SteepDrop, i + 1};
    }
    if (values[n - 1] != 1) return RankViolation{RankCondition::BadEnd, n};
    return std::nullopt;
}

RankSequence::RankSequence(std::vector<int> values) : values_(std::move(values)) {
    if (auto v = check_rank_values(values_)) throw InvalidRankSequence(*v);
}

int RankSequence::at(std::size_t pos) const {
    if (pos < 1 || pos > values_.size()) {
        throw InvalidInput("position " + std::to_string(pos) + " out of range 1.." +
                           std::to_string(values_.size()));
    }
    return values_[pos - 1];
}

std::string to_string(const RankSequence& t) { return to_string(t.values()); }

RankSequence rank_sequence(const Permutation& p) { return RankSequence(rank_values(p)); }

RankSequenceEnumerator::RankSequenceEnumerator(std::size_t n, std::size_t cap) {
    if (n < 1) throw InvalidInput("rank sequences need n >= 1");
    if (n > cap) {
        throw InvalidInput("rank sequence enumeration is capped at n = " + std::to_string(cap) +
                           "; got n = " + std::to_string(n));
    }
    current_.assign(n, 1);
}

// Lexicographic successor. Index i (0-based) may hold at most n - i, which
// is exactly the room needed to step down to a final 1.
const std::vector<int>* RankSequenceEnumerator::next_values() {
    if (finished_) return nullptr;
    if (!started_) {
        started_ = true;
        return &current_;
    }
    const std::size_t n = current_.size();
    std::size_t i = n - 1;
    while (i-- > 0) {
        if (current_[i] + 1 <= static_cast<int>(n - i)) break;
    }
    if (i >= n) {  // wrapped: no position can grow
        finished_ = true;
        return nullptr;
    }
    ++current_[i];
    for (std::size_t j = i + 1; j < n; ++j) current_[j] = std::max(1, current_[j - 1] - 1);
    return &current_;
}

std::optional<RankSequence> RankSequenceEnumerator::next() {
    if (const auto* v = next_values()) return RankSequence(*v);
    return std::nullopt;
}

std::vector<RankSequence> enumerate_rank_sequences(std::size_t n, std::size_t cap) {
    std::vector<RankSequence> out;
    RankSequenceEnumerator e(n, cap);
    while (auto t = e.next()) out.push_back(std::move(*t));
    return out;
}

namespace {

// Each partial product is itself a binomial coefficient, so every division
// is exact.
BigInt binomial(std::size_t m, std::size_t k) {
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= (m - k + i);
        r /= i;
    }
    return r;
}

}  // namespace

BigInt catalan(std::size_t n) {
    BigInt c = binomial(2 * n, n);
    if (c % (n + 1) != 0) throw ConstructionError("binom(2n, n) not divisible by n + 1");
    return c / (n + 1);
}

Permutation invert(const RankSequence& t, bool verify) {
    const std::size_t n = t.size();
    std::vector<int> perm(n, 0);
    const auto rank = t.values();

    const auto first_one = std::find(rank.begin(), rank.end(), 1) - rank.begin();
    std::size_t q = static_cast<std::size_t>(first_one);
    perm[q] = static_cast<int>(n);

    for (int v = static_cast<int>(n) - 1; v >= 1; --v) {
        const int k = rank[q];
        std::size_t chosen = n;
        for (std::size_t pos = 0; pos < q; ++pos) {
            if (perm[pos] == 0 && rank[pos] == k + 1) {
                chosen = pos;
                break;
            }
        }
        if (chosen == n) {
            // Leftmost unfilled position whose rank would be realized by the
            // larger values already placed to its right.
            int filled_right_max = 0;
            for (std::size_t pos = n; pos-- > 0;) {
                if (perm[pos] != 0) {
                    filled_right_max = std::max(filled_right_max, rank[pos]);
                } else if (rank[pos] == filled_right_max + 1) {
                    chosen = pos;
                }
            }
        }
        if (chosen == n) {
            throw ConstructionError("invert: no position for value " + std::to_string(v) +
                                    " in " + to_string(t));
        }
        perm[chosen] = v;
        q = chosen;
    }

    Permutation p(std::move(perm));
#ifndef NDEBUG
    verify = true;
#endif
    if (verify) {
        if (rank_values(p) != std::vector<int>(rank.begin(), rank.end()))
            throw ConstructionError("invert: ranks of " + to_string(p) + " differ from " + to_string(t));
        if (!avoids(p, pattern_132()))
            throw ConstructionError("invert: " + to_string(p) + " contains 132");
    }
    return p;
}

}  // namespace ulis
