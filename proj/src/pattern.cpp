#include "ulis/pattern.hpp"

#include <algorithm>

namespace ulis {

namespace {

void require_length3(const Permutation& pattern) {
    if (pattern.size() != 3) {
        throw InvalidInput("pattern must have length 3, got length " +
                           std::to_string(pattern.size()));
    }
}

}  // namespace

bool matches_pattern(int a, int b, int c, const Permutation& pattern) {
    const int x = pattern[0], y = pattern[1], z = pattern[2];
    return ((a < b) == (x < y)) && ((a < c) == (x < z)) && ((b < c) == (y < z));
}

PatternVerdict contains_pattern(const Permutation& p, const Permutation& pattern) {
    require_length3(pattern);
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (matches_pattern(p[i], p[j], p[k], pattern))
                    return {true, std::array<std::size_t, 3>{i + 1, j + 1, k + 1}};
    return {};
}

AvoiderEnumerator::AvoiderEnumerator(std::size_t n, Permutation pattern, std::size_t cap)
    : n_(n), pattern_(std::move(pattern)), used_(n + 1, false) {
    require_length3(pattern_);
    if (n > cap) {
        throw InvalidInput("avoider enumeration is capped at n = " + std::to_string(cap) +
                           "; got n = " + std::to_string(n) + " (raise the cap to go further)");
    }
    prefix_.reserve(n);
}

// Would appending `value` at `depth` complete the pattern as the last entry
// of some triple?
bool AvoiderEnumerator::extends(std::size_t depth, int value) const {
    for (std::size_t i = 0; i < depth; ++i)
        for (std::size_t j = i + 1; j < depth; ++j)
            if (matches_pattern(prefix_[i], prefix_[j], value, pattern_)) return false;
    return true;
}

// Moves to the next complete avoider in lexicographic order. The prefix
// invariant: every stored prefix avoids the pattern.
bool AvoiderEnumerator::advance() {
    int from = 1;
    if (started_) {
        if (prefix_.empty()) return false;  // n == 0 has a single member
        from = prefix_.back() + 1;
        used_[prefix_.back()] = false;
        prefix_.pop_back();
    }
    started_ = true;
    while (true) {
        if (prefix_.size() == n_) return true;
        const std::size_t depth = prefix_.size();
        int chosen = 0;
        for (int v = from; v <= static_cast<int>(n_); ++v) {
            if (!used_[v] && extends(depth, v)) {
                chosen = v;
                break;
            }
        }
        if (chosen) {
            prefix_.push_back(chosen);
            used_[chosen] = true;
            from = 1;
            continue;
        }
        if (prefix_.empty()) return false;
        from = prefix_.back() + 1;
        used_[prefix_.back()] = false;
        prefix_.pop_back();
    }
}

std::optional<Permutation> AvoiderEnumerator::next() {
    if (finished_) return std::nullopt;
    if (!advance()) {
        finished_ = true;
        return std::nullopt;
    }
    return Permutation(prefix_);
}

std::vector<Permutation> enumerate_avoiders(std::size_t n, const Permutation& pattern,
                                            std::size_t cap) {
    std::vector<Permutation> out;
    for_each_avoider(n, pattern, [&](const Permutation& p) { out.push_back(p); }, cap);
    return out;
}

void for_each_avoider(std::size_t n, const Permutation& pattern,
                      const std::function<void(const Permutation&)>& visit, std::size_t cap) {
    AvoiderEnumerator e(n, pattern, cap);
    while (auto p = e.next()) visit(*p);
}

std::array<Permutation, 6> length3_patterns() {
    return {Permutation{1, 2, 3}, Permutation{1, 3, 2}, Permutation{2, 1, 3},
            Permutation{2, 3, 1}, Permutation{3, 1, 2}, Permutation{3, 2, 1}};
}

}  // namespace ulis
