#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ulis {

/// A rearrangement of 1..n. Positions are 1-based in the public API.
class Permutation {
public:
    Permutation() = default;

    /// Throws InvalidInput unless `entries` is a rearrangement of 1..n.
    explicit Permutation(std::vector<int> entries);
    Permutation(std::initializer_list<int> entries)
        : Permutation(std::vector<int>(entries)) {}

    static Permutation identity(std::size_t n);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Entry at 1-based position `pos`.
    int at(std::size_t pos) const;
    int operator[](std::size_t index0) const noexcept { return entries_[index0]; }

    std::span<const int> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> entries_;
};

/// Parses "3 4 2 5 6 1 7 8" or, for n <= 9, the compact digit form "34256178".
std::vector<int> parse_integers(std::string_view text);
Permutation parse_permutation(std::string_view text);

/// Space separated, e.g. "3 4 2 5 6 1 7 8".
std::string to_string(std::span<const int> values);
std::string to_string(const Permutation& p);
/// Digits run together; only sensible when every value is below 10.
std::string to_compact_string(std::span<const int> values);

}  // namespace ulis
