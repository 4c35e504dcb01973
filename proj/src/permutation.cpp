#include "ulis/permutation.hpp"

#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "ulis/types.hpp"

namespace ulis {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const auto n = entries_.size();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < n; ++i) {
        const int v = entries_[i];
        if (v < 1 || static_cast<std::size_t>(v) > n) {
            throw InvalidInput("not a permutation: value " + std::to_string(v) +
                               " at position " + std::to_string(i + 1) + " is outside 1.." +
                               std::to_string(n));
        }
        if (seen[v]) {
            throw InvalidInput("not a permutation: value " + std::to_string(v) +
                               " repeats at position " + std::to_string(i + 1));
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

int Permutation::at(std::size_t pos) const {
    if (pos < 1 || pos > entries_.size()) {
        throw InvalidInput("position " + std::to_string(pos) + " out of range 1.." +
                           std::to_string(entries_.size()));
    }
    return entries_[pos - 1];
}

std::vector<int> parse_integers(std::string_view text) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
        const std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != ',')
            ++i;
        if (i > start) tokens.push_back(text.substr(start, i - start));
    }

    std::vector<int> out;
    // A single run of digits is the compact form: one value per digit.
    if (tokens.size() == 1 && tokens[0].size() > 1) {
        for (char c : tokens[0]) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                throw InvalidInput("cannot parse '" + std::string(tokens[0]) + "' as integers");
            }
            out.push_back(c - '0');
        }
        return out;
    }
    for (auto tok : tokens) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
            throw InvalidInput("cannot parse '" + std::string(tok) + "' as an integer");
        }
        out.push_back(v);
    }
    return out;
}

Permutation parse_permutation(std::string_view text) { return Permutation(parse_integers(text)); }

std::string to_string(std::span<const int> values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ' ';
        os << values[i];
    }
    return os.str();
}

std::string to_string(const Permutation& p) { return to_string(p.entries()); }

std::string to_compact_string(std::span<const int> values) {
    std::string s;
    for (int v : values) s += std::to_string(v);
    return s;
}

}  // namespace ulis
