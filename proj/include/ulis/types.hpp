#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ulis {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an internal construction reaches a state that valid input
/// can never produce. Seeing one means a bug, not bad input.
class ConstructionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Enumeration and counting caps. Every cap is overridable from the CLI.
struct Limits {
    std::size_t avoider_cap = 12;   // enumerate_avoiders, C_12 = 208012
    std::size_t sequence_cap = 12;  // enumerate_rank_sequences
    std::size_t all_perm_cap = 10;  // brute-force scans over n!
    std::size_t dp_cap = 300;       // census_dp
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

}  // namespace ulis
