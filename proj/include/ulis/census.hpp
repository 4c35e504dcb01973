#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "ulis/types.hpp"

namespace ulis {

/// Counts over Av_n(132): u with a ULIS, v without, and u / C_n kept as
/// an exact reduced fraction.
struct CensusRow {
    std::size_t n = 0;
    BigInt catalan;
    BigInt u;
    BigInt v;
    Rational ratio;

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

CensusRow make_census_row(std::size_t n, BigInt u, BigInt v);

/// Unique-maximum count over S_n by enumeration. For n <= cross_check_cap
/// the result is also checked against has_ulis over Av_n(132) and a
/// disagreement throws ConstructionError.
CensusRow census_enumerative(std::size_t n, std::size_t cap = default_limits().sequence_cap,
                             std::size_t cross_check_cap = 10);

/// Rows for lengths 1..max_n from one right-to-left dynamic program over
/// S_n. State: leftmost value, suffix maximum, whether that maximum is
/// unique.
std::vector<CensusRow> census_dp_sweep(std::size_t max_n,
                                       std::size_t cap = default_limits().dp_cap);
CensusRow census_dp(std::size_t n, std::size_t cap = default_limits().dp_cap);

/// Brute force over all n! permutations of length n.
BigInt ulis_count_all(std::size_t n, std::size_t cap = default_limits().all_perm_cap);

/// {"n":..,"catalan":"..","u":"..","v":"..","ratio_num":"..","ratio_den":".."}
nlohmann::ordered_json to_json(const CensusRow& row);
std::string csv_header();
std::string to_csv(const CensusRow& row);

/// Floating rendering with 12 significant digits; for display only.
std::string display_ratio(const Rational& r);

/// Facts about a run of consecutive rows.
struct CensusSummary {
    std::size_t first_n = 0;
    std::size_t last_n = 0;
    Rational min_ratio;
    std::size_t min_ratio_at = 0;
    bool all_at_least_half = true;
    std::vector<std::size_t> equal_to_half;  // n with ratio exactly 1/2
    /// Smallest m such that the ratios are non-increasing from m to last_n.
    std::size_t non_increasing_from = 0;
};

CensusSummary summarize(const std::vector<CensusRow>& rows);

}  // namespace ulis
