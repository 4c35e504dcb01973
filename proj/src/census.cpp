#include "ulis/census.hpp"

#include <cstdint>
#include <iomanip>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ulis/lis.hpp"
#include "ulis/pattern.hpp"
#include "ulis/rank_sequence.hpp"

namespace ulis {

CensusRow make_census_row(std::size_t n, BigInt u, BigInt v) {
    CensusRow row;
    row.n = n;
    row.catalan = u + v;
    row.u = std::move(u);
    row.v = std::move(v);
    row.ratio = Rational(row.u, row.catalan);
    return row;
}

CensusRow census_enumerative(std::size_t n, std::size_t cap, std::size_t cross_check_cap) {
    std::uint64_t u = 0, v = 0;
    RankSequenceEnumerator e(n, cap);
    while (const auto* values = e.next_values()) {
        int k = 0, hits = 0;
        for (int x : *values) {
            if (x > k) {
                k = x;
                hits = 1;
            } else if (x == k) {
                ++hits;
            }
        }
        ++(hits == 1 ? u : v);
    }

    if (n <= cross_check_cap) {
        std::uint64_t direct_u = 0, direct_total = 0;
        for_each_avoider(
            n, pattern_132(),
            [&](const Permutation& p) {
                ++direct_total;
                if (has_ulis(p)) ++direct_u;
            },
            std::max(n, default_limits().avoider_cap));
        if (direct_u != u || direct_total != u + v) {
            throw ConstructionError("census n=" + std::to_string(n) +
                                    ": sequence count disagrees with avoider count");
        }
    }
    return make_census_row(n, BigInt(u), BigInt(v));
}

std::vector<CensusRow> census_dp_sweep(std::size_t max_n, std::size_t cap) {
    if (max_n > cap) {
        throw InvalidInput("census dp is capped at n = " + std::to_string(cap) + "; got n = " +
                           std::to_string(max_n));
    }
    std::vector<CensusRow> rows;
    if (max_n == 0) return rows;

    // count[f][m][w]: suffixes with leftmost value w, maximum m, and f = 1
    // when that maximum occurs once. Indices run to max_n + 1.
    const std::size_t dim = max_n + 2;
    auto make_table = [&] {
        return std::vector<std::vector<std::vector<BigInt>>>(
            2, std::vector<std::vector<BigInt>>(dim, std::vector<BigInt>(dim)));
    };
    auto count = make_table();
    auto next = make_table();
    count[1][1][1] = 1;
    std::vector<BigInt> suffix(dim + 1);

    auto emit = [&](std::size_t len) {
        BigInt u = 0, v = 0;
        for (std::size_t m = 1; m <= len; ++m)
            for (std::size_t w = 1; w <= m; ++w) {
                u += count[1][m][w];
                v += count[0][m][w];
            }
        rows.push_back(make_census_row(len, std::move(u), std::move(v)));
    };
    emit(1);

    for (std::size_t len = 2; len <= max_n; ++len) {
        const std::size_t top = len - 1;  // largest m present at the old length
        for (auto& by_m : next)
            for (std::size_t m = 1; m <= len; ++m)
                for (std::size_t w = 1; w <= m; ++w) by_m[m][w] = 0;

        for (int f = 0; f < 2; ++f) {
            for (std::size_t m = 1; m <= top; ++m) {
                const auto& old = count[f][m];
                suffix[m + 1] = 0;
                for (std::size_t w = m; w >= 1; --w) suffix[w] = suffix[w + 1] + old[w];
                if (suffix[1] == 0) continue;
                // Prepend x < m from any w >= x - 1: maximum and flag carry over.
                for (std::size_t x = 1; x < m; ++x) next[f][m][x] += suffix[x > 1 ? x - 1 : 1];
                // Prepend x = m (needs w >= m - 1): the maximum now repeats.
                next[0][m][m] += old[m];
                if (m >= 2) next[0][m][m] += old[m - 1];
                // Prepend x = m + 1 (needs w = m): a new unique maximum.
                next[1][m + 1][m + 1] += old[m];
            }
        }
        std::swap(count, next);
        emit(len);
    }
    return rows;
}

CensusRow census_dp(std::size_t n, std::size_t cap) {
    if (n == 0) {
        if (cap == 0) throw InvalidInput("census dp cap is zero");
        return make_census_row(0, 1, 0);
    }
    return census_dp_sweep(n, cap).back();
}

namespace {

// Depth-first over all permutations, extending the "ending at" LIS table
// one entry at a time. Counts stay below 2^n, so 64 bits are exact here.
struct AllPermScan {
    std::size_t n;
    std::vector<int> value;
    std::vector<int> len;
    std::vector<std::uint64_t> cnt;
    std::vector<bool> used;
    std::uint64_t unique = 0;

    explicit AllPermScan(std::size_t n_)
        : n(n_), value(n_), len(n_), cnt(n_), used(n_ + 1, false) {}

    void run(std::size_t depth) {
        if (depth == n) {
            int best = 0;
            std::uint64_t total = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (len[i] > best) {
                    best = len[i];
                    total = cnt[i];
                } else if (len[i] == best) {
                    total += cnt[i];
                }
            }
            if (total == 1) ++unique;
            return;
        }
        for (int x = 1; x <= static_cast<int>(n); ++x) {
            if (used[x]) continue;
            int l = 1;
            std::uint64_t c = 1;
            for (std::size_t h = 0; h < depth; ++h) {
                if (value[h] >= x) continue;
                if (len[h] + 1 > l) {
                    l = len[h] + 1;
                    c = cnt[h];
                } else if (len[h] + 1 == l) {
                    c += cnt[h];
                }
            }
            used[x] = true;
            value[depth] = x;
            len[depth] = l;
            cnt[depth] = c;
            run(depth + 1);
            used[x] = false;
        }
    }
};

}  // namespace

BigInt ulis_count_all(std::size_t n, std::size_t cap) {
    if (n > cap) {
        throw InvalidInput("all-permutation scan is capped at n = " + std::to_string(cap) +
                           "; got n = " + std::to_string(n));
    }
    if (n >= 64) throw InvalidInput("all-permutation scan needs n < 64");
    if (n == 0) return 1;
    AllPermScan scan(n);
    scan.run(0);
    return BigInt(scan.unique);
}

nlohmann::ordered_json to_json(const CensusRow& row) {
    nlohmann::ordered_json j;
    j["n"] = row.n;
    j["catalan"] = row.catalan.str();
    j["u"] = row.u.str();
    j["v"] = row.v.str();
    j["ratio_num"] = numerator(row.ratio).str();
    j["ratio_den"] = denominator(row.ratio).str();
    return j;
}

std::string csv_header() { return "n,catalan,u,v,ratio_num,ratio_den"; }

std::string to_csv(const CensusRow& row) {
    std::ostringstream os;
    os << row.n << ',' << row.catalan << ',' << row.u << ',' << row.v << ','
       << numerator(row.ratio) << ',' << denominator(row.ratio);
    return os.str();
}

std::string display_ratio(const Rational& r) {
    using Float = boost::multiprecision::cpp_bin_float_50;
    const Float value = Float(numerator(r)) / Float(denominator(r));
    std::ostringstream os;
    os << std::setprecision(12) << value;
    return os.str();
}

CensusSummary summarize(const std::vector<CensusRow>& rows) {
    CensusSummary s;
    if (rows.empty()) return s;
    const Rational half(1, 2);
    s.first_n = rows.front().n;
    s.last_n = rows.back().n;
    s.min_ratio = rows.front().ratio;
    s.min_ratio_at = rows.front().n;
    for (const auto& row : rows) {
        if (row.ratio < s.min_ratio) {
            s.min_ratio = row.ratio;
            s.min_ratio_at = row.n;
        }
        if (row.ratio < half) s.all_at_least_half = false;
        if (row.ratio == half) s.equal_to_half.push_back(row.n);
    }
    std::size_t from = rows.size() - 1;
    while (from > 0 && rows[from - 1].ratio >= rows[from].ratio) --from;
    s.non_increasing_from = rows[from].n;
    return s;
}

}  // namespace ulis
