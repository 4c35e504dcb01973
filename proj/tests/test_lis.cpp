#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "ulis/lis.hpp"
#include "ulis/pattern.hpp"
#include "ulis/rank_sequence.hpp"

using namespace ulis;

TEST_CASE("lis_stats examples") {
    auto a = lis_stats(parse_permutation("34256178"));
    CHECK(a.length == 6);
    CHECK(a.count == 1);
    auto b = lis_stats(parse_permutation("32456178"));
    CHECK(b.length == 6);
    CHECK(b.count == 2);
    auto c = lis_stats(parse_permutation("4321"));
    CHECK(c.length == 1);
    CHECK(c.count == 4);
    auto e = lis_stats(Permutation{});
    CHECK(e.length == 0);
    CHECK(e.count == 1);
}

TEST_CASE("has_ulis examples") {
    CHECK(has_ulis(parse_permutation("34256178")));
    CHECK_FALSE(has_ulis(parse_permutation("32456178")));
    for (std::size_t n = 0; n <= 15; ++n) CHECK(has_ulis(Permutation::identity(n)));
}

TEST_CASE("rank_values examples") {
    CHECK(rank_values(Permutation{2, 1, 3}) == std::vector<int>{2, 2, 1});
    CHECK(rank_values(Permutation{3, 2, 1}) == std::vector<int>{1, 1, 1});
    CHECK(rank_values(Permutation{1, 2, 3}) == std::vector<int>{3, 2, 1});
    CHECK(rank_values(Permutation{}).empty());
}

TEST_CASE("count_maximal_starting_at examples") {
    CHECK(count_maximal_starting_at(parse_permutation("34256178"), 1) == 1);
    CHECK(count_maximal_starting_at(parse_permutation("321"), 2) == 1);
    CHECK(count_maximal_starting_at(parse_permutation("32456178"), 1) == 1);
    // 1 3 2 contains 132: two maximal subsequences start at 1.
    CHECK(count_maximal_starting_at(Permutation{1, 3, 2}, 1) == 2);
    CHECK_THROWS_AS(count_maximal_starting_at(Permutation{1, 2}, 0), InvalidInput);
    CHECK_THROWS_AS(count_maximal_starting_at(Permutation{1, 2}, 3), InvalidInput);
}

TEST_CASE("dynamic programs agree with subset enumeration, n <= 8") {
    for (int n = 0; n <= 8; ++n) {
        for (const auto& raw : oracle::all_permutations(n)) {
            const Permutation p(raw);
            const auto expected = oracle::lis(raw);
            const auto got = lis_stats(p);
            REQUIRE(got.length == static_cast<std::size_t>(expected.length));
            REQUIRE(got.count == expected.count);
            if (n > 7) continue;
            REQUIRE(rank_values(p) == oracle::ranks(raw));
            for (std::size_t i = 1; i <= p.size(); ++i)
                REQUIRE(count_maximal_starting_at(p, i) == oracle::lis_from(raw, i - 1).count);
        }
    }
}

TEST_CASE("random permutations up to n = 16 agree with subset enumeration") {
    std::mt19937 rng(132);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 9 + trial % 8;
        std::vector<int> raw(n);
        std::iota(raw.begin(), raw.end(), 1);
        std::shuffle(raw.begin(), raw.end(), rng);
        const auto expected = oracle::lis(raw);
        const auto got = lis_stats(Permutation(raw));
        CHECK(got.length == static_cast<std::size_t>(expected.length));
        CHECK(got.count == expected.count);
    }
}

TEST_CASE("count >= 1 and uniqueness matches has_ulis, all permutations n <= 9") {
    for (int n = 0; n <= 9; ++n) {
        std::vector<int> raw(n);
        std::iota(raw.begin(), raw.end(), 1);
        do {
            const Permutation p(raw);
            const auto s = lis_stats(p);
            REQUIRE(s.count >= 1);
            REQUIRE((s.count == 1) == has_ulis(p));
        } while (std::next_permutation(raw.begin(), raw.end()));
    }
}

TEST_CASE("one maximal subsequence starts at each entry of a 132-avoider, n <= 9") {
    for (std::size_t n = 1; n <= 9; ++n) {
        AvoiderEnumerator e(n, pattern_132());
        while (auto p = e.next())
            for (std::size_t i = 1; i <= n; ++i) REQUIRE(count_maximal_starting_at(*p, i) == 1);
    }
}

TEST_CASE("ranks of 132-avoiders end in 1 and drop by at most one") {
    for (std::size_t n = 1; n <= 10; ++n) {
        AvoiderEnumerator e(n, pattern_132());
        while (auto p = e.next()) {
            const auto r = rank_values(*p);
            REQUIRE(r.back() == 1);
            for (std::size_t i = 0; i + 1 < n; ++i) REQUIRE(r[i] - r[i + 1] <= 1);
        }
    }
}

TEST_CASE("counts past 64 bits stay exact") {
    // 2 1 4 3 6 5 ...: every choice of one entry per pair is a LIS.
    std::vector<int> raw;
    for (int pair = 0; pair < 70; ++pair) {
        raw.push_back(2 * pair + 2);
        raw.push_back(2 * pair + 1);
    }
    const Permutation p(raw);
    const auto s = lis_stats(p);
    CHECK(s.length == 70);
    CHECK(s.count == (BigInt(1) << 70));
    CHECK(count_maximal_starting_at(p, 1) == (BigInt(1) << 69));
    CHECK_FALSE(has_ulis(p));

    std::vector<int> small(raw.begin(), raw.begin() + 40);
    CHECK(lis_stats(Permutation(small)).count == (BigInt(1) << 20));
}
