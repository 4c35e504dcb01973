#include "doctest.h"

#include "oracles.hpp"
#include "ulis/census.hpp"
#include "ulis/rank_sequence.hpp"

using namespace ulis;

TEST_CASE("census_enumerative examples") {
    auto r1 = census_enumerative(1);
    CHECK(r1.catalan == 1);
    CHECK(r1.u == 1);
    CHECK(r1.v == 0);

    auto r2 = census_enumerative(2);
    CHECK(r2.catalan == 2);
    CHECK(r2.u == 1);
    CHECK(r2.v == 1);
    CHECK(r2.ratio == Rational(1, 2));

    auto r3 = census_enumerative(3);
    CHECK(r3.catalan == 5);
    CHECK(r3.u == 3);
    CHECK(r3.v == 2);
}

TEST_CASE("census_dp examples") {
    CHECK(census_dp(1) == make_census_row(1, 1, 0));
    CHECK(census_dp(3) == make_census_row(3, 3, 2));
    const auto r12 = census_dp(12);
    CHECK(r12.u + r12.v == 208012);
    CHECK(r12 == census_enumerative(12));
}

TEST_CASE("dp rows equal enumerative rows for n <= 12") {
    const auto rows = census_dp_sweep(12);
    REQUIRE(rows.size() == 12);
    for (std::size_t n = 1; n <= 12; ++n) {
        CHECK(rows[n - 1].n == n);
        CHECK(rows[n - 1] == census_enumerative(n));
    }
}

TEST_CASE("rows are consistent for n <= 300") {
    const auto rows = census_dp_sweep(300);
    REQUIRE(rows.size() == 300);
    for (const auto& row : rows) {
        REQUIRE(row.u + row.v == row.catalan);
        REQUIRE(row.catalan == catalan(row.n));
        REQUIRE(row.ratio == Rational(row.u, row.catalan));
        REQUIRE(row.u >= row.v);
    }
    CHECK(census_dp(57) == rows[56]);
    CHECK(census_dp_sweep(300) == rows);
}

TEST_CASE("census caps") {
    CHECK_THROWS_AS(census_dp(301), InvalidInput);
    CHECK_NOTHROW(census_dp(20, 20));
    CHECK_THROWS_AS(census_enumerative(13), InvalidInput);
    CHECK_THROWS_AS(ulis_count_all(11), InvalidInput);
}

TEST_CASE("ulis_count_all examples and brute force") {
    CHECK(ulis_count_all(0) == 1);
    CHECK(ulis_count_all(1) == 1);
    CHECK(ulis_count_all(2) == 1);
    CHECK(ulis_count_all(3) == 3);
    for (int n = 1; n <= 7; ++n) {
        std::uint64_t expected = 0;
        for (const auto& p : oracle::all_permutations(n))
            if (oracle::lis(p).count == 1) ++expected;
        CHECK(ulis_count_all(n) == expected);
    }
}

TEST_CASE("serialization") {
    const auto row = census_dp(4);
    CHECK(to_json(row).dump() ==
          R"({"n":4,"catalan":"14","u":"8","v":"6","ratio_num":"4","ratio_den":"7"})");
    CHECK(csv_header() == "n,catalan,u,v,ratio_num,ratio_den");
    CHECK(to_csv(row) == "4,14,8,6,4,7");

    const auto big = census_dp(60);
    const auto j = to_json(big);
    CHECK(BigInt(j["catalan"].get<std::string>()) == catalan(60));
    CHECK(Rational(BigInt(j["ratio_num"].get<std::string>()),
                   BigInt(j["ratio_den"].get<std::string>())) == big.ratio);
}

TEST_CASE("display ratio uses 12 significant digits") {
    CHECK(display_ratio(Rational(1, 2)) == "0.5");
    CHECK(display_ratio(Rational(4, 7)) == "0.571428571429");
}

TEST_CASE("summary") {
    const auto s = summarize(census_dp_sweep(30));
    CHECK(s.first_n == 1);
    CHECK(s.last_n == 30);
    CHECK(s.all_at_least_half);
    CHECK(s.equal_to_half == std::vector<std::size_t>{2});
    CHECK(s.min_ratio == Rational(1, 2));
    CHECK(s.min_ratio_at == 2);
    CHECK(s.non_increasing_from == 3);

    const auto tail = summarize(std::vector<CensusRow>{census_dp(10), census_dp(11)});
    CHECK(tail.min_ratio_at == 11);
    CHECK(tail.equal_to_half.empty());
}
