#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "ulis/census.hpp"
#include "ulis/oeis.hpp"

using namespace ulis;
using namespace ulis::oeis;

TEST_CASE("parse_bfile examples") {
    const auto a = parse_bfile("1 1\n2 1\n");
    REQUIRE(a.size() == 2);
    CHECK(a[0] == BFileEntry{1, 1});
    CHECK(a[1] == BFileEntry{2, 1});

    const auto b = parse_bfile("# comment\n3 3\n");
    REQUIRE(b.size() == 1);
    CHECK(b[0] == BFileEntry{3, 3});

    const auto c = parse_bfile("\r\n  5   123456789012345678901234567890 \r\n\n");
    REQUIRE(c.size() == 1);
    CHECK(c[0].value == BigInt("123456789012345678901234567890"));
    CHECK(parse_bfile("").empty());
}

TEST_CASE("parse_bfile errors carry line numbers") {
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            parse_bfile(text);
        } catch (const BFileError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("1 1\nx 2\n") == 2);
    CHECK(line_of("1 1\n2 two\n") == 2);
    CHECK(line_of("# c\n\n1 1\n1 2\n") == 4);
    CHECK(line_of("2 1\n1 1\n") == 2);
    CHECK(line_of("1 -5\n") == 1);
    CHECK(line_of("7\n") == 1);
}

TEST_CASE("bundled fixture parses and agrees with brute force") {
    const auto fixture = bundled_fixture("A167995");
    REQUIRE(fixture);
    const auto entries = parse_bfile(*fixture);
    REQUIRE(entries.size() >= 10);
    CHECK(entries.front().index == 1);
    CHECK(lookup(entries, 3) == BigInt(3));
    CHECK(lookup(entries, 3) == ulis_count_all(3));
    for (std::size_t n = 1; n <= 8; ++n) CHECK(lookup(entries, n) == ulis_count_all(n));
    CHECK_FALSE(bundled_fixture("A000108"));
}

TEST_CASE("sequence ids") {
    CHECK(is_valid_sequence_id("A167995"));
    CHECK_FALSE(is_valid_sequence_id("B12"));
    CHECK_FALSE(is_valid_sequence_id("A16799"));
    CHECK_FALSE(is_valid_sequence_id("A1679950"));
    CHECK_FALSE(is_valid_sequence_id("a167995"));
    CHECK(bfile_path("A167995") == "/A167995/b167995.txt");
    CHECK_THROWS_AS(fetch_bfile("B12"), InvalidInput);
}

TEST_CASE("offline fetch returns the fixture") {
    const auto r = fetch_bfile("A167995");
    CHECK(r.source == Source::Fixture);
    CHECK(r.warnings.empty());
    CHECK(r.text == *bundled_fixture("A167995"));
}

TEST_CASE("offline fetch without fixture or cache is an error") {
    FetchOptions opt;
    opt.cache_dir = std::filesystem::temp_directory_path() / "ulis-oeis-empty-cache";
    std::filesystem::remove_all(opt.cache_dir);
    CHECK_THROWS_AS(fetch_bfile("A000108", opt), InvalidInput);
}

TEST_CASE("failed live fetch falls back with a warning") {
    const auto dir = std::filesystem::temp_directory_path() / "ulis-oeis-test-cache";
    std::filesystem::remove_all(dir);

    FetchOptions opt;
    opt.online = true;
    opt.base_url = "http://127.0.0.1:9";  // discard port; nothing listens
    opt.timeout_seconds = 2;
    opt.cache_dir = dir;

    const auto r = fetch_bfile("A167995", opt);
    CHECK(r.source == Source::Fixture);
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("falling back") != std::string::npos);

    // A cached copy wins over the fixture once present.
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "b000108.txt") << "0 1\n1 1\n2 2\n3 5\n";
    const auto cached = fetch_bfile("A000108", opt);
    CHECK(cached.source == Source::Cache);
    CHECK(parse_bfile(cached.text).size() == 4);

    opt.cache_dir = dir / "missing";
    CHECK_THROWS_AS(fetch_bfile("A000108", opt), InvalidInput);
    std::filesystem::remove_all(dir);
}

TEST_CASE("disagreements only look at shared indices") {
    const auto a = parse_bfile("1 1\n2 1\n3 3\n4 12\n");
    const auto b = parse_bfile("2 1\n3 4\n5 56\n");
    CHECK(disagreements(a, b) == std::vector<std::size_t>{3});
    CHECK(disagreements(a, a).empty());
}
