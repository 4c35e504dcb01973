#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ulis/types.hpp"

namespace ulis::oeis {

struct BFileEntry {
    std::size_t index = 0;
    BigInt value;

    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

/// Parse failure with the 1-based line number that caused it.
class BFileError : public InvalidInput {
public:
    BFileError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Lines "<index> <value>"; blank lines and '#' comments are skipped.
/// Indices must strictly increase and values must be non-negative.
std::vector<BFileEntry> parse_bfile(std::string_view text);

/// Value at `index`, if the entry is present.
std::optional<BigInt> lookup(const std::vector<BFileEntry>& entries, std::size_t index);

/// True for 'A' followed by six digits.
bool is_valid_sequence_id(std::string_view id);

/// Bundled offline copy of the b-file, if one ships for `id`.
std::optional<std::string_view> bundled_fixture(std::string_view id);

enum class Source { Live, Cache, Fixture };
const char* source_name(Source s);

struct FetchOptions {
    bool online = false;
    /// Scheme and host the b-file path is appended to.
    std::string base_url = "https://oeis.org";
    /// Empty means: $ULIS_OEIS_CACHE if set, otherwise no cache.
    std::filesystem::path cache_dir;
    int timeout_seconds = 20;
};

struct FetchResult {
    std::string text;
    Source source = Source::Fixture;
    std::vector<std::string> warnings;
};

/// Path of the b-file for `id` relative to the host, e.g. "/A167995/b167995.txt".
std::string bfile_path(std::string_view id);

/// Offline: the bundled fixture, then the cache. Online: HTTPS GET, with
/// the response written to the cache; any failure falls back to the cache
/// and then the fixture, recording a warning. Throws InvalidInput for a
/// malformed id or when no source is available.
FetchResult fetch_bfile(std::string_view id, const FetchOptions& options = {});

/// Indices where two parsed files both have entries and disagree.
std::vector<std::size_t> disagreements(const std::vector<BFileEntry>& a,
                                       const std::vector<BFileEntry>& b);

}  // namespace ulis::oeis
