#include "ulis/oeis.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace ulis::oeis {

namespace {

constexpr std::string_view kFixtureA167995 =
#include "fixture_a167995.inc"
    ;

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::filesystem::path resolve_cache_dir(const FetchOptions& options) {
    if (!options.cache_dir.empty()) return options.cache_dir;
    if (const char* env = std::getenv("ULIS_OEIS_CACHE"); env && *env) return env;
    return {};
}

std::string cache_file_name(std::string_view id) {
    return "b" + std::string(id.substr(1)) + ".txt";
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Write to a private temporary and rename, so concurrent writers never
// expose a partial file.
bool write_cache(const std::filesystem::path& dir, std::string_view id, const std::string& text) {
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return false;
    const auto target = dir / cache_file_name(id);
    const auto tmp = dir / (cache_file_name(id) + ".tmp." + std::to_string(::getpid()) + "." +
                            std::to_string(counter++));
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) return false;
        out << text;
        if (!out) return false;
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        return false;
    }
    return true;
}

}  // namespace

BFileError::BFileError(std::size_t line, const std::string& what)
    : InvalidInput("b-file line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<BFileEntry> parse_bfile(std::string_view text) {
    std::vector<BFileEntry> entries;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        std::size_t split = 0;
        while (split < line.size() && !std::isspace(static_cast<unsigned char>(line[split]))) ++split;
        const std::string_view index_tok = line.substr(0, split);
        const std::string_view value_tok = trim(line.substr(split));

        if (!all_digits(index_tok)) {
            throw BFileError(line_no, "index '" + std::string(index_tok) + "' is not an integer");
        }
        if (value_tok.empty()) throw BFileError(line_no, "missing value");
        if (value_tok.front() == '-' && all_digits(value_tok.substr(1))) {
            throw BFileError(line_no, "negative value");
        }
        if (!all_digits(value_tok)) {
            throw BFileError(line_no, "value '" + std::string(value_tok) + "' is not an integer");
        }

        BFileEntry e;
        try {
            e.index = std::stoull(std::string(index_tok));
        } catch (const std::out_of_range&) {
            throw BFileError(line_no, "index out of range");
        }
        e.value = BigInt(std::string(value_tok));
        if (!entries.empty() && e.index <= entries.back().index) {
            throw BFileError(line_no, "index " + std::to_string(e.index) +
                                          " does not increase (previous " +
                                          std::to_string(entries.back().index) + ")");
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

std::optional<BigInt> lookup(const std::vector<BFileEntry>& entries, std::size_t index) {
    for (const auto& e : entries)
        if (e.index == index) return e.value;
    return std::nullopt;
}

bool is_valid_sequence_id(std::string_view id) {
    return id.size() == 7 && id.front() == 'A' && all_digits(id.substr(1));
}

std::optional<std::string_view> bundled_fixture(std::string_view id) {
    if (id == "A167995") return kFixtureA167995;
    return std::nullopt;
}

const char* source_name(Source s) {
    switch (s) {
        case Source::Live: return "live";
        case Source::Cache: return "cache";
        case Source::Fixture: return "fixture";
    }
    return "unknown";
}

std::string bfile_path(std::string_view id) {
    return "/" + std::string(id) + "/" + cache_file_name(id);
}

FetchResult fetch_bfile(std::string_view id, const FetchOptions& options) {
    if (!is_valid_sequence_id(id)) {
        throw InvalidInput("'" + std::string(id) + "' is not a sequence id (expected A + 6 digits)");
    }
    const auto cache_dir = resolve_cache_dir(options);
    FetchResult result;

    if (options.online) {
        std::string failure;
        try {
            httplib::Client client(options.base_url);
            client.set_connection_timeout(options.timeout_seconds, 0);
            client.set_read_timeout(options.timeout_seconds, 0);
            client.set_follow_location(true);
            auto res = client.Get(bfile_path(id));
            if (!res) {
                failure = "request failed: " + httplib::to_string(res.error());
            } else if (res->status != 200) {
                failure = "HTTP status " + std::to_string(res->status);
            } else {
                result.text = res->body;
                result.source = Source::Live;
                if (!cache_dir.empty() && !write_cache(cache_dir, id, result.text)) {
                    result.warnings.push_back("could not write cache under " + cache_dir.string());
                }
                return result;
            }
        } catch (const std::exception& ex) {
            failure = ex.what();
        }
        result.warnings.push_back("live fetch of " + std::string(id) + " failed (" + failure +
                                  "); falling back to offline copy");
        if (!cache_dir.empty()) {
            if (auto cached = read_file(cache_dir / cache_file_name(id))) {
                result.text = std::move(*cached);
                result.source = Source::Cache;
                return result;
            }
        }
        if (auto fixture = bundled_fixture(id)) {
            result.text = std::string(*fixture);
            result.source = Source::Fixture;
            return result;
        }
        throw InvalidInput("live fetch of " + std::string(id) + " failed and no offline copy exists");
    }

    if (auto fixture = bundled_fixture(id)) {
        result.text = std::string(*fixture);
        result.source = Source::Fixture;
        return result;
    }
    if (!cache_dir.empty()) {
        if (auto cached = read_file(cache_dir / cache_file_name(id))) {
            result.text = std::move(*cached);
            result.source = Source::Cache;
            return result;
        }
    }
    throw InvalidInput("network disabled and no bundled fixture or cache for " + std::string(id));
}

std::vector<std::size_t> disagreements(const std::vector<BFileEntry>& a,
                                       const std::vector<BFileEntry>& b) {
    std::vector<std::size_t> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].index < b[j].index) {
            ++i;
        } else if (b[j].index < a[i].index) {
            ++j;
        } else {
            if (a[i].value != b[j].value) out.push_back(a[i].index);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace ulis::oeis
