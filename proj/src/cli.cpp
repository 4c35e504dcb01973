#include "ulis/cli.hpp"

#include <chrono>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ulis/census.hpp"
#include "ulis/lis.hpp"
#include "ulis/oeis.hpp"
#include "ulis/pattern.hpp"
#include "ulis/rank_sequence.hpp"
#include "ulis/ulis_map.hpp"
#include "ulis/verify.hpp"

namespace ulis::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

struct Options {
    Format format = Format::Plain;
    std::size_t max_n = 0;
    bool max_n_given = false;
    bool offline = false;
    bool online = false;
    bool seedless = false;
    Limits limits = default_limits();
};

std::string join(const std::vector<std::string>& tokens) {
    std::string s;
    for (const auto& t : tokens) {
        if (!s.empty()) s += ' ';
        s += t;
    }
    return s;
}

ordered_json report_json(const SuiteResult& r) {
    ordered_json j;
    j["command"] = "verify";
    j["parameters"] = {{"suite", r.suite}, {"max_n", r.max_n}};
    j["outcome"] = r.passed ? "pass" : "fail";
    ordered_json payload = ordered_json::object();
    for (const auto& [k, v] : r.details) payload[k] = v;
    if (r.counterexample) payload["counterexample"] = *r.counterexample;
    j["payload"] = payload;
    return j;
}

void print_rows(std::ostream& out, Format format, const std::string& engine,
                const std::vector<CensusRow>& rows) {
    const CensusSummary s = summarize(rows);
    std::string equal_list;
    for (auto n : s.equal_to_half) equal_list += (equal_list.empty() ? "" : ",") + std::to_string(n);

    if (format == Format::Json) {
        ordered_json j;
        j["engine"] = engine;
        j["rows"] = ordered_json::array();
        for (const auto& row : rows) j["rows"].push_back(to_json(row));
        ordered_json sum;
        sum["first_n"] = s.first_n;
        sum["last_n"] = s.last_n;
        sum["min_ratio_num"] = numerator(s.min_ratio).str();
        sum["min_ratio_den"] = denominator(s.min_ratio).str();
        sum["min_ratio_at"] = s.min_ratio_at;
        sum["min_ratio_display"] = display_ratio(s.min_ratio);
        sum["all_at_least_half"] = s.all_at_least_half;
        sum["equal_to_half_at"] = s.equal_to_half;
        sum["non_increasing_from"] = s.non_increasing_from;
        j["summary"] = sum;
        out << j.dump() << '\n';
        return;
    }
    if (format == Format::Csv) {
        out << csv_header() << '\n';
        for (const auto& row : rows) out << to_csv(row) << '\n';
        out << "# summary: min ratio " << s.min_ratio << " at n=" << s.min_ratio_at
            << "; all >= 1/2: " << (s.all_at_least_half ? "yes" : "no") << "; equal to 1/2 at: "
            << (equal_list.empty() ? "none" : equal_list) << "; non-increasing from n="
            << s.non_increasing_from << '\n';
        return;
    }
    out << "# engine: " << engine << "; values machine-derived; approx column is display-only\n";
    out << "n\tcatalan\tu\tv\tratio\tapprox\n";
    for (const auto& row : rows) {
        out << row.n << '\t' << row.catalan << '\t' << row.u << '\t' << row.v << '\t' << row.ratio
            << '\t' << display_ratio(row.ratio) << '\n';
    }
    out << "summary: n=" << s.first_n << ".." << s.last_n << " min ratio " << s.min_ratio
        << " (~" << display_ratio(s.min_ratio) << ") at n=" << s.min_ratio_at
        << "; all >= 1/2: " << (s.all_at_least_half ? "yes" : "no")
        << "; equal to 1/2 at: " << (equal_list.empty() ? "none" : equal_list)
        << "; non-increasing from n=" << s.non_increasing_from << '\n';
}

void print_sequence_list(std::ostream& out, Format format, const std::vector<std::vector<int>>& items,
                         const std::string& key) {
    if (format == Format::Json) {
        ordered_json j;
        j["count"] = items.size();
        j[key] = items;
        out << j.dump() << '\n';
        return;
    }
    for (const auto& v : items) out << to_string(v) << '\n';
}

void print_count(std::ostream& out, Format format, std::size_t n, std::size_t count) {
    if (format == Format::Json) {
        out << ordered_json{{"n", n}, {"count", count}}.dump() << '\n';
    } else if (format == Format::Csv) {
        out << "n,count\n" << n << ',' << count << '\n';
    } else {
        out << count << '\n';
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact tools for 132-avoiding permutations and unique longest increasing "
                 "subsequences"};
    app.require_subcommand(1);

    const std::map<std::string, Format> formats{
        {"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
    app.add_option("--format", opt.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--avoider-cap", opt.limits.avoider_cap, "Largest n for avoider enumeration");
    app.add_option("--sequence-cap", opt.limits.sequence_cap, "Largest n for rank sequence enumeration");
    app.add_option("--perm-cap", opt.limits.all_perm_cap, "Largest n for all-permutation scans");
    app.add_option("--dp-cap", opt.limits.dp_cap, "Largest n for the census dynamic program");
    app.add_flag("--seedless", opt.seedless, "Accepted for scripts; every command is deterministic");
    auto* offline_flag = app.add_flag("--offline", opt.offline, "Never touch the network (default)");
    app.add_flag("--online", opt.online, "Allow HTTPS fetches for the oeis command")
        ->excludes(offline_flag);
    auto* max_n_opt = app.add_option("--max-n", opt.max_n, "Largest n to process");

    // rank
    auto* rank_cmd = app.add_subcommand("rank", "Print the rank sequence of a permutation");
    std::vector<std::string> rank_input;
    bool invert_flag = false;
    rank_cmd->add_option("values", rank_input, "Permutation (or rank sequence with --invert)")
        ->required();
    rank_cmd->add_flag("--invert", invert_flag, "Treat input as a rank sequence and invert it");

    // map
    auto* map_cmd = app.add_subcommand("map", "Apply the injection to a permutation without a ULIS");
    std::vector<std::string> map_input;
    bool trace = false;
    map_cmd->add_option("values", map_input, "132-avoiding permutation without a ULIS")->required();
    map_cmd->add_flag("--trace", trace, "Also print the rank sequences before and after");

    // avoiders
    auto* av_cmd = app.add_subcommand("avoiders", "List or count permutations avoiding a pattern");
    std::size_t av_n = 0;
    std::string av_pattern = "132";
    bool av_count = false;
    av_cmd->add_option("n", av_n, "Length")->required();
    av_cmd->add_option("--pattern", av_pattern, "Length-3 pattern")->capture_default_str();
    av_cmd->add_flag("--count", av_count, "Print only the number");

    // sequences
    auto* seq_cmd = app.add_subcommand("sequences", "List or count rank sequences of length n");
    std::size_t seq_n = 0;
    bool seq_count = false;
    seq_cmd->add_option("n", seq_n, "Length")->required();
    seq_cmd->add_flag("--count", seq_count, "Print only the number");

    // census
    auto* census_cmd = app.add_subcommand("census", "Exact counts u_n, v_n, C_n and ratio u_n/C_n");
    std::string engine = "dp";
    census_cmd->add_option("--engine", engine, "enumerative or dp")
        ->check(CLI::IsMember({"enumerative", "dp"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive verification suite");
    std::string suite_arg;
    std::vector<std::string> suite_choices;
    for (const auto& [name, s] : suite_names()) suite_choices.push_back(name);
    verify_cmd->add_option("suite", suite_arg, "Suite name")
        ->required()
        ->check(CLI::IsMember(suite_choices));

    // oeis
    auto* oeis_cmd = app.add_subcommand("oeis", "Print a b-file (bundled fixture unless --online)");
    std::string oeis_id = "A167995";
    oeis_cmd->add_option("--id", oeis_id, "Sequence id")->capture_default_str();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }
    opt.max_n_given = max_n_opt->count() > 0;

    try {
        if (rank_cmd->parsed()) {
            const auto values = parse_integers(join(rank_input));
            if (invert_flag) {
                out << to_string(invert(RankSequence(values), true)) << '\n';
                return kSuccess;
            }
            const Permutation p(values);
            if (const auto v = contains_pattern(p, pattern_132()); v.contains) {
                const auto& w = *v.witness;
                err << "warning: input contains 132 at positions " << w[0] << "," << w[1] << ","
                    << w[2] << "; ranks are still well-defined\n";
            }
            out << to_string(rank_values(p)) << '\n';
            return kSuccess;
        }

        if (map_cmd->parsed()) {
            const Permutation p = parse_permutation(join(map_input));
            const auto tr = map_to_ulis_traced(p);
            if (opt.format == Format::Json) {
                ordered_json j{{"input", to_string(p)}, {"image", to_string(tr.image)}};
                if (trace) {
                    j["rank_before"] = to_string(tr.before);
                    j["rank_after"] = to_string(tr.after);
                }
                out << j.dump() << '\n';
            } else if (trace) {
                out << to_string(tr.before) << " -> " << to_string(tr.after) << " -> "
                    << to_string(tr.image) << '\n';
            } else {
                out << to_string(tr.image) << '\n';
            }
            return kSuccess;
        }

        if (av_cmd->parsed()) {
            const Permutation pattern = parse_permutation(av_pattern);
            std::vector<std::vector<int>> items;
            std::size_t count = 0;
            for_each_avoider(
                av_n, pattern,
                [&](const Permutation& p) {
                    ++count;
                    if (!av_count) items.emplace_back(p.begin(), p.end());
                },
                opt.limits.avoider_cap);
            if (av_count) {
                print_count(out, opt.format, av_n, count);
            } else {
                print_sequence_list(out, opt.format, items, "permutations");
            }
            return kSuccess;
        }

        if (seq_cmd->parsed()) {
            std::vector<std::vector<int>> items;
            std::size_t count = 0;
            RankSequenceEnumerator e(seq_n, opt.limits.sequence_cap);
            while (const auto* v = e.next_values()) {
                ++count;
                if (!seq_count) items.push_back(*v);
            }
            if (seq_count) {
                print_count(out, opt.format, seq_n, count);
            } else {
                print_sequence_list(out, opt.format, items, "sequences");
            }
            return kSuccess;
        }

        if (census_cmd->parsed()) {
            if (!opt.max_n_given) throw InvalidInput("census needs --max-n");
            if (opt.max_n < 1) throw InvalidInput("census needs --max-n >= 1");
            std::vector<CensusRow> rows;
            if (engine == "dp") {
                rows = census_dp_sweep(opt.max_n, opt.limits.dp_cap);
            } else {
                if (opt.max_n > opt.limits.sequence_cap) {
                    throw InvalidInput("enumerative census is capped at n = " +
                                       std::to_string(opt.limits.sequence_cap));
                }
                for (std::size_t n = 1; n <= opt.max_n; ++n)
                    rows.push_back(census_enumerative(n, opt.limits.sequence_cap));
            }
            print_rows(out, opt.format, engine, rows);
            return kSuccess;
        }

        if (verify_cmd->parsed()) {
            const Suite suite = *parse_suite(suite_arg);
            if (!opt.max_n_given) throw InvalidInput("verify needs --max-n");
            std::string bfile;
            if (suite == Suite::Oeis) {
                oeis::FetchOptions fo;
                fo.online = opt.online;
                auto fetched = oeis::fetch_bfile("A167995", fo);
                for (const auto& w : fetched.warnings) err << "warning: " << w << '\n';
                bfile = std::move(fetched.text);
            }
            const auto started = std::chrono::steady_clock::now();
            const SuiteResult r = run_suite(suite, opt.max_n, opt.limits, bfile);
            const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - started)
                                .count();
            if (opt.format == Format::Json) {
                out << report_json(r).dump() << '\n';
            } else {
                out << "verify " << r.suite << " max-n=" << r.max_n << ": "
                    << (r.passed ? "PASS" : "FAIL") << '\n';
                for (const auto& [k, v] : r.details) out << "  " << k << " = " << v << '\n';
                if (r.counterexample) out << "  counterexample: " << *r.counterexample << '\n';
            }
            err << "duration_ms: " << ms << '\n';
            return r.passed ? kSuccess : kVerificationFailed;
        }

        if (oeis_cmd->parsed()) {
            oeis::FetchOptions fo;
            fo.online = opt.online;
            auto fetched = oeis::fetch_bfile(oeis_id, fo);
            for (const auto& w : fetched.warnings) err << "warning: " << w << '\n';
            const auto entries = oeis::parse_bfile(fetched.text);
            int code = kSuccess;
            std::vector<std::size_t> conflicts;
            if (fetched.source != oeis::Source::Fixture) {
                if (auto fixture = oeis::bundled_fixture(oeis_id)) {
                    conflicts = oeis::disagreements(entries, oeis::parse_bfile(*fixture));
                    if (!conflicts.empty()) code = kVerificationFailed;
                }
            }
            if (opt.format == Format::Json) {
                ordered_json j;
                j["id"] = oeis_id;
                j["source"] = oeis::source_name(fetched.source);
                j["entries"] = ordered_json::array();
                for (const auto& e : entries) j["entries"].push_back({e.index, e.value.str()});
                j["fixture_disagreements"] = conflicts;
                out << j.dump() << '\n';
            } else {
                out << "# " << oeis_id << " source: " << oeis::source_name(fetched.source) << '\n';
                for (const auto& e : entries) out << e.index << ' ' << e.value << '\n';
                for (auto idx : conflicts) err << "disagreement with fixture at n=" << idx << '\n';
            }
            return code;
        }
    } catch (const InvalidInput& ex) {
        err << "error: " << ex.what() << '\n';
        return kUsageError;
    } catch (const ConstructionError& ex) {
        err << "internal error: " << ex.what() << '\n';
        return kVerificationFailed;
    }
    return kUsageError;
}

}  // namespace ulis::cli
