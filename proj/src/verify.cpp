#include "ulis/verify.hpp"

#include <algorithm>
#include <set>

#include "ulis/census.hpp"
#include "ulis/lis.hpp"
#include "ulis/oeis.hpp"
#include "ulis/pattern.hpp"
#include "ulis/rank_sequence.hpp"
#include "ulis/ulis_map.hpp"

namespace ulis {

namespace {

void require_within(Suite s, std::size_t max_n, const Limits& limits) {
    const std::size_t cap = suite_cap(s, limits);
    if (max_n > cap) {
        throw InvalidInput("suite " + suite_name(s) + " is capped at max-n " + std::to_string(cap) +
                           "; got " + std::to_string(max_n));
    }
}

SuiteResult start(Suite s, std::size_t max_n, const Limits& limits) {
    require_within(s, max_n, limits);
    SuiteResult r;
    r.suite = suite_name(s);
    r.max_n = max_n;
    return r;
}

SuiteResult& fail(SuiteResult& r, std::string what) {
    r.passed = false;
    r.counterexample = std::move(what);
    return r;
}

void detail(SuiteResult& r, std::string key, std::string value) {
    r.details.emplace_back(std::move(key), std::move(value));
}

std::string tag(std::size_t n) { return "n=" + std::to_string(n) + " "; }

}  // namespace

const std::vector<std::pair<std::string, Suite>>& suite_names() {
    static const std::vector<std::pair<std::string, Suite>> names = {
        {"bijection", Suite::Bijection},
        {"lemma1", Suite::Lemma1},
        {"injection-f", Suite::InjectionF},
        {"injection-g", Suite::InjectionG},
        {"characterization", Suite::Characterization},
        {"catalan", Suite::Catalan},
        {"oeis", Suite::Oeis},
    };
    return names;
}

std::optional<Suite> parse_suite(const std::string& name) {
    for (const auto& [n, s] : suite_names())
        if (n == name) return s;
    return std::nullopt;
}

std::string suite_name(Suite s) {
    for (const auto& [n, suite] : suite_names())
        if (suite == s) return n;
    return "unknown";
}

std::size_t suite_cap(Suite s, const Limits& limits) {
    switch (s) {
        case Suite::Bijection:
        case Suite::Catalan: return std::min(limits.avoider_cap, limits.sequence_cap);
        case Suite::Lemma1:
        case Suite::InjectionG:
        case Suite::Characterization: return limits.avoider_cap;
        case Suite::InjectionF: return limits.sequence_cap;
        case Suite::Oeis: return limits.all_perm_cap;
    }
    return 0;
}

SuiteResult verify_bijection(std::size_t max_n, const Limits& limits) {
    auto r = start(Suite::Bijection, max_n, limits);
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        AvoiderEnumerator avoiders(n, pattern_132(), limits.avoider_cap);
        while (auto p = avoiders.next()) {
            const auto values = rank_values(*p);
            if (check_rank_values(values)) {
                return fail(r, tag(n) + "p=" + to_string(*p) + ": ranks " + to_string(values) +
                                   " are not a rank sequence");
            }
            const auto back = invert(RankSequence(values));
            if (back != *p) {
                return fail(r, tag(n) + "p=" + to_string(*p) + ": invert(R(p)) = " +
                                   to_string(back));
            }
            ++checked;
        }
        RankSequenceEnumerator sequences(n, limits.sequence_cap);
        while (auto t = sequences.next()) {
            Permutation p;
            try {
                p = invert(*t);
            } catch (const ConstructionError& ex) {
                return fail(r, tag(n) + "t=" + to_string(*t) + ": " + ex.what());
            }
            const auto values = rank_values(p);
            if (!std::equal(values.begin(), values.end(), t->values().begin(), t->values().end())) {
                return fail(r, tag(n) + "t=" + to_string(*t) + ": R(invert(t)) = " +
                                   to_string(values));
            }
            if (!avoids(p, pattern_132())) {
                return fail(r, tag(n) + "t=" + to_string(*t) + ": invert(t) = " + to_string(p) +
                                   " contains 132");
            }
            ++checked;
        }
    }
    detail(r, "objects_checked", std::to_string(checked));
    return r;
}

SuiteResult verify_lemma1(std::size_t max_n, const Limits& limits) {
    auto r = start(Suite::Lemma1, max_n, limits);
    std::size_t entries = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        AvoiderEnumerator avoiders(n, pattern_132(), limits.avoider_cap);
        while (auto p = avoiders.next()) {
            for (std::size_t pos = 1; pos <= n; ++pos) {
                const BigInt c = count_maximal_starting_at(*p, pos);
                if (c != 1) {
                    return fail(r, tag(n) + "p=" + to_string(*p) + " position " +
                                       std::to_string(pos) + ": " + c.str() +
                                       " maximal subsequences start here");
                }
                ++entries;
            }
        }
    }
    detail(r, "entries_checked", std::to_string(entries));
    return r;
}

SuiteResult verify_injection_f(std::size_t max_n, const Limits& limits) {
    auto r = start(Suite::InjectionF, max_n, limits);
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::set<std::vector<int>> images;
        std::size_t domain = 0;
        RankSequenceEnumerator sequences(n, limits.sequence_cap);
        while (auto t = sequences.next()) {
            const MaxProfile before = max_profile(*t);
            if (before.unique) continue;
            ++domain;
            std::optional<RankSequence> raised;
            try {
                raised = raise_final_max_block(*t);
            } catch (const ConstructionError& ex) {
                return fail(r, tag(n) + "t=" + to_string(*t) + ": " + ex.what());
            }
            const RankSequence& image = *raised;
            const MaxProfile after = max_profile(image);
            if (!after.unique || after.k != before.k + 1) {
                return fail(r, tag(n) + "t=" + to_string(*t) + ": f(t) = " + to_string(image) +
                                   " lacks a unique maximum k+1");
            }
            const std::size_t j = before.occurrences.back();
            if (image.at(j - 1) - image.at(j) > 1) {
                return fail(r, tag(n) + "t=" + to_string(*t) + ": drop > 1 at the right edge");
            }
            const std::vector<int> key(image.values().begin(), image.values().end());
            if (!images.insert(key).second) {
                return fail(r, tag(n) + "t=" + to_string(*t) + ": image " + to_string(image) +
                                   " already taken");
            }
        }
        detail(r, "domain_n" + std::to_string(n), std::to_string(domain));
    }
    return r;
}

SuiteResult verify_injection_g(std::size_t max_n, const Limits& limits) {
    auto r = start(Suite::InjectionG, max_n, limits);
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::set<Permutation> images;
        std::size_t with_ulis = 0, without = 0;
        AvoiderEnumerator avoiders(n, pattern_132(), limits.avoider_cap);
        while (auto p = avoiders.next()) {
            if (has_ulis(*p)) {
                ++with_ulis;
                continue;
            }
            ++without;
            Permutation image;
            try {
                image = map_to_ulis(*p);
            } catch (const std::exception& ex) {
                return fail(r, tag(n) + "p=" + to_string(*p) + ": " + ex.what());
            }
            if (!avoids(image, pattern_132())) {
                return fail(r, tag(n) + "p=" + to_string(*p) + ": g(p) = " + to_string(image) +
                                   " contains 132");
            }
            if (!has_ulis(image)) {
                return fail(r, tag(n) + "p=" + to_string(*p) + ": g(p) = " + to_string(image) +
                                   " has no ULIS");
            }
            if (!images.insert(image).second) {
                return fail(r, tag(n) + "p=" + to_string(*p) + ": image " + to_string(image) +
                                   " already taken");
            }
        }
        if (with_ulis < without) {
            return fail(r, tag(n) + "u=" + std::to_string(with_ulis) + " < v=" +
                               std::to_string(without));
        }
        detail(r, "distinct_images_n" + std::to_string(n), std::to_string(images.size()));
    }
    return r;
}

SuiteResult verify_characterization(std::size_t max_n, const Limits& limits) {
    auto r = start(Suite::Characterization, max_n, limits);
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= max_n; ++n) {
        AvoiderEnumerator avoiders(n, pattern_132(), limits.avoider_cap);
        while (auto p = avoiders.next()) {
            const bool ulis = has_ulis(*p);
            const bool unique_max = max_profile(rank_sequence(*p)).unique;
            if (ulis != unique_max) {
                return fail(r, tag(n) + "p=" + to_string(*p) + ": has_ulis=" +
                                   (ulis ? "true" : "false") + " but unique max=" +
                                   (unique_max ? "true" : "false"));
            }
            ++checked;
        }
    }
    detail(r, "permutations_checked", std::to_string(checked));
    return r;
}

SuiteResult verify_catalan(std::size_t max_n, const Limits& limits) {
    auto r = start(Suite::Catalan, max_n, limits);
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::size_t avoiders = 0;
        for_each_avoider(n, pattern_132(), [&](const Permutation&) { ++avoiders; },
                         limits.avoider_cap);

        // S_n reversed and shifted down by one, against the family starting
        // at 0 whose entries rise by at most one, built independently.
        std::set<std::vector<int>> transformed;
        RankSequenceEnumerator e(n, limits.sequence_cap);
        while (const auto* values = e.next_values()) {
            std::vector<int> w(values->rbegin(), values->rend());
            for (int& x : w) --x;
            transformed.insert(std::move(w));
        }
        std::set<std::vector<int>> stanley;
        std::vector<int> cur(n, 0);
        auto grow = [&](auto& self, std::size_t i) -> void {
            if (i == n) {
                stanley.insert(cur);
                return;
            }
            for (int x = 0; x <= cur[i - 1] + 1; ++x) {
                cur[i] = x;
                self(self, i + 1);
            }
        };
        grow(grow, 1);

        const BigInt c = catalan(n);
        if (BigInt(avoiders) != c || BigInt(transformed.size()) != c) {
            return fail(r, tag(n) + "|Av|=" + std::to_string(avoiders) + " |S|=" +
                               std::to_string(transformed.size()) + " C=" + c.str());
        }
        if (transformed != stanley) return fail(r, tag(n) + "reversed S_n differs from the 0-start family");
        detail(r, "catalan_n" + std::to_string(n), c.str());
    }
    return r;
}

SuiteResult verify_oeis(std::size_t max_n, const std::string& bfile_text, const Limits& limits) {
    auto r = start(Suite::Oeis, max_n, limits);
    const auto entries = oeis::parse_bfile(bfile_text);
    for (std::size_t n = 1; n <= max_n; ++n) {
        const auto expected = oeis::lookup(entries, n);
        if (!expected) return fail(r, tag(n) + "no b-file entry");
        const BigInt counted = ulis_count_all(n, limits.all_perm_cap);
        if (counted != *expected) {
            return fail(r, tag(n) + "brute force " + counted.str() + " vs b-file " + expected->str());
        }
        detail(r, "a" + std::to_string(n), counted.str());
    }
    return r;
}

SuiteResult run_suite(Suite s, std::size_t max_n, const Limits& limits,
                      const std::string& bfile_text) {
    switch (s) {
        case Suite::Bijection: return verify_bijection(max_n, limits);
        case Suite::Lemma1: return verify_lemma1(max_n, limits);
        case Suite::InjectionF: return verify_injection_f(max_n, limits);
        case Suite::InjectionG: return verify_injection_g(max_n, limits);
        case Suite::Characterization: return verify_characterization(max_n, limits);
        case Suite::Catalan: return verify_catalan(max_n, limits);
        case Suite::Oeis: return verify_oeis(max_n, bfile_text, limits);
    }
    throw InvalidInput("unknown suite");
}

}  // namespace ulis
