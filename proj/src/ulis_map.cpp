#include "ulis/ulis_map.hpp"

#include <algorithm>

#include "ulis/lis.hpp"
#include "ulis/pattern.hpp"

namespace ulis {

MaxProfile max_profile(const RankSequence& t) {
    MaxProfile prof;
    const auto values = t.values();
    prof.k = *std::max_element(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] == prof.k) prof.occurrences.push_back(i + 1);
    prof.unique = prof.occurrences.size() == 1;
    return prof;
}

RankSequence raise_final_max_block(const RankSequence& t) {
    const MaxProfile prof = max_profile(t);
    if (prof.unique) {
        throw InvalidInput("sequence " + to_string(t) +
                           " already has a unique maximum; the map is defined only when the "
                           "maximum repeats");
    }
    const std::size_t j = prof.occurrences.back();
    const std::size_t i = prof.occurrences[prof.occurrences.size() - 2];

    std::vector<int> values(t.values().begin(), t.values().end());
    for (std::size_t pos = i; pos < j; ++pos) ++values[pos - 1];

    auto violation = check_rank_values(values);
    if (violation) {
        throw ConstructionError("raising " + to_string(t) + " broke " + violation->describe());
    }
    RankSequence out(std::move(values));
    const MaxProfile after = max_profile(out);
    if (!after.unique || after.k != prof.k + 1 || after.occurrences.front() != i) {
        throw ConstructionError("raising " + to_string(t) + " did not produce a unique maximum");
    }
    return out;
}

UlisMapTrace map_to_ulis_traced(const Permutation& p) {
    if (const auto verdict = contains_pattern(p, pattern_132()); verdict.contains) {
        const auto& w = *verdict.witness;
        throw InvalidInput("input contains 132 at positions " + std::to_string(w[0]) + "," +
                           std::to_string(w[1]) + "," + std::to_string(w[2]));
    }
    if (has_ulis(p)) throw InvalidInput("input already has a ULIS");

    RankSequence before = rank_sequence(p);
    RankSequence after = raise_final_max_block(before);
    Permutation image = invert(after);
    return {std::move(before), std::move(after), std::move(image)};
}

Permutation map_to_ulis(const Permutation& p) { return map_to_ulis_traced(p).image; }

}  // namespace ulis
