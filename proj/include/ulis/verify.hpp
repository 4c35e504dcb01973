#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ulis/types.hpp"

namespace ulis {

/// Outcome of an exhaustive suite. `counterexample` names the first
/// failing object in enumeration order; `details` carries counts.
struct SuiteResult {
    std::string suite;
    std::size_t max_n = 0;
    bool passed = true;
    std::optional<std::string> counterexample;
    std::vector<std::pair<std::string, std::string>> details;
};

enum class Suite { Bijection, Lemma1, InjectionF, InjectionG, Characterization, Catalan, Oeis };

const std::vector<std::pair<std::string, Suite>>& suite_names();
std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite s);

/// Largest max_n a suite accepts under `limits`.
std::size_t suite_cap(Suite s, const Limits& limits);

/// Each suite runs n = 1..max_n (n = 0..max_n where the empty case makes
/// sense) and stops at the first counterexample. Throws InvalidInput when
/// max_n exceeds suite_cap.
SuiteResult verify_bijection(std::size_t max_n, const Limits& limits = default_limits());
SuiteResult verify_lemma1(std::size_t max_n, const Limits& limits = default_limits());
SuiteResult verify_injection_f(std::size_t max_n, const Limits& limits = default_limits());
SuiteResult verify_injection_g(std::size_t max_n, const Limits& limits = default_limits());
SuiteResult verify_characterization(std::size_t max_n, const Limits& limits = default_limits());
SuiteResult verify_catalan(std::size_t max_n, const Limits& limits = default_limits());
/// Compares brute-force ULIS counts against parsed b-file entries.
SuiteResult verify_oeis(std::size_t max_n, const std::string& bfile_text,
                        const Limits& limits = default_limits());

SuiteResult run_suite(Suite s, std::size_t max_n, const Limits& limits,
                      const std::string& bfile_text = {});

}  // namespace ulis
