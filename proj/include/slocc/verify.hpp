#pragma once

#include "slocc/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slocc {

/// Property suites runnable from the CLI. Each realizes one of the library's
/// standing claims as a randomized (or exhaustive) check.
enum class Suite {
    Table1,           // every state lands on exactly one decision row
    AppendixA,        // the six class criteria are pairwise exclusive
    AppendixB,        // the inconsistent condition set never occurs
    AppendixCD,       // alternative criterion forms agree with the primaries
    AppendixE,        // four-qubit W orbit residual identities
    Derivations3,     // three-qubit GHZ and W orbit residual identities
    OracleAgreement,  // rank-based classification matches the criterion tables
    C4Properties,     // permutation symmetry, self-complement, both traces
};

inline const char* to_string(Suite s) {
    switch (s) {
        case Suite::Table1: return "table1";
        case Suite::AppendixA: return "appendixA";
        case Suite::AppendixB: return "appendixB";
        case Suite::AppendixCD: return "appendixCD";
        case Suite::AppendixE: return "appendixE";
        case Suite::Derivations3: return "derivations3";
        case Suite::OracleAgreement: return "oracle-agreement";
        case Suite::C4Properties: return "c4-properties";
    }
    return "?";
}

std::optional<Suite> parse_suite(const std::string& name);
std::vector<Suite> all_suites();

struct SuiteResult {
    std::string suite;
    long long trials = 0;
    long long violations = 0;
    std::vector<std::string> counterexamples;  // full amplitude dumps
    bool passed() const { return violations == 0; }
};

SuiteResult run_suite(Suite suite, long long trials, std::uint64_t seed, Mode mode,
                      const ToleranceConfig& tol);

}  // namespace slocc
