#pragma once

#include "kcut/parallel.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kcut {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 0x5eedULL;
    Exec exec = Exec::parallel;
    std::vector<int> only;  // empty = all criteria
};

/// Runs the acceptance criteria on built-in instances, one pass/fail line per
/// criterion to `progress` when given. All randomized pieces derive from
/// options.seed and are reproducible bit-for-bit.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace kcut
