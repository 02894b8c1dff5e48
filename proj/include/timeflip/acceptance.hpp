// The acceptance suite: one callable check per quantitative target the
// toolkit is expected to reproduce, shared by the test binary and the CLI.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace timeflip {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::vector<std::string> details;  // one line per sub-check
    double seconds;
};

/// Runs acceptance criterion `id` (1..10).
CriterionResult run_criterion(int id, std::uint64_t seed = 12345);

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed = 12345);

inline constexpr int kCriterionCount = 10;

}  // namespace timeflip
