#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fuzzyseq {

struct SuiteCheck {
    std::string label;
    bool passed = false;
    std::string observed; // the numbers the verdict was based on
};

struct SuiteReport {
    std::string name;  // claim id, e.g. "3.7"
    std::string claim; // what the suite verifies
    std::vector<SuiteCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Runs the finite-prefix witness checks for one claim in the catalog: the
// worked example sequences plus seeded structured sequences, pointwise
// prefix inequalities where the claim admits them, classifier verdicts where
// it does not. Unknown name -> std::invalid_argument listing valid names.
SuiteReport theorem_suite(const std::string& name, std::uint64_t seed = 42);

std::vector<std::string> suite_names();

} // namespace fuzzyseq
