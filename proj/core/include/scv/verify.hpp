#pragma once

#include "scv/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace scv {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

struct VerifyOptions {
    long d_max = 3;
    long degree_bound = 6;
    std::uint64_t seed = 20250801;
    /// Runs the whole battery with the perturbed structure constant, so every
    /// mathematical criterion fails loudly. Test instrument.
    bool inject_fault = false;
};

struct VerifySummary {
    std::vector<CriterionResult> criteria;
    double total_seconds = 0.0;
    bool all_passed() const {
        for (const auto& c : criteria)
            if (!c.passed) return false;
        return true;
    }
};

/// The acceptance battery: each criterion is a desk-scale instantiation of a
/// structural claim, checked in exact arithmetic with zero tolerance. Verdicts
/// are theorems, so they are independent of the seed; the seed only selects
/// the randomized corpus.
VerifySummary run_verification_suite(const VerifyOptions& opt);

}  // namespace scv
