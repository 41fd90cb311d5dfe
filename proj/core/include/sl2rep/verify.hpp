#pragma once

// Brute-force reconciliation of every closed form against the enumerated group.

#include "sl2rep/group.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sl2rep {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
    std::uint32_t q = 0;
    std::vector<CheckResult> checks;
    bool overall = false;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Check names, in the order verify_all runs them.
const std::vector<std::string>& check_names();

/// Runs every check; a failing or throwing check is recorded and the rest
/// still run. Throws std::length_error when q exceeds the bound and
/// std::invalid_argument when q is not an odd prime.
VerificationReport verify_all(std::uint32_t q, EnumerationBound bound = {});

}  // namespace sl2rep
