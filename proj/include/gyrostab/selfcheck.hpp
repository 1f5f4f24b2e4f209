#pragma once

/**
 * Cross-module consistency suite: verifies on given parameters that the
 * dynamics, the equilibrium families, the level-set reduction and the
 * three stability routes agree with each other.
 */

#include <string>
#include <vector>

#include "gyrostab/core.hpp"

namespace gyrostab {

struct SelfcheckResult {
    int passed = 0;
    int failed = 0;
    std::vector<std::string> failures;

    bool ok() const { return failed == 0; }
};

SelfcheckResult run_selfcheck(const GyrostatParams& params);

}  // namespace gyrostab
