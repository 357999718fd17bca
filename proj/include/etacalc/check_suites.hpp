// Named verification suites behind `check <suite>`: randomized and
// exhaustive desk-scale sweeps of the squaring law, the two-sided vanishing
// equivalence, the projective-space criterion, Euler parity, the flag
// vanishing families, and the oracle agreements.
#pragma once

#include "etacalc/space_ast.hpp"

#include <string>
#include <vector>

namespace etacalc {

struct CheckOptions {
    unsigned seed = 1;
    bool verify = false; // also run oracle cross-checks where applicable
    int trials = 200;    // randomized suite size
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass() const;
};

const std::vector<std::string>& check_suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown selector.
SuiteReport run_check_suite(const std::string& selector, const CheckOptions& options);

/// Oracle cross-checks for one parsed space: flag enumerations and tangent
/// monomials against the sign-action oracles, projective reps per point, and
/// the two-route eta agreement for dold spaces.  Throws when an input
/// exceeds the oracle scale caps.
std::vector<CheckResult> oracle_cross_checks(const SpaceAst& ast);

} // namespace etacalc
