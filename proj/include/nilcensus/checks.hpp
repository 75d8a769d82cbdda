#pragma once

#include <string>
#include <vector>

#include "nilcensus/bounds.hpp"

namespace nilcensus {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    EnumLimits limits;
    int workers = 1;
};

/// Names accepted by run_verify_checks / the CLI --only flag.
const std::vector<std::string>& verify_check_names();

/// Runs the reproduction suite (all checks, or the named subset), each check
/// an exact recomputation of one of the library's frozen count/bound facts.
std::vector<CheckResult> run_verify_checks(const std::vector<std::string>& only,
                                           const VerifyOptions& options = {});

CheckResult run_verify_check(const std::string& name, const VerifyOptions& options = {});

}  // namespace nilcensus
