#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levyarea/holding.hpp"
#include "levyarea/process.hpp"

namespace levyarea {

struct CheckResult {
    std::string name;
    enum class Status { Pass, Fail, Skip } status = Status::Pass;
    std::string detail;
};

struct VerifyOptions {
    double x = 1.0;
    std::size_t reps = 20000;
    std::uint64_t seed = 1;
    unsigned workers = 0;
    /// Monte Carlo agreement band, in standard errors.
    double se_band = 4.0;
};

/// Cross-checks every analytic formula for (spec, h) against an independent
/// route: finite differences, series composition, alternative spec, and the
/// exact path simulator when sigma2 == 0. Output is deterministic given the
/// options, whatever the worker count.
std::vector<CheckResult> run_verification(const ProcessSpec& spec, const HoldingFunction& h,
                                          const VerifyOptions& options);

std::string to_string(CheckResult::Status status);

} // namespace levyarea
