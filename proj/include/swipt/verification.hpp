// SPDX-License-Identifier: Apache-2.0
//
// Randomized property checks shared by the selftest subcommand and the
// acceptance suite. Each check draws its own instances from a seed and
// reports counts instead of stopping at the first failure.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "swipt/oracle.hpp"

namespace swipt {

struct CheckResult
{
    std::string name;
    bool passed = false;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string detail;
};

/// Solver P_R* against the brute-force oracle on r in {2,3}, noise -100 dBm,
/// 4 W budget, rate uniform in (0, 0.9 R_max). Passes when every instance
/// agrees within the oracle's grid tolerance.
CheckResult check_oracle_equivalence(std::size_t instances, std::uint64_t seed, const OracleConfig& cfg);

/// Optimality residuals of the exact solver on r in 2..8 with rate uniform in
/// (0, R_max): rate 1e-9, budget 1e-10, level spread 1e-9, slackness 1e-9.
CheckResult check_kkt_residuals(std::size_t instances, std::uint64_t seed);

/// Solver infeasibility flag against an R_max computed directly from budget
/// water-filling over the strongest r-1 gains. Disagreement is tolerated
/// only within 1e-9 bps/Hz of the boundary.
CheckResult check_feasibility_boundary(std::size_t instances, std::uint64_t seed);

/// Harvesting on one eigenchannel versus random two-channel splits of the
/// same budget (r = 3), under the constant and logistic EH models.
CheckResult check_single_eh_dominance(std::size_t instances, std::size_t splits, std::uint64_t seed);

struct ApproxStats
{
    double median_gap = 0.0;      // median of (P_R* - P_R approx) / P_R*
    double match_fraction = 0.0;  // fraction with identical assignment
    double max_gap = 0.0;
    std::size_t approx_infeasible = 0;
    std::size_t exceeded_optimum = 0; // approx P_R above P_R* + 1e-12
};

/// Closed-form assignment against the exact solver on n_r x n_t channels at
/// the given rate fraction of R_max. Passes when the median gap is <= 1%,
/// the assignment matches on >= 90% and the approximation never wins.
CheckResult check_approx_tightness(std::size_t instances, std::uint64_t seed, double rate_fraction,
                                   ApproxStats* stats = nullptr);

/// A water-filling step power with its sign error (+1/g_s instead of -1/g_s)
/// must be flagged by verify_kkt.
CheckResult check_kkt_detects_mutation();

/// The same sweep run with each worker count must format to identical bytes.
CheckResult check_sweep_determinism(std::size_t trials, std::uint64_t seed, const std::vector<std::size_t>& threads);

} // namespace swipt
