// SPDX-License-Identifier: Apache-2.0
//
// Joint eigenchannel assignment and power allocation for a spatial-switching
// receiver: exactly one eigenchannel harvests energy, the rest decode
// information, and the harvested power is maximized subject to a minimum
// information rate and a total transmit power budget.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/physics.hpp"

namespace swipt {

/// Outcome of reserving eigenchannel `eh_index` for harvesting.
struct CandidateEval
{
    std::size_t eh_index;
    double id_power;  // minimum power the other channels need for the rate
    double eh_power;  // budget - id_power (negative when unreachable)
    double p_r;       // g_e * eh_power, 0 when infeasible
    bool feasible;
};

struct SsSolution
{
    bool feasible = false;
    std::optional<std::size_t> eh_index;       // zero-based
    std::optional<PowerAllocation> allocation; // empty when infeasible
    double p_r = 0.0;
    double p_h = 0.0;
    double achieved_rate = 0.0;
    double budget = 0.0;
    double rate_req = 0.0;
    double rate_max = 0.0; // rate ceiling with one channel reserved for EH
    std::vector<CandidateEval> per_candidate;
};

/// Globally optimal assignment and powers.
///
/// Every eigenchannel is tried as the harvesting channel; the others get the
/// minimum-power rate-constrained water-filling allocation and the leftover
/// budget goes to the harvesting channel. The candidate with the largest
/// received RF power wins (lowest index on ties). The result is infeasible
/// when rate_req > 0 and rate_req >= rate_max, or when no candidate leaves a
/// nonnegative harvesting budget. The EH model only converts the final P_R.
SsSolution solve_optimal(const EigenchannelSet& chans, double budget_w, double rate_req,
                         const EhModel& model = EhModel::default_model());

struct ApproxSolution
{
    std::size_t eh_index = 0;
    double equal_pa = 0.0;              // per-channel equal power for eh_index
    std::vector<double> candidate_equal_pa; // equal power for each candidate e
    PowerAllocation refined_allocation;
    double p_r = 0.0;
    double p_h = 0.0;
    double achieved_rate = 0.0;
};

/// High-SNR closed-form assignment: every information channel gets the same
/// power 2^(R/(r-1)) * noise / (prod_{i != e} g_i)^(1/(r-1)) and the
/// assignment maximizes g_e * (budget - (r-1) * that power). The returned
/// allocation is the exact minimum-power water-filling for that assignment.
///
/// Requires r >= 2. Throws ApproxInfeasible when the equal allocation
/// exhausts the budget for every candidate.
ApproxSolution solve_approx(const EigenchannelSet& chans, double budget_w, double rate_req,
                            const EhModel& model = EhModel::default_model());

/// Optimality-condition residuals of a spatial-switching allocation, in
/// watts except rate_residual (bps/Hz).
struct KktReport
{
    double stationarity = 0.0;           // spread of p_j + noise/g_j over active ID channels
    double complementary_slackness = 0.0; // max over inactive ID channels of (level - noise/g_j)+
    double rate_residual = 0.0;          // |rate - rate_req|
    double budget_residual = 0.0;        // |sum p - budget|
    double negativity = 0.0;             // max(0, -min p)

    double worst() const;
    bool ok(double tol) const { return worst() <= tol; }
};

/// Residuals of `solution` with respect to the rate-constrained
/// water-filling conditions. Throws InvalidArgument on an infeasible
/// solution.
KktReport verify_kkt(const SsSolution& solution, const EigenchannelSet& chans, double rate_req);

} // namespace swipt
