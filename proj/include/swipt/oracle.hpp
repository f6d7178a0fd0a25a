// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference solvers. These enumerate power grids directly and
// share no code with the water-filling solvers, so agreement between the two
// is evidence of correctness. Test and self-check use only.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/physics.hpp"

namespace swipt {

struct OracleConfig
{
    std::size_t grid_steps = 200;  // coarse steps per power dimension over [0, budget]
    std::size_t refine_steps = 40; // fine steps across +-1 coarse step around the coarse optimum
    double tolerance_w = 1e-12;    // slack added to the reported grid bound
    std::size_t max_rank = 4;

    /// Throws InvalidArgument unless grid_steps >= 10 and max_rank <= 4.
    void validate() const;
};

struct OracleResult
{
    bool found = false;
    std::size_t eh_index = 0;
    std::vector<double> powers; // full length r, harvesting channel included
    double p_r = 0.0;           // 0 when nothing feasible was found
    /// Bound on how far the grid optimum can sit below the true optimum.
    double grid_tolerance = 0.0;
    std::size_t evaluated = 0;
};

/// Exhaustive search over the harvesting channel and a simplex grid of
/// information-channel powers. Among grid points meeting the rate, returns
/// the largest g_e * (budget - sum of information powers). Refuses (throws
/// InvalidArgument) when r exceeds cfg.max_rank.
OracleResult brute_force_op(const EigenchannelSet& chans, double budget_w, double rate_req,
                            const OracleConfig& cfg);

struct MinPowerOracleResult
{
    bool found = false;
    double min_total = 0.0;
    std::vector<double> powers;
    double grid_tolerance = 0.0;
};

/// Grid minimum of sum p_j over allocations of [0, budget_w] meeting the
/// rate over `gains`.
MinPowerOracleResult brute_force_min_power(std::span<const double> gains, double noise_power_w, double rate_req,
                                           double budget_w, const OracleConfig& cfg);

struct MultiEhResult
{
    bool found = false;
    double best_p_h = 0.0;
    std::size_t strong = 0;
    std::size_t weak = 0;
    double fraction_on_strong = 0.0;
};

/// Best harvested power when two eigenchannels harvest simultaneously, the
/// rest decode information. Grid over information powers and the split of
/// the remaining budget. Only for r <= 3.
MultiEhResult brute_force_multi_eh(const EigenchannelSet& chans, double budget_w, double rate_req,
                                   const EhModel& model, const OracleConfig& cfg);

/// Harvested power of giving all of `eh_budget_w` to eigenchannel `strong`
/// versus splitting it as (fraction, 1 - fraction) between `strong` and `weak`.
struct SplitComparison
{
    double single_p_h;
    double split_p_h;
};
SplitComparison compare_eh_split(const EigenchannelSet& chans, std::size_t strong, std::size_t weak,
                                 double eh_budget_w, double fraction_on_strong, const EhModel& model);

} // namespace swipt
