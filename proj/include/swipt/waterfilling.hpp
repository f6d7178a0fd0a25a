// SPDX-License-Identifier: Apache-2.0
//
// The two water-filling problems behind the spatial-switching design:
//
//  * waterfill_budget: maximize sum rate under a total power budget.
//  * min_power_rate_wf: minimize total power subject to a sum-rate target.
//
// Both put every active channel at a common level p_j + noise/g_j; the
// channels whose depth noise/g_j lies above that level get nothing.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "swipt/channel.hpp"

namespace swipt {

struct WaterfillResult
{
    std::vector<double> powers; // same order as the input gains
    double water_level = 0.0;   // p_j + noise/g_j on active channels
    std::size_t active_count = 0;
};

/// Rate-maximizing allocation of `budget_w` over `gains` (positive,
/// nonincreasing). The active set is the largest prefix whose common level
/// exceeds the depth of its weakest member. Throws InvalidArgument on an
/// empty gain list or a non-positive budget.
WaterfillResult waterfill_budget(std::span<const double> gains, double noise_power_w, double budget_w);

/// Sum rate of `powers` over `gains`, in bps/Hz.
double sum_rate(std::span<const double> gains, std::span<const double> powers, double noise_power_w);

/// Largest rate the information channels can carry while one eigenchannel
/// is kept for harvesting: budget water-filling over the strongest r-1
/// gains. Zero when r == 1.
double feasibility_rate_max(const EigenchannelSet& chans, double budget_w);

/// An information-decoding channel, identified by its position in the full
/// eigenchannel set.
struct IdChannel
{
    std::size_t index;
    double gain;
};

struct ChannelPower
{
    std::size_t index;
    double power;
};

struct MinPowerWfResult
{
    std::vector<ChannelPower> id_powers;   // one entry per input channel, input order
    std::optional<std::size_t> step_index; // weakest active channel (original index)
    std::size_t active_id_count = 0;       // active information channels
    double water_level = 0.0;
    double total_id_power = 0.0;

    /// Channels with nonzero power once the harvesting channel is counted.
    std::size_t kappa() const noexcept { return active_id_count + 1; }
    double power_of(std::size_t original_index) const;
};

/// All channels of `chans` except `excluded`, strongest first.
std::vector<IdChannel> id_channels(const EigenchannelSet& chans, std::optional<std::size_t> excluded);

/// Minimum total power meeting `rate_req` over `channels`.
///
/// The weakest active channel s is the last position k for which
///   rate_req > sum_{j<=k} log2(g_j / g_k),
/// found by scanning down from the weakest channel; ties fail the strict
/// test. The common level is noise * 2^(R/n) / (prod_{j<=s} g_j)^(1/n) with n
/// active channels, so the rate constraint holds with equality.
///
/// rate_req == 0 gives the all-zero allocation. An empty channel list with a
/// positive rate throws Infeasible.
MinPowerWfResult min_power_rate_wf(std::span<const IdChannel> channels, double noise_power_w,
                                   double rate_req);

} // namespace swipt
