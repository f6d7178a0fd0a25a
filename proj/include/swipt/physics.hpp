// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "swipt/channel.hpp"

namespace swipt {

/// Per-eigenchannel transmit powers and the (single) harvesting channel.
/// eh_index is zero-based; empty means every channel decodes information.
struct PowerAllocation
{
    std::vector<double> powers;
    std::optional<std::size_t> eh_index;

    double total() const;
    /// Throws InvalidArgument on negative powers, an out-of-range eh_index, or
    /// a total above budget + 1e-12.
    void validate(double budget_w) const;
};

/// Sum rate in bps/Hz; the harvesting channel contributes nothing.
double achievable_rate(const PowerAllocation& alloc, const EigenchannelSet& chans);

/// RF power arriving on the harvesting channel, p_e * g_e.
/// Throws NoHarvestingChannel when eh_index is empty.
double received_rf_power(const PowerAllocation& alloc, const EigenchannelSet& chans);

/// Fixed RF-to-DC efficiency above a sensitivity threshold.
struct ConstantEfficiency
{
    double efficiency = 0.5;
    double threshold_w = 1e-6;
};

/// Logistic efficiency curve eta(P) = eta_max * (L(P) - L(0)) / (1 - L(0)),
/// L(P) = 1 / (1 + exp(-steepness * (P - midpoint))), zero below threshold.
/// Efficiency rises monotonically and saturates at eta_max, so harvested
/// power eta(P)*P is nondecreasing and superadditive.
struct LogisticEfficiency
{
    double max_efficiency = 0.7;
    double steepness_per_w = 150.0;
    double midpoint_w = 0.01;
    double threshold_w = 1e-6;
};

/// Caller-supplied efficiency rule. The caller is responsible for making
/// eta(P)*P nondecreasing; values outside [0, 1] are clamped.
struct CustomEfficiency
{
    std::function<double(double)> efficiency;
    double threshold_w = 0.0;
    std::string name = "custom";
};

/// RF-to-DC conversion model, immutable after construction.
class EhModel
{
  public:
    using Rule = std::variant<ConstantEfficiency, LogisticEfficiency, CustomEfficiency>;

    explicit EhModel(Rule rule);

    /// eta = 0.5 with a -30 dBm sensitivity threshold.
    static EhModel default_model() { return EhModel(ConstantEfficiency{}); }

    double efficiency(double p_r_w) const;
    double harvested(double p_r_w) const { return efficiency(p_r_w) * p_r_w; }
    double threshold_w() const;
    std::string describe() const;

  private:
    Rule rule_;
};

/// DC power harvested from p_r_w of received RF power.
inline double harvested_power(double p_r_w, const EhModel& model)
{
    return model.harvested(p_r_w);
}

} // namespace swipt
