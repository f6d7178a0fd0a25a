// SPDX-License-Identifier: Apache-2.0
#include "swipt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "swipt/errors.hpp"

namespace swipt {

void OracleConfig::validate() const
{
    if (grid_steps < 10) throw InvalidArgument("oracle grid_steps must be >= 10");
    if (refine_steps < 2) throw InvalidArgument("oracle refine_steps must be >= 2");
    if (max_rank > 4) throw InvalidArgument("oracle max_rank must be <= 4");
    if (!(tolerance_w >= 0.0)) throw InvalidArgument("oracle tolerance must be >= 0");
}

namespace {

double rate_of(std::span<const double> gains, std::span<const double> powers, double noise)
{
    double rate = 0.0;
    for (std::size_t j = 0; j < gains.size(); ++j) rate += std::log2(1.0 + powers[j] * gains[j] / noise);
    return rate;
}

// Visits every p = step * i with integer i >= 0 and sum(i) <= n.
void for_each_simplex_point(std::size_t dims, std::size_t n, double step,
                            const std::function<void(std::span<const double>)>& visit)
{
    std::vector<double> p(dims, 0.0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t d, std::size_t left) {
        if (d == dims) {
            visit(p);
            return;
        }
        for (std::size_t i = 0; i <= left; ++i) {
            p[d] = step * static_cast<double>(i);
            rec(d + 1, left - i);
        }
    };
    rec(0, n);
}

// Visits the box prod_j [max(0, c_j - half), c_j + half] on a regular grid.
void for_each_box_point(std::span<const double> center, double half, std::size_t steps,
                        const std::function<void(std::span<const double>)>& visit)
{
    const std::size_t dims = center.size();
    std::vector<double> p(dims, 0.0);
    const double fine = 2.0 * half / static_cast<double>(steps);
    std::function<void(std::size_t)> rec = [&](std::size_t d) {
        if (d == dims) {
            visit(p);
            return;
        }
        const double lo = std::max(0.0, center[d] - half);
        for (std::size_t t = 0; t <= steps; ++t) {
            p[d] = lo + fine * static_cast<double>(t);
            rec(d + 1);
        }
    };
    rec(0);
}

struct MinSumSearch
{
    bool found = false;
    double sum = 0.0;
    std::vector<double> powers;
    std::size_t evaluated = 0;
};

// Smallest-sum grid point meeting the rate, coarse then refined.
MinSumSearch min_sum_search(std::span<const double> gains, double noise, double rate_req, double budget,
                            const OracleConfig& cfg)
{
    const std::size_t dims = gains.size();
    const double step = budget / static_cast<double>(cfg.grid_steps);
    MinSumSearch best;
    auto consider = [&](std::span<const double> p) {
        ++best.evaluated;
        double sum = 0.0;
        for (double x : p) sum += x;
        if (sum > budget) return;
        if (best.found && sum >= best.sum) return;
        if (rate_of(gains, p, noise) < rate_req) return;
        best.found = true;
        best.sum = sum;
        best.powers.assign(p.begin(), p.end());
    };
    for_each_simplex_point(dims, cfg.grid_steps, step, consider);
    if (best.found && dims > 0) {
        const std::vector<double> center = best.powers;
        for_each_box_point(center, step, cfg.refine_steps, consider);
    }
    return best;
}

} // namespace

OracleResult brute_force_op(const EigenchannelSet& chans, double budget_w, double rate_req, const OracleConfig& cfg)
{
    cfg.validate();
    const std::size_t r = chans.size();
    if (r > cfg.max_rank) {
        throw InvalidArgument(fmt::format("oracle refuses rank {} (max {})", r, cfg.max_rank));
    }
    const double step = budget_w / static_cast<double>(cfg.grid_steps);

    OracleResult out;
    out.powers.assign(r, 0.0);
    for (std::size_t e = 0; e < r; ++e) {
        std::vector<double> gains;
        std::vector<std::size_t> index;
        for (std::size_t k = 0; k < r; ++k) {
            if (k == e) continue;
            gains.push_back(chans.gain(k));
            index.push_back(k);
        }
        out.grid_tolerance = std::max(out.grid_tolerance,
                                      chans.gain(e) * static_cast<double>(gains.size()) * step);
        const MinSumSearch s = min_sum_search(gains, chans.noise_power(), rate_req, budget_w, cfg);
        out.evaluated += s.evaluated;
        if (!s.found) continue;
        const double p_r = chans.gain(e) * (budget_w - s.sum);
        if (!out.found || p_r > out.p_r) {
            out.found = true;
            out.eh_index = e;
            out.p_r = p_r;
            std::fill(out.powers.begin(), out.powers.end(), 0.0);
            for (std::size_t j = 0; j < index.size(); ++j) out.powers[index[j]] = s.powers[j];
            out.powers[e] = budget_w - s.sum;
        }
    }
    out.grid_tolerance += cfg.tolerance_w;
    return out;
}

MinPowerOracleResult brute_force_min_power(std::span<const double> gains, double noise_power_w, double rate_req,
                                           double budget_w, const OracleConfig& cfg)
{
    cfg.validate();
    if (gains.size() > cfg.max_rank) {
        throw InvalidArgument(fmt::format("oracle refuses {} channels (max {})", gains.size(), cfg.max_rank));
    }
    MinPowerOracleResult out;
    const double step = budget_w / static_cast<double>(cfg.grid_steps);
    out.grid_tolerance = static_cast<double>(gains.size()) * step + cfg.tolerance_w;
    const MinSumSearch s = min_sum_search(gains, noise_power_w, rate_req, budget_w, cfg);
    out.found = s.found;
    out.min_total = s.sum;
    out.powers = s.powers;
    return out;
}

MultiEhResult brute_force_multi_eh(const EigenchannelSet& chans, double budget_w, double rate_req,
                                   const EhModel& model, const OracleConfig& cfg)
{
    cfg.validate();
    const std::size_t r = chans.size();
    if (r < 2 || r > 3) throw InvalidArgument("multi-EH oracle needs 2 <= r <= 3");
    const double step = budget_w / static_cast<double>(cfg.grid_steps);

    MultiEhResult out;
    for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = a + 1; b < r; ++b) {
            std::vector<double> gains;
            for (std::size_t k = 0; k < r; ++k) {
                if (k != a && k != b) gains.push_back(chans.gain(k));
            }
            for_each_simplex_point(gains.size(), cfg.grid_steps, step, [&](std::span<const double> p) {
                double sum = 0.0;
                for (double x : p) sum += x;
                const double eh_budget = budget_w - sum;
                if (eh_budget < 0.0) return;
                if (rate_of(gains, p, chans.noise_power()) < rate_req) return;
                for (std::size_t x = 0; x <= cfg.grid_steps; ++x) {
                    const double frac = static_cast<double>(x) / static_cast<double>(cfg.grid_steps);
                    const double p_h = model.harvested(frac * eh_budget * chans.gain(a)) +
                                       model.harvested((1.0 - frac) * eh_budget * chans.gain(b));
                    if (!out.found || p_h > out.best_p_h) {
                        out = MultiEhResult{true, p_h, a, b, frac};
                    }
                }
            });
        }
    }
    return out;
}

SplitComparison compare_eh_split(const EigenchannelSet& chans, std::size_t strong, std::size_t weak,
                                 double eh_budget_w, double fraction_on_strong, const EhModel& model)
{
    if (strong >= chans.size() || weak >= chans.size() || strong == weak) {
        throw InvalidArgument("compare_eh_split: bad channel indices");
    }
    if (!(fraction_on_strong >= 0.0 && fraction_on_strong <= 1.0)) {
        throw InvalidArgument("compare_eh_split: fraction must lie in [0, 1]");
    }
    const double single = model.harvested(eh_budget_w * chans.gain(strong));
    const double split = model.harvested(fraction_on_strong * eh_budget_w * chans.gain(strong)) +
                         model.harvested((1.0 - fraction_on_strong) * eh_budget_w * chans.gain(weak));
    return {single, split};
}

} // namespace swipt
