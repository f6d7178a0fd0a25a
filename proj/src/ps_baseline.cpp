// SPDX-License-Identifier: Apache-2.0
#include "swipt/ps_baseline.hpp"

#include <cmath>

#include "swipt/errors.hpp"
#include "swipt/waterfilling.hpp"

namespace swipt {

namespace {

double rate_at(const EigenchannelSet& chans, const std::vector<double>& powers, double id_fraction)
{
    double rate = 0.0;
    for (std::size_t k = 0; k < chans.size(); ++k) {
        rate += std::log2(1.0 + id_fraction * powers[k] * chans.gain(k) / chans.noise_power());
    }
    return rate;
}

} // namespace

PsSolution solve_ps(const EigenchannelSet& chans, double budget_w, double rate_req)
{
    if (!(budget_w > 0.0) || !std::isfinite(budget_w)) throw InvalidArgument("budget must be positive");
    if (!(rate_req >= 0.0) || !std::isfinite(rate_req)) throw InvalidArgument("rate requirement must be >= 0");

    PsSolution sol;
    sol.powers = waterfill_budget(chans.gains(), chans.noise_power(), budget_w).powers;
    double received = 0.0;
    for (std::size_t k = 0; k < chans.size(); ++k) received += sol.powers[k] * chans.gain(k);
    sol.max_rate = rate_at(chans, sol.powers, 1.0);

    if (rate_req > sol.max_rate) {
        sol.achieved_rate = sol.max_rate;
        return sol;
    }

    double t = 0.0;
    if (rate_req == sol.max_rate) {
        t = 1.0;
    } else if (rate_req > 0.0) {
        // rate_at is strictly increasing in t; bisect until the bracket
        // cannot shrink any further.
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 2000; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (rate_at(chans, sol.powers, mid) < rate_req) lo = mid;
            else hi = mid;
        }
        t = hi;
    }
    sol.feasible = true;
    sol.id_fraction = t;
    sol.rho_bar = 1.0 - t;
    sol.p_r_eh = (1.0 - t) * received;
    sol.achieved_rate = rate_at(chans, sol.powers, t);
    return sol;
}

} // namespace swipt
