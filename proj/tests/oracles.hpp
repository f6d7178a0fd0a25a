// SPDX-License-Identifier: Apache-2.0
//
// Test-side reference computations that share no code with the solvers.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace oracle {

// Rate reached by water level nu over the given gains.
inline double rate_at_level(const std::vector<double>& g, double noise, double nu)
{
    double r = 0.0;
    for (double x : g) r += std::max(0.0, std::log2(nu * x / noise));
    return r;
}

// Minimum total power for `rate` by bisection on the water level.
inline double min_power(const std::vector<double>& g, double noise, double rate, double* level = nullptr)
{
    if (rate <= 0.0) return 0.0;
    double lo = noise / *std::max_element(g.begin(), g.end());
    double hi = lo;
    while (rate_at_level(g, noise, hi) < rate) hi *= 2.0;
    for (int it = 0; it < 300; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (rate_at_level(g, noise, mid) < rate ? lo : hi) = mid;
    }
    double total = 0.0;
    for (double x : g) total += std::max(0.0, hi - noise / x);
    if (level) *level = hi;
    return total;
}

// Best received power over every harvesting choice, each using the bisection oracle.
inline double best_received_power(const std::vector<double>& g, double noise, double budget, double rate,
                                  std::size_t* best_e = nullptr)
{
    double best = -1.0;
    for (std::size_t e = 0; e < g.size(); ++e) {
        std::vector<double> rest;
        for (std::size_t j = 0; j < g.size(); ++j)
            if (j != e) rest.push_back(g[j]);
        if (rest.empty() && rate > 0.0) continue;
        const double need = rest.empty() ? 0.0 : min_power(rest, noise, rate);
        if (need > budget) continue;
        const double pr = g[e] * (budget - need);
        if (pr > best) {
            best = pr;
            if (best_e) *best_e = e;
        }
    }
    return best;
}

} // namespace oracle
