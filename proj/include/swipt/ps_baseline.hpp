// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "swipt/channel.hpp"

namespace swipt {

/// Power-splitting receiver: all r eigenchannels carry information with
/// budget water-filling powers, and a common fraction rho_bar of the received
/// power on every stream is diverted to the harvester.
struct PsSolution
{
    bool feasible = false;
    double rho_bar = 0.0;
    double id_fraction = 1.0; // 1 - rho_bar, kept separately for precision near rho_bar = 1
    std::vector<double> powers;
    double p_r_eh = 0.0;         // rho_bar * sum_k p_k g_k
    double achieved_rate = 0.0;
    double max_rate = 0.0;       // rate at rho_bar = 0
};

/// Solves sum_k log2(1 + (1 - rho) p_k g_k / noise) = rate_req for rho by
/// bisection on the information fraction 1 - rho. Infeasible iff rate_req
/// exceeds the rho = 0 rate.
PsSolution solve_ps(const EigenchannelSet& chans, double budget_w, double rate_req);

} // namespace swipt
