// SPDX-License-Identifier: Apache-2.0
#include "swipt/ss_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "swipt/errors.hpp"
#include "swipt/waterfilling.hpp"

namespace swipt {

namespace {

void check_problem(double budget_w, double rate_req)
{
    if (!(budget_w > 0.0) || !std::isfinite(budget_w)) throw InvalidArgument("budget must be positive");
    if (!(rate_req >= 0.0) || !std::isfinite(rate_req)) throw InvalidArgument("rate requirement must be >= 0");
}

PowerAllocation allocation_for(const EigenchannelSet& chans, std::size_t eh_index,
                               const MinPowerWfResult& wf, double eh_power)
{
    PowerAllocation alloc{std::vector<double>(chans.size(), 0.0), eh_index};
    for (const auto& cp : wf.id_powers) alloc.powers[cp.index] = cp.power;
    alloc.powers[eh_index] = eh_power;
    return alloc;
}

} // namespace

SsSolution solve_optimal(const EigenchannelSet& chans, double budget_w, double rate_req, const EhModel& model)
{
    check_problem(budget_w, rate_req);

    SsSolution sol;
    sol.budget = budget_w;
    sol.rate_req = rate_req;
    sol.rate_max = feasibility_rate_max(chans, budget_w);
    sol.per_candidate.reserve(chans.size());

    std::optional<std::size_t> best;
    std::optional<MinPowerWfResult> best_wf;
    for (std::size_t e = 0; e < chans.size(); ++e) {
        const auto ids = id_channels(chans, e);
        CandidateEval cand{e, 0.0, 0.0, 0.0, false};
        if (ids.empty() && rate_req > 0.0) {
            cand.id_power = std::numeric_limits<double>::infinity();
            cand.eh_power = -std::numeric_limits<double>::infinity();
            sol.per_candidate.push_back(cand);
            continue;
        }
        MinPowerWfResult wf = min_power_rate_wf(ids, chans.noise_power(), rate_req);
        cand.id_power = wf.total_id_power;
        cand.eh_power = budget_w - wf.total_id_power;
        cand.feasible = cand.eh_power >= 0.0;
        if (cand.feasible) {
            cand.p_r = chans.gain(e) * cand.eh_power;
            if (!best || cand.p_r > sol.per_candidate[*best].p_r) {
                best = e;
                best_wf = std::move(wf);
            }
        }
        sol.per_candidate.push_back(cand);
    }

    const bool within_frontier = rate_req == 0.0 || rate_req < sol.rate_max;
    if (!within_frontier || !best) return sol;

    const CandidateEval& win = sol.per_candidate[*best];
    PowerAllocation alloc = allocation_for(chans, *best, *best_wf, win.eh_power);
    sol.feasible = true;
    sol.eh_index = *best;
    sol.achieved_rate = achievable_rate(alloc, chans);
    sol.p_r = received_rf_power(alloc, chans);
    sol.p_h = model.harvested(sol.p_r);
    sol.allocation = std::move(alloc);
    return sol;
}

ApproxSolution solve_approx(const EigenchannelSet& chans, double budget_w, double rate_req, const EhModel& model)
{
    check_problem(budget_w, rate_req);
    const std::size_t r = chans.size();
    if (r < 2) throw InvalidArgument("solve_approx: needs at least two eigenchannels");

    const double n_id = static_cast<double>(r - 1);
    double log_gain_total = 0.0;
    for (double g : chans.gains()) log_gain_total += std::log2(g);

    ApproxSolution out;
    out.candidate_equal_pa.resize(r);
    std::optional<std::size_t> best;
    double best_metric = -1.0;
    for (std::size_t e = 0; e < r; ++e) {
        const double log_prod_others = log_gain_total - std::log2(chans.gain(e));
        const double equal_pa =
            chans.noise_power() * std::exp2(rate_req / n_id - log_prod_others / n_id);
        out.candidate_equal_pa[e] = equal_pa;
        const double leftover = budget_w - n_id * equal_pa;
        if (leftover < 0.0) continue;
        const double metric = chans.gain(e) * leftover;
        if (!best || metric > best_metric) {
            best = e;
            best_metric = metric;
        }
    }
    if (!best) {
        throw ApproxInfeasible("equal power allocation leaves no harvesting budget for any eigenchannel");
    }

    const auto ids = id_channels(chans, *best);
    const MinPowerWfResult wf = min_power_rate_wf(ids, chans.noise_power(), rate_req);
    const double eh_power = budget_w - wf.total_id_power;
    if (eh_power < 0.0) {
        throw ApproxInfeasible(fmt::format("refined allocation for eigenchannel {} exceeds the budget", *best + 1));
    }
    out.eh_index = *best;
    out.equal_pa = out.candidate_equal_pa[*best];
    out.refined_allocation = allocation_for(chans, *best, wf, eh_power);
    out.achieved_rate = achievable_rate(out.refined_allocation, chans);
    out.p_r = received_rf_power(out.refined_allocation, chans);
    out.p_h = model.harvested(out.p_r);
    return out;
}

double KktReport::worst() const
{
    return std::max({stationarity, complementary_slackness, rate_residual, budget_residual, negativity});
}

KktReport verify_kkt(const SsSolution& solution, const EigenchannelSet& chans, double rate_req)
{
    if (!solution.feasible || !solution.allocation || !solution.eh_index) {
        throw InvalidArgument("verify_kkt: solution is not feasible");
    }
    const PowerAllocation& alloc = *solution.allocation;
    if (alloc.powers.size() != chans.size()) throw InvalidArgument("verify_kkt: length mismatch");

    KktReport rep;
    const double noise = chans.noise_power();
    double level_min = std::numeric_limits<double>::infinity();
    double level_max = -std::numeric_limits<double>::infinity();
    bool any_active = false;
    double min_power = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < chans.size(); ++k) {
        min_power = std::min(min_power, alloc.powers[k]);
        if (k == *solution.eh_index || !(alloc.powers[k] > 0.0)) continue;
        const double level = alloc.powers[k] + noise / chans.gain(k);
        level_min = std::min(level_min, level);
        level_max = std::max(level_max, level);
        any_active = true;
    }
    if (any_active) {
        rep.stationarity = level_max - level_min;
        for (std::size_t k = 0; k < chans.size(); ++k) {
            if (k == *solution.eh_index || alloc.powers[k] > 0.0) continue;
            rep.complementary_slackness =
                std::max(rep.complementary_slackness, level_max - noise / chans.gain(k));
        }
    }
    rep.negativity = std::max(0.0, -min_power);
    rep.rate_residual = std::abs(achievable_rate(alloc, chans) - rate_req);
    rep.budget_residual = std::abs(alloc.total() - solution.budget);
    return rep;
}

} // namespace swipt
