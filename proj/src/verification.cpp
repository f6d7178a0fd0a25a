// SPDX-License-Identifier: Apache-2.0
#include "swipt/verification.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "swipt/errors.hpp"
#include "swipt/experiments.hpp"
#include "swipt/instances.hpp"
#include "swipt/ss_solver.hpp"
#include "swipt/waterfilling.hpp"

namespace swipt {

namespace {

constexpr double kBudget = 4.0;

double default_noise()
{
    return dbm_to_watts(-100.0);
}

void finish(CheckResult& res)
{
    res.passed = res.failures == 0;
}

} // namespace

CheckResult check_oracle_equivalence(std::size_t instances, std::uint64_t seed, const OracleConfig& cfg)
{
    CheckResult res{"oracle_equivalence", false, instances, 0, {}};
    RngStream rng(seed);
    double worst_ratio = 0.0;
    for (std::size_t i = 0; i < instances; ++i) {
        const std::size_t r = 2 + (i % 2);
        const EigenchannelSet chans = random_eigenchannels(rng, r, default_noise());
        const double rate = uniform_between(rng, 0.0, 0.9 * feasibility_rate_max(chans, kBudget));
        const SsSolution sol = solve_optimal(chans, kBudget, rate);
        const OracleResult orc = brute_force_op(chans, kBudget, rate, cfg);
        const double diff = std::abs(sol.p_r - orc.p_r);
        worst_ratio = std::max(worst_ratio, diff / orc.grid_tolerance);
        if (!sol.feasible || !orc.found || diff > orc.grid_tolerance) {
            if (res.failures == 0) {
                res.detail = fmt::format("first failure: instance {} r={} rate={:.6g} solver={:.9g} oracle={:.9g} tol={:.3g}; ",
                                         i, r, rate, sol.p_r, orc.p_r, orc.grid_tolerance);
            }
            ++res.failures;
        }
    }
    res.detail += fmt::format("worst |diff|/tolerance = {:.3f}", worst_ratio);
    finish(res);
    return res;
}

CheckResult check_kkt_residuals(std::size_t instances, std::uint64_t seed)
{
    CheckResult res{"kkt_residuals", false, instances, 0, {}};
    RngStream rng(seed);
    KktReport worst;
    for (std::size_t i = 0; i < instances; ++i) {
        const std::size_t r = 2 + static_cast<std::size_t>(rng.next_u64() % 7);
        const EigenchannelSet chans = random_eigenchannels(rng, r, default_noise());
        const double rate = uniform_between(rng, 0.0, feasibility_rate_max(chans, kBudget));
        const SsSolution sol = solve_optimal(chans, kBudget, rate);
        if (!sol.feasible) {
            ++res.failures;
            continue;
        }
        const KktReport k = verify_kkt(sol, chans, rate);
        worst.stationarity = std::max(worst.stationarity, k.stationarity);
        worst.complementary_slackness = std::max(worst.complementary_slackness, k.complementary_slackness);
        worst.rate_residual = std::max(worst.rate_residual, k.rate_residual);
        worst.budget_residual = std::max(worst.budget_residual, k.budget_residual);
        worst.negativity = std::max(worst.negativity, k.negativity);
        const bool ok = k.rate_residual <= 1e-9 && k.budget_residual <= 1e-10 && k.stationarity <= 1e-9 &&
                        k.complementary_slackness <= 1e-9 && k.negativity == 0.0;
        if (!ok) ++res.failures;
    }
    res.detail = fmt::format("max residuals: rate {:.2e} budget {:.2e} spread {:.2e} slackness {:.2e}",
                             worst.rate_residual, worst.budget_residual, worst.stationarity,
                             worst.complementary_slackness);
    finish(res);
    return res;
}

CheckResult check_feasibility_boundary(std::size_t instances, std::uint64_t seed)
{
    CheckResult res{"feasibility_boundary", false, instances, 0, {}};
    RngStream rng(seed);
    std::size_t near_boundary = 0, infeasible = 0;
    for (std::size_t i = 0; i < instances; ++i) {
        const std::size_t r = 1 + static_cast<std::size_t>(rng.next_u64() % 4);
        const EigenchannelSet chans = random_eigenchannels(rng, r, default_noise());

        double r_max = 0.0;
        if (r >= 2) {
            const auto top = chans.gains().first(r - 1);
            const WaterfillResult wf = waterfill_budget(top, chans.noise_power(), kBudget);
            for (std::size_t j = 0; j < top.size(); ++j) {
                r_max += std::log2(1.0 + wf.powers[j] * top[j] / chans.noise_power());
            }
        }

        double rate = 0.0;
        switch (i % 4) {
        case 0: rate = uniform_between(rng, 0.0, std::max(r_max, 1.0)); break;
        case 1: rate = uniform_between(rng, r_max, 2.0 * r_max + 1.0); break;
        case 2: rate = r_max * (1.0 + uniform_between(rng, -1e-9, 1e-9)); break;
        default: rate = r_max; break;
        }
        if (rate == 0.0) rate = 1e-3;

        const SsSolution sol = solve_optimal(chans, kBudget, rate);
        const bool expect_infeasible = rate >= r_max;
        if (!sol.feasible) ++infeasible;
        if (sol.feasible == !expect_infeasible) continue;
        if (std::abs(rate - r_max) <= 1e-9) {
            ++near_boundary;
            continue;
        }
        ++res.failures;
    }
    res.detail = fmt::format("{} infeasible verdicts, {} tolerated boundary disagreements", infeasible, near_boundary);
    finish(res);
    return res;
}

CheckResult check_single_eh_dominance(std::size_t instances, std::size_t splits, std::uint64_t seed)
{
    CheckResult res{"single_eh_dominance", false, instances * splits * 2, 0, {}};
    RngStream rng(seed);
    const EhModel models[] = {EhModel::default_model(), EhModel(LogisticEfficiency{})};
    double worst_margin = 0.0;
    for (std::size_t i = 0; i < instances; ++i) {
        const EigenchannelSet chans = random_eigenchannels(rng, 3, default_noise());
        for (std::size_t s = 0; s < splits; ++s) {
            std::size_t a = rng.next_u64() % 3;
            std::size_t b = (a + 1 + rng.next_u64() % 2) % 3;
            if (b < a) std::swap(a, b); // a is the stronger channel
            const double eh_budget = uniform_between(rng, 0.0, kBudget);
            const double fraction = uniform_between(rng, 0.0, 1.0);
            for (const EhModel& m : models) {
                const SplitComparison c = compare_eh_split(chans, a, b, eh_budget, fraction, m);
                // Relative 1e-12 absorbs rounding when the split is nearly all on `a`.
                if (c.split_p_h > c.single_p_h * (1.0 + 1e-12)) {
                    ++res.failures;
                    worst_margin = std::max(worst_margin, c.split_p_h - c.single_p_h);
                }
            }
        }
    }
    res.detail = fmt::format("worst split excess {:.3e} W", worst_margin);
    finish(res);
    return res;
}

CheckResult check_approx_tightness(std::size_t instances, std::uint64_t seed, double rate_fraction,
                                   ApproxStats* stats)
{
    CheckResult res{"approx_tightness", false, instances, 0, {}};
    RngStream rng(seed);
    const ChannelParams params(0.1, 4.0, 2.5);
    std::vector<double> gaps;
    gaps.reserve(instances);
    std::size_t matches = 0;
    ApproxStats st;
    for (std::size_t i = 0; i < instances; ++i) {
        const EigenchannelSet chans = eigenchannels(generate_channel(4, 4, params, rng), default_noise());
        const double rate = rate_fraction * feasibility_rate_max(chans, kBudget);
        const SsSolution exact = solve_optimal(chans, kBudget, rate);
        double gap = 1.0;
        try {
            const ApproxSolution ap = solve_approx(chans, kBudget, rate);
            gap = (exact.p_r - ap.p_r) / exact.p_r;
            if (ap.eh_index == exact.eh_index) ++matches;
            if (ap.p_r > exact.p_r + 1e-12) ++st.exceeded_optimum;
        } catch (const ApproxInfeasible&) {
            ++st.approx_infeasible;
        }
        gaps.push_back(gap);
        st.max_gap = std::max(st.max_gap, gap);
    }
    std::sort(gaps.begin(), gaps.end());
    const std::size_t n = gaps.size();
    st.median_gap = n % 2 ? gaps[n / 2] : 0.5 * (gaps[n / 2 - 1] + gaps[n / 2]);
    st.match_fraction = static_cast<double>(matches) / static_cast<double>(n);
    res.failures = (st.median_gap > 0.01) + (st.match_fraction < 0.9) + (st.exceeded_optimum > 0);
    res.detail = fmt::format("median gap {:.3e}, max gap {:.3e}, assignment match {:.4f}, approx infeasible {}",
                             st.median_gap, st.max_gap, st.match_fraction, st.approx_infeasible);
    if (stats) *stats = st;
    finish(res);
    return res;
}

CheckResult check_kkt_detects_mutation()
{
    CheckResult res{"kkt_detects_mutation", false, 2, 0, {}};
    // Moderate SNR so the misplaced noise/g_s term is visible in watts.
    const EigenchannelSet chans({3.0, 2.0, 1.0, 0.5}, 1.0);
    const double budget = 10.0, rate = 3.0;
    const SsSolution good = solve_optimal(chans, budget, rate);
    if (!good.feasible || !verify_kkt(good, chans, rate).ok(1e-9)) {
        ++res.failures;
        res.detail = "clean solution did not pass";
        finish(res);
        return res;
    }

    const std::size_t e = *good.eh_index;
    const auto ids = id_channels(chans, e);
    const MinPowerWfResult wf = min_power_rate_wf(ids, chans.noise_power(), rate);
    const double noise = chans.noise_power();
    const double g_s = chans.gain(*wf.step_index);
    // Correct: p_s = level - noise/g_s. Mutant flips that sign.
    const double bad_step = wf.water_level + noise / g_s;
    SsSolution mutant = good;
    double id_total = 0.0;
    for (const auto& cp : wf.id_powers) {
        double p = 0.0;
        if (cp.power > 0.0) p = bad_step + noise * (1.0 / g_s - 1.0 / chans.gain(cp.index));
        mutant.allocation->powers[cp.index] = p;
        id_total += p;
    }
    mutant.allocation->powers[e] = budget - id_total;
    const KktReport rep = verify_kkt(mutant, chans, rate);
    if (rep.ok(1e-6)) {
        ++res.failures;
        res.detail = "sign error in the step power went unnoticed";
    } else {
        res.detail = fmt::format("mutant flagged: rate residual {:.3e}", rep.rate_residual);
    }
    finish(res);
    return res;
}

CheckResult check_sweep_determinism(std::size_t trials, std::uint64_t seed, const std::vector<std::size_t>& threads)
{
    CheckResult res{"sweep_determinism", false, threads.size(), 0, {}};
    ExperimentConfig cfg;
    cfg.trials = trials;
    cfg.master_seed = seed;
    for (int k = 0; k <= 12; ++k) cfg.rate_grid.push_back(10.0 * k);
    std::string reference;
    for (std::size_t t : threads) {
        cfg.threads = t;
        const std::string text = format_csv(run_tradeoff_sweep(cfg), cfg);
        if (reference.empty()) reference = text;
        else if (text != reference) ++res.failures;
    }
    res.detail = fmt::format("{} bytes per run", reference.size());
    finish(res);
    return res;
}

} // namespace swipt
