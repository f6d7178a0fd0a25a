// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo rate-energy tradeoff experiments and their CSV output.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swipt/channel.hpp"
#include "swipt/physics.hpp"

namespace swipt {

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

enum class SolverMode { exact, approx, both };
/// How trials where the rate target is unreachable enter the averages.
enum class Averaging {
    all_trials,      // infeasible trials harvest nothing and count as 0
    feasible_trials, // averages only over trials where the target is reachable
};

std::string to_string(SolverMode m);
std::string to_string(Averaging a);
SolverMode parse_solver_mode(const std::string& s);
Averaging parse_averaging(const std::string& s);

struct ExperimentConfig
{
    std::size_t n_t = 4;
    std::size_t n_r = 4;
    double p_t_w = 4.0;
    double noise_dbm = -100.0;
    double d_m = 4.0;
    double theta = 0.1;
    double alpha = 2.5;
    std::vector<double> rate_grid;
    std::size_t trials = 1000;
    std::uint64_t master_seed = 0;
    SolverMode solver_mode = SolverMode::both;
    bool baseline = true;
    EhModel eh_model = EhModel::default_model();
    Averaging averaging = Averaging::all_trials;
    /// Worker threads; 0 picks the hardware concurrency. SWIPT_THREADS caps it.
    std::size_t threads = 0;

    /// Throws InvalidArgument naming the offending field.
    void validate() const;
    double noise_w() const { return dbm_to_watts(noise_dbm); }
    ChannelParams channel_params() const { return ChannelParams(theta, d_m, alpha); }
    std::size_t rank() const { return std::min(n_t, n_r); }
};

struct TradeoffPoint
{
    double rate_req = 0.0;
    double mean_p_r = 0.0;
    double mean_p_h = 0.0;
    double feasibility_fraction = 0.0;
    double mean_p_r_approx = 0.0;
    double mean_p_r_ps = 0.0;
    double ps_feasibility_fraction = 0.0;
    std::size_t approx_failures = 0;
    std::vector<std::size_t> eh_index_histogram; // slot k counts e* = k (zero-based)
};

struct SweepResult
{
    std::vector<TradeoffPoint> points;
    std::size_t trials = 0;
    std::size_t failed_trials = 0; // trials whose channel could not be decomposed
    double mean_rate_max = 0.0;    // over successful trials
};

/// Worker count actually used for `requested` (0 = hardware), capped by the
/// SWIPT_THREADS environment variable and by `work_items`.
std::size_t effective_threads(std::size_t requested, std::size_t work_items);

/// One channel draw per trial from substream (master_seed, trial); solves
/// every rate on the grid. Deterministic for a fixed seed regardless of the
/// worker count.
SweepResult run_tradeoff_sweep(const ExperimentConfig& cfg);

struct AssignmentMapRow
{
    double rate_req;
    double d_m;
    double noise_dbm;
    std::optional<std::size_t> eh_index; // empty when infeasible
    double rate_max;
};

/// e* for one channel sample over rate_grid x distances x noise levels. The
/// underlying normalized draw is shared, so only the pathloss and noise
/// change between rows.
std::vector<AssignmentMapRow> run_assignment_map(const ExperimentConfig& cfg, std::uint64_t fixed_channel_seed,
                                                 const std::vector<double>& distances_m,
                                                 const std::vector<double>& noise_dbms);

struct PaProfileRow
{
    double rate_req;
    bool feasible;
    std::optional<std::size_t> eh_index;
    std::vector<double> powers;
    double p_r;
};

std::vector<PaProfileRow> run_pa_profile(const ExperimentConfig& cfg, std::uint64_t fixed_channel_seed);

/// Eigenchannels of the single realization used by the map and profile runs.
EigenchannelSet fixed_realization(const ExperimentConfig& cfg, std::uint64_t fixed_channel_seed);

/// Ordered "# key=value" metadata describing a sweep.
std::vector<std::pair<std::string, std::string>> sweep_metadata(const ExperimentConfig& cfg,
                                                                const SweepResult& result);

/// Columns rate_req_bpshz, mean_pr_w, mean_ph_w, feas_frac, mean_pr_approx_w,
/// mean_pr_ps_w, eh_hist_1..eh_hist_r after the metadata block. Reals are
/// printed with 17 significant digits. Throws std::runtime_error if the
/// file cannot be written.
void write_csv(const SweepResult& result, const ExperimentConfig& cfg, const std::filesystem::path& path);
std::string format_csv(const SweepResult& result, const ExperimentConfig& cfg);
/// Same data as whitespace-separated columns for gnuplot.
std::string format_gnuplot(const SweepResult& result, const ExperimentConfig& cfg);

struct ParsedSweepCsv
{
    std::map<std::string, std::string> metadata;
    std::vector<std::string> columns;
    std::vector<TradeoffPoint> points;
};
ParsedSweepCsv read_csv(const std::filesystem::path& path);
ParsedSweepCsv parse_csv(const std::string& text);

std::string format_assignment_map(const std::vector<AssignmentMapRow>& rows, const ExperimentConfig& cfg,
                                  std::uint64_t fixed_channel_seed);
std::string format_pa_profile(const std::vector<PaProfileRow>& rows, const ExperimentConfig& cfg,
                              std::uint64_t fixed_channel_seed);

} // namespace swipt
