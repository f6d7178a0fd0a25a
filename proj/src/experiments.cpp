// SPDX-License-Identifier: Apache-2.0
#include "swipt/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "swipt/errors.hpp"
#include "swipt/ps_baseline.hpp"
#include "swipt/random.hpp"
#include "swipt/ss_solver.hpp"
#include "swipt/waterfilling.hpp"

namespace swipt {

double dbm_to_watts(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watts_to_dbm(double watts)
{
    return 10.0 * std::log10(watts) + 30.0;
}

std::string to_string(SolverMode m)
{
    switch (m) {
    case SolverMode::exact: return "exact";
    case SolverMode::approx: return "approx";
    case SolverMode::both: return "both";
    }
    return "?";
}

std::string to_string(Averaging a)
{
    return a == Averaging::all_trials ? "all" : "feasible";
}

SolverMode parse_solver_mode(const std::string& s)
{
    if (s == "exact") return SolverMode::exact;
    if (s == "approx") return SolverMode::approx;
    if (s == "both") return SolverMode::both;
    throw InvalidArgument(fmt::format("solver_mode: unknown value '{}'", s));
}

Averaging parse_averaging(const std::string& s)
{
    if (s == "all") return Averaging::all_trials;
    if (s == "feasible") return Averaging::feasible_trials;
    throw InvalidArgument(fmt::format("averaging: unknown value '{}'", s));
}

void ExperimentConfig::validate() const
{
    if (n_t < 1) throw InvalidArgument("nt: must be >= 1");
    if (n_r < 1) throw InvalidArgument("nr: must be >= 1");
    if (!(p_t_w > 0.0) || !std::isfinite(p_t_w)) throw InvalidArgument("pt: must be positive");
    if (!std::isfinite(noise_dbm)) throw InvalidArgument("noise_dbm: must be finite");
    if (!(d_m > 0.0) || !std::isfinite(d_m)) throw InvalidArgument("d: must be positive");
    if (!(theta > 0.0) || !std::isfinite(theta)) throw InvalidArgument("theta: must be positive");
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidArgument("alpha: must be >= 0");
    if (trials < 1) throw InvalidArgument("trials: must be >= 1");
    if (rate_grid.empty()) throw InvalidArgument("rate_grid: must not be empty");
    for (std::size_t i = 0; i < rate_grid.size(); ++i) {
        if (!(rate_grid[i] >= 0.0) || !std::isfinite(rate_grid[i])) {
            throw InvalidArgument("rate_grid: entries must be finite and >= 0");
        }
        if (i > 0 && !(rate_grid[i] > rate_grid[i - 1])) {
            throw InvalidArgument("rate_grid: entries must be strictly ascending");
        }
    }
}

std::size_t effective_threads(std::size_t requested, std::size_t work_items)
{
    std::size_t n = requested;
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SWIPT_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) n = std::min(n, static_cast<std::size_t>(cap));
    }
    return std::max<std::size_t>(1, std::min(n, std::max<std::size_t>(1, work_items)));
}

namespace {

struct TrialRecord
{
    bool feasible = false;
    std::size_t eh_index = 0;
    double p_r = 0.0;
    double p_h = 0.0;
    bool approx_ok = false;
    double approx_p_r = 0.0;
    bool ps_feasible = false;
    double ps_p_r = 0.0;
};

struct TrialOutcome
{
    bool ok = false;
    double rate_max = 0.0;
    std::vector<TrialRecord> per_rate;
};

TrialOutcome run_trial(const ExperimentConfig& cfg, const ChannelParams& params, std::size_t trial)
{
    TrialOutcome out;
    try {
        RngStream rng = RngStream::substream(cfg.master_seed, trial);
        const ComplexMatrix h = generate_channel(cfg.n_r, cfg.n_t, params, rng);
        const EigenchannelSet chans = eigenchannels(h, cfg.noise_w());
        out.rate_max = feasibility_rate_max(chans, cfg.p_t_w);
        out.per_rate.resize(cfg.rate_grid.size());
        const bool want_approx = cfg.solver_mode != SolverMode::exact && chans.size() >= 2;
        for (std::size_t i = 0; i < cfg.rate_grid.size(); ++i) {
            const double rate = cfg.rate_grid[i];
            TrialRecord& rec = out.per_rate[i];
            const SsSolution sol = solve_optimal(chans, cfg.p_t_w, rate, cfg.eh_model);
            rec.feasible = sol.feasible;
            if (sol.feasible) {
                rec.eh_index = *sol.eh_index;
                rec.p_r = sol.p_r;
                rec.p_h = sol.p_h;
                if (want_approx) {
                    try {
                        rec.approx_p_r = solve_approx(chans, cfg.p_t_w, rate, cfg.eh_model).p_r;
                        rec.approx_ok = true;
                    } catch (const ApproxInfeasible&) {
                        rec.approx_ok = false;
                    }
                }
            }
            if (cfg.baseline) {
                const PsSolution ps = solve_ps(chans, cfg.p_t_w, rate);
                rec.ps_feasible = ps.feasible;
                rec.ps_p_r = ps.p_r_eh;
            }
        }
        out.ok = true;
    } catch (const DegenerateChannel&) {
        out.ok = false;
    } catch (const NumericalFailure&) {
        out.ok = false;
    }
    return out;
}

double safe_mean(double sum, std::size_t n)
{
    return n == 0 ? std::numeric_limits<double>::quiet_NaN() : sum / static_cast<double>(n);
}

} // namespace

SweepResult run_tradeoff_sweep(const ExperimentConfig& cfg)
{
    cfg.validate();
    const ChannelParams params = cfg.channel_params();

    std::vector<TrialOutcome> outcomes(cfg.trials);
    const std::size_t workers = effective_threads(cfg.threads, cfg.trials);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t t = next++; t < cfg.trials; t = next++) outcomes[t] = run_trial(cfg, params, t);
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    // Ordered reduction over trial index keeps sums independent of scheduling.
    SweepResult res;
    res.trials = cfg.trials;
    const std::size_t r = cfg.rank();
    std::size_t ok_trials = 0;
    double rate_max_sum = 0.0;
    for (const auto& o : outcomes) {
        if (!o.ok) {
            ++res.failed_trials;
            continue;
        }
        ++ok_trials;
        rate_max_sum += o.rate_max;
    }
    res.mean_rate_max = safe_mean(rate_max_sum, ok_trials);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    const bool all = cfg.averaging == Averaging::all_trials;
    for (std::size_t i = 0; i < cfg.rate_grid.size(); ++i) {
        TradeoffPoint pt;
        pt.rate_req = cfg.rate_grid[i];
        pt.eh_index_histogram.assign(r, 0);
        double sum_pr = 0.0, sum_ph = 0.0, sum_approx = 0.0, sum_ps = 0.0;
        std::size_t feasible = 0, ps_feasible = 0;
        for (const auto& o : outcomes) {
            if (!o.ok) continue;
            const TrialRecord& rec = o.per_rate[i];
            if (rec.feasible) {
                ++feasible;
                sum_pr += rec.p_r;
                sum_ph += rec.p_h;
                ++pt.eh_index_histogram[rec.eh_index];
                if (rec.approx_ok) sum_approx += rec.approx_p_r;
                else if (cfg.solver_mode != SolverMode::exact) ++pt.approx_failures;
            }
            if (rec.ps_feasible) {
                ++ps_feasible;
                sum_ps += rec.ps_p_r;
            }
        }
        const std::size_t ss_den = all ? ok_trials : feasible;
        const std::size_t ps_den = all ? ok_trials : ps_feasible;
        pt.feasibility_fraction = safe_mean(static_cast<double>(feasible), ok_trials);
        pt.ps_feasibility_fraction = cfg.baseline ? safe_mean(static_cast<double>(ps_feasible), ok_trials) : nan;
        const bool exact_cols = cfg.solver_mode != SolverMode::approx;
        const bool approx_cols = cfg.solver_mode != SolverMode::exact;
        pt.mean_p_r = exact_cols ? safe_mean(sum_pr, ss_den) : nan;
        pt.mean_p_h = exact_cols ? safe_mean(sum_ph, ss_den) : nan;
        pt.mean_p_r_approx = approx_cols ? safe_mean(sum_approx, ss_den) : nan;
        pt.mean_p_r_ps = cfg.baseline ? safe_mean(sum_ps, ps_den) : nan;
        res.points.push_back(std::move(pt));
    }
    return res;
}

EigenchannelSet fixed_realization(const ExperimentConfig& cfg, std::uint64_t fixed_channel_seed)
{
    RngStream rng = RngStream::substream(fixed_channel_seed, 0);
    const ComplexMatrix h = generate_channel(cfg.n_r, cfg.n_t, cfg.channel_params(), rng);
    return eigenchannels(h, cfg.noise_w());
}

std::vector<AssignmentMapRow> run_assignment_map(const ExperimentConfig& cfg, std::uint64_t fixed_channel_seed,
                                                 const std::vector<double>& distances_m,
                                                 const std::vector<double>& noise_dbms)
{
    cfg.validate();
    std::vector<AssignmentMapRow> rows;
    for (double d : distances_m) {
        for (double noise : noise_dbms) {
            ExperimentConfig c = cfg;
            c.d_m = d;
            c.noise_dbm = noise;
            c.validate();
            const EigenchannelSet chans = fixed_realization(c, fixed_channel_seed);
            for (double rate : cfg.rate_grid) {
                const SsSolution sol = solve_optimal(chans, c.p_t_w, rate, c.eh_model);
                rows.push_back({rate, d, noise, sol.eh_index, sol.rate_max});
            }
        }
    }
    return rows;
}

std::vector<PaProfileRow> run_pa_profile(const ExperimentConfig& cfg, std::uint64_t fixed_channel_seed)
{
    cfg.validate();
    const EigenchannelSet chans = fixed_realization(cfg, fixed_channel_seed);
    std::vector<PaProfileRow> rows;
    rows.reserve(cfg.rate_grid.size());
    for (double rate : cfg.rate_grid) {
        const SsSolution sol = solve_optimal(chans, cfg.p_t_w, rate, cfg.eh_model);
        PaProfileRow row{rate, sol.feasible, sol.eh_index, std::vector<double>(chans.size(), 0.0), sol.p_r};
        if (sol.allocation) row.powers = sol.allocation->powers;
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

std::string real(double x)
{
    return fmt::format("{:.17g}", x);
}

std::string join_reals(const std::vector<double>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += real(xs[i]);
    }
    return s;
}

std::vector<std::pair<std::string, std::string>> config_metadata(const ExperimentConfig& cfg)
{
    return {
        {"format", "1"},
        {"nt", std::to_string(cfg.n_t)},
        {"nr", std::to_string(cfg.n_r)},
        {"pt", real(cfg.p_t_w)},
        {"noise_dbm", real(cfg.noise_dbm)},
        {"noise_w", real(cfg.noise_w())},
        {"d", real(cfg.d_m)},
        {"theta", real(cfg.theta)},
        {"alpha", real(cfg.alpha)},
        {"sigma_h_sq", real(cfg.channel_params().sigma_h_sq())},
        {"rate_grid", join_reals(cfg.rate_grid)},
        {"trials", std::to_string(cfg.trials)},
        {"seed", std::to_string(cfg.master_seed)},
        {"solver_mode", to_string(cfg.solver_mode)},
        {"baseline", cfg.baseline ? "1" : "0"},
        {"eh_model", cfg.eh_model.describe()},
    };
}

void emit_metadata(std::ostringstream& os, const std::vector<std::pair<std::string, std::string>>& meta)
{
    for (const auto& [k, v] : meta) os << "# " << k << '=' << v << '\n';
}

} // namespace

std::vector<std::pair<std::string, std::string>> sweep_metadata(const ExperimentConfig& cfg, const SweepResult& result)
{
    auto meta = config_metadata(cfg);
    meta.emplace_back("averaging", to_string(cfg.averaging));
    meta.emplace_back("averaging_note", cfg.averaging == Averaging::all_trials
                                            ? "power means over all decomposed trials; unreachable rate counts as 0 W"
                                            : "power means over trials where the rate is reachable; NaN if none");
    meta.emplace_back("approx_note", "approx mean uses exact-feasible trials; approx-infeasible trials count as 0 W");
    meta.emplace_back("failed_trials", std::to_string(result.failed_trials));
    meta.emplace_back("mean_rate_max_bpshz", real(result.mean_rate_max));
    return meta;
}

std::string format_csv(const SweepResult& result, const ExperimentConfig& cfg)
{
    std::ostringstream os;
    emit_metadata(os, sweep_metadata(cfg, result));
    os << "rate_req_bpshz,mean_pr_w,mean_ph_w,feas_frac,mean_pr_approx_w,mean_pr_ps_w";
    const std::size_t r = cfg.rank();
    for (std::size_t k = 1; k <= r; ++k) os << ",eh_hist_" << k;
    os << '\n';
    for (const auto& p : result.points) {
        os << real(p.rate_req) << ',' << real(p.mean_p_r) << ',' << real(p.mean_p_h) << ','
           << real(p.feasibility_fraction) << ',' << real(p.mean_p_r_approx) << ',' << real(p.mean_p_r_ps);
        for (std::size_t c : p.eh_index_histogram) os << ',' << c;
        os << '\n';
    }
    return os.str();
}

std::string format_gnuplot(const SweepResult& result, const ExperimentConfig& cfg)
{
    std::ostringstream os;
    emit_metadata(os, sweep_metadata(cfg, result));
    os << "# rate_req_bpshz mean_pr_w mean_ph_w feas_frac mean_pr_approx_w mean_pr_ps_w ps_feas_frac\n";
    for (const auto& p : result.points) {
        os << fmt::format("{:.17g} {:.17g} {:.17g} {:.17g} {:.17g} {:.17g} {:.17g}\n", p.rate_req, p.mean_p_r,
                          p.mean_p_h, p.feasibility_fraction, p.mean_p_r_approx, p.mean_p_r_ps,
                          p.ps_feasibility_fraction);
    }
    return os.str();
}

void write_csv(const SweepResult& result, const ExperimentConfig& cfg, const std::filesystem::path& path)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error(fmt::format("cannot open '{}' for writing", path.string()));
    f << format_csv(result, cfg);
    f.flush();
    if (!f) throw std::runtime_error(fmt::format("failed writing '{}'", path.string()));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

double parse_real(const std::string& s)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0') throw InvalidArgument(fmt::format("csv: bad number '{}'", s));
    return v;
}

} // namespace

ParsedSweepCsv parse_csv(const std::string& text)
{
    ParsedSweepCsv out;
    std::istringstream is(text);
    std::string line;
    bool header = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string body = line.substr(line.find_first_not_of("# "));
            const auto eq = body.find('=');
            if (eq != std::string::npos) out.metadata[body.substr(0, eq)] = body.substr(eq + 1);
            continue;
        }
        const auto cells = split(line, ',');
        if (!header) {
            out.columns = cells;
            header = true;
            if (cells.size() < 6) throw InvalidArgument("csv: header has too few columns");
            continue;
        }
        if (cells.size() != out.columns.size()) throw InvalidArgument("csv: ragged row");
        TradeoffPoint p;
        p.rate_req = parse_real(cells[0]);
        p.mean_p_r = parse_real(cells[1]);
        p.mean_p_h = parse_real(cells[2]);
        p.feasibility_fraction = parse_real(cells[3]);
        p.mean_p_r_approx = parse_real(cells[4]);
        p.mean_p_r_ps = parse_real(cells[5]);
        for (std::size_t c = 6; c < cells.size(); ++c) {
            p.eh_index_histogram.push_back(static_cast<std::size_t>(std::stoull(cells[c])));
        }
        out.points.push_back(std::move(p));
    }
    return out;
}

ParsedSweepCsv read_csv(const std::filesystem::path& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error(fmt::format("cannot open '{}'", path.string()));
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_csv(ss.str());
}

std::string format_assignment_map(const std::vector<AssignmentMapRow>& rows, const ExperimentConfig& cfg,
                                  std::uint64_t fixed_channel_seed)
{
    std::ostringstream os;
    auto meta = config_metadata(cfg);
    meta.emplace_back("channel_seed", std::to_string(fixed_channel_seed));
    meta.emplace_back("eh_index_note", "1-based, strongest eigenchannel first; 0 marks an infeasible rate");
    emit_metadata(os, meta);
    os << "rate_req_bpshz,d_m,noise_dbm,eh_index,rate_max_bpshz\n";
    for (const auto& row : rows) {
        os << real(row.rate_req) << ',' << real(row.d_m) << ',' << real(row.noise_dbm) << ','
           << (row.eh_index ? *row.eh_index + 1 : 0) << ',' << real(row.rate_max) << '\n';
    }
    return os.str();
}

std::string format_pa_profile(const std::vector<PaProfileRow>& rows, const ExperimentConfig& cfg,
                              std::uint64_t fixed_channel_seed)
{
    std::ostringstream os;
    auto meta = config_metadata(cfg);
    meta.emplace_back("channel_seed", std::to_string(fixed_channel_seed));
    meta.emplace_back("eh_index_note", "1-based, strongest eigenchannel first; 0 marks an infeasible rate");
    emit_metadata(os, meta);
    os << "rate_req_bpshz,feasible,eh_index,p_r_w";
    for (std::size_t k = 1; k <= cfg.rank(); ++k) os << ",p_" << k << "_w";
    os << '\n';
    for (const auto& row : rows) {
        os << real(row.rate_req) << ',' << (row.feasible ? 1 : 0) << ',' << (row.eh_index ? *row.eh_index + 1 : 0)
           << ',' << real(row.p_r);
        for (double p : row.powers) os << ',' << real(p);
        os << '\n';
    }
    return os.str();
}

} // namespace swipt
