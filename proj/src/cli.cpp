// SPDX-License-Identifier: Apache-2.0
#include "swipt/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "swipt/errors.hpp"
#include "swipt/experiments.hpp"
#include "swipt/ss_solver.hpp"

namespace swipt::cli {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string flag_name(const std::string& key)
{
    std::string f = key;
    for (auto& c : f) {
        if (c == '_') c = '-';
    }
    return "--" + f;
}

struct KeyHelp
{
    const char* key;
    const char* help;
};

const std::vector<KeyHelp> kCommonKeys = {
    {"nt", "transmit antennas"},
    {"nr", "receive antennas"},
    {"pt", "transmit power budget (W)"},
    {"noise_dbm", "noise power (dBm)"},
    {"d", "link distance (m)"},
    {"theta", "attenuation at unit distance (default 0.1)"},
    {"alpha", "pathloss exponent (default 2.5)"},
    {"seed", "master random seed"},
    {"eh_model", "constant | logistic (default constant)"},
    {"eh_eta", "constant model efficiency (default 0.5)"},
    {"eh_threshold_w", "EH sensitivity threshold in W (default 1e-6)"},
    {"eh_max_eta", "logistic model peak efficiency"},
    {"eh_steepness", "logistic model steepness (1/W)"},
    {"eh_midpoint_w", "logistic model midpoint (W)"},
    {"output", "output file (default stdout)"},
};

std::vector<KeyHelp> keys_for(const std::string& sub)
{
    std::vector<KeyHelp> keys = kCommonKeys;
    if (sub == "solve") {
        keys.push_back({"rate", "minimum rate requirement (bps/Hz)"});
    } else if (sub == "sweep") {
        keys.push_back({"rate_grid", "rates as start:step:stop or a comma list (bps/Hz)"});
        keys.push_back({"trials", "Monte Carlo trials (default 1000)"});
        keys.push_back({"solver_mode", "exact | approx | both (default both)"});
        keys.push_back({"baseline", "include power-splitting baseline, 1 or 0 (default 1)"});
        keys.push_back({"averaging", "all | feasible (default all)"});
        keys.push_back({"threads", "worker threads, 0 = all cores (default 0)"});
        keys.push_back({"format", "csv | gnuplot (default csv)"});
    } else if (sub == "assignment-map") {
        keys.push_back({"rate_grid", "rates as start:step:stop or a comma list (bps/Hz)"});
        keys.push_back({"distances", "comma list of distances (m); default: --d"});
        keys.push_back({"noise_levels", "comma list of noise powers (dBm); default: --noise-dbm"});
    } else if (sub == "pa-profile") {
        keys.push_back({"rate_grid", "rates as start:step:stop or a comma list (bps/Hz)"});
    }
    return keys;
}

using Values = std::map<std::string, std::string>;

class Settings
{
  public:
    explicit Settings(Values v) : v_(std::move(v)) {}

    bool has(const std::string& key) const { return v_.count(key) != 0; }

    const std::string& raw(const std::string& key) const
    {
        auto it = v_.find(key);
        if (it == v_.end()) throw ConfigError(fmt::format("missing required option {}", flag_name(key)));
        return it->second;
    }

    double real(const std::string& key) const
    {
        const std::string& s = raw(key);
        char* end = nullptr;
        const double x = std::strtod(s.c_str(), &end);
        if (s.empty() || *end != '\0' || !std::isfinite(x)) {
            throw ConfigError(fmt::format("invalid value for {}: '{}' is not a number", flag_name(key), s));
        }
        return x;
    }
    double real_or(const std::string& key, double fallback) const { return has(key) ? real(key) : fallback; }

    std::uint64_t count(const std::string& key) const
    {
        const std::string& s = raw(key);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
            throw ConfigError(fmt::format("invalid value for {}: '{}' is not a nonnegative integer", flag_name(key), s));
        }
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw ConfigError(fmt::format("invalid value for {}: '{}' is out of range", flag_name(key), s));
        }
    }
    std::uint64_t count_or(const std::string& key, std::uint64_t fallback) const
    {
        return has(key) ? count(key) : fallback;
    }

    std::vector<double> list(const std::string& key) const
    {
        const std::string s = trim(raw(key));
        std::vector<double> out;
        auto number = [&](const std::string& tok) {
            char* end = nullptr;
            const std::string t = trim(tok);
            const double x = std::strtod(t.c_str(), &end);
            if (t.empty() || *end != '\0' || !std::isfinite(x)) {
                throw ConfigError(fmt::format("invalid value for {}: '{}' is not a number", flag_name(key), tok));
            }
            return x;
        };
        if (s.find(':') != std::string::npos) {
            std::vector<std::string> parts;
            std::stringstream ss(s);
            std::string tok;
            while (std::getline(ss, tok, ':')) parts.push_back(tok);
            if (parts.size() != 3) {
                throw ConfigError(fmt::format("invalid value for {}: expected start:step:stop", flag_name(key)));
            }
            const double start = number(parts[0]), step = number(parts[1]), stop = number(parts[2]);
            if (!(step > 0.0) || stop < start) {
                throw ConfigError(fmt::format("invalid value for {}: need step > 0 and stop >= start", flag_name(key)));
            }
            const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
            if (n > 10'000'000) throw ConfigError(fmt::format("invalid value for {}: too many points", flag_name(key)));
            for (std::size_t i = 0; i <= n; ++i) out.push_back(start + step * static_cast<double>(i));
            return out;
        }
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (trim(tok).empty()) continue;
            out.push_back(number(tok));
        }
        return out;
    }

  private:
    Values v_;
};

EhModel build_eh_model(const Settings& s)
{
    const std::string kind = s.has("eh_model") ? s.raw("eh_model") : "constant";
    const double threshold = s.real_or("eh_threshold_w", 1e-6);
    try {
        if (kind == "constant") return EhModel(ConstantEfficiency{s.real_or("eh_eta", 0.5), threshold});
        if (kind == "logistic") {
            LogisticEfficiency l;
            l.max_efficiency = s.real_or("eh_max_eta", l.max_efficiency);
            l.steepness_per_w = s.real_or("eh_steepness", l.steepness_per_w);
            l.midpoint_w = s.real_or("eh_midpoint_w", l.midpoint_w);
            l.threshold_w = threshold;
            return EhModel(l);
        }
    } catch (const InvalidArgument& e) {
        throw ConfigError(fmt::format("invalid EH model parameters: {}", e.what()));
    }
    throw ConfigError(fmt::format("invalid value for --eh-model: '{}' (expected constant or logistic)", kind));
}

ExperimentConfig build_config(const Settings& s, bool needs_grid)
{
    ExperimentConfig cfg;
    cfg.n_t = s.count("nt");
    cfg.n_r = s.count("nr");
    cfg.p_t_w = s.real("pt");
    cfg.noise_dbm = s.real("noise_dbm");
    cfg.d_m = s.real("d");
    cfg.theta = s.real_or("theta", 0.1);
    cfg.alpha = s.real_or("alpha", 2.5);
    cfg.trials = s.count_or("trials", 1000);
    cfg.threads = s.count_or("threads", 0);
    cfg.eh_model = build_eh_model(s);
    if (s.has("solver_mode")) {
        try {
            cfg.solver_mode = parse_solver_mode(s.raw("solver_mode"));
        } catch (const InvalidArgument& e) {
            throw ConfigError(fmt::format("invalid value for --solver-mode: {}", e.what()));
        }
    }
    if (s.has("averaging")) {
        try {
            cfg.averaging = parse_averaging(s.raw("averaging"));
        } catch (const InvalidArgument& e) {
            throw ConfigError(fmt::format("invalid value for --averaging: {}", e.what()));
        }
    }
    if (s.has("baseline")) {
        const std::string b = s.raw("baseline");
        if (b == "1" || b == "true") cfg.baseline = true;
        else if (b == "0" || b == "false") cfg.baseline = false;
        else throw ConfigError(fmt::format("invalid value for --baseline: '{}'", b));
    }
    if (needs_grid) {
        cfg.rate_grid = s.list("rate_grid");
        if (cfg.rate_grid.empty()) throw ConfigError("invalid value for --rate-grid: empty rate grid");
    } else {
        cfg.rate_grid = {s.real("rate")};
    }
    try {
        cfg.validate();
    } catch (const InvalidArgument& e) {
        throw ConfigError(fmt::format("invalid configuration: {}", e.what()));
    }
    return cfg;
}

void emit(const Settings& s, std::ostream& out, const std::string& text)
{
    if (!s.has("output")) {
        out << text;
        return;
    }
    std::ofstream f(s.raw("output"), std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error(fmt::format("cannot open '{}' for writing", s.raw("output")));
    f << text;
    if (!f.flush()) throw std::runtime_error(fmt::format("failed writing '{}'", s.raw("output")));
}

std::string join(const std::vector<double>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + fmt::format("{:.17g}", xs[i]);
    return s;
}

int cmd_solve(const Settings& s, std::ostream& out)
{
    ExperimentConfig cfg = build_config(s, false);
    const bool seeded = s.has("seed");
    cfg.master_seed = seeded ? s.count("seed") : (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}();
    const double rate = cfg.rate_grid.front();

    const EigenchannelSet chans = fixed_realization(cfg, cfg.master_seed);
    const SsSolution sol = solve_optimal(chans, cfg.p_t_w, rate, cfg.eh_model);

    std::ostringstream os;
    os << "format=1\n";
    os << "seed=" << cfg.master_seed << '\n';
    os << "seed_source=" << (seeded ? "flag" : "entropy") << '\n';
    os << "nt=" << cfg.n_t << "\nnr=" << cfg.n_r << '\n';
    os << fmt::format("pt_w={:.17g}\nnoise_dbm={:.17g}\nd_m={:.17g}\ntheta={:.17g}\nalpha={:.17g}\n", cfg.p_t_w,
                      cfg.noise_dbm, cfg.d_m, cfg.theta, cfg.alpha);
    os << "eh_model=" << cfg.eh_model.describe() << '\n';
    os << fmt::format("rate_req_bpshz={:.17g}\n", rate);
    os << "gains=" << join({chans.gains().begin(), chans.gains().end()}) << '\n';
    os << fmt::format("rate_max_bpshz={:.17g}\n", sol.rate_max);
    os << "feasible=" << (sol.feasible ? 1 : 0) << '\n';
    os << "eh_index=" << (sol.eh_index ? *sol.eh_index + 1 : 0) << '\n';
    os << "powers_w=" << (sol.allocation ? join(sol.allocation->powers) : "") << '\n';
    os << fmt::format("p_r_w={:.17g}\np_h_w={:.17g}\nrate_bpshz={:.17g}\n", sol.p_r, sol.p_h, sol.achieved_rate);
    if (sol.feasible && chans.size() >= 2) {
        try {
            const ApproxSolution ap = solve_approx(chans, cfg.p_t_w, rate, cfg.eh_model);
            os << "approx_eh_index=" << ap.eh_index + 1 << '\n';
            os << fmt::format("approx_p_r_w={:.17g}\n", ap.p_r);
        } catch (const ApproxInfeasible&) {
            os << "approx_eh_index=0\n";
        }
    }
    emit(s, out, os.str());
    return kExitOk;
}

int cmd_sweep(const Settings& s, std::ostream& out)
{
    ExperimentConfig cfg = build_config(s, true);
    cfg.master_seed = s.count("seed");
    const std::string format = s.has("format") ? s.raw("format") : "csv";
    if (format != "csv" && format != "gnuplot") {
        throw ConfigError(fmt::format("invalid value for --format: '{}' (expected csv or gnuplot)", format));
    }
    const SweepResult res = run_tradeoff_sweep(cfg);
    emit(s, out, format == "csv" ? format_csv(res, cfg) : format_gnuplot(res, cfg));
    return kExitOk;
}

int cmd_assignment_map(const Settings& s, std::ostream& out)
{
    ExperimentConfig cfg = build_config(s, true);
    const std::uint64_t seed = s.count("seed");
    cfg.master_seed = seed;
    const std::vector<double> distances = s.has("distances") ? s.list("distances") : std::vector<double>{cfg.d_m};
    const std::vector<double> noises =
        s.has("noise_levels") ? s.list("noise_levels") : std::vector<double>{cfg.noise_dbm};
    if (distances.empty()) throw ConfigError("invalid value for --distances: empty list");
    if (noises.empty()) throw ConfigError("invalid value for --noise-levels: empty list");
    std::vector<AssignmentMapRow> rows;
    try {
        rows = run_assignment_map(cfg, seed, distances, noises);
    } catch (const InvalidArgument& e) {
        throw ConfigError(fmt::format("invalid configuration: {}", e.what()));
    }
    emit(s, out, format_assignment_map(rows, cfg, seed));
    return kExitOk;
}

int cmd_pa_profile(const Settings& s, std::ostream& out)
{
    ExperimentConfig cfg = build_config(s, true);
    const std::uint64_t seed = s.count("seed");
    cfg.master_seed = seed;
    emit(s, out, format_pa_profile(run_pa_profile(cfg, seed), cfg, seed));
    return kExitOk;
}

} // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text)
{
    std::map<std::string, std::string> out;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(fmt::format("config line {}: expected key=value", lineno));
        }
        const std::string key = trim(t.substr(0, eq));
        if (key.empty()) throw ConfigError(fmt::format("config line {}: empty key", lineno));
        out[key] = trim(t.substr(eq + 1));
    }
    return out;
}

int parse_and_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Spatial-switching MIMO SWIPT solver and rate-energy experiments", "swipt_sim"};
    app.require_subcommand(1);

    const std::vector<std::string> names = {"solve", "sweep", "assignment-map", "pa-profile"};
    const std::map<std::string, std::string> descriptions = {
        {"solve", "optimal eigenchannel assignment and powers for one channel draw"},
        {"sweep", "Monte Carlo rate-energy tradeoff, CSV output"},
        {"assignment-map", "harvesting eigenchannel over rate, distance and noise for one draw"},
        {"pa-profile", "power allocation over rate for one draw"},
    };
    std::map<std::string, Values> flags;
    std::map<std::string, std::string> config_paths;
    std::map<std::string, CLI::App*> subs;
    for (const auto& name : names) {
        CLI::App* sub = app.add_subcommand(name, descriptions.at(name));
        subs[name] = sub;
        sub->add_option_function<std::string>(
            "--config", [&config_paths, name](const std::string& v) { config_paths[name] = v; },
            "key=value configuration file; flags override its values");
        for (const auto& kh : keys_for(name)) {
            const std::string key = kh.key;
            sub->add_option_function<std::string>(
                flag_name(key), [&flags, name, key](const std::string& v) { flags[name][key] = v; }, kh.help);
        }
    }
    std::uint64_t selftest_seed = SelftestScale{}.seed;
    CLI::App* selftest = app.add_subcommand("selftest", "reduced-scale oracle and optimality checks");
    selftest->add_option("--seed", selftest_seed, "random seed for the checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (selftest->parsed()) {
            SelftestScale scale;
            scale.seed = selftest_seed;
            return run_selftest(out, scale) == 0 ? kExitOk : kExitRuntime;
        }
        for (const auto& name : names) {
            if (!subs[name]->parsed()) continue;
            Values merged;
            if (auto it = config_paths.find(name); it != config_paths.end()) {
                std::ifstream f(it->second);
                if (!f) throw ConfigError(fmt::format("cannot read config file '{}'", it->second));
                std::stringstream ss;
                ss << f.rdbuf();
                std::set<std::string> allowed;
                for (const auto& kh : keys_for(name)) allowed.insert(kh.key);
                for (auto& [k, v] : parse_config_text(ss.str())) {
                    if (!allowed.count(k)) {
                        throw ConfigError(fmt::format("unknown config key '{}' for {}", k, name));
                    }
                    merged[k] = v;
                }
            }
            for (const auto& [k, v] : flags[name]) merged[k] = v;
            const Settings settings(std::move(merged));
            if (name == "solve") return cmd_solve(settings, out);
            if (name == "sweep") return cmd_sweep(settings, out);
            if (name == "assignment-map") return cmd_assignment_map(settings, out);
            return cmd_pa_profile(settings, out);
        }
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitRuntime;
}

} // namespace swipt::cli
