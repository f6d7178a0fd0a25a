// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "swipt/cli.hpp"

using namespace swipt::cli;

namespace {

struct Outcome
{
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "swipt_sim");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = parse_and_dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::map<std::string, std::string> kv(const std::string& text)
{
    std::map<std::string, std::string> m;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq != std::string::npos) m[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return m;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text)
{
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

const std::vector<std::string> kSolve = {"solve", "--nt", "4", "--nr", "4", "--pt", "4", "--noise-dbm", "-100",
                                         "--d", "4", "--rate", "8", "--seed", "7"};

} // namespace

TEST(Cli, SolveSmoke)
{
    const Outcome r = run(kSolve);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto m = kv(r.out);
    EXPECT_EQ(m.at("format"), "1");
    EXPECT_EQ(m.at("feasible"), "1");
    EXPECT_EQ(m.at("seed"), "7");
    EXPECT_EQ(m.at("eh_index"), "1");
    EXPECT_NEAR(std::stod(m.at("rate_bpshz")), 8.0, 1e-9);
    EXPECT_GT(std::stod(m.at("p_r_w")), 0.0);
    EXPECT_TRUE(m.count("powers_w"));
    EXPECT_EQ(run(kSolve).out, r.out);
}

TEST(Cli, MissingRequiredFlagNamesIt)
{
    const Outcome r = run({"solve", "--nt", "4", "--nr", "4", "--noise-dbm", "-100", "--d", "4", "--rate", "8"});
    EXPECT_EQ(r.code, kExitConfig);
    EXPECT_NE(r.err.find("--pt"), std::string::npos) << r.err;
}

TEST(Cli, UnknownFlagIsConfigError)
{
    auto args = kSolve;
    args.push_back("--bogus");
    args.push_back("1");
    EXPECT_EQ(run(args).code, kExitConfig);
    EXPECT_EQ(run({}).code, kExitConfig);
}

TEST(Cli, BadNumberIsConfigError)
{
    auto args = kSolve;
    args[6] = "four";
    const Outcome r = run(args);
    EXPECT_EQ(r.code, kExitConfig);
    EXPECT_NE(r.err.find("--pt"), std::string::npos);
}

TEST(Cli, EmptyRateGridIsConfigError)
{
    const Outcome r = run({"sweep", "--nt", "4", "--nr", "4", "--pt", "4", "--noise-dbm", "-100", "--d", "4",
                       "--rate-grid", "", "--seed", "1"});
    EXPECT_EQ(r.code, kExitConfig);
    EXPECT_NE(r.err.find("rate-grid"), std::string::npos) << r.err;
}

TEST(Cli, ConfigFileAndOverrides)
{
    const auto path = write_temp("swipt_cli.cfg", "# comment\nnt = 4\nnr=4\npt=4\nnoise_dbm=-100\nd=4\nrate=8\nseed=7\n");
    const Outcome from_file = run({"solve", "--config", path.string()});
    ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
    EXPECT_EQ(from_file.out, run(kSolve).out);

    const Outcome overridden = run({"solve", "--config", path.string(), "--rate", "0"});
    ASSERT_EQ(overridden.code, kExitOk);
    EXPECT_EQ(kv(overridden.out).at("rate_req_bpshz"), "0");

    const auto bad = write_temp("swipt_cli_bad.cfg", "nt=4\nwidth=3\n");
    const Outcome unknown = run({"solve", "--config", bad.string()});
    EXPECT_EQ(unknown.code, kExitConfig);
    EXPECT_NE(unknown.err.find("width"), std::string::npos);
    EXPECT_EQ(run({"solve", "--config", "/nonexistent.cfg"}).code, kExitConfig);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST(Cli, ParseConfigText)
{
    const auto m = parse_config_text("a=1\n\n# x\n b = two \n");
    EXPECT_EQ(m.at("a"), "1");
    EXPECT_EQ(m.at("b"), "two");
    EXPECT_THROW(parse_config_text("novalue\n"), ConfigError);
}

TEST(Cli, SweepWritesCsv)
{
    const Outcome r = run({"sweep", "--nt", "2", "--nr", "2", "--pt", "4", "--noise-dbm", "-100", "--d", "4",
                       "--rate-grid", "0:10:30", "--seed", "3", "--trials", "20"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("# seed=3"), std::string::npos);
    EXPECT_NE(r.out.find("rate_req_bpshz,"), std::string::npos);
}

TEST(Cli, SelftestPasses)
{
    SelftestScale small;
    small.oracle_instances = 4;
    small.kkt_instances = 50;
    small.boundary_instances = 40;
    small.split_instances = 10;
    small.approx_instances = 40;
    std::ostringstream out;
    EXPECT_EQ(run_selftest(out, small), 0) << out.str();
    EXPECT_NE(out.str().find("PASS kkt_residuals"), std::string::npos);
}
