#include <gtest/gtest.h>

#include <cmath>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "besov/error.hpp"
#include "besov/norms.hpp"
#include "besov/random.hpp"
#include "cli/commands.hpp"
#include "cli/sweep.hpp"

using namespace besov;
using namespace besov::cli;

TEST(FitSlope, ExactPowerLaw) {
    std::vector<std::pair<double, double>> rows;
    for (int k = 3; k <= 7; ++k) {
        const double b = std::ldexp(1.0, -k);
        rows.emplace_back(b, std::pow(b, 0.9));
    }
    const auto f = fit_slope(rows);
    EXPECT_NEAR(f.slope, 0.9, 1e-6);
    EXPECT_NEAR(f.intercept, 0.0, 1e-9);
    EXPECT_LT(f.residual, 1e-12);
    EXPECT_EQ(f.n, 5u);
}

TEST(FitSlope, ConstantData) {
    const auto f = fit_slope({{0.5, 3.0}, {0.25, 3.0}, {0.125, 3.0}, {0.0625, 3.0}});
    EXPECT_NEAR(f.slope, 0.0, 1e-12);
    EXPECT_NEAR(std::exp(f.intercept), 3.0, 1e-12);
}

TEST(FitSlope, Rejects) {
    EXPECT_THROW(fit_slope({{0.5, 1.0}, {0.25, 1.0}}), Error);
    EXPECT_THROW(fit_slope({{0.5, 1.0}, {0.25, 0.0}, {0.125, 1.0}}), Error);
    EXPECT_THROW(fit_slope({{0.5, 1.0}, {-0.25, 1.0}, {0.125, 1.0}}), Error);
    EXPECT_THROW(fit_slope({{0.5, 1.0}, {0.5, 2.0}, {0.5, 3.0}}), Error);
}

// Random power laws times bounded noise: slope recovered within the noise
// amplitude over the log-range.
TEST(FitSlope, RandomPowerLaws) {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const double slope = rng.uniform(-2.0, 3.0);
        const double c = std::exp(rng.uniform(-5.0, 5.0));
        const double noise = rng.uniform(0.0, 0.05);
        const int n = 3 + static_cast<int>(rng.uniform(0.0, 8.0));
        std::vector<std::pair<double, double>> rows;
        for (int k = 0; k < n; ++k) {
            const double b = std::ldexp(1.0, -k - 1);
            rows.emplace_back(b, c * std::pow(b, slope) * std::exp(noise * rng.uniform(-1.0, 1.0)));
        }
        const auto f = fit_slope(rows);
        const double span = std::log(rows.front().first / rows.back().first);
        EXPECT_NEAR(f.slope, slope, 2.0 * noise / span + 1e-9) << "trial " << trial;
        EXPECT_LE(f.residual, noise + 1e-12);
    }
}

TEST(ParseValues, Forms) {
    const auto b = parse_values("2^-3..2^-7");
    ASSERT_EQ(b.size(), 5u);
    EXPECT_EQ(b.front(), 0.125);
    EXPECT_EQ(b.back(), 0.0078125);
    EXPECT_EQ(parse_values("1..4"), (std::vector<double>{1, 2, 3, 4}));
    EXPECT_EQ(parse_values("2..0"), (std::vector<double>{2, 1, 0}));
    EXPECT_EQ(parse_values("0.5, 1,2^1"), (std::vector<double>{0.5, 1, 2}));
    EXPECT_TRUE(std::isinf(parse_values("inf").at(0)));
    EXPECT_THROW(parse_values(""), Error);
    EXPECT_THROW(parse_values("abc"), Error);
    EXPECT_THROW(parse_values("1..2^3"), Error);
    EXPECT_THROW(parse_values("0.5..2"), Error);
}

TEST(RunConfig, JsonRoundTrip) {
    RunConfig c;
    c.command = "approx";
    c.b = {0.25, 0.125};
    c.p = {2};
    c.s = {0.6};
    c.seeds = {3, 4};
    c.labels = {"bump-r1"};
    c.params["q"] = kInf;
    c.params["j_hi"] = 8;
    c.jobs = 2;
    RunConfig d;
    d.merge_json(c.to_json());
    EXPECT_EQ(d.to_json(), c.to_json());
    EXPECT_TRUE(std::isinf(d.param("q", 0.0)));
    EXPECT_EQ(d.param("missing", 1.5), 1.5);

    RunConfig e;
    e.merge_json(nlohmann::json::parse(R"({"b": "2^-3..2^-5", "p": [1, "inf"]})"));
    EXPECT_EQ(e.b.size(), 3u);
    EXPECT_TRUE(std::isinf(e.p.at(1)));
    EXPECT_THROW(e.validate(), Error);
}

TEST(Sweep, SamplingRowsAndColumns) {
    RunConfig c;
    c.command = "sampling";
    c.b = parse_values("2^-3..2^-7");
    c.p = {2};
    const auto r = run_sweep(c);
    ASSERT_EQ(r.rows.size(), 5u);
    EXPECT_EQ(r.reports.size(), 5u);
    EXPECT_TRUE(r.passed());
    const auto& cols = r.columns;
    EXPECT_NE(std::find(cols.begin(), cols.end(), "cell_ratio"), cols.end());
    EXPECT_NE(std::find(cols.begin(), cols.end(), "hypothesis_ok"), cols.end());
    std::istringstream csv(r.csv());
    std::string line;
    int lines = 0;
    while (std::getline(csv, line)) ++lines;
    EXPECT_EQ(lines, 6);
    const auto j = nlohmann::json::parse(r.json());
    EXPECT_EQ(j["schema"], kSchemaVersion);
    EXPECT_EQ(j["config"]["command"], "sampling");
    EXPECT_EQ(j["fingerprint"]["basis"], "db4");
}

TEST(Sweep, DeterministicAcrossJobs) {
    RunConfig c;
    c.command = "sampling";
    c.b = parse_values("2^-3..2^-5");
    c.seeds = {1, 2};
    const auto a = run_sweep(c);
    c.jobs = 3;
    const auto b = run_sweep(c);
    EXPECT_EQ(a.csv(), b.csv());

    const auto dir = std::filesystem::temp_directory_path() / "besovkit_sweep_test";
    std::filesystem::remove_all(dir);
    write_sweep(a, dir.string());
    std::ifstream in(dir / "sweep_sampling.csv", std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), a.csv());
    std::filesystem::remove_all(dir);
}

TEST(Sweep, ModuleErrorsNameTheTuple) {
    RunConfig c;
    c.command = "intb";
    c.labels = {"no-such-label"};
    c.b = parse_values("2^-3..2^-5");
    c.p = {2};
    const auto r = run_sweep(c);
    EXPECT_FALSE(r.passed());
    ASSERT_EQ(r.failures.size(), 3u);
    EXPECT_NE(r.failures[0].find("tuple 0"), std::string::npos);
    EXPECT_NE(r.failures[0].find("no-such-label"), std::string::npos);
    EXPECT_TRUE(r.rows.empty());
}

TEST(Sweep, UnknownPipeline) {
    RunConfig c;
    c.command = "nope";
    EXPECT_THROW(run_sweep(c), Error);
}

TEST(Sweep, HeisenbergInvariance) {
    RunConfig c;
    c.command = "heisenberg";
    c.labels = {"bump-r1"};
    const auto r = run_sweep(c);
    EXPECT_TRUE(r.passed());
    ASSERT_EQ(r.fits.size(), 1u);
    EXPECT_LT(std::abs(r.fits[0].fit.slope), 1e-4);
}

TEST(Commands, SourceMustBeUnique) {
    EXPECT_THROW(load_function({}), Error);
    EXPECT_THROW(load_function({"", "gauss-w1", "x.json"}), Error);
    EXPECT_EQ(load_function({"", "gauss-w1", ""}).dim(), 1);
}

TEST(Commands, NormReportsBothForms) {
    NormArgs a;
    a.f.label = "gauss-w1";
    a.s = 0.5;
    a.p = 2;
    a.q = 1;
    const auto r = cmd_norm(a);
    EXPECT_GT(r.report["wavelet"].get<double>(), 0.0);
    EXPECT_GT(r.report["littlewood_paley"].get<double>(), 0.0);
}

TEST(Commands, ApproxSplitSums) {
    ApproxArgs a;
    a.what = "split";
    a.f.label = "bump-r1";
    a.b = 0.25;
    const auto r = cmd_approx(a);
    ASSERT_TRUE(r.output.has_value());
    EXPECT_GT(r.report["tail"].get<double>(), 0.0);
    EXPECT_EQ(r.report["j0"], 2);
}
