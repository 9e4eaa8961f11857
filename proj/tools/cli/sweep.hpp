#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace besov::cli {

inline constexpr int kSchemaVersion = 1;

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    // RMS of the log-log residuals.
    double residual = 0.0;
    std::size_t n = 0;
};

// Least squares of log y against log x; needs >= 3 rows of positive values.
SlopeFit fit_slope(const std::vector<std::pair<double, double>>& rows);

// "2^-3..2^-7" (powers of two, either direction), "1..4" (integers),
// "0.5,1,2", "inf", or a mix separated by commas.
std::vector<double> parse_values(const std::string& text);

struct RunConfig {
    std::string command;
    std::vector<double> b;
    std::vector<double> p;
    std::vector<double> s;
    std::vector<std::uint64_t> seeds{1};
    std::vector<double> alpha;
    std::vector<double> m;
    std::vector<std::string> labels;
    std::map<std::string, double> params;
    std::string geometry;
    std::string out_dir = ".";
    int jobs = 1;

    double param(const std::string& key, double fallback) const;
    nlohmann::json to_json() const;
    // Missing keys keep their current values.
    void merge_json(const nlohmann::json& j);
    void validate() const;
};

struct SweepFit {
    std::string group;
    std::string quantity;
    SlopeFit fit;
};

struct SweepResult {
    std::string pipeline;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    nlohmann::json reports = nlohmann::json::array();
    std::vector<SweepFit> fits;
    std::vector<std::string> failures;
    nlohmann::json fingerprint;
    nlohmann::json config;

    bool passed() const { return failures.empty(); }
    std::string csv() const;
    std::string json() const;
};

std::vector<std::string> sweep_pipelines();

// Runs every parameter tuple (in parallel over `jobs` threads, merged by
// tuple index). Module errors are recorded as failures naming the tuple.
SweepResult run_sweep(const RunConfig& cfg);

// Writes sweep_<pipeline>.csv and sweep_<pipeline>.json into cfg.out_dir.
void write_sweep(const SweepResult& r, const std::string& out_dir);

std::string format_number(double v);

} // namespace besov::cli
