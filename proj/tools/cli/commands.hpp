#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "besov/grid.hpp"

namespace besov::cli {

// Exactly one of path (grid CSV), label (standard zoo) or spec (zoo JSON file).
struct FunctionSource {
    std::string path;
    std::string label;
    std::string spec;
};

GridFunction load_function(const FunctionSource& src, int dim = 1);

struct CommandResult {
    nlohmann::json report;
    bool ok = true;
    std::optional<GridFunction> output;
};

struct NormArgs {
    FunctionSource f;
    double s = 0.5, p = 2.0, q = 1.0;
    std::string basis = "db4";
};
CommandResult cmd_norm(const NormArgs& a);

nlohmann::json cmd_zoo_list();
CommandResult cmd_zoo_make(const FunctionSource& f, int dim);

struct GeometryArgs {
    std::string path;
    std::string variant;
    double b = 0.125;
    std::uint64_t seed = 1;
    int probes = 1000;
};
CommandResult cmd_geometry_check(const GeometryArgs& a);

struct VerifyArgs {
    std::string what;
    FunctionSource f;
    double b = 0.125, p = 2.0, alpha = 1.0, window = 14.0;
    std::uint64_t seed = 1;
};
CommandResult cmd_verify(const VerifyArgs& a);

struct ApproxArgs {
    std::string what; // pl | split
    FunctionSource f;
    double b = 0.125, p = 2.0, window = 14.0;
    std::string mode = "spectral";
    std::uint64_t seed = 1;
};
CommandResult cmd_approx(const ApproxArgs& a);

struct ReconstructArgs {
    FunctionSource f;
    std::string geometry;
    double b = 0.125, p = 2.0, window = 14.0;
    std::optional<double> c;
    std::optional<double> a;
    int iters = 12;
    bool calibrate = false;
    std::uint64_t seed = 1;
};
CommandResult cmd_reconstruct(const ReconstructArgs& a);

} // namespace besov::cli
