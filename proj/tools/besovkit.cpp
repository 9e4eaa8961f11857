#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "besov/error.hpp"
#include "besov/io.hpp"
#include "besov/norms.hpp"
#include "cli/commands.hpp"
#include "cli/sweep.hpp"

using namespace besov;
using namespace besov::cli;
using json = nlohmann::json;

namespace {

double number(const std::string& text) { return parse_values(text).at(0); }

void add_source(CLI::App* app, FunctionSource& src) {
    app->add_option("--input", src.path, "grid function CSV");
    app->add_option("--zoo", src.label, "standard zoo label");
    app->add_option("--spec", src.spec, "zoo spec JSON file");
}

int emit(const CommandResult& r, const std::string& out_dir, const std::string& name, const std::string& out_file) {
    const auto text = r.report.dump(2);
    std::cout << text << "\n";
    if (!out_dir.empty() && out_dir != ".") {
        std::filesystem::create_directories(out_dir);
        std::ofstream(std::filesystem::path(out_dir) / (name + ".json"), std::ios::binary) << text << "\n";
    }
    if (!out_file.empty() && r.output) save_csv(*r.output, out_file);
    return r.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"besovkit: Besov-space sampling and reconstruction experiments"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 1;
    std::string out_dir = ".";
    int jobs = 1;
    std::string config_path;
    app.add_option("--seed", seed, "random seed");
    app.add_option("--out-dir", out_dir, "directory for reports");
    app.add_option("--jobs", jobs, "parallel tuples")->check(CLI::PositiveNumber);
    app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);

    // norm
    NormArgs na;
    std::string q_text = "1";
    auto* norm = app.add_subcommand("norm", "homogeneous Besov norm (wavelet and Littlewood-Paley)");
    add_source(norm, na.f);
    norm->add_option("--s", na.s);
    norm->add_option("--p", na.p);
    norm->add_option("--q", q_text, "number or inf");
    norm->add_option("--basis", na.basis);

    // zoo
    auto* zoo = app.add_subcommand("zoo", "test-function zoo");
    zoo->require_subcommand(1);
    auto* zoo_list = zoo->add_subcommand("list", "print the standard zoo specs");
    FunctionSource zsrc;
    int zdim = 1;
    std::string zout;
    auto* zoo_make = zoo->add_subcommand("make", "evaluate a zoo member on the default grid");
    add_source(zoo_make, zsrc);
    zoo_make->add_option("--dim", zdim)->check(CLI::IsMember({1, 2}));
    zoo_make->add_option("--out", zout, "CSV output");

    // geometry
    GeometryArgs ga;
    auto* geometry = app.add_subcommand("geometry", "2D sampling geometries");
    geometry->require_subcommand(1);
    auto* gcheck = geometry->add_subcommand("check", "check the covering conditions");
    gcheck->add_option("--geometry", ga.path, "geometry JSON")->check(CLI::ExistingFile);
    gcheck->add_option("--variant", ga.variant);
    std::string gb = "2^-3";
    gcheck->add_option("--b", gb);
    gcheck->add_option("--probes", ga.probes);

    // verify
    VerifyArgs va;
    std::string vb = "2^-3";
    auto* verify = app.add_subcommand("verify", "single inequality checks");
    verify->add_option("check", va.what, "sampling | uncertainty | heisenberg | intb")
        ->required()
        ->check(CLI::IsMember({"sampling", "uncertainty", "heisenberg", "intb"}));
    add_source(verify, va.f);
    verify->add_option("--b", vb);
    verify->add_option("--p", va.p);
    verify->add_option("--alpha", va.alpha);
    verify->add_option("--window", va.window);

    // approx
    ApproxArgs aa;
    std::string ab = "2^-3", aout;
    auto* approx = app.add_subcommand("approx", "bandlimited split and piecewise-linear interpolation");
    approx->add_option("mode", aa.what, "pl | split")->required()->check(CLI::IsMember({"pl", "split"}));
    add_source(approx, aa.f);
    approx->add_option("--b", ab);
    approx->add_option("--p", aa.p);
    approx->add_option("--window", aa.window);
    approx->add_option("--split", aa.mode, "spectral | wavelet");
    approx->add_option("--out", aout, "CSV of g (split) or the interpolant (pl)");

    // reconstruct
    ReconstructArgs ra;
    std::string rb = "2^-3", rout;
    auto* rec = app.add_subcommand("reconstruct", "Neumann-series reconstruction from samples");
    add_source(rec, ra.f);
    rec->add_option("--geometry", ra.geometry, "2D geometry JSON")->check(CLI::ExistingFile);
    rec->add_option("--b", rb);
    rec->add_option("--p", ra.p);
    rec->add_option("--window", ra.window);
    rec->add_option("--c", ra.c);
    rec->add_option("--a", ra.a);
    rec->add_option("--iters", ra.iters);
    rec->add_flag("--calibrate", ra.calibrate, "pick c by contraction scan");
    rec->add_option("--out", rout, "CSV of the reconstruction");

    // sweep
    std::string pipeline, sb, sp, ss, sseeds, salpha, sm;
    std::vector<std::string> slabels, sparams;
    auto* sweep = app.add_subcommand("sweep", "parameter sweep writing sweep_<pipeline>.csv/.json");
    sweep->add_option("pipeline", pipeline)->required()->check(CLI::IsMember(sweep_pipelines()));
    sweep->add_option("--b", sb, "e.g. 2^-3..2^-7");
    sweep->add_option("--p", sp);
    sweep->add_option("--s", ss);
    sweep->add_option("--seeds", sseeds, "e.g. 1..5");
    sweep->add_option("--alpha", salpha);
    sweep->add_option("--m", sm);
    sweep->add_option("--labels", slabels)->delimiter(',');
    sweep->add_option("--param", sparams, "key=value")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (*norm) {
            na.q = number(q_text);
            return emit(cmd_norm(na), out_dir, "norm", "");
        }
        if (*zoo_list) {
            std::cout << cmd_zoo_list().dump(2) << "\n";
            return 0;
        }
        if (*zoo_make) return emit(cmd_zoo_make(zsrc, zdim), out_dir, "zoo", zout);
        if (*gcheck) {
            ga.b = number(gb);
            ga.seed = seed;
            return emit(cmd_geometry_check(ga), out_dir, "geometry_check", "");
        }
        if (*verify) {
            va.b = number(vb);
            va.seed = seed;
            return emit(cmd_verify(va), out_dir, "verify_" + va.what, "");
        }
        if (*approx) {
            aa.b = number(ab);
            aa.seed = seed;
            return emit(cmd_approx(aa), out_dir, "approx_" + aa.what, aout);
        }
        if (*rec) {
            ra.b = number(rb);
            ra.seed = seed;
            return emit(cmd_reconstruct(ra), out_dir, "reconstruct", rout);
        }
        if (*sweep) {
            RunConfig cfg;
            if (!config_path.empty()) {
                std::ifstream in(config_path);
                cfg.merge_json(json::parse(in));
            }
            cfg.command = pipeline;
            if (app.count("--out-dir") || config_path.empty()) cfg.out_dir = out_dir;
            if (app.count("--jobs")) cfg.jobs = jobs;
            if (app.count("--seed")) cfg.seeds = {seed};
            if (!sseeds.empty()) {
                cfg.seeds.clear();
                for (double v : parse_values(sseeds)) cfg.seeds.push_back(static_cast<std::uint64_t>(v));
            }
            if (!sb.empty()) cfg.b = parse_values(sb);
            if (!sp.empty()) cfg.p = parse_values(sp);
            if (!ss.empty()) cfg.s = parse_values(ss);
            if (!salpha.empty()) cfg.alpha = parse_values(salpha);
            if (!sm.empty()) cfg.m = parse_values(sm);
            if (!slabels.empty()) cfg.labels = slabels;
            for (const auto& kv : sparams) {
                const auto eq = kv.find('=');
                if (eq == std::string::npos) throw Error("--param expects key=value, got '" + kv + "'");
                cfg.params[kv.substr(0, eq)] = number(kv.substr(eq + 1));
            }
            const auto r = run_sweep(cfg);
            write_sweep(r, cfg.out_dir);
            std::cout << r.csv();
            for (const auto& f : r.fits)
                std::cerr << "fit " << f.group << " " << f.quantity << ": slope " << format_number(f.fit.slope)
                          << " residual " << format_number(f.fit.residual) << "\n";
            for (const auto& f : r.failures) std::cerr << "FAIL " << f << "\n";
            return r.passed() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
