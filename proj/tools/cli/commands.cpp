#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "besov/error.hpp"
#include "besov/geometry.hpp"
#include "besov/inequalities.hpp"
#include "besov/io.hpp"
#include "besov/norms.hpp"
#include "besov/random.hpp"
#include "besov/reconstruct.hpp"
#include "besov/zoo.hpp"

namespace besov::cli {

using json = nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ZooSpec resolve_spec(const FunctionSource& src) {
    if (!src.spec.empty()) return ZooSpec::from_json(slurp(src.spec));
    for (const auto& s : standard_zoo())
        if (s.label == src.label) return s;
    throw Error("unknown zoo label '" + src.label + "' (see `zoo list`)");
}

double safe(double v) { return std::isfinite(v) ? v : -1.0; }

} // namespace

GridFunction load_function(const FunctionSource& src, int dim) {
    const int given = !src.path.empty() + !src.label.empty() + !src.spec.empty();
    if (given != 1) throw Error("give exactly one of --input, --zoo, --spec");
    if (!src.path.empty()) {
        auto f = load_csv(src.path);
        if (f.dim() != dim) throw Error(src.path + ": expected a " + std::to_string(dim) + "D grid function");
        return f;
    }
    auto spec = resolve_spec(src);
    if (dim == 1) return make(spec, default_grid_1d()).f;
    if (spec.kind != "tensor") spec = tensor_spec(spec, spec);
    return make(spec, default_grid_2d()).f;
}

CommandResult cmd_norm(const NormArgs& a) {
    const auto f = load_function(a.f);
    const BesovParams bp{a.s, a.p, a.q, 1};
    bp.validate();
    const auto wn = besov_norm_of(f, bp, WaveletBasis::from_name(a.basis));
    CommandResult r;
    r.report = {{"s", a.s}, {"p", a.p}, {"q", std::isinf(a.q) ? json("inf") : json(a.q)}, {"basis", a.basis},
                {"wavelet", wn.norm}, {"j_min", wn.j_min}, {"j_max", wn.j_max}, {"lp_norm", lp_norm(f, a.p)}};
    try {
        const auto ln = besov_norm_lp_detail(f, bp, LittlewoodPaleyWindow());
        r.report["littlewood_paley"] = ln.norm;
        if (wn.norm > 0.0) r.report["ratio"] = ln.norm / wn.norm;
    } catch (const Error& e) {
        r.report["littlewood_paley"] = nullptr;
        r.report["littlewood_paley_error"] = e.what();
    }
    return r;
}

json cmd_zoo_list() {
    json out = json::array();
    for (const auto& s : standard_zoo()) out.push_back(json::parse(s.to_json()));
    return out;
}

CommandResult cmd_zoo_make(const FunctionSource& src, int dim) {
    CommandResult r;
    r.output = load_function(src, dim);
    r.report = {{"dim", dim}, {"size", r.output->size()}, {"lp2", lp_norm(*r.output, 2.0)}};
    if (src.path.empty()) r.report["spec"] = json::parse(resolve_spec(src).to_json());
    return r;
}

CommandResult cmd_geometry_check(const GeometryArgs& a) {
    GeometryParams gp;
    if (!a.path.empty()) {
        gp = GeometryParams::from_json(slurp(a.path));
    } else {
        gp.variant = parse_variant(a.variant.empty() ? "hyperplanes" : a.variant);
        gp.b = a.b;
        gp.seed = a.seed;
    }
    const auto g = SamplingGeometry2D::build(gp);
    ConditionsOptions opt;
    opt.n_probes = a.probes;
    opt.seed = a.seed;
    const auto rep = check_conditions(g, opt);
    CommandResult r;
    r.report = json::parse(rep.to_json());
    r.report["geometry"] = json::parse(gp.to_json());
    r.ok = rep.passed;
    return r;
}

CommandResult cmd_verify(const VerifyArgs& a) {
    CommandResult r;
    const auto basis = WaveletBasis::daubechies(4);
    if (a.what == "sampling") {
        const auto f = load_function(a.f);
        const auto seq = SamplingSequence1D::random(a.b, -a.window, a.window, Rng::derive(a.seed, 1));
        SamplingOptions opt;
        opt.p = a.p;
        const auto rep = sampling_ratio(f, seq, opt);
        r.report = json::parse(rep.to_json());
        r.ok = !rep.hypothesis_ok || rep.cell_in_band || rep.gate_marginal;
    } else if (a.what == "uncertainty") {
        const auto z = make(gap_spline_spec(a.b, -a.window, a.window, a.seed), default_grid_1d());
        const auto rep = uncertainty_check(z.f, *z.sequence, a.p, basis);
        r.report = json::parse(rep.to_json());
        r.ok = rep.hypothesis_met && rep.c_emp > 0.0;
    } else if (a.what == "heisenberg") {
        const auto f = load_function(a.f);
        const double h = heisenberg_product(f, a.alpha, a.p, basis);
        r.report = {{"alpha", a.alpha}, {"p", a.p}, {"product", h}};
        r.ok = h > 0.0 && std::isfinite(h);
    } else if (a.what == "intb") {
        const auto f = load_function(a.f);
        const auto seq = SamplingSequence1D::random(a.b, -a.window, a.window, Rng::derive(a.seed, 2));
        const auto d = intB_diagnostic(f, seq, a.p, basis);
        r.report = {{"b", a.b}, {"p", a.p}, {"lhs", d.lhs}, {"rhs", d.rhs}, {"ratio", safe(d.ratio)}};
        r.ok = std::isfinite(d.ratio);
    } else {
        throw Error("verify: unknown check '" + a.what + "'");
    }
    return r;
}

CommandResult cmd_approx(const ApproxArgs& a) {
    const auto f = load_function(a.f);
    CommandResult r;
    const double norm = lp_norm(f, a.p);
    if (a.what == "split") {
        SplitOptions opt;
        if (a.mode == "wavelet") opt.mode = SplitMode::Wavelet;
        else if (a.mode != "spectral") throw Error("approx split: mode must be spectral or wavelet");
        const auto sp = bandlimited_split(f, a.b, opt);
        const double tail = lp_norm(sp.h, a.p);
        r.report = {{"b", a.b}, {"p", a.p}, {"j0", sp.j0}, {"mode", a.mode}, {"tail", tail}, {"lp_norm", norm}};
        r.output = sp.g;
    } else if (a.what == "pl") {
        const auto seq = SamplingSequence1D::random(a.b, -a.window, a.window, Rng::derive(a.seed, 3));
        const auto pl = interp_pl(trace(f, seq), seq, f.grid());
        const double err = lp_norm(f - pl, a.p);
        r.report = {{"b", a.b}, {"p", a.p}, {"pl_error", err}, {"lp_norm", norm}, {"samples", seq.size()}};
        r.output = pl;
    } else {
        throw Error("approx: unknown mode '" + a.what + "'");
    }
    return r;
}

CommandResult cmd_reconstruct(const ReconstructArgs& a) {
    CommandResult r;
    ReconstructionConfig rc;
    rc.iterations = a.iters;
    rc.p = a.p;
    rc.a = a.a;
    auto finish = [&](const Reconstructor& rec, const GridFunction& f, std::optional<CalibrationResult> cal) {
        const auto [out, rep] = neumann_reconstruct(rec.T(f), rec, &f);
        r.report = json::parse(rep.to_json());
        if (cal) r.report["calibration"] = {{"c", cal->c}, {"estimate", cal->estimate}, {"tried", cal->tried}};
        r.ok = !rep.diverged;
        r.output = out;
    };
    if (!a.geometry.empty()) {
        const auto g = SamplingGeometry2D::build(GeometryParams::from_json(slurp(a.geometry)));
        const auto f = load_function(a.f, 2);
        std::optional<CalibrationResult> cal;
        if (a.calibrate) cal = calibrate_c(g, f.grid2d());
        rc.c = a.c ? *a.c : cal ? cal->c : 0.5;
        finish(Reconstructor(g, f.grid2d(), rc), f, cal);
    } else {
        const auto f = load_function(a.f);
        const auto seq = SamplingSequence1D::random(a.b, -a.window, a.window, Rng::derive(a.seed, 3));
        std::optional<CalibrationResult> cal;
        if (a.calibrate) cal = calibrate_c(seq, f.grid());
        rc.c = a.c ? *a.c : cal ? cal->c : 0.5;
        finish(Reconstructor(seq, f.grid(), rc), f, cal);
    }
    return r;
}

} // namespace besov::cli
