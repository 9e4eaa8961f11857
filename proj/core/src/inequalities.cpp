#include "besov/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "besov/error.hpp"
#include "besov/norms.hpp"

namespace besov {

namespace {

using json = nlohmann::json;

double power_sum(const std::vector<double>& v, const std::vector<double>& w, const std::vector<double>* w2, double p) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double weight = w[i] * (w2 ? (*w2)[i] : 1.0);
        s += weight * (p == 2.0 ? v[i] * v[i] : std::pow(std::abs(v[i]), p));
    }
    return s;
}

double max_second_difference(const GridFunction& f) {
    const auto v = f.values();
    double m = 0.0;
    if (f.dim() == 1) {
        for (std::size_t i = 1; i + 1 < v.size(); ++i) m = std::max(m, std::abs(v[i - 1] - 2 * v[i] + v[i + 1]));
        return m;
    }
    const auto& g = f.grid2d();
    double mx = 0.0, my = 0.0;
    for (std::size_t iy = 1; iy + 1 < g.y.count; ++iy)
        for (std::size_t ix = 1; ix + 1 < g.x.count; ++ix) {
            const double c = v[g.index(ix, iy)];
            mx = std::max(mx, std::abs(v[g.index(ix - 1, iy)] - 2 * c + v[g.index(ix + 1, iy)]));
            my = std::max(my, std::abs(v[g.index(ix, iy - 1)] - 2 * c + v[g.index(ix, iy + 1)]));
        }
    return mx + my;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

SamplingReport make_report(const GridFunction& f, const TraceValues& t, const SamplingOptions& opt) {
    if (!(opt.p >= 1.0) || !std::isfinite(opt.p)) throw Error("sampling_ratio: p must lie in [1, inf)");
    SamplingReport r;
    r.p = opt.p;
    r.m = t.m;
    r.b = t.b;
    r.delta = opt.delta;
    r.lp_norm = lp_norm(f, opt.p);
    if (!(r.lp_norm > 0.0)) throw Error("sampling_ratio: ||f||_p = 0");
    r.besov_norm = opt.besov_norm ? *opt.besov_norm
                                  : critical_besov_norm(f, opt.p, t.m, WaveletBasis::from_name(opt.basis), opt.extra_coarse);
    r.N = r.besov_norm / r.lp_norm;
    const double scale = std::pow(t.b, t.m / opt.p);
    r.gate = scale * r.N;
    r.hypothesis_ok = r.gate < opt.delta;
    r.gate_marginal = r.hypothesis_ok && r.gate >= 0.5 * opt.delta;
    r.trace_ratio = scale * t.carrier_norm(opt.p) / r.lp_norm;
    r.cell_ratio = t.cell_norm(opt.p) / r.lp_norm;
    r.trace_in_band = r.trace_ratio >= kBandLow && r.trace_ratio <= kBandHigh;
    r.cell_in_band = r.cell_ratio >= kBandLow && r.cell_ratio <= kBandHigh;
    r.interpolation_error = t.interpolation_error;
    return r;
}

} // namespace

double TraceValues::carrier_norm(double p) const { return std::pow(power_sum(values, weights, nullptr, p), 1.0 / p); }

double TraceValues::cell_norm(double p) const { return std::pow(power_sum(values, weights, &cells, p), 1.0 / p); }

TraceValues trace(const GridFunction& f, const SamplingSequence1D& s) {
    if (f.dim() != 1) throw Error("trace: a sequence needs a 1D function");
    TraceValues t;
    t.dim = 1;
    t.m = 1;
    t.b = s.b();
    t.values.reserve(s.size());
    for (double a : s.points()) t.values.push_back(f.interpolate(a));
    t.weights.assign(s.size(), 1.0);
    t.cells = s.cell_lengths();
    t.interpolation_error = max_second_difference(f) / 8.0;
    return t;
}

TraceValues trace(const GridFunction& f, const SamplingGeometry2D& g) {
    if (f.dim() != 2) throw Error("trace: a 2D geometry needs a 2D function");
    TraceValues t;
    t.dim = 2;
    t.m = g.m();
    t.b = g.b();
    const auto& nodes = g.nodes();
    t.values.reserve(nodes.size());
    t.weights.reserve(nodes.size());
    t.cells.reserve(nodes.size());
    for (const auto& n : nodes) {
        t.values.push_back(f.interpolate(n.x, n.y));
        t.weights.push_back(n.weight);
        t.cells.push_back(n.cell.measure());
    }
    t.interpolation_error = max_second_difference(f) / 8.0;
    return t;
}

double critical_besov_norm(const GridFunction& f, double p, int m, const WaveletBasis& basis, int extra_coarse) {
    const BesovParams bp{static_cast<double>(m) / p, p, 1.0, f.dim()};
    bp.validate();
    return besov_norm_of(f, bp, basis, extra_coarse).norm;
}

SamplingReport sampling_ratio(const GridFunction& f, const SamplingSequence1D& s, const SamplingOptions& opt) {
    return make_report(f, trace(f, s), opt);
}

SamplingReport sampling_ratio(const GridFunction& f, const SamplingGeometry2D& g, const SamplingOptions& opt) {
    return make_report(f, trace(f, g), opt);
}

double calibrate_delta(const std::vector<SamplingReport>& reports) {
    double delta = std::numeric_limits<double>::infinity();
    for (const auto& r : reports)
        if (!r.cell_in_band) delta = std::min(delta, r.gate);
    return delta;
}

std::string SamplingReport::to_json() const {
    json j{{"p", p},
           {"m", m},
           {"b", b},
           {"lp_norm", lp_norm},
           {"besov_norm", besov_norm},
           {"N", N},
           {"gate", gate},
           {"delta", delta},
           {"hypothesis_ok", hypothesis_ok},
           {"gate_marginal", gate_marginal},
           {"trace_ratio", trace_ratio},
           {"cell_ratio", cell_ratio},
           {"trace_in_band", trace_in_band},
           {"cell_in_band", cell_in_band},
           {"interpolation_error", interpolation_error}};
    return j.dump(2);
}

double uncertainty_deficiency(const GridFunction& f, const SamplingSequence1D& s, double p) {
    const double norm = lp_norm(f, p);
    if (!(norm > 0.0)) throw Error("uncertainty_deficiency: ||f||_p = 0");
    const auto t = trace(f, s);
    const double sum = std::pow(t.carrier_norm(p), p);
    return 1.0 - std::pow(s.b() * sum, 1.0 / p) / norm;
}

UncertaintyReport uncertainty_check(const GridFunction& f, const SamplingSequence1D& s, double p, const WaveletBasis& basis,
                                    int extra_coarse) {
    UncertaintyReport r;
    r.p = p;
    r.b = s.b();
    r.epsilon = uncertainty_deficiency(f, s, p);
    r.lp_norm = lp_norm(f, p);
    r.hypothesis_met = r.epsilon > 0.0;
    if (!r.hypothesis_met) {
        r.c_emp = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    r.besov_norm = critical_besov_norm(f, p, 1, basis, extra_coarse);
    r.c_emp = r.besov_norm * std::pow(r.b, 1.0 / p) / (r.epsilon * r.lp_norm);
    return r;
}

std::string UncertaintyReport::to_json() const {
    json j{{"p", p},
           {"b", b},
           {"epsilon", epsilon},
           {"lp_norm", lp_norm},
           {"besov_norm", besov_norm},
           {"hypothesis_met", hypothesis_met},
           {"status", hypothesis_met ? "ok" : "hypothesis not met"},
           {"c_emp", finite_or_null(c_emp)}};
    return j.dump(2);
}

IntBDiagnostic intB_diagnostic(const GridFunction& f, const SamplingSequence1D& s, double p, const WaveletBasis& basis,
                               int extra_coarse) {
    IntBDiagnostic d;
    const auto t = trace(f, s);
    d.lhs = std::abs(lp_norm(f, p) - t.cell_norm(p));
    d.rhs = std::pow(s.b(), 1.0 / p) * critical_besov_norm(f, p, 1, basis, extra_coarse);
    if (!(d.rhs > 0.0)) throw Error("intB_diagnostic: Besov norm vanishes");
    d.ratio = d.lhs / d.rhs;
    return d;
}

double heisenberg_product(const GridFunction& f, double alpha, double p, const WaveletBasis& basis, int extra_coarse) {
    if (f.dim() != 1) throw Error("heisenberg_product: 1D functions only");
    if (!(alpha > 0.0)) throw Error("heisenberg_product: alpha must be positive");
    const double norm = lp_norm(f, p);
    if (!(norm > 0.0)) throw Error("heisenberg_product: ||f||_p = 0");
    const double e = alpha / p;
    const double weighted = weighted_lp_norm(f, [e](double x) { return std::pow(std::abs(x), e); }, p);
    const double besov = critical_besov_norm(f, p, 1, basis, extra_coarse);
    return weighted * std::pow(besov, alpha) / std::pow(norm, 1.0 + alpha);
}

} // namespace besov
