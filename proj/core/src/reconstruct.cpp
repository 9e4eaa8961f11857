#include "besov/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "besov/error.hpp"
#include "besov/fourier.hpp"
#include "besov/random.hpp"
#include "besov/wavelets.hpp"
#include "besov/zoo.hpp"

namespace besov {

namespace {

using json = nlohmann::json;

double bump(double r2) { return r2 < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - r2)) : 0.0; }

json opt_json(const std::optional<double>& v) {
    return v && std::isfinite(*v) ? json(*v) : json(nullptr);
}

std::size_t span_lo(const Grid1D& g, double x) {
    const double u = std::ceil((x - g.origin) / g.spacing);
    return u <= 0.0 ? 0 : std::min(static_cast<std::size_t>(u), g.count);
}

std::size_t span_hi(const Grid1D& g, double x) {
    const double u = std::floor((x - g.origin) / g.spacing);
    if (u < 0.0) return 0;
    return std::min(static_cast<std::size_t>(u) + 1, g.count);
}

} // namespace

GridFunction interp_pl(const TraceValues& t, const SamplingSequence1D& s, const Grid1D& grid) {
    if (s.size() < 2) throw Error("interp_pl: need at least 2 samples");
    if (t.values.size() != s.size()) throw Error("interp_pl: trace length does not match the sequence");
    const auto& a = s.points();
    std::vector<double> v(grid.count, 0.0);
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double x = grid.point(i);
        if (x < a.front() || x > a.back()) continue;
        auto n = static_cast<std::size_t>(std::upper_bound(a.begin(), a.end(), x) - a.begin());
        if (n >= a.size()) n = a.size() - 1;
        const double u = (x - a[n - 1]) / (a[n] - a[n - 1]);
        v[i] = (1.0 - u) * t.values[n - 1] + u * t.values[n];
    }
    return GridFunction(grid, std::move(v));
}

int split_scale(double b) {
    if (!(b > 0.0) || !std::isfinite(b)) throw Error("split_scale: b must be positive");
    return static_cast<int>(std::floor(std::log2(1.0 / b) + 1e-12));
}

BandlimitedSplit bandlimited_split(const GridFunction& f, double b, const SplitOptions& opt) {
    const int j0 = split_scale(b);
    if (opt.mode == SplitMode::Spectral) {
        if (!(opt.omega > 0.0)) throw Error("bandlimited_split: omega must be positive");
        const double inner = std::ldexp(opt.omega, j0);
        auto g = smooth_lowpass(f, inner, 2.0 * inner);
        auto h = f - g;
        return {std::move(g), std::move(h), j0, SplitMode::Spectral};
    }
    const auto basis = WaveletBasis::from_name(opt.basis);
    const auto& axis = f.dim() == 1 ? f.grid() : f.grid2d().x;
    const int j_min = default_min_scale(axis, opt.extra_coarse);
    if (j0 < j_min || j0 > max_analysis_scale(axis))
        throw Error("bandlimited_split: j0 lies outside the analysable scale range");
    const auto c = analyze(f, basis, j_min, j0);
    auto g = f.dim() == 1 ? synthesize(c, basis, f.grid()) : synthesize(c, basis, f.grid2d());
    auto h = f - g;
    return {std::move(g), std::move(h), j0, SplitMode::Wavelet};
}

LowpassMultiplier::LowpassMultiplier(double a, double c, double b) {
    if (!(b > 0.0)) throw Error("LowpassMultiplier: b must be positive");
    if (!(a > 0.0 && a < c)) throw Error("LowpassMultiplier: need 0 < a < c");
    inner_ = a / b;
    outer_ = c / b;
}

double LowpassMultiplier::operator()(double zeta) const { return lowpass_profile(zeta, inner_, outer_); }

GridFunction LowpassMultiplier::apply(const GridFunction& f) const {
    if (f.dim() == 1) return apply_multiplier(f, [this](double z) { return (*this)(z); });
    return apply_multiplier(f, [this](double zx, double zy) { return (*this)(zx) * (*this)(zy); });
}

SamplingLattice SamplingLattice::from(const SamplingSequence1D& s) {
    SamplingLattice l;
    l.dim = 1;
    l.m = 1;
    l.b = s.b();
    l.x = s.points();
    l.y.assign(s.size(), 0.0);
    l.owner.resize(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) l.owner[i] = i;
    return l;
}

SamplingLattice SamplingLattice::from(const SamplingGeometry2D& g) {
    SamplingLattice l;
    l.dim = 2;
    l.m = g.m();
    l.b = g.b();
    const auto& nodes = g.nodes();
    l.owner.resize(nodes.size());
    if (g.m() == 2) {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            l.x.push_back(nodes[i].x);
            l.y.push_back(nodes[i].y);
            l.owner[i] = i;
        }
        return l;
    }
    std::vector<double> arc;
    for (const auto& comp : g.components()) {
        if (comp.count == 0) continue;
        arc.assign(comp.count, 0.0);
        for (std::size_t i = 1; i < comp.count; ++i) {
            const auto& p = nodes[comp.first + i - 1];
            const auto& q = nodes[comp.first + i];
            arc[i] = arc[i - 1] + std::hypot(q.x - p.x, q.y - p.y);
        }
        double length = arc.back();
        if (comp.closed) {
            const auto& p = nodes[comp.first + comp.count - 1];
            const auto& q = nodes[comp.first];
            length += std::hypot(q.x - p.x, q.y - p.y);
        }
        const std::size_t base = l.x.size();
        std::size_t n = static_cast<std::size_t>(std::max(1.0, std::round(length / l.b)));
        if (comp.closed) n = std::max<std::size_t>(n, 3);
        const std::size_t slots = comp.closed ? n : n + 1;
        const double step = length / static_cast<double>(n);
        // Representative carrier node per slot: the one nearest the slot position.
        std::vector<double> best(slots, std::numeric_limits<double>::infinity());
        l.x.resize(base + slots, 0.0);
        l.y.resize(base + slots, 0.0);
        for (std::size_t i = 0; i < comp.count; ++i) {
            const double u = step > 0.0 ? arc[i] / step : 0.0;
            auto k = static_cast<std::size_t>(std::llround(u));
            if (comp.closed) k %= n;
            k = std::min(k, slots - 1);
            const double dist = std::abs(u - std::round(u));
            l.owner[comp.first + i] = base + k;
            if (dist < best[k]) {
                best[k] = dist;
                l.x[base + k] = nodes[comp.first + i].x;
                l.y[base + k] = nodes[comp.first + i].y;
            }
        }
        // Slots no carrier node fell into stay flagged by averaging_V; place them
        // on the polyline so the partition still covers.
        for (std::size_t k = 0; k < slots; ++k) {
            if (std::isfinite(best[k])) continue;
            const double target = static_cast<double>(k) * step;
            auto it = std::lower_bound(arc.begin(), arc.end(), target);
            const std::size_t i = std::min(static_cast<std::size_t>(it - arc.begin()), comp.count - 1);
            l.x[base + k] = nodes[comp.first + i].x;
            l.y[base + k] = nodes[comp.first + i].y;
        }
    }
    return l;
}

AveragedCoefficients averaging_V(const TraceValues& t, const SamplingLattice& lattice, double p) {
    if (t.values.size() != lattice.owner.size()) throw Error("averaging_V: trace does not match the lattice");
    AveragedCoefficients out;
    std::vector<double> num(lattice.size(), 0.0), den(lattice.size(), 0.0);
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        num[lattice.owner[i]] += t.weights[i] * t.values[i];
        den[lattice.owner[i]] += t.weights[i];
    }
    out.values.resize(lattice.size());
    double sum = 0.0;
    for (std::size_t j = 0; j < lattice.size(); ++j) {
        if (den[j] > 0.0) {
            out.values[j] = num[j] / den[j];
        } else {
            out.values[j] = 0.0;
            out.empty.push_back(j);
        }
        sum += std::pow(std::abs(out.values[j]), p);
    }
    const double carrier = t.carrier_norm(p);
    const double scale = std::pow(lattice.b, static_cast<double>(lattice.m - lattice.dim) / p);
    out.bound_ratio = carrier > 0.0 ? std::pow(sum, 1.0 / p) / (scale * carrier)
                                    : std::numeric_limits<double>::quiet_NaN();
    return out;
}

PartitionOfUnity::PartitionOfUnity(const SamplingLattice& lattice, const Grid1D& grid)
    : dim_(1), gx_(grid), gy_(grid), xs_(lattice.x), ys_(lattice.size(), 0.0), radius_(2.0 * lattice.b) {
    if (lattice.dim != 1) throw Error("PartitionOfUnity: 2D lattice on a 1D grid");
    total_.assign(grid.count, 0.0);
    for (std::size_t j = 0; j < size(); ++j) for_each_point(j, [&](std::size_t i, double w) { total_[i] += w; });
}

PartitionOfUnity::PartitionOfUnity(const SamplingLattice& lattice, const Grid2D& grid)
    : dim_(2), gx_(grid.x), gy_(grid.y), xs_(lattice.x), ys_(lattice.y), radius_(2.0 * lattice.b) {
    if (lattice.dim != 2) throw Error("PartitionOfUnity: 1D lattice on a 2D grid");
    total_.assign(grid.size(), 0.0);
    for (std::size_t j = 0; j < size(); ++j) for_each_point(j, [&](std::size_t i, double w) { total_[i] += w; });
}

template <class Fn>
void PartitionOfUnity::for_each_point(std::size_t j, Fn&& fn) const {
    const double r2 = radius_ * radius_;
    const std::size_t x0 = span_lo(gx_, xs_[j] - radius_), x1 = span_hi(gx_, xs_[j] + radius_);
    if (dim_ == 1) {
        for (std::size_t i = x0; i < x1; ++i) {
            const double d = gx_.point(i) - xs_[j];
            const double w = bump(d * d / r2);
            if (w > 0.0) fn(i, w);
        }
        return;
    }
    const std::size_t y0 = span_lo(gy_, ys_[j] - radius_), y1 = span_hi(gy_, ys_[j] + radius_);
    for (std::size_t iy = y0; iy < y1; ++iy) {
        const double dy = gy_.point(iy) - ys_[j];
        for (std::size_t ix = x0; ix < x1; ++ix) {
            const double dx = gx_.point(ix) - xs_[j];
            const double w = bump((dx * dx + dy * dy) / r2);
            if (w > 0.0) fn(iy * gx_.count + ix, w);
        }
    }
}

GridFunction PartitionOfUnity::apply(const std::vector<double>& c) const {
    if (c.size() != size()) throw Error("PartitionOfUnity: coefficient count does not match the lattice");
    std::vector<double> v(total_.size(), 0.0);
    for (std::size_t j = 0; j < size(); ++j) {
        if (c[j] == 0.0) continue;
        for_each_point(j, [&](std::size_t i, double w) { v[i] += c[j] * w; });
    }
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = total_[i] > 0.0 ? v[i] / total_[i] : 0.0;
    if (dim_ == 1) return GridFunction(gx_, std::move(v));
    return GridFunction(Grid2D{gx_, gy_}, std::move(v));
}

GridFunction PartitionOfUnity::beta(std::size_t j) const {
    if (j >= size()) throw Error("PartitionOfUnity: node index out of range");
    std::vector<double> c(size(), 0.0);
    c[j] = 1.0;
    return apply(c);
}

GridFunction PartitionOfUnity::sum() const { return apply(std::vector<double>(size(), 1.0)); }

GridFunction quasi_interp_A(const std::vector<double>& c, const PartitionOfUnity& pou) { return pou.apply(c); }

void ReconstructionConfig::validate() const {
    if (!(c > 0.0) || !std::isfinite(c)) throw Error("reconstruction: c must be positive");
    const double a_ = inner();
    if (!(a_ > 0.0 && a_ < c)) throw Error("reconstruction: need 0 < a < c");
    if (iterations < 0) throw Error("reconstruction: iteration count must be >= 0");
    if (!(p >= 1.0) || !std::isfinite(p)) throw Error("reconstruction: p must lie in [1, inf)");
}

std::string ReconstructionReport::to_json() const {
    json j{{"b", b},
           {"p", p},
           {"a", a},
           {"c", c},
           {"iterations", iterations},
           {"residuals", residuals},
           {"diverged", diverged},
           {"contraction", opt_json(contraction)},
           {"relative_error", opt_json(relative_error)},
           {"s", opt_json(s)}};
    if (total_error) {
        j["lp_norm"] = opt_json(lp_norm);
        j["total_error"] = opt_json(total_error);
        j["h_norm"] = opt_json(h_norm);
        j["g_error"] = opt_json(g_error);
        j["h_reconstruction"] = opt_json(h_reconstruction);
        j["split_mode"] = split_mode;
    }
    return j.dump(2);
}

Reconstructor::Reconstructor(const SamplingSequence1D& s, const Grid1D& grid, ReconstructionConfig cfg)
    : seq_(s), grid_(grid), cfg_((cfg.validate(), cfg)), lattice_(SamplingLattice::from(s)), pou_(lattice_, grid),
      chi_(cfg_.inner(), cfg_.c, s.b()) {}

Reconstructor::Reconstructor(const SamplingGeometry2D& g, const Grid2D& grid, ReconstructionConfig cfg)
    : geo_(g), grid_(grid), cfg_((cfg.validate(), cfg)), lattice_(SamplingLattice::from(g)), pou_(lattice_, grid),
      chi_(cfg_.inner(), cfg_.c, g.b()) {}

TraceValues Reconstructor::T(const GridFunction& f) const { return seq_ ? trace(f, *seq_) : trace(f, *geo_); }

std::vector<double> Reconstructor::V(const TraceValues& t) const { return averaging_V(t, lattice_, cfg_.p).values; }

GridFunction Reconstructor::A1(const GridFunction& f) const {
    if (cfg_.identity_A1) return f;
    return A(V(T(f)));
}

GridFunction Reconstructor::contract(const GridFunction& f) const { return f - P(A1(f)); }

std::pair<GridFunction, ReconstructionReport> Reconstructor::reconstruct(const TraceValues& t,
                                                                         const GridFunction* reference) const {
    ReconstructionReport rep;
    rep.b = b();
    rep.p = cfg_.p;
    rep.a = cfg_.inner();
    rep.c = cfg_.c;
    rep.contraction = cfg_.contraction;
    const auto base = P(A(V(t)));
    auto f = base;
    int growth = 0;
    for (int k = 0; k < cfg_.iterations; ++k) {
        auto next = base + contract(f);
        const double r = lp_norm(next - f, cfg_.p);
        if (!std::isfinite(r)) throw Error("reconstruct: non-finite residual");
        growth = (!rep.residuals.empty() && r > rep.residuals.back()) ? growth + 1 : 0;
        rep.residuals.push_back(r);
        f = std::move(next);
        rep.iterations = k + 1;
        if (growth >= 3) {
            rep.diverged = true;
            break;
        }
    }
    if (reference) {
        const double n = lp_norm(*reference, cfg_.p);
        if (n > 0.0) rep.relative_error = lp_norm(f - *reference, cfg_.p) / n;
    }
    return {std::move(f), std::move(rep)};
}

double Reconstructor::contraction_estimate(const std::vector<GridFunction>& family) const {
    double est = 0.0;
    for (const auto& g : family) {
        const double n = lp_norm(g, cfg_.p);
        if (!(n > 0.0)) continue;
        est = std::max(est, lp_norm(contract(g), cfg_.p) / n);
    }
    return est;
}

std::vector<GridFunction> Reconstructor::calibration_family(int count, std::uint64_t seed,
                                                           std::optional<double> band_opt) const {
    if (count < 1) throw Error("calibration_family: count must be positive");
    const double band = band_opt ? *band_opt : chi_.inner();
    if (!(band > 0.0)) throw Error("calibration_family: band must be positive");
    const double sigma = 1.0 / band;
    double center = 0.0, half = 0.0;
    if (seq_) {
        center = 0.5 * (seq_->lo() + seq_->hi());
        half = 0.5 * seq_->length();
    } else {
        half = geo_->radial() ? geo_->covered_radius() / std::sqrt(2.0) : geo_->window();
    }
    const double spread = 0.5 * (half - 2.0 * b() - 6.0 * sigma);
    if (!(spread > 0.0)) {
        std::ostringstream msg;
        msg << "calibration_family: the sampled window (half width " << half << ") is too small for band " << band;
        throw Error(msg.str());
    }
    std::vector<GridFunction> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        auto spec = bandlimited_spec(band, Rng::derive(seed, static_cast<std::uint64_t>(i)), 4, spread);
        if (center != 0.0) spec = translate_spec(spec, center);
        if (const auto* g = std::get_if<Grid1D>(&grid_))
            out.push_back(make(spec, *g).f);
        else
            out.push_back(make(spec, std::get<Grid2D>(grid_)).f);
    }
    return out;
}

std::pair<GridFunction, ReconstructionReport> neumann_reconstruct(const TraceValues& t, const Reconstructor& r,
                                                                  const GridFunction* reference) {
    const auto& cfg = r.config();
    std::optional<double> est = cfg.contraction;
    if (!est && !cfg.override_contraction) est = r.contraction_estimate(r.calibration_family());
    if (est && *est >= 1.0 && !cfg.override_contraction) {
        std::ostringstream msg;
        msg << "neumann_reconstruct: contraction estimate " << *est << " >= 1; pass the override to run anyway";
        throw Error(msg.str());
    }
    auto out = r.reconstruct(t, reference);
    out.second.contraction = est;
    return out;
}

std::vector<double> default_c_candidates() {
    std::vector<double> c;
    for (int k = 1; k <= 8; ++k) c.push_back(k / 16.0);
    return c;
}

namespace {

template <class Set, class Grid>
CalibrationResult calibrate(const Set& set, const Grid& grid, const std::vector<double>& candidates, double threshold,
                            int family, std::uint64_t seed) {
    if (candidates.empty()) throw Error("calibrate_c: no candidates");
    CalibrationResult res;
    bool found = false;
    for (double c : candidates) {
        ReconstructionConfig cfg;
        cfg.c = c;
        const Reconstructor r(set, grid, cfg);
        const double est = r.contraction_estimate(r.calibration_family(family, seed));
        res.tried.emplace_back(c, est);
        if (est >= threshold) break;
        res.c = c;
        res.estimate = est;
        found = true;
    }
    if (!found) throw Error("calibrate_c: no candidate keeps the estimate below the threshold");
    return res;
}

} // namespace

CalibrationResult calibrate_c(const SamplingSequence1D& s, const Grid1D& grid, const std::vector<double>& candidates,
                              double threshold, int family, std::uint64_t seed) {
    return calibrate(s, grid, candidates, threshold, family, seed);
}

CalibrationResult calibrate_c(const SamplingGeometry2D& g, const Grid2D& grid, const std::vector<double>& candidates,
                              double threshold, int family, std::uint64_t seed) {
    return calibrate(g, grid, candidates, threshold, family, seed);
}

ReconstructionReport full_pipeline(const GridFunction& f, const Reconstructor& r, const SplitOptions& split,
                                   std::optional<double> s) {
    const double p = r.config().p;
    auto [fr, rep] = r.reconstruct(r.T(f), &f);
    rep.s = s;
    rep.lp_norm = lp_norm(f, p);
    rep.total_error = lp_norm(f - fr, p);
    const auto parts = bandlimited_split(f, r.b(), split);
    rep.split_mode = parts.mode == SplitMode::Spectral ? "spectral" : "wavelet";
    rep.h_norm = lp_norm(parts.h, p);
    const auto gr = r.reconstruct(r.T(parts.g)).first;
    rep.g_error = lp_norm(parts.g - gr, p);
    const auto hr = r.reconstruct(r.T(parts.h)).first;
    rep.h_reconstruction = lp_norm(hr, p);
    return rep;
}

} // namespace besov
