#include "besov/zoo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "besov/error.hpp"
#include "besov/fourier.hpp"
#include "besov/random.hpp"

namespace besov {

namespace {

using json = nlohmann::json;
constexpr double kPi = std::numbers::pi;
constexpr double kTail = 1e-12;

double bump_profile(double r) { return r < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - r * r)) : 0.0; }

void require_inside(const Grid1D& g, double lo, double hi, const std::string& what) {
    if (lo < g.origin || hi > g.last()) {
        std::ostringstream msg;
        msg << what << ": support [" << lo << ", " << hi << "] overflows the grid [" << g.origin << ", " << g.last() << "]";
        throw Error(msg.str());
    }
}

std::uint64_t seed_of(const ZooSpec& s) {
    if (!s.seed) throw Error("zoo: kind '" + s.kind + "' needs a seed");
    return *s.seed;
}

const ZooSpec& child(const ZooSpec& s, std::size_t i) {
    if (s.children.size() <= i) throw Error("zoo: kind '" + s.kind + "' is missing an inner spec");
    return s.children[i];
}

json spec_to_json(const ZooSpec& s) {
    json j{{"kind", s.kind}};
    if (!s.label.empty()) j["label"] = s.label;
    for (const auto& [k, v] : s.params) j[k] = std::isinf(v) ? json("inf") : json(v);
    if (s.seed) j["seed"] = *s.seed;
    if (!s.children.empty()) {
        json c = json::array();
        for (const auto& ch : s.children) c.push_back(spec_to_json(ch));
        j["of"] = c;
    }
    return j;
}

ZooSpec spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) throw Error("zoo spec: expected an object with 'kind'");
    ZooSpec s;
    for (const auto& [k, v] : j.items()) {
        if (k == "kind") {
            s.kind = v.get<std::string>();
        } else if (k == "label") {
            s.label = v.get<std::string>();
        } else if (k == "seed") {
            s.seed = v.get<std::uint64_t>();
        } else if (k == "of") {
            if (v.is_array())
                for (const auto& c : v) s.children.push_back(spec_from_json(c));
            else
                s.children.push_back(spec_from_json(v));
        } else if (v.is_string() && (v == "inf" || v == "infinity")) {
            s.params[k] = kInf;
        } else if (v.is_number()) {
            s.params[k] = v.get<double>();
        } else if (v.is_boolean()) {
            s.params[k] = v.get<bool>() ? 1.0 : 0.0;
        } else {
            throw Error("zoo spec: parameter '" + k + "' must be a number");
        }
    }
    return s;
}

ZooFunction bare(GridFunction f, const ZooSpec& s) { return ZooFunction{std::move(f), s.label.empty() ? s.kind : s.label, {}, {}, {}, {}}; }

// Random centered Gaussian wave packets passed through a smooth lowpass with
// outer edge `band`: the spectrum lies in [-band, band] (per axis in 2D).
GridFunction bandlimited(const ZooSpec& s, const std::variant<Grid1D, Grid2D>& grid) {
    const double band = s.get("band", 1.0);
    const int count = static_cast<int>(s.get("count", 8));
    const double spread = s.get("spread", 4.0);
    if (!(band > 0.0) || count < 1 || !(spread >= 0.0)) throw Error("bandlimited-random: bad parameters");
    const double sigma = 1.0 / band;
    Rng rng(seed_of(s));
    struct Packet {
        double x, y, amp, fx, fy, phase;
    };
    std::vector<Packet> packets(static_cast<std::size_t>(count));
    for (auto& p : packets) {
        p.x = rng.uniform(-spread, spread);
        p.y = rng.uniform(-spread, spread);
        p.amp = rng.normal();
        p.fx = rng.uniform(-0.5 * band, 0.5 * band);
        p.fy = rng.uniform(-0.5 * band, 0.5 * band);
        p.phase = rng.uniform(0.0, 2.0 * kPi);
    }
    const double reach = spread + 6.0 * sigma;
    if (const auto* g = std::get_if<Grid1D>(&grid)) {
        require_inside(*g, -reach, reach, "bandlimited-random");
        if (band >= g->nyquist()) throw Error("bandlimited-random: band exceeds the grid Nyquist frequency");
        const auto raw = GridFunction::sample(*g, [&](double x) {
            double v = 0.0;
            for (const auto& p : packets) {
                const double u = (x - p.x) / sigma;
                v += p.amp * std::exp(-kPi * u * u) * std::cos(2.0 * kPi * p.fx * x + p.phase);
            }
            return v;
        });
        return smooth_lowpass(raw, 0.5 * band, band);
    }
    const auto& g = std::get<Grid2D>(grid);
    require_inside(g.x, -reach, reach, "bandlimited-random");
    require_inside(g.y, -reach, reach, "bandlimited-random");
    if (band >= std::min(g.x.nyquist(), g.y.nyquist())) throw Error("bandlimited-random: band exceeds the grid Nyquist frequency");
    const auto raw = GridFunction::sample(g, [&](double x, double y) {
        double v = 0.0;
        for (const auto& p : packets) {
            const double ux = (x - p.x) / sigma, uy = (y - p.y) / sigma;
            v += p.amp * std::exp(-kPi * (ux * ux + uy * uy)) * std::cos(2.0 * kPi * (p.fx * x + p.fy * y) + p.phase);
        }
        return v;
    });
    return smooth_lowpass(raw, 0.5 * band, band);
}

ZooFunction besov_random(const ZooSpec& s, const Grid1D& grid) {
    const double sm = s.get("s", 0.5), p = s.get("p", 2.0), q = s.get("q", 1.0);
    const int j_lo = static_cast<int>(s.get("j_lo", 0)), j_hi = static_cast<int>(s.get("j_hi", 6));
    const double lo = s.get("lo", -4.0), hi = s.get("hi", 4.0);
    const double density = s.get("density", 1.0);
    const int order = static_cast<int>(s.get("order", 4));
    const BesovParams bp{sm, p, q, 1};
    bp.validate();
    if (j_lo > j_hi) throw Error("besov-random: empty scale range");
    if (!(density > 0.0)) throw Error("besov-random: density must be positive");
    require_inside(grid, lo, hi, "besov-random");
    if (j_hi > max_analysis_scale(grid)) throw Error("besov-random: j_hi is finer than the grid resolves");
    const auto basis = WaveletBasis::daubechies(order);
    const double S = basis.support();
    Rng rng(seed_of(s));
    WaveletCoefficients c(1, j_lo, j_hi, basis.name());
    double declared = 0.0;
    for (int j = j_lo; j <= j_hi; ++j) {
        const double scale = std::ldexp(1.0, j);
        const auto k_lo = static_cast<long>(std::ceil(scale * lo));
        const auto k_hi = static_cast<long>(std::floor(scale * hi - S));
        if (k_hi < k_lo) {
            std::ostringstream msg;
            msg << "besov-random: no translate of scale " << j << " fits the window";
            throw Error(msg.str());
        }
        std::vector<long> ks;
        for (long k = k_lo; k <= k_hi; ++k) ks.push_back(k);
        const auto want = static_cast<std::size_t>(std::max(1.0, std::round(density * std::sqrt(scale))));
        const std::size_t n = std::min(want, ks.size());
        for (std::size_t i = 0; i < n; ++i) {
            const auto r = static_cast<std::size_t>(rng.integer(static_cast<long>(i), static_cast<long>(ks.size()) - 1));
            std::swap(ks[i], ks[r]);
        }
        ks.resize(n);
        std::sort(ks.begin(), ks.end());
        const double w = std::isinf(q) ? 1.0 : 1.0 / std::pow(1.0 + (j - j_lo), 2.0);
        const double mag = std::exp2(-j * bp.wavelet_exponent()) * w * std::pow(static_cast<double>(n), -1.0 / p);
        for (long k : ks) c.set(j, k, rng.sign() * mag);
        declared = std::isinf(q) ? std::max(declared, w) : declared + std::pow(w, q);
    }
    if (!std::isinf(q)) declared = std::pow(declared, 1.0 / q);
    auto f = synthesize(c, basis, grid);
    ZooFunction out = bare(std::move(f), s);
    out.declared = bp;
    out.declared_norm = declared;
    out.coefficients = std::move(c);
    return out;
}

} // namespace

double ZooSpec::get(const std::string& key, double fallback) const {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

ZooSpec& ZooSpec::set(const std::string& key, double value) {
    params[key] = value;
    return *this;
}

ZooSpec ZooSpec::from_json(const std::string& text) {
    try {
        return spec_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw Error(std::string("zoo spec: ") + e.what());
    }
}

std::string ZooSpec::to_json() const { return spec_to_json(*this).dump(2); }

ZooFunction make(const ZooSpec& s, const Grid1D& grid) {
    grid.validate();
    const auto& k = s.kind;
    if (k == "gaussian") {
        const double c = s.get("center", 0.0), w = s.get("width", 1.0), a = s.get("amplitude", 1.0);
        if (!(w > 0.0)) throw Error("gaussian: width must be positive");
        const double reach = w * std::sqrt(-std::log(kTail) / kPi);
        require_inside(grid, c - reach, c + reach, "gaussian");
        return bare(GridFunction::sample(grid, [&](double x) {
                        const double u = (x - c) / w;
                        return a * std::exp(-kPi * u * u);
                    }),
                    s);
    }
    if (k == "compact-bump") {
        const double c = s.get("center", 0.0), r = s.get("radius", 1.0), a = s.get("amplitude", 1.0);
        if (!(r > 0.0)) throw Error("compact-bump: radius must be positive");
        require_inside(grid, c - r, c + r, "compact-bump");
        return bare(GridFunction::sample(grid, [&](double x) { return a * bump_profile(std::abs(x - c) / r); }), s);
    }
    if (k == "bandlimited-random") return bare(bandlimited(s, grid), s);
    if (k == "gap-spline") {
        const double b = s.get("b", 0.125), lo = s.get("lo", -2.0), hi = s.get("hi", 2.0);
        SequenceOptions opt;
        opt.strict = s.get("strict", 1.0) != 0.0;
        // Put the zeros on grid nodes when possible so they survive sampling exactly.
        auto integral = [](double v) { return std::abs(v - std::round(v)) < 1e-9; };
        if (integral(b / grid.spacing) && b / grid.spacing >= 2.0 && integral((lo - grid.origin) / grid.spacing) &&
            integral((hi - lo) / grid.spacing))
            opt.quantum = grid.spacing;
        const auto seq = SamplingSequence1D::random(b, lo, hi, seed_of(s), opt);
        auto out = bare(gap_spline(seq, Rng::derive(seed_of(s), 1), s.get("slope", 1.0), grid), s);
        out.sequence = seq;
        return out;
    }
    if (k == "gap-sine") {
        const double b = s.get("b", 0.125), lo = s.get("lo", -2.0), hi = s.get("hi", 2.0), a = s.get("amplitude", 1.0);
        SequenceOptions opt;
        opt.regular = true;
        const auto seq = SamplingSequence1D::random(b, lo, hi, 0, opt);
        require_inside(grid, lo, hi, "gap-sine");
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        auto out = bare(GridFunction::sample(grid,
                                             [&](double x) {
                                                 const double r = std::abs(x - mid) / half;
                                                 if (r >= 1.0) return 0.0;
                                                 return a * std::sin(kPi * (x - lo) / b) * bump_profile(r);
                                             }),
                        s);
        out.sequence = seq;
        return out;
    }
    if (k == "besov-random") return besov_random(s, grid);
    if (k == "dilate") {
        const int m = static_cast<int>(s.get("m", 0));
        const Grid1D scaled{std::ldexp(grid.origin, m), std::ldexp(grid.spacing, m), grid.count};
        auto inner = make(child(s, 0), scaled);
        const auto v = inner.f.values();
        ZooFunction out{GridFunction(grid, std::vector<double>(v.begin(), v.end())),
                        s.label.empty() ? "dilate(" + inner.label + ")" : s.label, inner.declared, {}, {}, {}};
        if (inner.declared && inner.declared_norm)
            out.declared_norm = *inner.declared_norm * std::exp2(m * (inner.declared->s - 1.0 / inner.declared->p));
        if (inner.coefficients) out.coefficients = dilate_coeffs(*inner.coefficients, m);
        if (inner.sequence) out.sequence = inner.sequence->dilate(m);
        return out;
    }
    if (k == "translate") {
        const double tau = s.get("tau", 0.0);
        const Grid1D shifted{grid.origin - tau, grid.spacing, grid.count};
        auto inner = make(child(s, 0), shifted);
        const auto v = inner.f.values();
        ZooFunction out{GridFunction(grid, std::vector<double>(v.begin(), v.end())),
                        s.label.empty() ? "translate(" + inner.label + ")" : s.label, inner.declared, inner.declared_norm,
                        {}, {}};
        if (inner.sequence) {
            auto pts = inner.sequence->points();
            for (auto& a : pts) a += tau;
            out.sequence = SamplingSequence1D(std::move(pts), inner.sequence->b(), inner.sequence->strict());
        }
        return out;
    }
    if (k == "tensor2d") throw Error("zoo: tensor2d needs a 2D grid");
    throw Error("zoo: unknown kind '" + k + "'");
}

ZooFunction make(const ZooSpec& s, const Grid2D& grid) {
    grid.validate();
    const auto& k = s.kind;
    if (k == "gaussian") {
        const double cx = s.get("center", 0.0), cy = s.get("center_y", 0.0), w = s.get("width", 1.0),
                     a = s.get("amplitude", 1.0);
        if (!(w > 0.0)) throw Error("gaussian: width must be positive");
        const double reach = w * std::sqrt(-std::log(kTail) / kPi);
        require_inside(grid.x, cx - reach, cx + reach, "gaussian");
        require_inside(grid.y, cy - reach, cy + reach, "gaussian");
        return bare(GridFunction::sample(grid,
                                         [&](double x, double y) {
                                             const double ux = (x - cx) / w, uy = (y - cy) / w;
                                             return a * std::exp(-kPi * (ux * ux + uy * uy));
                                         }),
                    s);
    }
    if (k == "compact-bump") {
        const double cx = s.get("center", 0.0), cy = s.get("center_y", 0.0), r = s.get("radius", 1.0),
                     a = s.get("amplitude", 1.0);
        if (!(r > 0.0)) throw Error("compact-bump: radius must be positive");
        require_inside(grid.x, cx - r, cx + r, "compact-bump");
        require_inside(grid.y, cy - r, cy + r, "compact-bump");
        return bare(GridFunction::sample(grid,
                                         [&](double x, double y) { return a * bump_profile(std::hypot(x - cx, y - cy) / r); }),
                    s);
    }
    if (k == "bandlimited-random") return bare(bandlimited(s, grid), s);
    if (k == "tensor2d") {
        const auto fx = make(child(s, 0), grid.x);
        const auto fy = make(child(s, 1), grid.y);
        std::vector<double> v(grid.size());
        for (std::size_t iy = 0; iy < grid.y.count; ++iy)
            for (std::size_t ix = 0; ix < grid.x.count; ++ix) v[grid.index(ix, iy)] = fx.f[ix] * fy.f[iy];
        return ZooFunction{GridFunction(grid, std::move(v)),
                           s.label.empty() ? "tensor(" + fx.label + ", " + fy.label + ")" : s.label, {}, {}, {}, {}};
    }
    if (k == "dilate" || k == "translate") {
        Grid2D g2 = grid;
        if (k == "dilate") {
            const int m = static_cast<int>(s.get("m", 0));
            for (auto* a : {&g2.x, &g2.y}) *a = Grid1D{std::ldexp(a->origin, m), std::ldexp(a->spacing, m), a->count};
        } else {
            g2.x.origin -= s.get("tau", 0.0);
            g2.y.origin -= s.get("tau_y", 0.0);
        }
        auto inner = make(child(s, 0), g2);
        const auto v = inner.f.values();
        return ZooFunction{GridFunction(grid, std::vector<double>(v.begin(), v.end())),
                           s.label.empty() ? k + "(" + inner.label + ")" : s.label, {}, {}, {}, {}};
    }
    throw Error("zoo: kind '" + k + "' is not available on a 2D grid");
}

ZooSpec gaussian_spec(double center, double width, double amplitude) {
    ZooSpec s{"gaussian", "", {{"center", center}, {"width", width}, {"amplitude", amplitude}}, {}, {}};
    return s;
}

ZooSpec bump_spec(double center, double radius, double amplitude) {
    return ZooSpec{"compact-bump", "", {{"center", center}, {"radius", radius}, {"amplitude", amplitude}}, {}, {}};
}

ZooSpec bandlimited_spec(double band, std::uint64_t seed, int count, double spread) {
    return ZooSpec{"bandlimited-random", "", {{"band", band}, {"count", static_cast<double>(count)}, {"spread", spread}}, seed, {}};
}

ZooSpec gap_spline_spec(double b, double lo, double hi, std::uint64_t seed, double slope) {
    return ZooSpec{"gap-spline", "", {{"b", b}, {"lo", lo}, {"hi", hi}, {"slope", slope}}, seed, {}};
}

ZooSpec gap_sine_spec(double b, double lo, double hi) {
    return ZooSpec{"gap-sine", "", {{"b", b}, {"lo", lo}, {"hi", hi}}, {}, {}};
}

ZooSpec besov_random_spec(double s, double p, double q, int j_lo, int j_hi, double lo, double hi, std::uint64_t seed,
                          double density) {
    return ZooSpec{"besov-random",
                   "",
                   {{"s", s}, {"p", p}, {"q", q}, {"j_lo", static_cast<double>(j_lo)}, {"j_hi", static_cast<double>(j_hi)}, {"lo", lo}, {"hi", hi}, {"density", density}},
                   seed,
                   {}};
}

ZooSpec dilate_spec(ZooSpec inner, int m) { return ZooSpec{"dilate", "", {{"m", static_cast<double>(m)}}, {}, {std::move(inner)}}; }

ZooSpec translate_spec(ZooSpec inner, double tau) {
    return ZooSpec{"translate", "", {{"tau", tau}}, {}, {std::move(inner)}};
}

ZooSpec tensor_spec(ZooSpec x, ZooSpec y) { return ZooSpec{"tensor2d", "", {}, {}, {std::move(x), std::move(y)}}; }

GridFunction gap_spline(const SamplingSequence1D& s, std::uint64_t seed, double slope, const Grid1D& grid) {
    if (!(slope > 0.0)) throw Error("gap_spline: slope must be positive");
    require_inside(grid, s.lo(), s.hi(), "gap-spline");
    Rng rng(seed);
    std::vector<double> d(s.size());
    for (auto& v : d) v = rng.sign() * slope * rng.uniform(0.5, 1.0);
    const auto& a = s.points();
    return GridFunction::sample(grid, [&](double x) {
        if (x <= a.front() || x >= a.back()) return 0.0;
        const auto n = static_cast<std::size_t>(std::upper_bound(a.begin(), a.end(), x) - a.begin()) - 1;
        const double h = a[n + 1] - a[n];
        const double t = (x - a[n]) / h;
        return h * (d[n] * t * (1 - t) * (1 - t) + d[n + 1] * t * t * (t - 1));
    });
}

namespace {

// Index of x on the axis if it is a grid node (within rounding), else -1.
constexpr long kOffGrid = std::numeric_limits<long>::min();

long node_index(const Grid1D& g, double x) {
    const double u = (x - g.origin) / g.spacing;
    const double r = std::round(u);
    return std::abs(u - r) <= 1e-9 ? static_cast<long>(r) : kOffGrid;
}

void check_support(const GridFunction& f, const std::function<std::pair<double, double>(double, double)>& image,
                   const char* what) {
    for (int axis = 0; axis < f.dim(); ++axis) {
        const auto& g = f.dim() == 1 ? f.grid() : (axis == 0 ? f.grid2d().x : f.grid2d().y);
        const auto [i0, i1] = f.support_indices(axis);
        if (i0 > i1) continue;
        const auto [lo, hi] = image(g.point(i0), g.point(i1));
        if (lo < g.origin - 1e-12 || hi > g.last() + 1e-12) throw Error(std::string(what) + ": support leaves the grid");
    }
}

GridFunction remap(const GridFunction& f, const std::function<double(double)>& pre, bool resample, const char* what) {
    // g(x) = f(pre(x)) per axis.
    auto axis_value = [&](const Grid1D& g, double x, long& idx) {
        const double u = pre(x);
        idx = node_index(g, u);
        if (idx == kOffGrid && !resample) throw Error(std::string(what) + ": target is off-grid; pass resample = true");
        return u;
    };
    if (f.dim() == 1) {
        const auto& g = f.grid();
        std::vector<double> v(g.count, 0.0);
        for (std::size_t i = 0; i < g.count; ++i) {
            long idx;
            const double u = axis_value(g, g.point(i), idx);
            if (idx != kOffGrid) {
                if (idx >= 0 && idx < static_cast<long>(g.count)) v[i] = f[static_cast<std::size_t>(idx)];
            } else if (f.contains(u)) {
                v[i] = f.interpolate(u);
            }
        }
        return GridFunction(g, std::move(v));
    }
    const auto& g = f.grid2d();
    std::vector<double> v(g.size(), 0.0);
    for (std::size_t iy = 0; iy < g.y.count; ++iy) {
        long jy;
        const double uy = axis_value(g.y, g.y.point(iy), jy);
        for (std::size_t ix = 0; ix < g.x.count; ++ix) {
            long jx;
            const double ux = axis_value(g.x, g.x.point(ix), jx);
            if (jx != kOffGrid && jy != kOffGrid) {
                if (jx >= 0 && jy >= 0 && jx < static_cast<long>(g.x.count) && jy < static_cast<long>(g.y.count))
                    v[g.index(ix, iy)] = f[g.index(static_cast<std::size_t>(jx), static_cast<std::size_t>(jy))];
            } else if (f.contains(ux, uy)) {
                v[g.index(ix, iy)] = f.interpolate(ux, uy);
            }
        }
    }
    return GridFunction(g, std::move(v));
}

} // namespace

GridFunction dilate(const GridFunction& f, int m, bool resample) {
    if (m == 0) return f;
    const double lam = std::ldexp(1.0, -m);
    check_support(f, [lam](double a, double b) { return std::pair{a * lam, b * lam}; }, "dilate");
    return remap(f, [m](double x) { return std::ldexp(x, m); }, resample, "dilate");
}

GridFunction translate(const GridFunction& f, double tau, bool resample) {
    if (tau == 0.0) return f;
    check_support(f, [tau](double a, double b) { return std::pair{a + tau, b + tau}; }, "translate");
    return remap(f, [tau](double x) { return x - tau; }, resample, "translate");
}

std::vector<ZooSpec> standard_zoo() {
    auto labeled = [](ZooSpec s, std::string label) {
        s.label = std::move(label);
        return s;
    };
    const double inf = kInf;
    return {
        labeled(gaussian_spec(0.0, 1.0), "gauss-w1"),
        labeled(gaussian_spec(1.5, 0.25), "gauss-w0.25"),
        labeled(gaussian_spec(-2.0, 4.5), "gauss-w4.5"),
        labeled(bump_spec(0.0, 1.0), "bump-r1"),
        labeled(bump_spec(-3.0, 0.2), "bump-r0.2"),
        labeled(bump_spec(0.0, 14.0), "bump-r14"),
        labeled(bandlimited_spec(1.0, 1), "bl-1"),
        labeled(bandlimited_spec(4.0, 2), "bl-4"),
        labeled(bandlimited_spec(16.0, 3), "bl-16"),
        labeled(bandlimited_spec(128.0, 4, 8, 1.0), "bl-128"),
        labeled(gap_sine_spec(0x1.0p-5, -2.0, 2.0), "gap-sine"),
        labeled(gap_spline_spec(0x1.0p-4, -3.0, 3.0, 5), "gap-spline"),
        labeled(besov_random_spec(0.6, 2.0, inf, 0, 5, -4.0, 4.0, 6), "br-s0.6"),
        labeled(besov_random_spec(0.9, 2.0, inf, 0, 5, -4.0, 4.0, 7), "br-s0.9"),
        labeled(besov_random_spec(0.5, 2.0, 1.0, 0, 5, -4.0, 4.0, 8), "br-p2"),
        labeled(besov_random_spec(1.0, 1.0, 1.0, 0, 5, -4.0, 4.0, 9), "br-p1"),
        labeled(besov_random_spec(0.25, 4.0, 1.0, 0, 5, -4.0, 4.0, 10), "br-p4"),
        labeled(dilate_spec(gaussian_spec(0.0, 1.0), 3), "gauss-dilated"),
        labeled(translate_spec(dilate_spec(bump_spec(0.0, 1.0), -1), 3.0), "bump-moved"),
        labeled(bandlimited_spec(2.0, 11, 3, 2.0), "bl-2"),
    };
}

} // namespace besov
