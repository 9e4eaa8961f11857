#include "besov/norms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "besov/error.hpp"
#include "besov/fourier.hpp"

namespace besov {

namespace {

using cplx = std::complex<double>;

constexpr double kBandTolerance = 1e-6;
// Blocks are computed on a window reaching kKernelReach * 2^-j beyond the support of f.
constexpr double kKernelReach = 32.0;
constexpr double kKernelReach2D = 16.0;

double lq_combine(const std::vector<double>& terms, double q) {
    if (q == kInf) {
        double m = 0.0;
        for (double t : terms) m = std::max(m, t);
        return m;
    }
    double s = 0.0;
    for (double t : terms) s += std::pow(t, q);
    return std::pow(s, 1.0 / q);
}

double pow_sum(const std::vector<double>& v, double p) {
    double s = 0.0;
    if (p == 2.0)
        for (double x : v) s += x * x;
    else
        for (double x : v) s += std::pow(std::abs(x), p);
    return s;
}

std::size_t next_pow2(double n) {
    std::size_t r = 1;
    while (static_cast<double>(r) < n) r <<= 1;
    return r;
}

} // namespace

void BesovParams::validate() const {
    if (!(s > 0.0) || !std::isfinite(s)) throw Error("Besov smoothness s must be positive");
    if (!(p >= 1.0) || !std::isfinite(p)) throw Error("Besov exponent p must lie in [1, inf)");
    if (!(q >= 1.0)) throw Error("Besov exponent q must lie in [1, inf]");
    if (d != 1 && d != 2) throw Error("Besov dimension must be 1 or 2");
}

WaveletNorm besov_norm_wavelet_detail(const WaveletCoefficients& c, const BesovParams& params) {
    params.validate();
    if (c.dim() != params.d) throw Error("besov_norm_wavelet: coefficient dimension differs from params.d");
    WaveletNorm out;
    out.j_min = c.j_min();
    out.j_max = c.j_max();
    out.truncation_residual = c.truncation_residual();
    out.per_scale.assign(static_cast<std::size_t>(c.j_max() - c.j_min() + 1), 0.0);
    std::vector<double> sums(out.per_scale.size(), 0.0);
    bool any = false;
    for (const auto& b : c.blocks()) {
        if (b.type == 0) continue;
        const double s = pow_sum(b.values, params.p);
        if (s > 0.0) any = true;
        sums[static_cast<std::size_t>(b.j - c.j_min())] += s;
    }
    const double a = params.wavelet_exponent();
    for (std::size_t i = 0; i < sums.size(); ++i) {
        const int j = c.j_min() + static_cast<int>(i);
        out.per_scale[i] = std::exp2(a * j) * std::pow(sums[i], 1.0 / params.p);
    }
    out.empty = !any;
    out.norm = any ? lq_combine(out.per_scale, params.q) : 0.0;
    return out;
}

double besov_norm_wavelet(const WaveletCoefficients& c, const BesovParams& params) {
    return besov_norm_wavelet_detail(c, params).norm;
}

WaveletNorm besov_norm_of(const GridFunction& f, const BesovParams& params, const WaveletBasis& basis, int extra_coarse) {
    const Grid1D& axis = f.dim() == 1 ? f.grid() : f.grid2d().x;
    if (f.dim() == 2 && f.grid2d().y.spacing != axis.spacing) throw Error("besov_norm_of: 2D grid must be square-celled");
    const int j_min = default_min_scale(axis, extra_coarse);
    const int j_max = max_analysis_scale(axis);
    AnalyzeOptions opt;
    return besov_norm_wavelet_detail(analyze(f, basis, j_min, j_max, opt), params);
}

LittlewoodPaleyWindow::LittlewoodPaleyWindow() {
    constexpr int n = 4096;
    table_.resize(n + 1);
    for (int i = 0; i <= n; ++i) table_[i] = smooth_ramp(static_cast<double>(i) / n);
}

LittlewoodPaleyWindow::LittlewoodPaleyWindow(int j_lo, int j_hi) : LittlewoodPaleyWindow() {
    if (j_lo > j_hi) throw Error("Littlewood-Paley scale range is empty");
    has_range_ = true;
    j_lo_ = j_lo;
    j_hi_ = j_hi;
}

double LittlewoodPaleyWindow::ramp(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double u = t * static_cast<double>(table_.size() - 1);
    const auto i = static_cast<std::size_t>(u);
    return table_[i] + (u - static_cast<double>(i)) * (table_[i + 1] - table_[i]);
}

double LittlewoodPaleyWindow::Phi(double y) const {
    const double a = std::abs(y);
    if (a == 0.0) return 1.0;
    return ramp(1.0 - std::log2(a));
}

double LittlewoodPaleyWindow::rho(double y) const { return Phi(y) - Phi(2.0 * y); }

double LittlewoodPaleyWindow::partition_sum(double y, int lo, int hi) const {
    double s = 0.0;
    for (int j = lo; j <= hi; ++j) s += rho(std::ldexp(y, -j));
    return s;
}

namespace {

// f^(zeta) by direct summation over the support samples of a 1D function.
class DirectSpectrum {
public:
    explicit DirectSpectrum(const GridFunction& f) : g_(f.grid()) {
        const auto [a, b] = f.support_indices();
        first_ = a;
        for (std::size_t i = a; i <= b && a <= b; ++i) w_.push_back(trapezoid_weight(g_, i) * f[i]);
    }

    cplx operator()(double zeta) const {
        if (w_.empty()) return 0.0;
        const double x0 = g_.point(first_);
        double t = x0 * zeta;
        t -= std::round(t);
        cplx e = std::polar(1.0, -2.0 * std::numbers::pi * t);
        const cplx step = std::polar(1.0, -2.0 * std::numbers::pi * g_.spacing * zeta);
        cplx s = 0.0;
        for (std::size_t i = 0; i < w_.size(); ++i) {
            // Re-anchor the recurrence periodically to bound the rounding drift.
            if (i % 1024 == 0 && i > 0) {
                double u = (x0 + g_.spacing * static_cast<double>(i)) * zeta;
                u -= std::round(u);
                e = std::polar(1.0, -2.0 * std::numbers::pi * u);
            }
            s += w_[i] * e;
            e *= step;
        }
        return s;
    }

    // int_{|zeta| < r} |f^|^2 by composite Simpson (real f, so twice the half line).
    double low_energy(double r) const {
        constexpr int n = 32;
        const double h = r / n;
        double s = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double wgt = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
            s += wgt * std::norm((*this)(h * i));
        }
        return 2.0 * s * h / 3.0;
    }

private:
    Grid1D g_;
    std::size_t first_ = 0;
    std::vector<double> w_;
};

std::string band_report(int lo, int hi, double low, double high) {
    std::ostringstream msg;
    msg << "besov_norm_lp: spectral energy outside the covered band exceeds " << kBandTolerance
        << " of the total (band 2^" << lo << "..2^" << hi << ", below: " << low << ", above: " << high << ")";
    return msg.str();
}

LpNorm lp_norm_1d(const GridFunction& f, const BesovParams& params, const LittlewoodPaleyWindow& w) {
    const auto& g = f.grid();
    if (!g.power_of_two()) throw Error("besov_norm_lp: grid count must be a power of two");
    LpNorm out;
    const auto [ia, ib] = f.support_indices();
    const int j_top = g.resolution_exponent() - 2;
    if (ia > ib) {
        out.j_lo = w.has_range() ? w.j_lo() : j_top;
        out.j_hi = w.has_range() ? w.j_hi() : j_top;
        return out;
    }
    // Zero padding to twice the length so native blocks do not wrap.
    const std::size_t n = g.count;
    std::vector<double> padded(2 * n, 0.0);
    std::copy(f.values().begin(), f.values().end(), padded.begin() + static_cast<long>(n / 2));
    const Grid1D pg = Grid1D::make(g.origin - g.spacing * static_cast<double>(n / 2), g.spacing, 2 * n);
    const GridFunction fp(pg, std::move(padded));
    const auto F = fourier(fp);
    const double total = F.energy();
    const DirectSpectrum direct(f);

    out.j_hi = w.has_range() ? w.j_hi() : j_top;
    if (w.has_range()) {
        out.j_lo = w.j_lo();
    } else {
        out.j_lo = out.j_hi;
        while (out.j_lo > -40 && direct.low_energy(std::ldexp(1.0, out.j_lo)) > 0.1 * kBandTolerance * total) --out.j_lo;
    }
    if (out.j_hi > j_top) {
        std::ostringstream msg;
        msg << "besov_norm_lp: j_hi = " << out.j_hi << " exceeds the grid bound " << j_top;
        throw Error(msg.str());
    }
    out.low_leak = total > 0.0 ? direct.low_energy(std::ldexp(1.0, out.j_lo)) / total : 0.0;
    out.high_leak = total > 0.0 ? F.energy_outside(std::ldexp(1.0, out.j_hi)) / total : 0.0;
    if (out.low_leak > kBandTolerance || out.high_leak > kBandTolerance)
        throw Error(band_report(out.j_lo, out.j_hi, out.low_leak, out.high_leak));

    const double xa = g.point(ia), xb = g.point(ib);
    const double room = std::min(xa - pg.origin, pg.last() - xb);
    for (int j = out.j_lo; j <= out.j_hi; ++j) {
        const double scale = std::ldexp(1.0, -j);
        double block;
        if (kKernelReach * scale <= room) {
            auto B = F;
            auto& v = B.values();
            for (std::size_t k = 0; k < v.size(); ++k) v[k] *= w.rho(B.frequency(k) * scale);
            block = lp_norm(inverse_fourier(B), params.p);
        } else {
            // Own grid: spacing 2^-(j+4), wide enough for the kernel tails.
            const double hj = std::ldexp(1.0, -(j + 4));
            const double extent = (xb - xa) + 2.0 * kKernelReach * scale;
            const std::size_t nj = next_pow2(extent / hj);
            const double center = 0.5 * (xa + xb);
            const Grid1D cg = Grid1D::make(center - hj * static_cast<double>(nj / 2), hj, nj);
            std::vector<cplx> spec(nj, 0.0);
            SpectrumFunction S(cg, spec);
            auto& v = S.values();
            for (std::size_t k = 1; k < nj / 2; ++k) {
                const double z = S.frequency(k);
                const double r = w.rho(z * scale);
                if (r == 0.0) continue;
                v[k] = r * direct(z);
                v[nj - k] = std::conj(v[k]);
            }
            block = lp_norm(inverse_fourier(S), params.p);
        }
        out.per_scale.push_back(std::exp2(params.s * j) * block);
    }
    out.norm = lq_combine(out.per_scale, params.q);
    return out;
}

LpNorm lp_norm_2d(const GridFunction& f, const BesovParams& params, const LittlewoodPaleyWindow& w) {
    const auto& g = f.grid2d();
    if (!g.x.power_of_two() || !g.y.power_of_two()) throw Error("besov_norm_lp: grid counts must be powers of two");
    if (g.x.spacing != g.y.spacing) throw Error("besov_norm_lp: 2D grid must be square-celled");
    LpNorm out;
    const auto F = fourier(f);
    const double total = F.energy();
    const int j_top = g.x.resolution_exponent() - 2;
    out.j_hi = w.has_range() ? w.j_hi() : j_top;
    if (w.has_range()) {
        out.j_lo = w.j_lo();
    } else {
        // Coarsest block whose kernel still fits inside the domain around the support.
        const double room = f.support_margin();
        out.j_lo = out.j_hi;
        while (kKernelReach2D * std::ldexp(1.0, -(out.j_lo - 1)) <= room) --out.j_lo;
    }
    auto radius = [&](std::size_t i) {
        const std::size_t nx = g.x.count;
        return std::hypot(F.frequency(i % nx, 0), F.frequency(i / nx, 1));
    };
    double low = 0.0, high = 0.0;
    const double rl = std::ldexp(1.0, out.j_lo), rh = std::ldexp(1.0, out.j_hi);
    for (std::size_t i = 0; i < F.values().size(); ++i) {
        const double r = radius(i);
        if (r < rl) low += std::norm(F.values()[i]);
        if (r > rh) high += std::norm(F.values()[i]);
    }
    const double cell = F.frequency_step(0) * F.frequency_step(1);
    out.low_leak = total > 0.0 ? low * cell / total : 0.0;
    out.high_leak = total > 0.0 ? high * cell / total : 0.0;
    if (total == 0.0) return out;
    if (out.low_leak > kBandTolerance || out.high_leak > kBandTolerance)
        throw Error(band_report(out.j_lo, out.j_hi, out.low_leak, out.high_leak));
    for (int j = out.j_lo; j <= out.j_hi; ++j) {
        auto B = F;
        auto& v = B.values();
        const double scale = std::ldexp(1.0, -j);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] *= w.rho(radius(i) * scale);
        out.per_scale.push_back(std::exp2(params.s * j) * lp_norm(inverse_fourier(B), params.p));
    }
    out.norm = lq_combine(out.per_scale, params.q);
    return out;
}

} // namespace

LpNorm besov_norm_lp_detail(const GridFunction& f, const BesovParams& params, const LittlewoodPaleyWindow& w) {
    params.validate();
    if (f.dim() != params.d) throw Error("besov_norm_lp: function dimension differs from params.d");
    return f.dim() == 1 ? lp_norm_1d(f, params, w) : lp_norm_2d(f, params, w);
}

double besov_norm_lp(const GridFunction& f, const BesovParams& params, const LittlewoodPaleyWindow& w) {
    return besov_norm_lp_detail(f, params, w).norm;
}

PwReport pw_membership(const GridFunction& f, double b, double tol) {
    if (!(b > 0.0)) throw Error("pw_membership: band must be positive");
    const auto F = fourier(f);
    PwReport r;
    r.total_energy = F.energy();
    r.outside_energy = F.energy_outside(b);
    r.leak_fraction = r.total_energy > 0.0 ? r.outside_energy / r.total_energy : 0.0;
    r.member = r.outside_energy <= tol * r.total_energy;
    return r;
}

} // namespace besov
