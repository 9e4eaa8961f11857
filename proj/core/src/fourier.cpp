#include "besov/fourier.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "besov/error.hpp"
#include "fft.hpp"

namespace besov {

namespace {

using cplx = std::complex<double>;

double signed_index(std::size_t k, std::size_t n) {
    return k < n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n);
}

void require_pow2(const Grid1D& g) {
    if (!g.power_of_two()) {
        std::ostringstream msg;
        msg << "Fourier transform needs a power-of-two grid count, got " << g.count;
        throw Error(msg.str());
    }
}

// Phase e^{sign 2 pi i origin zeta_k} for each k of an axis.
std::vector<cplx> origin_phase(const Grid1D& g, double sign) {
    std::vector<cplx> ph(g.count);
    const double step = 1.0 / (static_cast<double>(g.count) * g.spacing);
    for (std::size_t k = 0; k < g.count; ++k) {
        const double zeta = signed_index(k, g.count) * step;
        // Reduce origin*zeta mod 1 before taking the exponential to keep the phase accurate.
        double t = g.origin * zeta;
        t -= std::round(t);
        ph[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * t);
    }
    return ph;
}

} // namespace

SpectrumFunction::SpectrumFunction(Grid1D spatial, std::vector<cplx> values)
    : x_(spatial), y_(Grid1D{}), values_(std::move(values)) {
    if (values_.size() != x_.count) throw Error("SpectrumFunction: size mismatch");
}

SpectrumFunction::SpectrumFunction(Grid2D spatial, std::vector<cplx> values)
    : is_2d_(true), x_(spatial.x), y_(spatial.y), values_(std::move(values)) {
    if (values_.size() != spatial.size()) throw Error("SpectrumFunction: size mismatch");
}

double SpectrumFunction::frequency_step(int a) const {
    const auto& g = axis(a);
    return 1.0 / (static_cast<double>(g.count) * g.spacing);
}

double SpectrumFunction::frequency(std::size_t k, int a) const {
    return signed_index(k, axis(a).count) * frequency_step(a);
}

double SpectrumFunction::energy() const {
    double s = 0.0;
    for (const auto& v : values_) s += std::norm(v);
    double cell = frequency_step(0);
    if (is_2d_) cell *= frequency_step(1);
    return s * cell;
}

double SpectrumFunction::energy_outside(double band) const {
    double s = 0.0;
    if (!is_2d_) {
        for (std::size_t k = 0; k < x_.count; ++k)
            if (std::abs(frequency(k)) > band) s += std::norm(values_[k]);
        return s * frequency_step(0);
    }
    for (std::size_t ky = 0; ky < y_.count; ++ky) {
        const bool out_y = std::abs(frequency(ky, 1)) > band;
        for (std::size_t kx = 0; kx < x_.count; ++kx)
            if (out_y || std::abs(frequency(kx, 0)) > band) s += std::norm(values_[ky * x_.count + kx]);
    }
    return s * frequency_step(0) * frequency_step(1);
}

SpectrumFunction fourier(const GridFunction& f) {
    if (f.dim() == 1) {
        const auto& g = f.grid();
        require_pow2(g);
        std::vector<cplx> data(f.values().begin(), f.values().end());
        detail::fft(data.data(), g.count, -1);
        const auto ph = origin_phase(g, -1.0);
        for (std::size_t k = 0; k < g.count; ++k) data[k] *= g.spacing * ph[k];
        return SpectrumFunction(g, std::move(data));
    }
    const auto& g = f.grid2d();
    require_pow2(g.x);
    require_pow2(g.y);
    std::vector<cplx> data(f.values().begin(), f.values().end());
    detail::fft2(data.data(), g.x.count, g.y.count, -1);
    const auto px = origin_phase(g.x, -1.0);
    const auto py = origin_phase(g.y, -1.0);
    const double cell = g.x.spacing * g.y.spacing;
    for (std::size_t ky = 0; ky < g.y.count; ++ky)
        for (std::size_t kx = 0; kx < g.x.count; ++kx) data[g.index(kx, ky)] *= cell * px[kx] * py[ky];
    return SpectrumFunction(g, std::move(data));
}

std::vector<cplx> inverse_fourier_complex(const SpectrumFunction& F) {
    std::vector<cplx> data = F.values();
    if (F.dim() == 1) {
        const auto& g = F.spatial_grid();
        require_pow2(g);
        const auto ph = origin_phase(g, 1.0);
        const double scale = F.frequency_step(0);
        for (std::size_t k = 0; k < g.count; ++k) data[k] *= scale * ph[k];
        detail::fft(data.data(), g.count, 1);
        return data;
    }
    const auto g = F.spatial_grid2d();
    require_pow2(g.x);
    require_pow2(g.y);
    const auto px = origin_phase(g.x, 1.0);
    const auto py = origin_phase(g.y, 1.0);
    const double scale = F.frequency_step(0) * F.frequency_step(1);
    for (std::size_t ky = 0; ky < g.y.count; ++ky)
        for (std::size_t kx = 0; kx < g.x.count; ++kx) data[g.index(kx, ky)] *= scale * px[kx] * py[ky];
    detail::fft2(data.data(), g.x.count, g.y.count, 1);
    return data;
}

GridFunction inverse_fourier(const SpectrumFunction& F) {
    const auto data = inverse_fourier_complex(F);
    std::vector<double> re(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) re[i] = data[i].real();
    if (F.dim() == 1) return GridFunction(F.spatial_grid(), std::move(re));
    return GridFunction(F.spatial_grid2d(), std::move(re));
}

double smooth_ramp(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

double lowpass_profile(double zeta, double inner, double outer) {
    const double z = std::abs(zeta);
    if (z <= inner) return 1.0;
    if (z >= outer) return 0.0;
    return smooth_ramp((outer - z) / (outer - inner));
}

GridFunction apply_multiplier(const GridFunction& f, const std::function<double(double)>& m) {
    if (f.dim() != 1) throw Error("apply_multiplier: 1D multiplier given for a 2D function");
    auto F = fourier(f);
    auto& v = F.values();
    for (std::size_t k = 0; k < v.size(); ++k) v[k] *= m(F.frequency(k));
    return inverse_fourier(F);
}

GridFunction apply_multiplier(const GridFunction& f, const std::function<double(double, double)>& m) {
    if (f.dim() != 2) throw Error("apply_multiplier: 2D multiplier given for a 1D function");
    auto F = fourier(f);
    auto& v = F.values();
    const auto nx = F.axis(0).count;
    const auto ny = F.axis(1).count;
    for (std::size_t ky = 0; ky < ny; ++ky) {
        const double zy = F.frequency(ky, 1);
        for (std::size_t kx = 0; kx < nx; ++kx) v[ky * nx + kx] *= m(F.frequency(kx, 0), zy);
    }
    return inverse_fourier(F);
}

GridFunction smooth_lowpass(const GridFunction& f, double inner, double outer) {
    if (!(inner > 0.0) || !(inner < outer)) {
        std::ostringstream msg;
        msg << "smooth_lowpass: need 0 < inner < outer, got inner=" << inner << " outer=" << outer;
        throw Error(msg.str());
    }
    const double nyq = f.dim() == 1 ? f.grid().nyquist()
                                    : std::min(f.grid2d().x.nyquist(), f.grid2d().y.nyquist());
    if (outer >= nyq) {
        std::ostringstream msg;
        msg << "smooth_lowpass: outer radius " << outer << " is not below the Nyquist frequency " << nyq;
        throw Error(msg.str());
    }
    if (f.dim() == 1)
        return apply_multiplier(f, std::function<double(double)>(
                                       [=](double z) { return lowpass_profile(z, inner, outer); }));
    return apply_multiplier(f, std::function<double(double, double)>([=](double zx, double zy) {
        return lowpass_profile(zx, inner, outer) * lowpass_profile(zy, inner, outer);
    }));
}

} // namespace besov
