#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "besov/grid.hpp"

namespace besov {

// Continuous-transform approximation f^(zeta) = int f(x) e^{-2 pi i x zeta} dx
// on the frequency grid zeta_k = k / (count * spacing), stored in FFT order
// (k = 0..count/2-1 followed by the negative frequencies). In 2D the layout
// matches the spatial one (x fastest).
class SpectrumFunction {
public:
    SpectrumFunction(Grid1D spatial, std::vector<std::complex<double>> values);
    SpectrumFunction(Grid2D spatial, std::vector<std::complex<double>> values);

    int dim() const { return is_2d_ ? 2 : 1; }
    const Grid1D& axis(int a) const { return a == 0 ? x_ : y_; }
    const Grid1D& spatial_grid() const { return x_; }
    Grid2D spatial_grid2d() const { return Grid2D{x_, y_}; }

    // Signed frequency of index k along axis a.
    double frequency(std::size_t k, int a = 0) const;
    double frequency_step(int a = 0) const;

    const std::vector<std::complex<double>>& values() const { return values_; }
    std::vector<std::complex<double>>& values() { return values_; }

    // int |F|^2 d zeta by the rectangle rule (equals the spatial h * sum |f|^2).
    double energy() const;
    // Energy carried by frequencies with max(|zeta_x|, |zeta_y|) > band.
    double energy_outside(double band) const;

private:
    bool is_2d_ = false;
    Grid1D x_;
    Grid1D y_;
    std::vector<std::complex<double>> values_;
};

SpectrumFunction fourier(const GridFunction& f);
// Real part of the inverse transform.
GridFunction inverse_fourier(const SpectrumFunction& F);
// Complex inverse, same normalization.
std::vector<std::complex<double>> inverse_fourier_complex(const SpectrumFunction& F);

// C-infinity ramp: 0 for t <= 0, 1 for t >= 1, e^{-1/t} / (e^{-1/t} + e^{-1/(1-t)}) between.
double smooth_ramp(double t);

// 1 for |zeta| <= inner, 0 for |zeta| >= outer, smooth_ramp((outer - |zeta|) / (outer - inner)) between.
double lowpass_profile(double zeta, double inner, double outer);

// Multiply the spectrum by a real multiplier and return the real part of the result.
GridFunction apply_multiplier(const GridFunction& f, const std::function<double(double)>& m);
GridFunction apply_multiplier(const GridFunction& f, const std::function<double(double, double)>& m);

// Spectrum times lowpass_profile (per axis product in 2D). Requires
// 0 < inner < outer < Nyquist.
GridFunction smooth_lowpass(const GridFunction& f, double inner, double outer);

} // namespace besov
