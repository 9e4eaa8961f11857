#pragma once

#include <limits>
#include <string>
#include <vector>

#include "besov/grid.hpp"
#include "besov/wavelets.hpp"

namespace besov {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Homogeneous Besov index triple plus dimension; q may be kInf.
struct BesovParams {
    double s = 0.5;
    double p = 2.0;
    double q = 1.0;
    int d = 1;

    void validate() const;
    // 2^{(s - d/p + d/2) j} per-scale weight exponent.
    double wavelet_exponent() const { return s - d / p + d / 2.0; }
};

struct WaveletNorm {
    double norm = 0.0;
    // Set when there was nothing to sum; norm is then 0.
    bool empty = false;
    int j_min = 0;
    int j_max = 0;
    // 2^{(s-d/p+d/2)j} (sum_lambda |c_{j,lambda}|^p)^{1/p} for j = j_min..j_max.
    std::vector<double> per_scale;
    // From the coefficients, or -1 when the analyzed energy is unknown.
    double truncation_residual = -1.0;
};

WaveletNorm besov_norm_wavelet_detail(const WaveletCoefficients& c, const BesovParams& params);
double besov_norm_wavelet(const WaveletCoefficients& c, const BesovParams& params);

// Analyze on the default scale range of the grid and take the wavelet norm.
// `extra_coarse` octaves are added below the 4x-domain cutoff.
WaveletNorm besov_norm_of(const GridFunction& f, const BesovParams& params, const WaveletBasis& basis,
                          int extra_coarse = 10);

// rho(y) = Phi(y) - Phi(2y), Phi(y) = smooth_ramp(1 - log2|y|): supported in
// 1/2 < |y| < 2, and sum_j rho(2^-j y) telescopes to 1. The ramp is tabulated
// on a log2-frequency grid of step 1/4096.
class LittlewoodPaleyWindow {
public:
    LittlewoodPaleyWindow();
    // Restrict the scale range; by default it is chosen from the spectrum.
    LittlewoodPaleyWindow(int j_lo, int j_hi);

    double rho(double y) const;
    double Phi(double y) const;
    // sum_{j=lo}^{hi} rho(2^{-j} y)
    double partition_sum(double y, int lo, int hi) const;

    bool has_range() const { return has_range_; }
    int j_lo() const { return j_lo_; }
    int j_hi() const { return j_hi_; }

private:
    double ramp(double t) const;

    std::vector<double> table_;
    bool has_range_ = false;
    int j_lo_ = 0;
    int j_hi_ = 0;
};

struct LpNorm {
    double norm = 0.0;
    int j_lo = 0;
    int j_hi = 0;
    // 2^{js} ||Delta_j f||_p per scale.
    std::vector<double> per_scale;
    // Spectral energy below 2^{j_lo} and above 2^{j_hi}, relative to the total.
    double low_leak = 0.0;
    double high_leak = 0.0;
};

// Littlewood-Paley form. Coarse blocks whose kernel does not fit the domain
// are evaluated on their own coarse grids from direct spectral sums (1D).
// Throws when more than 1e-6 of the spectral energy lies outside the covered
// band; the message carries the band report.
LpNorm besov_norm_lp_detail(const GridFunction& f, const BesovParams& params, const LittlewoodPaleyWindow& w);
double besov_norm_lp(const GridFunction& f, const BesovParams& params, const LittlewoodPaleyWindow& w = {});

struct PwReport {
    bool member = false;
    double leak_fraction = 0.0;
    double outside_energy = 0.0;
    double total_energy = 0.0;
};

// Energy outside [-b, b] (per axis in 2D) at most tol times the total.
PwReport pw_membership(const GridFunction& f, double b, double tol);

} // namespace besov
