#pragma once

#include <optional>
#include <string>
#include <vector>

#include "besov/geometry.hpp"
#include "besov/grid.hpp"
#include "besov/sequence.hpp"
#include "besov/wavelets.hpp"

namespace besov {

// Samples of f on a 1D sequence or along 2D carrier nodes.
struct TraceValues {
    int dim = 1;
    // Codimension parameter of the carrier (1 for sequences on the line).
    int m = 1;
    double b = 0.0;
    std::vector<double> values;
    // Measure of the carrier per sample: 1 for sequences (counting measure),
    // arc-length weights on curves, 1 on point sets.
    std::vector<double> weights;
    // nu_a(H_a) per sample (b_n for sequences).
    std::vector<double> cells;
    // h^2/8 max|f''|: bound on the linear interpolation error.
    double interpolation_error = 0.0;

    // (sum weights |v|^p)^(1/p)
    double carrier_norm(double p) const;
    // (sum weights cells |v|^p)^(1/p)
    double cell_norm(double p) const;
};

TraceValues trace(const GridFunction& f, const SamplingSequence1D& s);
TraceValues trace(const GridFunction& f, const SamplingGeometry2D& g);

// Default smallness threshold for b^{m/p} ||f||_B / ||f||_p. The smallest gate
// seen outside [1/2, 5/2] over bands 1..64, p in {1, 2, 4} was 1.32.
inline constexpr double kDefaultDelta = 1.0;

struct SamplingOptions {
    double p = 2.0;
    double delta = kDefaultDelta;
    std::string basis = "db4";
    int extra_coarse = 10;
    // Skips the Besov evaluation when given.
    std::optional<double> besov_norm;
};

struct SamplingReport {
    double p = 2.0;
    int m = 1;
    double b = 0.0;
    double lp_norm = 0.0;
    double besov_norm = 0.0;
    double N = 0.0;
    double gate = 0.0; // b^{m/p} N
    double delta = 0.0;
    bool hypothesis_ok = false;
    // delta/2 <= gate < delta
    bool gate_marginal = false;
    // b^{m/p} ||f|_G||_{L^p(G)} / ||f||_p
    double trace_ratio = 0.0;
    // (sum cells |f(a)|^p)^{1/p} / ||f||_p
    double cell_ratio = 0.0;
    // Raw band membership; the band is asserted only when hypothesis_ok.
    bool trace_in_band = false;
    bool cell_in_band = false;
    double interpolation_error = 0.0;

    std::string to_json() const;
};

inline constexpr double kBandLow = 0.5;
inline constexpr double kBandHigh = 2.5;

SamplingReport sampling_ratio(const GridFunction& f, const SamplingSequence1D& s, const SamplingOptions& opt = {});
SamplingReport sampling_ratio(const GridFunction& f, const SamplingGeometry2D& g, const SamplingOptions& opt = {});

// ||f||_{B^{m/p}_{p,1}} by wavelets on the default scale range.
double critical_besov_norm(const GridFunction& f, double p, int m, const WaveletBasis& basis, int extra_coarse = 10);

// Largest delta such that every report with gate < delta has its cell ratio
// in [1/2, 5/2]. Returns the smallest failing gate (or +inf when nothing fails).
double calibrate_delta(const std::vector<SamplingReport>& reports);

// 1 - (b sum |f(a_n)|^p / ||f||_p^p)^{1/p}
double uncertainty_deficiency(const GridFunction& f, const SamplingSequence1D& s, double p);

struct UncertaintyReport {
    double p = 2.0;
    double b = 0.0;
    double epsilon = 0.0;
    double lp_norm = 0.0;
    double besov_norm = 0.0;
    bool hypothesis_met = false;
    // ||f||_B b^{1/p} / (eps ||f||_p); NaN when the hypothesis is not met.
    double c_emp = 0.0;

    std::string to_json() const;
};

UncertaintyReport uncertainty_check(const GridFunction& f, const SamplingSequence1D& s, double p,
                                    const WaveletBasis& basis, int extra_coarse = 10);

struct IntBDiagnostic {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

// |‖f‖_p - (sum b_n |f(a_n)|^p)^{1/p}| against b^{1/p} ‖f‖_{B^{1/p}_{p,1}}.
IntBDiagnostic intB_diagnostic(const GridFunction& f, const SamplingSequence1D& s, double p, const WaveletBasis& basis,
                               int extra_coarse = 10);

// ‖|x|^{alpha/p} f‖_p ‖f‖_B^alpha / ‖f‖_p^{1+alpha}, 1D.
double heisenberg_product(const GridFunction& f, double alpha, double p, const WaveletBasis& basis,
                          int extra_coarse = 10);

} // namespace besov
