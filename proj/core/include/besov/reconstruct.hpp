#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "besov/geometry.hpp"
#include "besov/grid.hpp"
#include "besov/inequalities.hpp"
#include "besov/sequence.hpp"

namespace besov {

// Piecewise-linear interpolant through (a_n, t_n), zero outside [a_0, a_N].
GridFunction interp_pl(const TraceValues& t, const SamplingSequence1D& s, const Grid1D& grid);

enum class SplitMode { Spectral, Wavelet };

struct SplitOptions {
    SplitMode mode = SplitMode::Spectral;
    // Spectral mode: g = smooth_lowpass(f, omega 2^j0, 2 omega 2^j0).
    double omega = 0.5;
    // Wavelet mode: g keeps the scales j <= j0 of this basis.
    std::string basis = "db4";
    int extra_coarse = 10;
};

struct BandlimitedSplit {
    GridFunction g;
    GridFunction h;
    int j0 = 0;
    SplitMode mode = SplitMode::Spectral;
};

// 2^j0 <= 1/b < 2^{j0+1}
int split_scale(double b);
BandlimitedSplit bandlimited_split(const GridFunction& f, double b, const SplitOptions& opt = {});

// chi(zeta) = 1 for |zeta| <= a/b, 0 beyond c/b (per axis in 2D).
class LowpassMultiplier {
public:
    LowpassMultiplier(double a, double c, double b);

    double inner() const { return inner_; }
    double outer() const { return outer_; }
    double operator()(double zeta) const;
    GridFunction apply(const GridFunction& f) const;

private:
    double inner_;
    double outer_;
};

// Lattice Lambda_G with nearest-node (Voronoi) cells on the carrier: every
// trace sample is owned by one lattice node.
struct SamplingLattice {
    int dim = 1;
    int m = 1;
    double b = 0.0;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<std::size_t> owner;

    std::size_t size() const { return x.size(); }

    // 1D: the sequence itself.
    static SamplingLattice from(const SamplingSequence1D& s);
    // m = 2: the point set itself. m = 1: nodes every ~b of arc length along
    // each component.
    static SamplingLattice from(const SamplingGeometry2D& g);
};

struct AveragedCoefficients {
    std::vector<double> values;
    // Lattice nodes whose cell holds no sample (value 0).
    std::vector<std::size_t> empty;
    // ||V u||_{l^p} / (b^{(m-d)/p} ||u||_{L^p(G)}), NaN for u = 0.
    double bound_ratio = 0.0;
};

AveragedCoefficients averaging_V(const TraceValues& t, const SamplingLattice& lattice, double p = 2.0);

// Shepard-normalized C-infinity bumps on B(x_j, 2b).
class PartitionOfUnity {
public:
    PartitionOfUnity(const SamplingLattice& lattice, const Grid1D& grid);
    PartitionOfUnity(const SamplingLattice& lattice, const Grid2D& grid);

    std::size_t size() const { return xs_.size(); }
    double radius() const { return radius_; }
    // sum_j c_j beta_j on the grid.
    GridFunction apply(const std::vector<double>& c) const;
    GridFunction beta(std::size_t j) const;
    // sum_j beta_j: 1 wherever some ball reaches, 0 elsewhere.
    GridFunction sum() const;

private:
    template <class Fn>
    void for_each_point(std::size_t j, Fn&& fn) const;

    int dim_;
    Grid1D gx_;
    Grid1D gy_;
    std::vector<double> xs_;
    std::vector<double> ys_;
    double radius_;
    std::vector<double> total_;
};

GridFunction quasi_interp_A(const std::vector<double>& c, const PartitionOfUnity& pou);

struct ReconstructionConfig {
    // Passband a/b, stopband c/b; a defaults to c/2.
    double c = 0.5;
    std::optional<double> a;
    int iterations = 8;
    double p = 2.0;
    // Run even when the cached contraction estimate is >= 1.
    bool override_contraction = false;
    std::optional<double> contraction;
    // Test hook: A_1 = identity.
    bool identity_A1 = false;

    double inner() const { return a ? *a : 0.5 * c; }
    void validate() const;
};

struct ReconstructionReport {
    double b = 0.0;
    double p = 2.0;
    double a = 0.0;
    double c = 0.0;
    int iterations = 0;
    // ||f_{k+1} - f_k||_p per iteration.
    std::vector<double> residuals;
    bool diverged = false;
    std::optional<double> contraction;
    std::optional<double> relative_error;
    std::optional<double> s;
    // Pipeline breakdown (absolute L^p norms).
    std::optional<double> lp_norm;
    std::optional<double> total_error;
    std::optional<double> h_norm;
    std::optional<double> g_error;
    std::optional<double> h_reconstruction;
    std::string split_mode;

    std::string to_json() const;
};

// Operators T_G, V, A, P_chi on one sampling set and one grid.
class Reconstructor {
public:
    Reconstructor(const SamplingSequence1D& s, const Grid1D& grid, ReconstructionConfig cfg);
    Reconstructor(const SamplingGeometry2D& g, const Grid2D& grid, ReconstructionConfig cfg);

    const ReconstructionConfig& config() const { return cfg_; }
    const SamplingLattice& lattice() const { return lattice_; }
    const PartitionOfUnity& partition() const { return pou_; }
    const LowpassMultiplier& multiplier() const { return chi_; }
    double b() const { return lattice_.b; }
    int dim() const { return lattice_.dim; }

    TraceValues T(const GridFunction& f) const;
    std::vector<double> V(const TraceValues& t) const;
    GridFunction A(const std::vector<double>& c) const { return pou_.apply(c); }
    GridFunction P(const GridFunction& f) const { return chi_.apply(f); }
    // A V T_G (identity with the test hook).
    GridFunction A1(const GridFunction& f) const;
    // (I - P A_1) f
    GridFunction contract(const GridFunction& f) const;

    // f_0 = P A V t, f_{k+1} = f_k + P(A V t - A_1 f_k). Stops early when the
    // residual grows three times in a row.
    std::pair<GridFunction, ReconstructionReport> reconstruct(const TraceValues& t,
                                                              const GridFunction* reference = nullptr) const;

    // max over the family of ||(I - P A_1) g||_p / ||g||_p.
    double contraction_estimate(const std::vector<GridFunction>& family) const;
    // `count` bandlimited functions with spectrum in [-band, band] (default
    // a/b, where chi = 1), kept inside the sampled window.
    std::vector<GridFunction> calibration_family(int count = 20, std::uint64_t seed = 1,
                                                 std::optional<double> band = std::nullopt) const;

private:
    std::optional<SamplingSequence1D> seq_;
    std::optional<SamplingGeometry2D> geo_;
    std::variant<Grid1D, Grid2D> grid_;
    ReconstructionConfig cfg_;
    SamplingLattice lattice_;
    PartitionOfUnity pou_;
    LowpassMultiplier chi_;
};

// Throws when the cached contraction estimate is >= 1 and no override is set.
std::pair<GridFunction, ReconstructionReport> neumann_reconstruct(const TraceValues& t, const Reconstructor& r,
                                                                  const GridFunction* reference = nullptr);

struct CalibrationResult {
    double c = 0.0;
    double estimate = 0.0;
    std::vector<std::pair<double, double>> tried; // (c, estimate)
};

// c = k/16, k = 1..8. Beyond c = 1/2 the stopband passes the Nyquist rate of
// gaps of size b and the iteration stalls on aliased components.
std::vector<double> default_c_candidates();

// Ascending scan of c (a = c/2) on the calibration family; returns the last
// candidate before the estimate first reaches `threshold`.
CalibrationResult calibrate_c(const SamplingSequence1D& s, const Grid1D& grid,
                              const std::vector<double>& candidates = default_c_candidates(), double threshold = 0.9,
                              int family = 20, std::uint64_t seed = 1);
CalibrationResult calibrate_c(const SamplingGeometry2D& g, const Grid2D& grid,
                              const std::vector<double>& candidates = default_c_candidates(), double threshold = 0.9,
                              int family = 20, std::uint64_t seed = 1);

// Reconstruct f from its trace and report ||f - S T f|| with the breakdown
// ||h||, ||g - S T g||, ||S T h||.
ReconstructionReport full_pipeline(const GridFunction& f, const Reconstructor& r, const SplitOptions& split = {},
                                   std::optional<double> s = std::nullopt);

} // namespace besov
