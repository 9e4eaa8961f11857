#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "besov/grid.hpp"
#include "besov/norms.hpp"
#include "besov/sequence.hpp"
#include "besov/wavelets.hpp"

namespace besov {

// kinds: gaussian, compact-bump, bandlimited-random, gap-spline, gap-sine,
// besov-random, dilate, translate, tensor2d.
struct ZooSpec {
    std::string kind;
    std::string label;
    std::map<std::string, double> params;
    std::optional<std::uint64_t> seed;
    std::vector<ZooSpec> children;

    double get(const std::string& key, double fallback) const;
    ZooSpec& set(const std::string& key, double value);

    static ZooSpec from_json(const std::string& text);
    std::string to_json() const;
};

struct ZooFunction {
    GridFunction f;
    std::string label;
    // Designed regularity: besov-random members carry (s, p, q) and the exact
    // wavelet norm of their coefficients.
    std::optional<BesovParams> declared;
    std::optional<double> declared_norm;
    std::optional<WaveletCoefficients> coefficients;
    // The sequence a gap function vanishes on.
    std::optional<SamplingSequence1D> sequence;
};

ZooFunction make(const ZooSpec& spec, const Grid1D& grid);
ZooFunction make(const ZooSpec& spec, const Grid2D& grid);

// Spec builders.
ZooSpec gaussian_spec(double center, double width, double amplitude = 1.0);
ZooSpec bump_spec(double center, double radius, double amplitude = 1.0);
ZooSpec bandlimited_spec(double band, std::uint64_t seed, int count = 8, double spread = 4.0);
ZooSpec gap_spline_spec(double b, double lo, double hi, std::uint64_t seed, double slope = 1.0);
ZooSpec gap_sine_spec(double b, double lo, double hi);
// q = kInf gives constant per-scale weights, otherwise w_j = (1 + j - j_lo)^-2.
ZooSpec besov_random_spec(double s, double p, double q, int j_lo, int j_hi, double lo, double hi, std::uint64_t seed,
                          double density = 1.0);
ZooSpec dilate_spec(ZooSpec inner, int m);
ZooSpec translate_spec(ZooSpec inner, double tau);
ZooSpec tensor_spec(ZooSpec x, ZooSpec y);

// Cubic Hermite spline vanishing at every a_n with seeded slopes of size in
// [slope/2, slope], zero outside [a_0, a_N].
GridFunction gap_spline(const SamplingSequence1D& s, std::uint64_t seed, double slope, const Grid1D& grid);

// g(x) = f(2^m x). Exact for m >= 0 (subsampling); m < 0 needs resample = true
// (linear interpolation). Throws when the dilated support leaves the grid.
GridFunction dilate(const GridFunction& f, int m, bool resample = false);
// g(x) = f(x - tau). Exact for grid multiples; otherwise needs resample = true.
GridFunction translate(const GridFunction& f, double tau, bool resample = false);

// The calibration zoo: 20 one-dimensional functions.
std::vector<ZooSpec> standard_zoo();

} // namespace besov
