#pragma once

#include <string>
#include <vector>

#include "besov/grid.hpp"

namespace besov {

enum class WaveletFamily { Haar, Daubechies };

// Compactly supported orthonormal wavelet on [0, S], S = filter length - 1.
// phi and psi are tabulated at the dyadic points i / 2^depth.
class WaveletBasis {
public:
    // Daubechies order K in 2..10 (K vanishing moments, filter length 2K).
    // The order is ignored for Haar.
    static WaveletBasis build(WaveletFamily family, int order = 4, int depth = 12);
    static WaveletBasis haar() { return build(WaveletFamily::Haar, 1); }
    static WaveletBasis daubechies(int order, int depth = 12) { return build(WaveletFamily::Daubechies, order, depth); }
    // "haar" or "db<K>".
    static WaveletBasis from_name(const std::string& name, int depth = 12);

    WaveletFamily family() const { return family_; }
    std::string name() const;
    int order() const { return order_; }
    int vanishing_moments() const { return family_ == WaveletFamily::Haar ? 1 : order_; }
    // psi vanishes outside [-R, R]; with support [0, S] we take R = S.
    double support_radius() const { return static_cast<double>(support()); }
    int support() const { return static_cast<int>(h_.size()) - 1; }
    int depth() const { return depth_; }

    const std::vector<double>& scaling_filter() const { return h_; }
    // g_k = (-1)^k h_{S-k}.
    const std::vector<double>& wavelet_filter() const { return g_; }

    // Scaling function (type 0) and mother wavelet (type 1); linear
    // interpolation between table nodes, exact step functions for Haar.
    double phi(double x) const { return eval(0, x); }
    double psi(double x) const { return eval(1, x); }
    double eval(int type, double x) const;
    // 2^{j/2} eval(type, 2^j x - k).
    double eval(int type, int j, long k, double x) const;

    const std::vector<double>& table(int type) const { return type == 0 ? phi_ : psi_; }

private:
    WaveletFamily family_ = WaveletFamily::Haar;
    int order_ = 1;
    int depth_ = 12;
    std::vector<double> h_;
    std::vector<double> g_;
    std::vector<double> phi_;
    std::vector<double> psi_;
};

// Daubechies scaling filter of order K (sum sqrt(2)), minimum-phase ordering
// (largest taps first, so db4 starts 0.2303...).
std::vector<double> daubechies_filter(int order);

// Coefficients of one (scale, type) pair, stored densely over the translate
// box [k0, k0+nk) x [l0, l0+nl) (nl = 1 in 1D). In 1D type 1 is psi and
// type 0 the scaling function; in 2D type = l1 + 2*l2 for psi^{l1}(x) psi^{l2}(y).
struct CoefficientBlock {
    int j = 0;
    int type = 1;
    long k0 = 0;
    long l0 = 0;
    std::size_t nk = 0;
    std::size_t nl = 1;
    std::vector<double> values; // index (l - l0) * nk + (k - k0)

    double at(long k, long l = 0) const;
    bool contains(long k, long l = 0) const {
        return k >= k0 && k < k0 + static_cast<long>(nk) && l >= l0 && l < l0 + static_cast<long>(nl);
    }
};

struct CoefficientEntry {
    int j;
    int type;
    long k;
    long l;
    double value;
};

class WaveletCoefficients {
public:
    WaveletCoefficients(int d, int j_min, int j_max, std::string basis_name);

    int dim() const { return d_; }
    int j_min() const { return j_min_; }
    int j_max() const { return j_max_; }
    const std::string& basis_name() const { return basis_; }

    // Wavelet blocks (type >= 1) ordered by (j, type), then the scaling block
    // at j_min (type 0) if present.
    const std::vector<CoefficientBlock>& blocks() const { return blocks_; }
    const CoefficientBlock* find(int j, int type) const;
    double value(int j, int type, long k, long l = 0) const;

    // Writes one coefficient, growing the block box as needed.
    void set(int j, int type, long k, long l, double v);
    void set(int j, long k, double v) { set(j, 1, k, 0, v); }
    // Adds a fully formed block (replacing any block with the same (j, type)).
    void put(CoefficientBlock block);

    std::vector<CoefficientEntry> entries(bool include_scaling = false) const;
    std::size_t nonzero_count() const;

    // Sum of squares of the wavelet coefficients.
    double wavelet_energy() const;
    // Sum of squares of the scaling coefficients at j_min (the coarse residual).
    double coarse_energy() const;
    // ||f||_2^2 of the analyzed input, or -1 when unknown.
    double input_energy() const { return input_energy_; }
    void set_input_energy(double e) { input_energy_ = e; }
    // |input - wavelet - coarse| / input: energy not captured by [j_min, j_max].
    double truncation_residual() const;

    std::string to_json() const;

private:
    int d_;
    int j_min_;
    int j_max_;
    std::string basis_;
    double input_energy_ = -1.0;
    std::vector<CoefficientBlock> blocks_;
};

// floor(-log2 h) - 2.
int max_analysis_scale(const Grid1D& g);
// Coarsest scale so that 2^{-j_min} >= 4 * domain length, minus `extra`
// further octaves.
int default_min_scale(const Grid1D& g, int extra = 0);

struct AnalyzeOptions {
    // Also compute the scaling coefficients at j_min.
    bool scaling = true;
};

// Quadrature of f against psi_{j,k} for every translate whose support meets
// the significant support of f, j in [j_min, j_max].
WaveletCoefficients analyze(const GridFunction& f, const WaveletBasis& basis, int j_min, int j_max,
                            AnalyzeOptions opt = {});

// Pointwise sum of the tabulated wavelets (and scaling functions, if stored).
GridFunction synthesize(const WaveletCoefficients& c, const WaveletBasis& basis, const Grid1D& grid);
GridFunction synthesize(const WaveletCoefficients& c, const WaveletBasis& basis, const Grid2D& grid);

// Coefficients of f(2^m .): c'_{j,k} = 2^{-md/2} c_{j-m,k}.
WaveletCoefficients dilate_coeffs(const WaveletCoefficients& c, int m);

// One periodized step of the pyramid transform: a_n = sum_k h_k x_{2n+k},
// d_n = sum_k g_k x_{2n+k}, indices mod size. Used as a cross-check.
void pyramid_step(const std::vector<double>& x, const WaveletBasis& basis, std::vector<double>& approx,
                  std::vector<double>& detail);

} // namespace besov
