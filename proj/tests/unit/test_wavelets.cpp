#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

#include "besov/error.hpp"
#include "besov/random.hpp"
#include "besov/wavelets.hpp"
#include "oracles/oracles.hpp"

using namespace besov;

namespace {

double gaussian(double x) { return std::exp(-std::numbers::pi * x * x); }

template <std::size_t N>
std::vector<double> vec(const double (&a)[N]) {
    return {a, a + N};
}

std::vector<double> oracle_filter(int k) {
    switch (k) {
    case 2: return vec(oracle::kDb2Filter);
    case 3: return vec(oracle::kDb3Filter);
    case 4: return vec(oracle::kDb4Filter);
    case 5: return vec(oracle::kDb5Filter);
    case 6: return vec(oracle::kDb6Filter);
    case 7: return vec(oracle::kDb7Filter);
    case 8: return vec(oracle::kDb8Filter);
    case 9: return vec(oracle::kDb9Filter);
    default: return vec(oracle::kDb10Filter);
    }
}

// int x^m psi(x) dx by the trapezoid rule on the tabulation nodes.
double moment(const WaveletBasis& b, int m) {
    const auto& t = b.table(1);
    const double h = std::ldexp(1.0, -b.depth());
    double s = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double x = h * static_cast<double>(i);
        const double w = (i == 0 || i + 1 == t.size()) ? 0.5 * h : h;
        s += w * std::pow(x, m) * t[i];
    }
    return s;
}

} // namespace

TEST(Basis, Haar) {
    const auto b = WaveletBasis::haar();
    ASSERT_EQ(b.scaling_filter().size(), 2u);
    EXPECT_DOUBLE_EQ(b.scaling_filter()[0], 1.0 / std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(b.scaling_filter()[1], 1.0 / std::sqrt(2.0));
    EXPECT_EQ(b.support_radius(), 1.0);
    EXPECT_EQ(b.psi(0.25), 1.0);
    EXPECT_EQ(b.psi(0.75), -1.0);
    EXPECT_EQ(b.psi(1.0), 0.0);
    EXPECT_EQ(b.psi(-0.1), 0.0);
    double integral = 0.0;
    for (int i = 0; i < 1024; ++i) integral += b.psi((i + 0.5) / 1024.0) / 1024.0;
    EXPECT_NEAR(integral, 0.0, 1e-12);
}

TEST(Basis, DaubechiesFiltersMatchOracle) {
    for (int k = 2; k <= 10; ++k) {
        const auto h = daubechies_filter(k);
        const auto ref = oracle_filter(k);
        ASSERT_EQ(h.size(), ref.size()) << "order " << k;
        for (std::size_t i = 0; i < h.size(); ++i) EXPECT_NEAR(h[i], ref[i], 1e-10) << "order " << k << " tap " << i;
    }
}

TEST(Basis, FilterIdentities) {
    for (int k = 2; k <= 10; ++k) {
        const auto b = WaveletBasis::daubechies(k, 8);
        const auto& h = b.scaling_filter();
        double sum = 0.0;
        for (double v : h) sum += v;
        EXPECT_NEAR(sum, std::sqrt(2.0), 1e-12);
        const int L = static_cast<int>(h.size());
        for (int m = 0; 2 * m < L; ++m) {
            double s = 0.0;
            for (int i = 0; i + 2 * m < L; ++i) s += h[i] * h[i + 2 * m];
            EXPECT_NEAR(s, m == 0 ? 1.0 : 0.0, 1e-12) << "order " << k << " shift " << m;
        }
        EXPECT_EQ(b.vanishing_moments(), k);
        EXPECT_EQ(b.support_radius(), 2.0 * k - 1.0);
    }
    EXPECT_THROW(WaveletBasis::daubechies(11), Error);
    EXPECT_THROW(WaveletBasis::daubechies(1), Error);
}

TEST(Basis, CascadeMatchesOracleSamples) {
    const auto b = WaveletBasis::daubechies(4, 12);
    const auto n = std::size(oracle::kDb4SamplePoints);
    for (std::size_t i = 0; i < n; ++i) {
        EXPECT_NEAR(b.phi(oracle::kDb4SamplePoints[i]), oracle::kDb4Phi[i], 1e-9);
        EXPECT_NEAR(b.psi(oracle::kDb4SamplePoints[i]), oracle::kDb4Psi[i], 1e-9);
    }
}

TEST(Basis, VanishingMomentsAndSupport) {
    for (int k : {2, 4, 6}) {
        const auto b = WaveletBasis::daubechies(k, 12);
        for (int m = 0; m < b.vanishing_moments(); ++m) EXPECT_NEAR(moment(b, m), 0.0, 1e-6) << "db" << k << " moment " << m;
        EXPECT_EQ(b.psi(-0.5), 0.0);
        EXPECT_EQ(b.psi(b.support_radius() + 0.5), 0.0);
    }
}

TEST(Basis, FromName) {
    EXPECT_EQ(WaveletBasis::from_name("db6", 6).name(), "db6");
    EXPECT_EQ(WaveletBasis::from_name("haar").name(), "haar");
    EXPECT_THROW(WaveletBasis::from_name("sym4"), Error);
}

TEST(Analyze, SinglePsiIsUnitCoefficient) {
    const auto b = WaveletBasis::daubechies(4);
    const auto g = Grid1D::span(-16.0, 16.0, 0x1.0p-9);
    WaveletCoefficients c(1, 0, 0, b.name());
    c.set(0, 0, 1.0);
    const auto f = synthesize(c, b, g);
    for (std::size_t i = 0; i < g.count; ++i) EXPECT_EQ(f[i], b.psi(g.point(i)));
    const auto a = analyze(f, b, -3, 4);
    EXPECT_NEAR(a.value(0, 1, 0), 1.0, 1e-6);
    for (const auto& e : a.entries())
        if (!(e.j == 0 && e.k == 0)) EXPECT_LE(std::abs(e.value), 1e-6) << e.j << "," << e.k;
}

TEST(Analyze, HaarIndicator) {
    const auto b = WaveletBasis::haar();
    const auto g = Grid1D::span(-4.0, 4.0, 0x1.0p-8);
    const auto f = GridFunction::sample(g, [](double x) { return (x >= 0.0 && x < 1.0) ? 1.0 : 0.0; });
    const auto a = analyze(f, b, -2, 4);
    EXPECT_NEAR(a.value(0, 1, 0), 0.0, 1e-12);
}

TEST(Analyze, ParsevalWithCoarseResidual) {
    Rng rng(5);
    const auto b = WaveletBasis::daubechies(4);
    const auto g = Grid1D::span(-16.0, 16.0, 0x1.0p-10);
    std::vector<double> centers, widths, amps;
    for (int i = 0; i < 6; ++i) {
        centers.push_back(rng.uniform(-2.0, 2.0));
        widths.push_back(rng.uniform(0.1, 1.0));
        amps.push_back(rng.normal());
    }
    const auto f = GridFunction::sample(g, [&](double x) {
        double s = 0.0;
        for (int i = 0; i < 6; ++i) s += amps[i] * gaussian((x - centers[i]) / widths[i]);
        return s;
    });
    const auto a = analyze(f, b, default_min_scale(g), max_analysis_scale(g));
    EXPECT_LT(a.truncation_residual(), 1e-5);
    EXPECT_GT(a.coarse_energy(), 0.0);
    EXPECT_THROW(analyze(f, b, 0, max_analysis_scale(g) + 1), Error);
}

TEST(Synthesize, ZeroAndRoundTrip) {
    const auto b = WaveletBasis::daubechies(4);
    const auto g = default_grid_1d();
    WaveletCoefficients zero(1, -2, 2, b.name());
    EXPECT_EQ(lp_norm(synthesize(zero, b, g), 2.0), 0.0);

    const auto f = GridFunction::sample(g, gaussian);
    const auto c = analyze(f, b, -6, 6);
    const auto r = synthesize(c, b, g);
    EXPECT_LT(lp_norm(r - f, 2.0) / lp_norm(f, 2.0), 1e-3);
}

TEST(Dilate, IndexShift) {
    WaveletCoefficients c(1, -2, 2, "db4");
    c.set(0, 0, 1.0);
    const auto d0 = dilate_coeffs(c, 0);
    EXPECT_EQ(d0.value(0, 1, 0), 1.0);
    const auto d1 = dilate_coeffs(c, 1);
    EXPECT_EQ(d1.j_min(), -1);
    EXPECT_DOUBLE_EQ(d1.value(1, 1, 0), 1.0 / std::sqrt(2.0));
    EXPECT_EQ(d1.nonzero_count(), 1u);
    const auto back = dilate_coeffs(dilate_coeffs(c, 3), -3);
    EXPECT_DOUBLE_EQ(back.value(0, 1, 0), 1.0);
    EXPECT_THROW(dilate_coeffs(c, 59), Error);
}

TEST(Coefficients, SetGrowsBlocksAndJson) {
    WaveletCoefficients c(2, 0, 1, "haar");
    c.set(1, 3, 2, -1, 0.5);
    c.set(1, 3, -2, 4, -0.25);
    EXPECT_EQ(c.value(1, 3, 2, -1), 0.5);
    EXPECT_EQ(c.value(1, 3, -2, 4), -0.25);
    EXPECT_EQ(c.value(1, 3, 0, 0), 0.0);
    const auto j = nlohmann::json::parse(c.to_json());
    EXPECT_EQ(j["d"], 2);
    EXPECT_EQ(j["entries"].size(), 2u);
    EXPECT_EQ(j["entries"][0]["l"][0], 1);
    EXPECT_THROW(WaveletCoefficients(1, 2, 1, "haar"), Error);
}

TEST(Properties, VanishingMomentsOnPolynomialWindow) {
    const auto b = WaveletBasis::daubechies(4);
    const auto g = Grid1D::span(-8.0, 8.0, 0x1.0p-9);
    // Cubic on [-4, 4], zero outside; coefficients whose support sits inside the window vanish.
    const auto f = GridFunction::sample(g, [](double x) {
        return std::abs(x) <= 4.0 ? 0.3 - x + 0.2 * x * x - 0.05 * x * x * x : 0.0;
    });
    const auto a = analyze(f, b, 0, 5);
    std::size_t checked = 0;
    for (const auto& e : a.entries()) {
        const double lo = std::ldexp(static_cast<double>(e.k), -e.j);
        const double hi = std::ldexp(static_cast<double>(e.k + b.support()), -e.j);
        if (lo > -3.9 && hi < 3.9) {
            EXPECT_LT(std::abs(e.value), 1e-6) << e.j << "," << e.k;
            ++checked;
        }
    }
    EXPECT_GT(checked, 100u);
}

TEST(Properties, TensorConsistency2D) {
    const auto b = WaveletBasis::daubechies(3);
    const auto ax = Grid1D::span(-4.0, 4.0, 0x1.0p-6);
    auto u = [](double x) { return gaussian(x) * (1.0 + 0.5 * x); };
    auto v = [](double y) { return gaussian(1.5 * y - 0.3); };
    const auto f2 = GridFunction::sample(Grid2D{ax, ax}, [&](double x, double y) { return u(x) * v(y); });
    const auto fu = GridFunction::sample(ax, u);
    const auto fv = GridFunction::sample(ax, v);
    const auto c2 = analyze(f2, b, -2, 3);
    // 1D coefficients of both types at scale j (the scaling ones come from a one-scale analysis).
    auto coef1d = [&](const GridFunction& f, int j, int type, long k) { return analyze(f, b, j, j).value(j, type, k); };
    for (const auto& e : c2.entries(true)) {
        const int l1 = e.type & 1, l2 = e.type >> 1;
        const double expect = coef1d(fu, e.j, l1, e.k) * coef1d(fv, e.j, l2, e.l);
        EXPECT_NEAR(e.value, expect, 1e-8);
    }
    // Round trip in 2D.
    const auto r = synthesize(c2, b, Grid2D{ax, ax});
    EXPECT_LT(lp_norm(r - f2, 2.0) / lp_norm(f2, 2.0), 1e-2);
}

TEST(Pyramid, MatchesReferenceTransform) {
    const auto b = WaveletBasis::daubechies(2);
    const auto n = std::size(oracle::kPyramidSignal);
    // The reference uses a_n = sum_k h_k x_{2n+k-1}; shift by one sample.
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = oracle::kPyramidSignal[(i + n - 1) % n];
    std::vector<double> a, d;
    pyramid_step(x, b, a, d);
    for (std::size_t i = 0; i < n / 2; ++i) {
        EXPECT_NEAR(a[i], oracle::kPyramidApproxDb2[i], 1e-12);
        EXPECT_NEAR(d[i], oracle::kPyramidDetailDb2[i], 1e-12);
    }
}

TEST(Pyramid, CrossChecksQuadratureOnDyadicInput) {
    // f = sum_n a_n phi_{J,n}; one pyramid step gives the exact c_{J-1,n}.
    const auto b = WaveletBasis::daubechies(4);
    const int J = 3;
    Rng rng(9);
    std::vector<double> a(64, 0.0);
    for (std::size_t i = 16; i < 48; ++i) a[i] = rng.normal();
    WaveletCoefficients s(1, J, J, b.name());
    for (std::size_t i = 0; i < a.size(); ++i) s.set(J, 0, static_cast<long>(i), 0, a[i]);
    const auto g = Grid1D::span(-4.0, 12.0, 0x1.0p-11);
    const auto f = synthesize(s, b, g);
    std::vector<double> approx, detail;
    pyramid_step(a, b, approx, detail);
    const auto c = analyze(f, b, J - 1, J - 1);
    for (long n = 10; n < 22; ++n) EXPECT_NEAR(c.value(J - 1, 1, n), detail[n], 1e-6) << n;
}
