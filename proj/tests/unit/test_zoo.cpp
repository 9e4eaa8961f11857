#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "besov/error.hpp"
#include "besov/inequalities.hpp"
#include "besov/zoo.hpp"

using namespace besov;

namespace {

Grid1D grid() { return Grid1D::span(-8.0, 8.0, 0x1.0p-9); }

} // namespace

TEST(Zoo, GaussianFormula) {
    const auto z = make(gaussian_spec(0.0, 1.0), grid());
    for (std::size_t i = 0; i < z.f.size(); i += 97) {
        const double x = grid().point(i);
        EXPECT_NEAR(z.f[i], std::exp(-std::numbers::pi * x * x), 1e-12);
    }
}

TEST(Zoo, BesovRandomSingleScale) {
    const auto z = make(besov_random_spec(0.7, 3.0, 1.0, 3, 3, -4.0, 4.0, 12), grid());
    ASSERT_TRUE(z.coefficients && z.declared && z.declared_norm);
    EXPECT_NEAR(besov_norm_wavelet(*z.coefficients, *z.declared), *z.declared_norm, 1e-12);
    EXPECT_DOUBLE_EQ(*z.declared_norm, 1.0);
}

TEST(Zoo, BesovRandomDeclaredNorm) {
    for (double q : {1.0, 2.0, kInf}) {
        const auto z = make(besov_random_spec(0.6, 2.0, q, 0, 5, -4.0, 4.0, 3), grid());
        EXPECT_NEAR(besov_norm_wavelet(*z.coefficients, *z.declared), *z.declared_norm, 1e-8 * *z.declared_norm);
        // Analysis of the synthesized function recovers it up to quadrature.
        const auto r = besov_norm_of(z.f, *z.declared, WaveletBasis::daubechies(4));
        EXPECT_NEAR(r.norm / *z.declared_norm, 1.0, 2e-2) << q;
    }
}

TEST(Zoo, GapSplineVanishesOnSequence) {
    const auto z = make(gap_spline_spec(0x1.0p-4, -3.0, 3.0, 5), grid());
    ASSERT_TRUE(z.sequence);
    double peak = 0.0;
    for (double v : z.f.values()) peak = std::max(peak, std::abs(v));
    EXPECT_GT(peak, 1e-3);
    for (double a : z.sequence->points()) EXPECT_NEAR(z.f.interpolate(a), 0.0, 1e-12);
    EXPECT_GE(z.sequence->min_gap(), 0x1.0p-5);
}

TEST(Zoo, GapSineVanishesOnSequence) {
    const auto z = make(gap_sine_spec(0x1.0p-4, -2.0, 2.0), grid());
    for (double a : z.sequence->points()) EXPECT_NEAR(z.f.interpolate(a), 0.0, 1e-12);
}

TEST(Zoo, DilateAndTranslateIdentity) {
    const auto base = make(gaussian_spec(0.5, 0.7), grid());
    EXPECT_EQ(make(dilate_spec(gaussian_spec(0.5, 0.7), 0), grid()).f.values()[100], base.f.values()[100]);
    const auto round = make(dilate_spec(dilate_spec(gaussian_spec(0.5, 0.7), 1), -1), grid());
    for (std::size_t i = 0; i < base.f.size(); ++i) ASSERT_NEAR(round.f[i], base.f[i], 1e-12);
    const auto same = translate(base.f, 0.0);
    EXPECT_TRUE(std::equal(same.values().begin(), same.values().end(), base.f.values().begin()));
}

TEST(Zoo, DilationScalesL2) {
    const auto f = make(gaussian_spec(0.0, 1.0), grid()).f;
    const auto g = dilate(f, 1);
    EXPECT_NEAR(lp_norm(g, 2.0) / lp_norm(f, 2.0), std::sqrt(0.5), 1e-10);
    const auto spec_g = make(dilate_spec(gaussian_spec(0.0, 1.0), 1), grid()).f;
    for (std::size_t i = 0; i < g.size(); ++i) ASSERT_NEAR(g[i], spec_g[i], 1e-15);
}

TEST(Zoo, GridTranslation) {
    const auto f = make(bump_spec(0.0, 1.0), grid()).f;
    const auto g = translate(f, 0.25);
    const auto ref = make(bump_spec(0.25, 1.0), grid()).f;
    for (std::size_t i = 0; i < g.size(); ++i) ASSERT_NEAR(g[i], ref[i], 1e-14);
    EXPECT_THROW(translate(f, 0.3 * 0x1.0p-9), Error);
    EXPECT_NO_THROW(translate(f, 0.3 * 0x1.0p-9, true));
    EXPECT_THROW(dilate(f, -1), Error);
    EXPECT_THROW(dilate(f, -4, true), Error);
}

TEST(Zoo, Deterministic) {
    for (const auto& s : {bandlimited_spec(3.0, 9), besov_random_spec(0.5, 2.0, 1.0, 0, 4, -4.0, 4.0, 2),
                          gap_spline_spec(0.125, -2.0, 2.0, 4)}) {
        const auto a = make(s, grid()).f;
        const auto b = make(s, grid()).f;
        EXPECT_TRUE(std::equal(a.values().begin(), a.values().end(), b.values().begin())) << s.kind;
    }
    EXPECT_THROW(make(ZooSpec{"bandlimited-random", "", {}, {}, {}}, grid()), Error);
}

TEST(Zoo, BandlimitedSpectrum) {
    const auto f = make(bandlimited_spec(2.0, 5), grid()).f;
    const auto r = pw_membership(f, 2.0, 1e-20);
    EXPECT_TRUE(r.member) << r.leak_fraction;
}

TEST(Zoo, SupportOverflow) {
    EXPECT_THROW(make(gaussian_spec(7.0, 1.0), grid()), Error);
    EXPECT_THROW(make(bump_spec(0.0, 9.0), grid()), Error);
    EXPECT_THROW(make(besov_random_spec(0.5, 2.0, 1.0, 0, 3, -10.0, 4.0, 1), grid()), Error);
    EXPECT_THROW(make(ZooSpec{"mystery", "", {}, {}, {}}, grid()), Error);
}

TEST(Zoo, JsonRoundTrip) {
    auto s = translate_spec(besov_random_spec(0.9, 2.0, kInf, 0, 4, -4.0, 4.0, 7), 0.5);
    s.label = "x";
    const auto back = ZooSpec::from_json(s.to_json());
    EXPECT_EQ(back.to_json(), s.to_json());
    EXPECT_TRUE(std::isinf(back.children[0].get("q", 0.0)));
    const auto a = make(s, grid()).f, b = make(back, grid()).f;
    EXPECT_TRUE(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
}

TEST(Zoo, Tensor2D) {
    const Grid2D g{Grid1D::span(-4.0, 4.0, 0x1.0p-5), Grid1D::span(-4.0, 4.0, 0x1.0p-5)};
    const auto z = make(tensor_spec(gaussian_spec(0.0, 1.0), bump_spec(0.5, 1.0)), g);
    const auto fx = make(gaussian_spec(0.0, 1.0), g.x).f;
    const auto fy = make(bump_spec(0.5, 1.0), g.y).f;
    EXPECT_DOUBLE_EQ(z.f[g.index(130, 140)], fx[130] * fy[140]);
    EXPECT_NEAR(lp_norm(z.f, 2.0), lp_norm(fx, 2.0) * lp_norm(fy, 2.0), 1e-12);
}

TEST(Zoo, StandardZooSpansThreeDecades) {
    const auto specs = standard_zoo();
    ASSERT_EQ(specs.size(), 20u);
    const auto g = default_grid_1d();
    const auto basis = WaveletBasis::daubechies(4);
    double lo = INFINITY, hi = 0.0;
    for (const auto& s : specs) {
        const auto z = make(s, g);
        const double N = critical_besov_norm(z.f, 1.0, 1, basis) / lp_norm(z.f, 1.0);
        lo = std::min(lo, N);
        hi = std::max(hi, N);
    }
    EXPECT_GE(hi / lo, 1e3);
}
