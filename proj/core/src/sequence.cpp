#include "besov/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "besov/error.hpp"
#include "besov/random.hpp"

namespace besov {

namespace {

constexpr double kSlack = 1e-12;

} // namespace

SamplingSequence1D::SamplingSequence1D(std::vector<double> points, double b, bool strict)
    : points_(std::move(points)), b_(b), strict_(strict) {
    if (!(b > 0.0)) throw Error("sampling sequence: gap bound b must be positive");
    if (points_.size() < 2) throw Error("sampling sequence: need at least two points");
    for (std::size_t n = 0; n + 1 < points_.size(); ++n) {
        const double gap = points_[n + 1] - points_[n];
        const double tol = kSlack * std::max(1.0, std::abs(points_[n]));
        if (!(gap > 0.0) || gap > b * (1.0 + kSlack) + tol || (strict && gap < 0.5 * b * (1.0 - kSlack) - tol)) {
            std::ostringstream msg;
            msg << "sampling sequence: gap " << gap << " between points " << n << " and " << n + 1
                << " violates " << (strict ? "b/2 <= gap <= b" : "0 < gap <= b") << " for b = " << b;
            throw Error(msg.str());
        }
    }
}

SamplingSequence1D SamplingSequence1D::random(double b, double lo, double hi, std::uint64_t seed, SequenceOptions opt) {
    if (!(b > 0.0)) throw Error("random_sequence: b must be positive");
    if (!(hi - lo >= 4.0 * b)) throw Error("random_sequence: interval length must be at least 4b");
    const double q = opt.quantum;
    // Work in integer units when points are quantized.
    double unit = 1.0;
    if (q > 0.0) {
        const double r = b / q;
        if (std::abs(r - std::round(r)) > 1e-9 || std::round(r) < 2.0)
            throw Error("random_sequence: b must be a multiple (>= 2) of the quantum");
        const double span = (hi - lo) / q;
        if (std::abs(span - std::round(span)) > 1e-6) throw Error("random_sequence: interval is not a multiple of the quantum");
        unit = q;
    }
    std::vector<double> pts;
    if (opt.regular) {
        const double k = (hi - lo) / b;
        const auto K = static_cast<long>(std::llround(k));
        if (std::abs(k - static_cast<double>(K)) > 1e-9) throw Error("random_sequence: regular mode needs (hi - lo) / b integral");
        for (long n = 0; n <= K; ++n) pts.push_back(n == K ? hi : lo + b * static_cast<double>(n));
        return SamplingSequence1D(std::move(pts), b, opt.strict);
    }

    Rng rng(seed);
    const double B = b / unit;
    const double total = (hi - lo) / unit;
    auto draw = [&]() -> double {
        if (q > 0.0) {
            const long lo_units = opt.strict ? static_cast<long>(std::ceil(0.5 * B - 1e-9)) : 1L;
            return static_cast<double>(rng.integer(lo_units, static_cast<long>(std::llround(B))));
        }
        return opt.strict ? rng.uniform(0.5 * B, B) : B * rng.uniform_open_low();
    };
    std::vector<double> u{0.0};
    while (true) {
        const double g = draw();
        if (u.back() + g >= total) break;
        u.push_back(u.back() + g);
    }
    const double rest = total - u.back();
    const double min_gap = opt.strict ? 0.5 * B : 0.0;
    if (rest >= min_gap && rest > 0.0) {
        u.push_back(total);
    } else {
        // Merge the short remainder into the previous gap, splitting if that would exceed b.
        const double prev = u.back() - u[u.size() - 2];
        const double merged = prev + rest;
        u.pop_back();
        if (merged > B) {
            double half = 0.5 * merged;
            if (q > 0.0) half = std::floor(half);
            u.push_back(u.back() + half);
        }
        u.push_back(total);
    }
    pts.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) pts.push_back(i + 1 == u.size() ? hi : lo + unit * u[i]);
    return SamplingSequence1D(std::move(pts), b, opt.strict);
}

std::pair<double, double> SamplingSequence1D::cell(std::size_t n) const {
    const double left = n == 0 ? points_[0] : 0.5 * (points_[n - 1] + points_[n]);
    const double right = n + 1 == points_.size() ? points_[n] : 0.5 * (points_[n] + points_[n + 1]);
    return {left, right};
}

std::vector<double> SamplingSequence1D::cell_lengths() const {
    std::vector<double> out(points_.size());
    for (std::size_t n = 0; n < points_.size(); ++n) {
        const auto [l, r] = cell(n);
        out[n] = r - l;
    }
    return out;
}

double SamplingSequence1D::max_gap() const {
    double m = 0.0;
    for (std::size_t n = 0; n + 1 < points_.size(); ++n) m = std::max(m, points_[n + 1] - points_[n]);
    return m;
}

double SamplingSequence1D::min_gap() const {
    double m = points_.back() - points_.front();
    for (std::size_t n = 0; n + 1 < points_.size(); ++n) m = std::min(m, points_[n + 1] - points_[n]);
    return m;
}

SamplingSequence1D SamplingSequence1D::dilate(int m) const {
    std::vector<double> p(points_);
    for (auto& x : p) x = std::ldexp(x, -m);
    return SamplingSequence1D(std::move(p), std::ldexp(b_, -m), strict_);
}

} // namespace besov
