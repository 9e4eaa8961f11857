#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace besov {

struct SequenceOptions {
    // Gaps in [b/2, b] instead of (0, b].
    bool strict = true;
    // Arithmetic sequence with gap exactly b (the interval must be a multiple of b).
    bool regular = false;
    // When > 0, every point lies on lo + quantum * Z (b must then be a multiple of quantum).
    double quantum = 0.0;
};

// Increasing points a_0 < ... < a_N with a_0 = lo and a_N = hi. Cells are
// I_n = [(a_{n-1}+a_n)/2, (a_n+a_{n+1})/2], truncated to [lo, hi] at the ends,
// so they tile the covered interval.
class SamplingSequence1D {
public:
    SamplingSequence1D(std::vector<double> points, double b, bool strict);

    static SamplingSequence1D random(double b, double lo, double hi, std::uint64_t seed, SequenceOptions opt = {});

    const std::vector<double>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double operator[](std::size_t n) const { return points_[n]; }
    double b() const { return b_; }
    bool strict() const { return strict_; }
    double lo() const { return points_.front(); }
    double hi() const { return points_.back(); }
    double length() const { return hi() - lo(); }

    std::pair<double, double> cell(std::size_t n) const;
    // b_n = |I_n|: (a_{n+1} - a_{n-1}) / 2 inside, half gaps at the two ends.
    std::vector<double> cell_lengths() const;
    double max_gap() const;
    double min_gap() const;

    // Points scaled by 2^-m (the sampling set matching f(2^m .)); b scales alike.
    SamplingSequence1D dilate(int m) const;

private:
    std::vector<double> points_;
    double b_;
    bool strict_;
};

} // namespace besov
