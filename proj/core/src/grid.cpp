#include "besov/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "besov/error.hpp"

namespace besov {

namespace {

constexpr double kSupportThreshold = 1e-14;

void check_p(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) {
        std::ostringstream msg;
        msg << "L^p exponent must lie in [1, inf), got " << p;
        throw Error(msg.str());
    }
}

} // namespace

Grid1D Grid1D::make(double origin, double spacing, std::size_t count) {
    Grid1D g{origin, spacing, count};
    g.validate();
    return g;
}

Grid1D Grid1D::span(double lo, double hi, double spacing) {
    const double n = (hi - lo) / spacing;
    const auto count = static_cast<std::size_t>(std::llround(n));
    if (std::abs(n - static_cast<double>(count)) > 1e-9 * std::max(1.0, n))
        throw Error("Grid1D::span: interval length is not a multiple of the spacing");
    return make(lo, spacing, count);
}

int Grid1D::resolution_exponent() const {
    return static_cast<int>(std::floor(-std::log2(spacing) + 1e-12));
}

void Grid1D::validate() const {
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw Error("grid spacing must be positive and finite");
    if (count < 2) throw Error("grid needs at least 2 points");
    if (!std::isfinite(origin)) throw Error("grid origin must be finite");
}

Grid2D Grid2D::make(Grid1D x, Grid1D y) {
    Grid2D g{x, y};
    g.validate();
    return g;
}

void Grid2D::validate() const {
    x.validate();
    y.validate();
}

Grid1D default_grid_1d() { return Grid1D::span(-16.0, 16.0, 0x1.0p-10); }

Grid2D default_grid_2d() {
    const auto axis = Grid1D::span(-8.0, 8.0, 0x1.0p-7);
    return Grid2D{axis, axis};
}

double trapezoid_weight(const Grid1D& g, std::size_t i) {
    return (i == 0 || i + 1 == g.count) ? 0.5 * g.spacing : g.spacing;
}

GridFunction::GridFunction(Grid1D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    grid.validate();
    if (values_.size() != grid.count) throw Error("GridFunction: values length does not match grid");
    check_and_measure();
}

GridFunction::GridFunction(Grid2D grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    grid.validate();
    if (values_.size() != grid.size()) throw Error("GridFunction: values length does not match grid");
    check_and_measure();
}

GridFunction GridFunction::sample(const Grid1D& grid, const std::function<double(double)>& f) {
    std::vector<double> v(grid.count);
    for (std::size_t i = 0; i < grid.count; ++i) v[i] = f(grid.point(i));
    return GridFunction(grid, std::move(v));
}

GridFunction GridFunction::sample(const Grid2D& grid, const std::function<double(double, double)>& f) {
    std::vector<double> v(grid.size());
    for (std::size_t iy = 0; iy < grid.y.count; ++iy) {
        const double y = grid.y.point(iy);
        for (std::size_t ix = 0; ix < grid.x.count; ++ix) v[grid.index(ix, iy)] = f(grid.x.point(ix), y);
    }
    return GridFunction(grid, std::move(v));
}

GridFunction GridFunction::zeros(const Grid1D& grid) { return GridFunction(grid, std::vector<double>(grid.count)); }

GridFunction GridFunction::zeros(const Grid2D& grid) { return GridFunction(grid, std::vector<double>(grid.size())); }

const Grid1D& GridFunction::grid() const {
    if (const auto* g = std::get_if<Grid1D>(&grid_)) return *g;
    throw Error("GridFunction is two-dimensional; a 1D grid was requested");
}

const Grid2D& GridFunction::grid2d() const {
    if (const auto* g = std::get_if<Grid2D>(&grid_)) return *g;
    throw Error("GridFunction is one-dimensional; a 2D grid was requested");
}

GridFunction GridFunction::with_values(std::vector<double> values) const {
    if (dim() == 1) return GridFunction(grid(), std::move(values));
    return GridFunction(grid2d(), std::move(values));
}

void GridFunction::check_and_measure() {
    double peak = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            std::ostringstream msg;
            msg << "GridFunction: non-finite value " << values_[i] << " at flat index " << i;
            throw Error(msg.str());
        }
        peak = std::max(peak, std::abs(values_[i]));
    }
    const double thr = kSupportThreshold * peak;
    auto margin_of = [](const Grid1D& g, std::pair<std::size_t, std::size_t> s) {
        if (s.first > s.second) return 0.5 * g.length();
        return std::min(g.point(s.first) - g.origin, g.last() - g.point(s.second));
    };
    if (dim() == 1) {
        const auto& g = grid();
        std::size_t first = 1, last = 0;
        if (peak > 0.0) {
            first = 0;
            while (std::abs(values_[first]) <= thr) ++first;
            last = g.count - 1;
            while (std::abs(values_[last]) <= thr) --last;
        }
        support_[0] = {first, last};
        margin_ = margin_of(g, support_[0]);
        return;
    }
    const auto& g = grid2d();
    std::size_t x0 = g.x.count, x1 = 0, y0 = g.y.count, y1 = 0;
    if (peak > 0.0) {
        for (std::size_t iy = 0; iy < g.y.count; ++iy)
            for (std::size_t ix = 0; ix < g.x.count; ++ix)
                if (std::abs(values_[g.index(ix, iy)]) > thr) {
                    x0 = std::min(x0, ix);
                    x1 = std::max(x1, ix);
                    y0 = std::min(y0, iy);
                    y1 = std::max(y1, iy);
                }
        support_[0] = {x0, x1};
        support_[1] = {y0, y1};
    }
    margin_ = std::min(margin_of(g.x, support_[0]), margin_of(g.y, support_[1]));
}

std::pair<std::size_t, std::size_t> GridFunction::support_indices(int axis) const {
    if (axis < 0 || axis >= dim()) throw Error("support_indices: axis out of range");
    return support_[axis];
}

bool GridFunction::contains(double x) const {
    const auto& g = grid();
    return x >= g.origin && x <= g.last();
}

bool GridFunction::contains(double x, double y) const {
    const auto& g = grid2d();
    return x >= g.x.origin && x <= g.x.last() && y >= g.y.origin && y <= g.y.last();
}

namespace {

// Cell index and fractional offset for linear interpolation on an axis.
std::pair<std::size_t, double> locate(const Grid1D& g, double x) {
    const double u = (x - g.origin) / g.spacing;
    auto i = static_cast<std::size_t>(std::floor(u));
    if (i >= g.count - 1) i = g.count - 2;
    return {i, u - static_cast<double>(i)};
}

} // namespace

double GridFunction::interpolate(double x) const {
    if (!contains(x)) {
        std::ostringstream msg;
        msg << "point " << x << " lies outside the grid domain";
        throw Error(msg.str());
    }
    const auto [i, t] = locate(grid(), x);
    if (t == 0.0) return values_[i];
    return (1.0 - t) * values_[i] + t * values_[i + 1];
}

double GridFunction::interpolate(double x, double y) const {
    if (!contains(x, y)) {
        std::ostringstream msg;
        msg << "point (" << x << ", " << y << ") lies outside the grid domain";
        throw Error(msg.str());
    }
    const auto& g = grid2d();
    const auto [ix, tx] = locate(g.x, x);
    const auto [iy, ty] = locate(g.y, y);
    const double v00 = values_[g.index(ix, iy)];
    const double v10 = values_[g.index(ix + 1, iy)];
    const double v01 = values_[g.index(ix, iy + 1)];
    const double v11 = values_[g.index(ix + 1, iy + 1)];
    return (1.0 - ty) * ((1.0 - tx) * v00 + tx * v10) + ty * ((1.0 - tx) * v01 + tx * v11);
}

GridFunction GridFunction::operator+(const GridFunction& o) const {
    if (!same_grid(o)) throw Error("GridFunction +: grids differ");
    std::vector<double> v(values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.values_[i];
    return with_values(std::move(v));
}

GridFunction GridFunction::operator-(const GridFunction& o) const {
    if (!same_grid(o)) throw Error("GridFunction -: grids differ");
    std::vector<double> v(values_);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.values_[i];
    return with_values(std::move(v));
}

GridFunction GridFunction::operator*(double s) const {
    std::vector<double> v(values_);
    for (auto& x : v) x *= s;
    return with_values(std::move(v));
}

namespace {

template <class Pointwise>
double trapezoid_power_sum(const GridFunction& f, Pointwise&& term) {
    double sum = 0.0;
    if (f.dim() == 1) {
        const auto& g = f.grid();
        for (std::size_t i = 0; i < g.count; ++i) sum += trapezoid_weight(g, i) * term(i, g.point(i), 0.0);
        return sum;
    }
    const auto& g = f.grid2d();
    for (std::size_t iy = 0; iy < g.y.count; ++iy) {
        const double wy = trapezoid_weight(g.y, iy);
        const double y = g.y.point(iy);
        double row = 0.0;
        for (std::size_t ix = 0; ix < g.x.count; ++ix)
            row += trapezoid_weight(g.x, ix) * term(g.index(ix, iy), g.x.point(ix), y);
        sum += wy * row;
    }
    return sum;
}

} // namespace

double lp_norm(const GridFunction& f, double p) {
    check_p(p);
    const auto v = f.values();
    double s;
    if (p == 2.0)
        s = trapezoid_power_sum(f, [&](std::size_t i, double, double) { return v[i] * v[i]; });
    else if (p == 1.0)
        s = trapezoid_power_sum(f, [&](std::size_t i, double, double) { return std::abs(v[i]); });
    else
        s = trapezoid_power_sum(f, [&](std::size_t i, double, double) { return std::pow(std::abs(v[i]), p); });
    return std::pow(s, 1.0 / p);
}

double weighted_lp_norm(const GridFunction& f, const std::function<double(double)>& weight, double p) {
    check_p(p);
    if (f.dim() != 1) throw Error("weighted_lp_norm: 1D weight given for a 2D function");
    const auto v = f.values();
    const double s = trapezoid_power_sum(f, [&](std::size_t i, double x, double) {
        const double w = weight(x);
        if (!(w >= 0.0) || !std::isfinite(w)) throw Error("weighted_lp_norm: weight must be finite and nonnegative");
        return std::pow(w * std::abs(v[i]), p);
    });
    return std::pow(s, 1.0 / p);
}

double weighted_lp_norm(const GridFunction& f, const std::function<double(double, double)>& weight, double p) {
    check_p(p);
    if (f.dim() != 2) throw Error("weighted_lp_norm: 2D weight given for a 1D function");
    const auto v = f.values();
    const double s = trapezoid_power_sum(f, [&](std::size_t i, double x, double y) {
        const double w = weight(x, y);
        if (!(w >= 0.0) || !std::isfinite(w)) throw Error("weighted_lp_norm: weight must be finite and nonnegative");
        return std::pow(w * std::abs(v[i]), p);
    });
    return std::pow(s, 1.0 / p);
}

} // namespace besov
