#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace besov {

// Uniform grid origin, origin + spacing, ..., origin + spacing*(count-1).
struct Grid1D {
    double origin = 0.0;
    double spacing = 1.0;
    std::size_t count = 2;

    // Validating constructor; throws besov::Error on spacing <= 0 or count < 2.
    static Grid1D make(double origin, double spacing, std::size_t count);

    // Grid of `count = (hi - lo) / spacing` points starting at lo (hi itself is
    // the first point past the end, which suits periodic transforms).
    static Grid1D span(double lo, double hi, double spacing);

    double point(std::size_t i) const { return origin + spacing * static_cast<double>(i); }
    double last() const { return point(count - 1); }
    double length() const { return spacing * static_cast<double>(count - 1); }
    double nyquist() const { return 0.5 / spacing; }
    // floor(-log2(spacing)): the finest dyadic level the grid resolves.
    int resolution_exponent() const;
    bool power_of_two() const { return count > 0 && (count & (count - 1)) == 0; }

    void validate() const;

    bool operator==(const Grid1D&) const = default;
};

struct Grid2D {
    Grid1D x;
    Grid1D y;

    static Grid2D make(Grid1D x, Grid1D y);
    std::size_t size() const { return x.count * y.count; }
    // Row-major with x fastest.
    std::size_t index(std::size_t ix, std::size_t iy) const { return iy * x.count + ix; }
    void validate() const;

    bool operator==(const Grid2D&) const = default;
};

// h = 2^-10 on [-16, 16).
Grid1D default_grid_1d();
// h = 2^-7 on [-8, 8)^2.
Grid2D default_grid_2d();

// Composite trapezoid weight of node i (spacing included).
double trapezoid_weight(const Grid1D& g, std::size_t i);

// A real function sampled on a 1D or 2D uniform grid. Values are immutable
// after construction and always finite.
class GridFunction {
public:
    GridFunction(Grid1D grid, std::vector<double> values);
    GridFunction(Grid2D grid, std::vector<double> values);

    static GridFunction sample(const Grid1D& grid, const std::function<double(double)>& f);
    static GridFunction sample(const Grid2D& grid, const std::function<double(double, double)>& f);
    static GridFunction zeros(const Grid1D& grid);
    static GridFunction zeros(const Grid2D& grid);

    int dim() const { return std::holds_alternative<Grid2D>(grid_) ? 2 : 1; }
    const Grid1D& grid() const;
    const Grid2D& grid2d() const;
    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    // Same grid, new values.
    GridFunction with_values(std::vector<double> values) const;

    // Distance from the numerically significant support to the nearest domain
    // boundary (minimum over axes). Equals the half-length of the domain for
    // the zero function.
    double support_margin() const { return margin_; }

    // Inclusive index range [first, last] per axis of |f| > 1e-14 max|f|.
    // Empty function -> {1, 0}.
    std::pair<std::size_t, std::size_t> support_indices(int axis = 0) const;

    // Linear (1D) / bilinear (2D) interpolation. Throws outside the domain.
    double interpolate(double x) const;
    double interpolate(double x, double y) const;
    bool contains(double x) const;
    bool contains(double x, double y) const;

    GridFunction operator+(const GridFunction& o) const;
    GridFunction operator-(const GridFunction& o) const;
    GridFunction operator*(double s) const;
    bool same_grid(const GridFunction& o) const { return grid_ == o.grid_; }

private:
    void check_and_measure();

    std::variant<Grid1D, Grid2D> grid_;
    std::vector<double> values_;
    std::pair<std::size_t, std::size_t> support_[2] = {{1, 0}, {1, 0}};
    double margin_ = 0.0;
};

// Composite-trapezoid L^p norm, p in [1, inf).
double lp_norm(const GridFunction& f, double p);

// (int weight^p |f|^p)^(1/p) by the same quadrature.
double weighted_lp_norm(const GridFunction& f, const std::function<double(double)>& weight, double p);
double weighted_lp_norm(const GridFunction& f, const std::function<double(double, double)>& weight,
                        double p);

} // namespace besov
