#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "besov/sequence.hpp"

namespace besov {

enum class GeometryVariant { Hyperplanes, PerturbedGraph, CurveFamily, Circles, Spiral };

std::string variant_name(GeometryVariant v);
// Accepts the canonical names ("hyperplane-union", "perturbed-graph",
// "curve-family", "concentric-circles", "spiral") and the short forms
// "i", "ii", "iii", "lines", "circles".
GeometryVariant parse_variant(const std::string& name);

struct GeometryParams {
    GeometryVariant variant = GeometryVariant::Hyperplanes;
    double b = 0.125;
    // Working window is [-window, window]^2.
    double window = 6.0;
    // Carrier quadrature step.
    double step = 0x1.0p-7;
    std::uint64_t seed = 1;
    // Arithmetic gaps (lines) or fixed radius gap; otherwise seeded random gaps.
    bool regular = false;
    bool strict = true;
    // Perturbation amplitude: absolute for perturbed-graph, fraction of b/4 for curve-family.
    double amplitude = 0.0;
    double frequency = 1.0;
    double max_slope = 1.0;
    // Circles/spiral: fixed radius gap used when regular (0 selects 3b/4).
    double radius_gap = 0.0;
    std::optional<double> c0;
    std::optional<double> D;

    static GeometryParams from_json(const std::string& text);
    std::string to_json() const;
};

enum class CellKind { Segment, Square };

// Segment: from (x0, y0) to (x1, y1). Square: [x0, x1] x [y0, y1].
struct Cell {
    CellKind kind = CellKind::Segment;
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
    double density = 1.0;

    double measure() const;
    double diameter() const;
};

// A quadrature node of the carrier: arc-length weight (m = 1) or 1 (m = 2),
// together with the transversal cell attached to it.
struct CarrierNode {
    double x = 0.0, y = 0.0;
    double weight = 0.0;
    std::uint32_t component = 0;
    Cell cell;
};

// Nodes [first, first + count) in parameter order.
struct Component {
    std::size_t first = 0;
    std::size_t count = 0;
    bool closed = false;
    // a_n for lines and graphs, r_n for circles, bk for curve-family columns.
    double level = 0.0;
    bool trimmed = false;
};

class SamplingGeometry2D {
public:
    static SamplingGeometry2D build(const GeometryParams& params);

    GeometryVariant variant() const { return params_.variant; }
    const GeometryParams& params() const { return params_; }
    int m() const { return m_; }
    double b() const { return params_.b; }
    double c0() const { return c0_; }
    double D() const { return D_; }
    double window() const { return params_.window; }
    bool radial() const;
    // Outer radius of the covered disk for circles and the spiral.
    double covered_radius() const { return covered_radius_; }
    // Gap sequence (lines/graphs) or radii r_0 < r_1 < ... (circles/spiral).
    const std::vector<double>& levels() const { return levels_; }

    const std::vector<CarrierNode>& nodes() const { return nodes_; }
    const std::vector<Component>& components() const { return components_; }
    // Longest distance between consecutive nodes of a component.
    double max_segment() const { return max_segment_; }
    std::vector<std::string> notes() const { return notes_; }

    // True when a disk of radius `margin` around (x, y) stays inside the
    // covered region minus a b-collar.
    bool interior(double x, double y, double margin) const;

    // Calls fn(i) for every node with |node - (x, y)| <= r.
    void for_each_node_near(double x, double y, double r, const std::function<void(std::size_t)>& fn) const;
    // Index of the node following i along its component, or npos.
    std::size_t next_node(std::size_t i) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    // Copy without the listed components; cells of the rest are unchanged.
    SamplingGeometry2D without_components(const std::vector<std::uint32_t>& ids) const;

private:
    void build_index();

    GeometryParams params_;
    int m_ = 1;
    double c0_ = 1.0;
    double D_ = 1.0;
    double covered_radius_ = 0.0;
    double max_segment_ = 0.0;
    std::vector<double> levels_;
    std::vector<CarrierNode> nodes_;
    std::vector<Component> components_;
    std::vector<std::string> notes_;

    double index_origin_x_ = 0.0, index_origin_y_ = 0.0, bucket_ = 1.0;
    std::size_t nbx_ = 0, nby_ = 0;
    std::vector<std::uint32_t> bucket_start_;
    std::vector<std::uint32_t> bucket_nodes_;
};

// nu_a(H_a) per cell, in node order.
std::vector<double> cell_measures(const SamplingGeometry2D& g);
// b_n per point.
std::vector<double> cell_measures(const SamplingSequence1D& s);

// Integral over the cell of exp(-pi |x - c|^2 / w^2) against nu_a.
double cell_gaussian_integral(const Cell& cell, double cx, double cy, double w);
// nu_a(B(x, R) cap H_a).
double cell_ball_measure(const Cell& cell, double x, double y, double R);
// H^1 of the polyline piece of the carrier inside B(x, R) (m = 1), or the
// number of points inside (m = 2).
double carrier_ball_measure(const SamplingGeometry2D& g, double x, double y, double R);

struct EquivProbe {
    double cx = 0.0, cy = 0.0, width = 0.0;
    double cell_integral = 0.0;  // int_G int_{H_a} f dnu_a dH
    double plain_integral = 0.0; // int f dx
    double weighted_integral = 0.0; // int int f(r zeta) max(1, r) dr dsigma (radial variants)
    double lower_ratio() const { return cell_integral / plain_integral; }
};

// Gaussian probe exp(-pi |x - c|^2 / w^2).
EquivProbe probe_equiv(const SamplingGeometry2D& g, double cx, double cy, double w);

struct ConditionsOptions {
    int n_probes = 1000;
    std::uint64_t seed = 1;
    // Probe widths log-uniform in [width_lo * b, width_hi * b].
    double width_lo = 1.0;
    double width_hi = 4.0;
};

struct ConditionResult {
    double c0 = 0.0;   // tightest constant compatible with the samples
    double lower = 0.0; // smallest observed ratio
    double upper = 0.0; // largest observed ratio
    int probes = 0;
    bool pass = false;
};

struct GeometryConditionsReport {
    std::string variant;
    int m = 1;
    double b = 0.0;
    double declared_c0 = 0.0;
    double declared_D = 0.0;
    std::uint64_t seed = 0;
    // "pass", "relaxed" (the spiral's cells reach 2b) or "fail".
    std::string diameter_status;
    double min_diameter = 0.0, max_diameter = 0.0;
    bool weighted_rhs = false;
    ConditionResult equiv, mes2, mes;
    double c0 = 0.0; // max of the three
    std::vector<std::string> issues;
    bool passed = false;

    std::string to_json() const;
};

GeometryConditionsReport check_conditions(const SamplingGeometry2D& g, const ConditionsOptions& opt = {});

// m = 2 only: largest number of cubes [x - b, x + b]^2, x in E, containing a
// random interior point (Monte-Carlo over n_points).
int cover_multiplicity(const SamplingGeometry2D& g, int n_points, std::uint64_t seed);

} // namespace besov
