#include "besov/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "besov/error.hpp"
#include "besov/random.hpp"

namespace besov {

namespace {

using json = nlohmann::json;
constexpr double kPi = std::numbers::pi;
constexpr double kRel = 1e-9;

struct Point {
    double x, y;
};

// Fritsch-Carlson monotone cubic through (t_k, v_k).
class MonotoneCubic {
public:
    MonotoneCubic(std::vector<double> t, std::vector<double> v) : t_(std::move(t)), v_(std::move(v)) {
        const std::size_t n = t_.size();
        std::vector<double> delta(n - 1);
        for (std::size_t k = 0; k + 1 < n; ++k) delta[k] = (v_[k + 1] - v_[k]) / (t_[k + 1] - t_[k]);
        d_.assign(n, 0.0);
        d_[0] = delta[0];
        d_[n - 1] = delta[n - 2];
        for (std::size_t k = 1; k + 1 < n; ++k) {
            if (delta[k - 1] * delta[k] <= 0.0) continue;
            d_[k] = 2.0 / (1.0 / delta[k - 1] + 1.0 / delta[k]);
        }
    }

    // Value and derivative.
    std::pair<double, double> operator()(double t) const {
        std::size_t k = static_cast<std::size_t>(std::upper_bound(t_.begin(), t_.end(), t) - t_.begin());
        k = std::clamp<std::size_t>(k, 1, t_.size() - 1) - 1;
        const double h = t_[k + 1] - t_[k];
        const double s = (t - t_[k]) / h;
        const double h00 = (1 + 2 * s) * (1 - s) * (1 - s), h10 = s * (1 - s) * (1 - s);
        const double h01 = s * s * (3 - 2 * s), h11 = s * s * (s - 1);
        const double val = h00 * v_[k] + h10 * h * d_[k] + h01 * v_[k + 1] + h11 * h * d_[k + 1];
        const double dh00 = 6 * s * s - 6 * s, dh10 = 3 * s * s - 4 * s + 1;
        const double dh01 = -dh00, dh11 = 3 * s * s - 2 * s;
        const double der = (dh00 * v_[k] + dh01 * v_[k + 1]) / h + dh10 * d_[k] + dh11 * d_[k + 1];
        return {val, der};
    }

private:
    std::vector<double> t_, v_, d_;
};

double default_c0(const GeometryParams& p) {
    switch (p.variant) {
    case GeometryVariant::Hyperplanes: return 10.0;
    case GeometryVariant::PerturbedGraph: {
        const double L = 2.0 * kPi * p.frequency * std::abs(p.amplitude);
        return 10.0 * std::sqrt(1.0 + L * L);
    }
    default: return 16.0;
    }
}

double default_D(GeometryVariant v) {
    switch (v) {
    case GeometryVariant::CurveFamily: return 9.0;
    case GeometryVariant::Spiral: return 2.0;
    default: return 1.0;
    }
}

long checked_count(double length, double step, const char* what) {
    const double n = length / step;
    const long k = std::lround(n);
    if (std::abs(n - static_cast<double>(k)) > 1e-9 * std::max(1.0, n)) {
        std::ostringstream msg;
        msg << "build_geometry: " << what << " is not a multiple of the carrier step";
        throw Error(msg.str());
    }
    return k;
}

std::vector<double> radii(const GeometryParams& p) {
    const double b = p.b;
    if (p.regular) {
        const double g = p.radius_gap > 0.0 ? p.radius_gap : 0.75 * b;
        if (g < 0.5 * b * (1 - kRel) || g > b * (1 + kRel)) throw Error("build_geometry: radius gap must lie in [b/2, b]");
        std::vector<double> r;
        for (long n = 0; g * static_cast<double>(n) <= p.window * (1 + kRel); ++n) r.push_back(g * static_cast<double>(n));
        return r;
    }
    SequenceOptions opt;
    opt.strict = true;
    return SamplingSequence1D::random(b, 0.0, p.window, p.seed, opt).points();
}

double erf_diff(double a, double b) {
    // erf(b) - erf(a) without cancellation in the tails.
    if (a > 0.0) return std::erfc(a) - std::erfc(b);
    if (b < 0.0) return std::erfc(-b) - std::erfc(-a);
    return std::erf(b) - std::erf(a);
}

double gauss_interval(double lo, double hi, double c, double w) {
    const double k = std::sqrt(kPi) / w;
    return 0.5 * w * erf_diff(k * (lo - c), k * (hi - c));
}

double segment_ball_length(double x0, double y0, double x1, double y1, double x, double y, double R) {
    const double L = std::hypot(x1 - x0, y1 - y0);
    const double dx = x0 - x, dy = y0 - y;
    if (L == 0.0) return 0.0;
    const double ux = (x1 - x0) / L, uy = (y1 - y0) / L;
    const double s0 = dx * ux + dy * uy;
    const double disc = s0 * s0 - (dx * dx + dy * dy) + R * R;
    if (disc <= 0.0) return 0.0;
    const double r = std::sqrt(disc);
    const double lo = std::max(0.0, -s0 - r), hi = std::min(L, -s0 + r);
    return std::max(0.0, hi - lo);
}

} // namespace

std::string variant_name(GeometryVariant v) {
    switch (v) {
    case GeometryVariant::Hyperplanes: return "hyperplane-union";
    case GeometryVariant::PerturbedGraph: return "perturbed-graph";
    case GeometryVariant::CurveFamily: return "curve-family";
    case GeometryVariant::Circles: return "concentric-circles";
    case GeometryVariant::Spiral: return "spiral";
    }
    return "unknown";
}

GeometryVariant parse_variant(const std::string& name) {
    if (name == "hyperplane-union" || name == "i" || name == "lines") return GeometryVariant::Hyperplanes;
    if (name == "perturbed-graph" || name == "ii") return GeometryVariant::PerturbedGraph;
    if (name == "curve-family" || name == "iii") return GeometryVariant::CurveFamily;
    if (name == "concentric-circles" || name == "circles") return GeometryVariant::Circles;
    if (name == "spiral") return GeometryVariant::Spiral;
    throw Error("unknown geometry variant '" + name + "'");
}

GeometryParams GeometryParams::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("geometry spec: ") + e.what());
    }
    if (!j.is_object()) throw Error("geometry spec: expected a JSON object");
    if (!j.contains("variant")) throw Error("geometry spec: missing 'variant'");
    GeometryParams p;
    try {
        p.variant = parse_variant(j.at("variant").get<std::string>());
        p.b = j.value("b", p.b);
        p.window = j.value("window", p.window);
        p.step = j.value("step", p.step);
        p.seed = j.value("seed", p.seed);
        p.regular = j.value("regular", p.regular);
        p.strict = j.value("strict", p.strict);
        p.amplitude = j.value("amplitude", p.amplitude);
        p.frequency = j.value("frequency", p.frequency);
        p.max_slope = j.value("max_slope", p.max_slope);
        p.radius_gap = j.value("radius_gap", p.radius_gap);
        if (j.contains("C0") && !j["C0"].is_null()) p.c0 = j["C0"].get<double>();
        if (j.contains("D") && !j["D"].is_null()) p.D = j["D"].get<double>();
    } catch (const json::exception& e) {
        throw Error(std::string("geometry spec: ") + e.what());
    }
    return p;
}

std::string GeometryParams::to_json() const {
    json j{{"variant", variant_name(variant)}, {"b", b},         {"window", window},
           {"step", step},                    {"seed", seed},   {"regular", regular},
           {"strict", strict},                {"amplitude", amplitude}, {"frequency", frequency},
           {"max_slope", max_slope},          {"radius_gap", radius_gap}};
    j["C0"] = c0 ? json(*c0) : json(nullptr);
    j["D"] = D ? json(*D) : json(nullptr);
    return j.dump(2);
}

double Cell::measure() const {
    if (kind == CellKind::Square) return density * (x1 - x0) * (y1 - y0);
    return density * std::hypot(x1 - x0, y1 - y0);
}

double Cell::diameter() const { return std::hypot(x1 - x0, y1 - y0); }

bool SamplingGeometry2D::radial() const {
    return params_.variant == GeometryVariant::Circles || params_.variant == GeometryVariant::Spiral;
}

SamplingGeometry2D SamplingGeometry2D::build(const GeometryParams& params) {
    const double b = params.b;
    if (!(b > 0.0) || !std::isfinite(b)) throw Error("build_geometry: b must be positive");
    if (!(params.window >= 4.0 * b)) throw Error("build_geometry: window must be at least 4b");
    if (!(params.step > 0.0) || params.step > b) throw Error("build_geometry: carrier step must lie in (0, b]");

    SamplingGeometry2D g;
    g.params_ = params;
    g.m_ = params.variant == GeometryVariant::CurveFamily ? 2 : 1;
    g.c0_ = params.c0 ? *params.c0 : default_c0(params);
    g.D_ = params.D ? *params.D : default_D(params.variant);
    const double W = params.window;
    const double h = params.step;

    // Appends a polyline with trapezoid arc-length weights.
    auto add_polyline = [&](const std::vector<Point>& pts, const std::vector<Cell>& cells, double level, bool closed,
                            bool trimmed) {
        if (pts.empty()) return;
        Component c;
        c.first = g.nodes_.size();
        c.count = pts.size();
        c.closed = closed;
        c.level = level;
        c.trimmed = trimmed;
        const auto id = static_cast<std::uint32_t>(g.components_.size());
        const std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            double w = 0.0;
            if (i + 1 < n || closed) {
                const auto& q = pts[(i + 1) % n];
                const double len = std::hypot(q.x - pts[i].x, q.y - pts[i].y);
                w += 0.5 * len;
                g.max_segment_ = std::max(g.max_segment_, len);
            }
            if (i > 0 || closed) {
                const auto& q = pts[(i + n - 1) % n];
                w += 0.5 * std::hypot(pts[i].x - q.x, pts[i].y - q.y);
            }
            g.nodes_.push_back(CarrierNode{pts[i].x, pts[i].y, w, id, cells[i]});
        }
        g.components_.push_back(c);
    };

    switch (params.variant) {
    case GeometryVariant::Hyperplanes:
    case GeometryVariant::PerturbedGraph: {
        const bool perturbed = params.variant == GeometryVariant::PerturbedGraph;
        const double A = perturbed ? params.amplitude : 0.0;
        const double kappa = params.frequency;
        const double L = 2.0 * kPi * kappa * std::abs(A);
        if (perturbed && L > params.max_slope * (1 + kRel)) {
            std::ostringstream msg;
            msg << "build_geometry: perturbation slope bound " << L << " exceeds max_slope " << params.max_slope;
            throw Error(msg.str());
        }
        SequenceOptions opt;
        opt.strict = params.strict;
        opt.regular = params.regular;
        const auto seq = SamplingSequence1D::random(b, -W, W, params.seed, opt);
        g.levels_ = seq.points();
        const long nx = checked_count(2.0 * W, h, "window");
        for (std::size_t n = 0; n < seq.size(); ++n) {
            const auto [lo, hi] = seq.cell(n);
            std::vector<Point> pts;
            std::vector<Cell> cells;
            bool trimmed = false;
            auto flush = [&]() {
                add_polyline(pts, cells, seq[n], false, trimmed);
                pts.clear();
                cells.clear();
            };
            for (long i = 0; i <= nx; ++i) {
                const double x = -W + h * static_cast<double>(i);
                const double f = A * std::sin(2.0 * kPi * kappa * x);
                const double y = seq[n] + f;
                if (std::abs(y) > W * (1 + kRel)) {
                    trimmed = true;
                    flush();
                    continue;
                }
                pts.push_back({x, y});
                cells.push_back(Cell{CellKind::Segment, x, f + lo, x, f + hi, 1.0});
            }
            flush();
        }
        if (perturbed)
            g.notes_.push_back("cells are vertical translates of the unperturbed cells; density 1, C0 includes sqrt(1+L^2)");
        break;
    }
    case GeometryVariant::CurveFamily: {
        if (params.amplitude < 0.0 || params.amplitude > 1.0)
            throw Error("build_geometry: curve-family amplitude is a fraction of b/4 and must lie in [0, 1]");
        const long K = static_cast<long>(std::floor(W / b + kRel));
        Rng rng(params.seed);
        for (long k = -K; k <= K; ++k) {
            const double xk = b * static_cast<double>(k);
            const double phase = 2.0 * kPi * rng.uniform();
            std::vector<Point> pts;
            std::vector<Cell> cells;
            for (long l = -K; l <= K; ++l) {
                const double y = b * static_cast<double>(l);
                const double x = xk + 0.25 * b * params.amplitude * std::sin(2.0 * kPi * params.frequency * y + phase);
                pts.push_back({x, y});
                cells.push_back(Cell{CellKind::Square, xk - 0.25 * b, y - 0.25 * b, xk + 0.25 * b, y + 0.25 * b, 1.0});
            }
            const std::size_t first = g.nodes_.size();
            add_polyline(pts, cells, xk, false, false);
            for (std::size_t i = first; i < g.nodes_.size(); ++i) g.nodes_[i].weight = 1.0;
            g.levels_.push_back(xk);
        }
        g.max_segment_ = 0.0;
        g.notes_.push_back("point set E = {(f_k(bl), bl)} with f_k in [bk - b/4, bk + b/4]; square cells of side b/2");
        break;
    }
    case GeometryVariant::Circles: {
        const auto r = radii(params);
        g.levels_ = r;
        const std::size_t N = r.size();
        for (std::size_t n = 0; n < N; ++n) {
            if (r[n] <= 0.0) continue;
            const double lo = n == 0 ? 0.0 : 0.5 * (r[n - 1] + r[n]);
            const double hi = n + 1 < N ? 0.5 * (r[n] + r[n + 1]) : r[n] + 0.5 * (r[n] - r[n - 1]);
            const auto count = static_cast<std::size_t>(std::ceil(2.0 * kPi * r[n] / h));
            std::vector<Point> pts(count);
            std::vector<Cell> cells(count);
            for (std::size_t i = 0; i < count; ++i) {
                const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(count);
                const double c = std::cos(t), s = std::sin(t);
                pts[i] = {r[n] * c, r[n] * s};
                cells[i] = Cell{CellKind::Segment, lo * c, lo * s, hi * c, hi * s, 1.0};
            }
            const std::size_t first = g.nodes_.size();
            add_polyline(pts, cells, r[n], true, false);
            // Exact arc weights.
            for (std::size_t i = first; i < g.nodes_.size(); ++i)
                g.nodes_[i].weight = 2.0 * kPi * r[n] / static_cast<double>(count);
            g.covered_radius_ = hi;
        }
        if (!r.empty() && r[0] == 0.0) g.notes_.push_back("degenerate circle r_0 = 0 carries no measure and is skipped");
        break;
    }
    case GeometryVariant::Spiral: {
        const auto r = radii(params);
        g.levels_ = r;
        const std::size_t K = r.size() - 1;
        std::vector<double> t(r.size());
        for (std::size_t k = 0; k <= K; ++k) t[k] = 2.0 * kPi * static_cast<double>(k);
        const MonotoneCubic rho(t, r);
        const double theta_max = t[K];
        std::vector<Point> pts;
        std::vector<Cell> cells;
        double theta = 0.0;
        while (true) {
            const auto [rv, dr] = rho(theta);
            const auto k = std::min<std::size_t>(static_cast<std::size_t>(theta / (2.0 * kPi)), K - 1);
            const double lo = k == 0 ? 0.0 : r[k - 1];
            const double hi = r[k + 1];
            const double c = std::cos(theta), s = std::sin(theta);
            pts.push_back({rv * c, rv * s});
            cells.push_back(Cell{CellKind::Segment, lo * c, lo * s, hi * c, hi * s, 1.0});
            if (theta >= theta_max) break;
            const double speed = std::max(std::hypot(rv, dr), 1e-12);
            theta = std::min(theta_max, theta + 0.999 * h / speed);
        }
        add_polyline(pts, cells, 0.0, false, false);
        g.covered_radius_ = r[K];
        g.notes_.push_back("spiral cells [r_{k-1}, r_{k+1}] have diameter up to 2b; condition (i) is relaxed");
        break;
    }
    }
    if (g.nodes_.empty()) throw Error("build_geometry: empty carrier");
    g.build_index();
    return g;
}

void SamplingGeometry2D::build_index() {
    double x0 = nodes_[0].x, x1 = x0, y0 = nodes_[0].y, y1 = y0;
    for (const auto& n : nodes_) {
        x0 = std::min(x0, n.x);
        x1 = std::max(x1, n.x);
        y0 = std::min(y0, n.y);
        y1 = std::max(y1, n.y);
    }
    bucket_ = std::max(params_.b, 2.0 * params_.step);
    index_origin_x_ = x0;
    index_origin_y_ = y0;
    nbx_ = static_cast<std::size_t>((x1 - x0) / bucket_) + 1;
    nby_ = static_cast<std::size_t>((y1 - y0) / bucket_) + 1;
    bucket_start_.assign(nbx_ * nby_ + 1, 0);
    auto bucket_of = [&](const CarrierNode& n) {
        const auto bx = std::min(nbx_ - 1, static_cast<std::size_t>((n.x - x0) / bucket_));
        const auto by = std::min(nby_ - 1, static_cast<std::size_t>((n.y - y0) / bucket_));
        return by * nbx_ + bx;
    };
    for (const auto& n : nodes_) ++bucket_start_[bucket_of(n) + 1];
    for (std::size_t i = 1; i < bucket_start_.size(); ++i) bucket_start_[i] += bucket_start_[i - 1];
    bucket_nodes_.resize(nodes_.size());
    std::vector<std::uint32_t> fill(bucket_start_.begin(), bucket_start_.end() - 1);
    for (std::size_t i = 0; i < nodes_.size(); ++i) bucket_nodes_[fill[bucket_of(nodes_[i])]++] = static_cast<std::uint32_t>(i);
}

void SamplingGeometry2D::for_each_node_near(double x, double y, double r, const std::function<void(std::size_t)>& fn) const {
    auto range = [&](double c, double origin, std::size_t nb) -> std::pair<long, long> {
        const long lo = static_cast<long>(std::floor((c - r - origin) / bucket_));
        const long hi = static_cast<long>(std::floor((c + r - origin) / bucket_));
        return {std::max(0L, lo), std::min(static_cast<long>(nb) - 1, hi)};
    };
    const auto [bx0, bx1] = range(x, index_origin_x_, nbx_);
    const auto [by0, by1] = range(y, index_origin_y_, nby_);
    const double r2 = r * r;
    for (long by = by0; by <= by1; ++by)
        for (long bx = bx0; bx <= bx1; ++bx) {
            const auto b = static_cast<std::size_t>(by) * nbx_ + static_cast<std::size_t>(bx);
            for (auto k = bucket_start_[b]; k < bucket_start_[b + 1]; ++k) {
                const auto i = bucket_nodes_[k];
                const double dx = nodes_[i].x - x, dy = nodes_[i].y - y;
                if (dx * dx + dy * dy <= r2) fn(i);
            }
        }
}

std::size_t SamplingGeometry2D::next_node(std::size_t i) const {
    const auto& c = components_[nodes_[i].component];
    if (i + 1 < c.first + c.count) return i + 1;
    return c.closed && c.count > 1 ? c.first : npos;
}

bool SamplingGeometry2D::interior(double x, double y, double margin) const {
    const double b = params_.b;
    if (radial()) return std::hypot(x, y) <= covered_radius_ - b - margin;
    const double lim = params_.window - b - margin;
    const double slack = params_.variant == GeometryVariant::PerturbedGraph ? std::abs(params_.amplitude) : 0.0;
    return std::abs(x) <= lim && std::abs(y) <= lim - slack;
}

SamplingGeometry2D SamplingGeometry2D::without_components(const std::vector<std::uint32_t>& ids) const {
    SamplingGeometry2D g;
    g.params_ = params_;
    g.m_ = m_;
    g.c0_ = c0_;
    g.D_ = D_;
    g.covered_radius_ = covered_radius_;
    g.max_segment_ = max_segment_;
    g.levels_ = levels_;
    g.notes_ = notes_;
    for (std::size_t c = 0; c < components_.size(); ++c) {
        if (std::find(ids.begin(), ids.end(), static_cast<std::uint32_t>(c)) != ids.end()) continue;
        Component comp = components_[c];
        comp.first = g.nodes_.size();
        const auto id = static_cast<std::uint32_t>(g.components_.size());
        for (std::size_t i = 0; i < comp.count; ++i) {
            CarrierNode n = nodes_[components_[c].first + i];
            n.component = id;
            g.nodes_.push_back(n);
        }
        g.components_.push_back(comp);
    }
    if (g.nodes_.empty()) throw Error("without_components: nothing left");
    std::ostringstream note;
    note << "removed " << ids.size() << " carrier component(s)";
    g.notes_.push_back(note.str());
    g.build_index();
    return g;
}

std::vector<double> cell_measures(const SamplingGeometry2D& g) {
    std::vector<double> out;
    out.reserve(g.nodes().size());
    for (const auto& n : g.nodes()) out.push_back(n.cell.measure());
    return out;
}

std::vector<double> cell_measures(const SamplingSequence1D& s) { return s.cell_lengths(); }

double cell_gaussian_integral(const Cell& cell, double cx, double cy, double w) {
    if (cell.kind == CellKind::Square)
        return cell.density * gauss_interval(cell.x0, cell.x1, cx, w) * gauss_interval(cell.y0, cell.y1, cy, w);
    const double L = std::hypot(cell.x1 - cell.x0, cell.y1 - cell.y0);
    if (L == 0.0) return 0.0;
    const double ux = (cell.x1 - cell.x0) / L, uy = (cell.y1 - cell.y0) / L;
    const double dx = cell.x0 - cx, dy = cell.y0 - cy;
    const double s0 = dx * ux + dy * uy;
    const double perp2 = std::max(0.0, dx * dx + dy * dy - s0 * s0);
    return cell.density * std::exp(-kPi * perp2 / (w * w)) * gauss_interval(s0, s0 + L, 0.0, w);
}

double cell_ball_measure(const Cell& cell, double x, double y, double R) {
    if (cell.kind == CellKind::Segment) return cell.density * segment_ball_length(cell.x0, cell.y0, cell.x1, cell.y1, x, y, R);
    const double a = std::max(cell.x0, x - R), c = std::min(cell.x1, x + R);
    if (a >= c) return 0.0;
    constexpr int n = 512;
    const double dx = (c - a) / n;
    double area = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = a + (i + 0.5) * dx - x;
        const double s = std::sqrt(std::max(0.0, R * R - u * u));
        area += std::max(0.0, std::min(cell.y1, y + s) - std::max(cell.y0, y - s));
    }
    return cell.density * area * dx;
}

double carrier_ball_measure(const SamplingGeometry2D& g, double x, double y, double R) {
    const auto& nodes = g.nodes();
    double total = 0.0;
    if (g.m() == 2) {
        g.for_each_node_near(x, y, R, [&](std::size_t i) { total += nodes[i].weight; });
        return total;
    }
    g.for_each_node_near(x, y, R + g.max_segment(), [&](std::size_t i) {
        const auto j = g.next_node(i);
        if (j == SamplingGeometry2D::npos) return;
        total += segment_ball_length(nodes[i].x, nodes[i].y, nodes[j].x, nodes[j].y, x, y, R);
    });
    return total;
}

EquivProbe probe_equiv(const SamplingGeometry2D& g, double cx, double cy, double w) {
    if (!(w > 0.0)) throw Error("probe_equiv: width must be positive");
    EquivProbe p;
    p.cx = cx;
    p.cy = cy;
    p.width = w;
    p.plain_integral = w * w;
    const auto& nodes = g.nodes();
    const double reach = 4.5 * w + 2.0 * g.b();
    double sum = 0.0;
    g.for_each_node_near(cx, cy, reach, [&](std::size_t i) {
        sum += nodes[i].weight * cell_gaussian_integral(nodes[i].cell, cx, cy, w);
    });
    p.cell_integral = sum;
    if (g.radial()) {
        const double rc = std::hypot(cx, cy);
        const double span = 4.5 * w;
        const double ra = std::max(0.0, rc - span), rb = rc + span;
        const double alpha = rc > span ? std::asin(span / rc) : kPi;
        const double tc = std::atan2(cy, cx);
        constexpr int n = 96;
        const double dr = (rb - ra) / n, dt = 2.0 * alpha / n;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double r = ra + (i + 0.5) * dr;
            double row = 0.0;
            for (int k = 0; k < n; ++k) {
                const double t = tc - alpha + (k + 0.5) * dt;
                const double ex = r * std::cos(t) - cx, ey = r * std::sin(t) - cy;
                row += std::exp(-kPi * (ex * ex + ey * ey) / (w * w));
            }
            acc += row * std::max(1.0, r);
        }
        p.weighted_integral = acc * dr * dt;
    } else {
        p.weighted_integral = p.plain_integral;
    }
    return p;
}

namespace {

double log_uniform(Rng& rng, double lo, double hi) { return std::exp(rng.uniform(std::log(lo), std::log(hi))); }

// Uniform point of the interior region at the given margin.
Point interior_point(const SamplingGeometry2D& g, Rng& rng, double margin) {
    for (int tries = 0; tries < 100000; ++tries) {
        Point p;
        if (g.radial()) {
            const double R = g.covered_radius();
            p = {rng.uniform(-R, R), rng.uniform(-R, R)};
        } else {
            const double W = g.window();
            p = {rng.uniform(-W, W), rng.uniform(-W, W)};
        }
        if (g.interior(p.x, p.y, margin)) return p;
    }
    throw Error("check_conditions: interior region is empty for the requested probe size");
}

void finish(ConditionResult& r, double declared) {
    r.c0 = std::max(r.upper, r.lower > 0.0 ? 1.0 / r.lower : INFINITY);
    r.pass = std::isfinite(r.c0) && r.c0 <= declared;
}

} // namespace

GeometryConditionsReport check_conditions(const SamplingGeometry2D& g, const ConditionsOptions& opt) {
    if (opt.n_probes < 1) throw Error("check_conditions: need at least one probe");
    if (!(opt.width_lo > 0.0) || opt.width_hi < opt.width_lo) throw Error("check_conditions: bad probe width range");
    GeometryConditionsReport rep;
    rep.variant = variant_name(g.variant());
    rep.m = g.m();
    rep.b = g.b();
    rep.declared_c0 = g.c0();
    rep.declared_D = g.D();
    rep.seed = opt.seed;
    rep.weighted_rhs = g.radial();
    const double b = g.b();
    const auto& nodes = g.nodes();

    rep.min_diameter = INFINITY;
    rep.max_diameter = 0.0;
    std::size_t degenerate = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        // Cells cut by the window boundary are truncation artifacts.
        if (!g.interior(nodes[i].x, nodes[i].y, 0.0)) continue;
        const double d = nodes[i].cell.diameter();
        const double mu = nodes[i].cell.measure();
        if (!(mu > 0.0) || !std::isfinite(mu)) {
            if (degenerate < 10) {
                std::ostringstream msg;
                msg << "degenerate cell at node " << i << " (" << nodes[i].x << ", " << nodes[i].y << ")";
                rep.issues.push_back(msg.str());
            }
            ++degenerate;
            continue;
        }
        rep.min_diameter = std::min(rep.min_diameter, d);
        rep.max_diameter = std::max(rep.max_diameter, d);
    }
    if (degenerate > 10) rep.issues.push_back(std::to_string(degenerate - 10) + " further degenerate cells");
    const bool lo_ok = rep.min_diameter >= 0.5 * b * (1 - kRel);
    if (lo_ok && rep.max_diameter <= b * (1 + kRel))
        rep.diameter_status = "pass";
    else if (lo_ok && g.variant() == GeometryVariant::Spiral && rep.max_diameter <= 2.0 * b * (1 + kRel))
        rep.diameter_status = "relaxed";
    else
        rep.diameter_status = "fail";

    Rng rng(opt.seed);
    rep.equiv.lower = INFINITY;
    for (int i = 0; i < opt.n_probes; ++i) {
        const double w = b * log_uniform(rng, opt.width_lo, opt.width_hi);
        const auto c = interior_point(g, rng, 4.5 * w);
        const auto p = probe_equiv(g, c.x, c.y, w);
        rep.equiv.lower = std::min(rep.equiv.lower, p.lower_ratio());
        rep.equiv.upper = std::max(rep.equiv.upper, p.cell_integral / p.weighted_integral);
        ++rep.equiv.probes;
    }
    finish(rep.equiv, g.c0());

    // Carrier points well inside the window.
    std::vector<std::size_t> inner;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (g.interior(nodes[i].x, nodes[i].y, 4.0 * b)) inner.push_back(i);
    if (inner.empty()) throw Error("check_conditions: no carrier point in the interior");
    const double md = static_cast<double>(g.m());
    rep.mes2.lower = INFINITY;
    for (int i = 0; i < opt.n_probes; ++i) {
        const auto& a = nodes[inner[static_cast<std::size_t>(rng.integer(0, static_cast<long>(inner.size()) - 1))]];
        const double R = b * log_uniform(rng, 1.0 / 64.0, 4.0);
        const double scale = std::pow(std::min(R, b), md);
        rep.mes2.lower = std::min(rep.mes2.lower, cell_ball_measure(a.cell, a.x, a.y, R) / scale);
        const double x = a.x + rng.uniform(-b, b), y = a.y + rng.uniform(-b, b);
        rep.mes2.upper = std::max(rep.mes2.upper, std::max(cell_ball_measure(a.cell, x, y, R), cell_ball_measure(a.cell, a.x, a.y, R)) / scale);
        ++rep.mes2.probes;
    }
    finish(rep.mes2, g.c0());

    rep.mes.lower = INFINITY;
    for (int i = 0; i < opt.n_probes; ++i) {
        const double R = b * log_uniform(rng, 1.0 / 16.0, 8.0);
        const auto c = interior_point(g, rng, R);
        const double v = carrier_ball_measure(g, c.x, c.y, R) / (std::pow(R, 2.0 - md) * std::pow(std::max(1.0, R / b), md));
        rep.mes.lower = std::min(rep.mes.lower, v);
        rep.mes.upper = std::max(rep.mes.upper, v);
        ++rep.mes.probes;
    }
    // Upper bound only.
    rep.mes.c0 = rep.mes.upper;
    rep.mes.pass = std::isfinite(rep.mes.c0) && rep.mes.c0 <= g.c0();

    rep.c0 = std::max({rep.equiv.c0, rep.mes2.c0, rep.mes.c0});
    rep.passed = rep.equiv.pass && rep.mes2.pass && rep.mes.pass && rep.diameter_status != "fail" && degenerate == 0;
    return rep;
}

std::string GeometryConditionsReport::to_json() const {
    auto cond = [](const ConditionResult& r) {
        return json{{"c0", r.c0}, {"lower", r.lower}, {"upper", r.upper}, {"probes", r.probes}, {"pass", r.pass}};
    };
    json j{{"variant", variant},
           {"m", m},
           {"b", b},
           {"declared_C0", declared_c0},
           {"declared_D", declared_D},
           {"seed", seed},
           {"diameter", {{"status", diameter_status}, {"min", min_diameter}, {"max", max_diameter}}},
           {"weighted_rhs", weighted_rhs},
           {"equiv", cond(equiv)},
           {"mes2", cond(mes2)},
           {"mes", cond(mes)},
           {"C0", c0},
           {"issues", issues},
           {"passed", passed}};
    return j.dump(2);
}

int cover_multiplicity(const SamplingGeometry2D& g, int n_points, std::uint64_t seed) {
    if (g.m() != 2) throw Error("cover_multiplicity: only defined for point carriers (m = 2)");
    Rng rng(seed);
    const double b = g.b();
    const auto& nodes = g.nodes();
    int worst = 0;
    for (int i = 0; i < n_points; ++i) {
        const auto p = interior_point(g, rng, 2.0 * b);
        int count = 0;
        g.for_each_node_near(p.x, p.y, 1.5 * b, [&](std::size_t k) {
            if (std::abs(nodes[k].x - p.x) <= b && std::abs(nodes[k].y - p.y) <= b) ++count;
        });
        worst = std::max(worst, count);
    }
    return worst;
}

} // namespace besov
