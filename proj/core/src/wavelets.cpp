#include "besov/wavelets.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "besov/error.hpp"

namespace besov {

namespace {

constexpr int kMaxScale = 60;

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

std::vector<double> daubechies_filter(int order) {
    if (order < 1 || order > 10) throw Error("Daubechies order must lie in 1..10, got " + std::to_string(order));
    using lcplx = std::complex<long double>;
    const int K = order;

    // |m0|^2 = cos^{2K}(w/2) P(sin^2(w/2)), P(y) = sum_k C(K-1+k, k) y^k.
    std::vector<long double> p(K);
    for (int k = 0; k < K; ++k) p[k] = binomial(K - 1 + k, k);

    std::vector<lcplx> zeros;
    if (K > 1) {
        Eigen::VectorXd coeffs(K);
        for (int k = 0; k < K; ++k) coeffs[k] = static_cast<double>(p[k]);
        Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
        for (const auto& r : solver.roots()) {
            // Newton polish in extended precision.
            lcplx y(r.real(), r.imag());
            for (int it = 0; it < 8; ++it) {
                lcplx v = 0, dv = 0;
                for (int k = K - 1; k >= 0; --k) {
                    dv = dv * y + v;
                    v = v * y + p[k];
                }
                if (std::abs(dv) == 0.0L) break;
                y -= v / dv;
            }
            // y = (2 - z - 1/z) / 4  <=>  z^2 - (2 - 4y) z + 1 = 0; keep the root inside the unit circle.
            const lcplx bq = 1.0L - 2.0L * y;
            const lcplx disc = std::sqrt(bq * bq - 1.0L);
            lcplx z = bq + disc;
            if (std::abs(z) > 1.0L) z = bq - disc;
            zeros.push_back(z);
        }
    }
    // Q(z) = (1 + z)^K prod (z - z_i), ascending coefficients.
    std::vector<lcplx> poly{1.0L};
    auto multiply = [&](lcplx root) {
        std::vector<lcplx> next(poly.size() + 1, 0.0L);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= root * poly[i];
        }
        poly.swap(next);
    };
    for (int i = 0; i < K; ++i) multiply(-1.0L);
    for (const auto& z : zeros) multiply(z);

    std::vector<long double> h(poly.size());
    long double sum = 0.0L;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        h[i] = poly[i].real();
        sum += h[i];
    }
    const long double norm = std::sqrt(2.0L) / sum;
    for (auto& v : h) v *= norm;
    if (std::abs(h.front()) < std::abs(h.back())) std::reverse(h.begin(), h.end());
    return {h.begin(), h.end()};
}

WaveletBasis WaveletBasis::build(WaveletFamily family, int order, int depth) {
    if (depth < 1 || depth > 20) throw Error("tabulation depth must lie in 1..20");
    WaveletBasis b;
    b.family_ = family;
    b.depth_ = depth;
    if (family == WaveletFamily::Haar) {
        b.order_ = 1;
        b.h_ = {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    } else {
        if (order < 2 || order > 10) throw Error("Daubechies order must lie in 2..10, got " + std::to_string(order));
        b.order_ = order;
        b.h_ = daubechies_filter(order);
    }
    const int S = b.support();
    b.g_.resize(b.h_.size());
    for (int k = 0; k <= S; ++k) b.g_[k] = ((k % 2 == 0) ? 1.0 : -1.0) * b.h_[S - k];

    const std::size_t n = (static_cast<std::size_t>(S) << depth) + 1;
    b.phi_.assign(n, 0.0);
    b.psi_.assign(n, 0.0);
    if (family == WaveletFamily::Haar) {
        const std::size_t half = n / 2;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            b.phi_[i] = 1.0;
            b.psi_[i] = i < half ? 1.0 : -1.0;
        }
        return b;
    }

    // phi at the integers: eigenvector of M_{n,m} = sqrt2 h_{2n-m} for eigenvalue 1, sum 1.
    const double r2 = std::sqrt(2.0);
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(S + 1, S + 1);
    for (int i = 0; i <= S; ++i)
        for (int m = 0; m <= S; ++m) {
            const int k = 2 * i - m;
            if (k >= 0 && k <= S) M(i, m) = r2 * b.h_[k];
        }
    Eigen::MatrixXd A = M - Eigen::MatrixXd::Identity(S + 1, S + 1);
    A.row(S).setOnes();
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(S + 1);
    rhs[S] = 1.0;
    const Eigen::VectorXd v = A.fullPivLu().solve(rhs);

    std::vector<double> level(v.data(), v.data() + S + 1);
    for (int l = 1; l <= depth; ++l) {
        const long half = 1L << (l - 1);
        std::vector<double> next((static_cast<std::size_t>(S) << l) + 1, 0.0);
        for (long i = 0; i < static_cast<long>(next.size()); ++i) {
            double s = 0.0;
            for (int k = 0; k <= S; ++k) {
                const long idx = i - k * half;
                if (idx >= 0 && idx < static_cast<long>(level.size())) s += b.h_[k] * level[idx];
            }
            next[i] = r2 * s;
        }
        level.swap(next);
    }
    b.phi_ = level;
    const long unit = 1L << depth;
    for (long i = 0; i < static_cast<long>(n); ++i) {
        double s = 0.0;
        for (int k = 0; k <= S; ++k) {
            const long idx = 2 * i - k * unit;
            if (idx >= 0 && idx < static_cast<long>(n)) s += b.g_[k] * b.phi_[idx];
        }
        b.psi_[i] = r2 * s;
    }
    return b;
}

WaveletBasis WaveletBasis::from_name(const std::string& name, int depth) {
    if (name == "haar") return haar();
    if (name.size() > 2 && name.compare(0, 2, "db") == 0) {
        try {
            return daubechies(std::stoi(name.substr(2)), depth);
        } catch (const std::invalid_argument&) {
        }
    }
    throw Error("unknown wavelet '" + name + "' (expected haar or db2..db10)");
}

std::string WaveletBasis::name() const {
    return family_ == WaveletFamily::Haar ? "haar" : "db" + std::to_string(order_);
}

double WaveletBasis::eval(int type, double x) const {
    if (family_ == WaveletFamily::Haar) {
        if (x < 0.0 || x >= 1.0) return 0.0;
        return type == 0 ? 1.0 : (x < 0.5 ? 1.0 : -1.0);
    }
    const auto& t = table(type);
    const double u = std::ldexp(x, depth_);
    if (u <= 0.0 || u >= static_cast<double>(t.size() - 1)) return 0.0;
    const auto i = static_cast<std::size_t>(u);
    const double frac = u - static_cast<double>(i);
    return frac == 0.0 ? t[i] : t[i] + frac * (t[i + 1] - t[i]);
}

double WaveletBasis::eval(int type, int j, long k, double x) const {
    return std::sqrt(std::ldexp(1.0, j)) * eval(type, std::ldexp(x, j) - static_cast<double>(k));
}

double CoefficientBlock::at(long k, long l) const {
    if (!contains(k, l)) return 0.0;
    return values[static_cast<std::size_t>(l - l0) * nk + static_cast<std::size_t>(k - k0)];
}

WaveletCoefficients::WaveletCoefficients(int d, int j_min, int j_max, std::string basis_name)
    : d_(d), j_min_(j_min), j_max_(j_max), basis_(std::move(basis_name)) {
    if (d != 1 && d != 2) throw Error("coefficient dimension must be 1 or 2");
    if (j_min > j_max) throw Error("empty scale range");
    if (std::abs(j_min) > kMaxScale || std::abs(j_max) > kMaxScale)
        throw Error("scale range exceeds |j| <= " + std::to_string(kMaxScale));
}

const CoefficientBlock* WaveletCoefficients::find(int j, int type) const {
    for (const auto& b : blocks_)
        if (b.j == j && b.type == type) return &b;
    return nullptr;
}

double WaveletCoefficients::value(int j, int type, long k, long l) const {
    const auto* b = find(j, type);
    return b ? b->at(k, l) : 0.0;
}

void WaveletCoefficients::put(CoefficientBlock block) {
    if (block.j < j_min_ || block.j > j_max_) throw Error("coefficient block outside the scale range");
    if (block.values.size() != block.nk * block.nl) throw Error("coefficient block has inconsistent size");
    if (d_ == 1 && block.type > 1) throw Error("1D coefficients have types 0 and 1 only");
    auto it = std::find_if(blocks_.begin(), blocks_.end(),
                           [&](const CoefficientBlock& b) { return b.j == block.j && b.type == block.type; });
    if (it != blocks_.end()) {
        *it = std::move(block);
        return;
    }
    blocks_.push_back(std::move(block));
    std::sort(blocks_.begin(), blocks_.end(),
              [](const CoefficientBlock& a, const CoefficientBlock& b) { return std::pair(a.j, a.type) < std::pair(b.j, b.type); });
}

void WaveletCoefficients::set(int j, int type, long k, long l, double v) {
    if (d_ == 1 && l != 0) throw Error("1D coefficients have no second translation index");
    const auto* found = find(j, type);
    if (found == nullptr) {
        put(CoefficientBlock{j, type, k, l, 1, 1, {v}});
        return;
    }
    auto& b = const_cast<CoefficientBlock&>(*found);
    if (!b.contains(k, l)) {
        const long k0 = std::min(b.k0, k), l0 = std::min(b.l0, l);
        const long k1 = std::max(b.k0 + static_cast<long>(b.nk), k + 1);
        const long l1 = std::max(b.l0 + static_cast<long>(b.nl), l + 1);
        CoefficientBlock grown{j, type, k0, l0, static_cast<std::size_t>(k1 - k0), static_cast<std::size_t>(l1 - l0), {}};
        grown.values.assign(grown.nk * grown.nl, 0.0);
        for (std::size_t il = 0; il < b.nl; ++il)
            for (std::size_t ik = 0; ik < b.nk; ++ik) {
                const long kk = b.k0 + static_cast<long>(ik), ll = b.l0 + static_cast<long>(il);
                grown.values[static_cast<std::size_t>(ll - l0) * grown.nk + static_cast<std::size_t>(kk - k0)] =
                    b.values[il * b.nk + ik];
            }
        b = std::move(grown);
    }
    b.values[static_cast<std::size_t>(l - b.l0) * b.nk + static_cast<std::size_t>(k - b.k0)] = v;
}

std::vector<CoefficientEntry> WaveletCoefficients::entries(bool include_scaling) const {
    std::vector<CoefficientEntry> out;
    for (const auto& b : blocks_) {
        if (b.type == 0 && !include_scaling) continue;
        for (std::size_t il = 0; il < b.nl; ++il)
            for (std::size_t ik = 0; ik < b.nk; ++ik) {
                const double v = b.values[il * b.nk + ik];
                if (v != 0.0) out.push_back({b.j, b.type, b.k0 + static_cast<long>(ik), b.l0 + static_cast<long>(il), v});
            }
    }
    return out;
}

std::size_t WaveletCoefficients::nonzero_count() const { return entries(false).size(); }

double WaveletCoefficients::wavelet_energy() const {
    double e = 0.0;
    for (const auto& b : blocks_)
        if (b.type != 0)
            for (double v : b.values) e += v * v;
    return e;
}

double WaveletCoefficients::coarse_energy() const {
    double e = 0.0;
    for (const auto& b : blocks_)
        if (b.type == 0)
            for (double v : b.values) e += v * v;
    return e;
}

double WaveletCoefficients::truncation_residual() const {
    if (input_energy_ < 0.0) return -1.0;
    if (input_energy_ == 0.0) return 0.0;
    return std::abs(input_energy_ - wavelet_energy() - coarse_energy()) / input_energy_;
}

std::string WaveletCoefficients::to_json() const {
    nlohmann::json j;
    j["d"] = d_;
    j["j_min"] = j_min_;
    j["j_max"] = j_max_;
    j["basis"] = basis_;
    auto entry_json = [&](const CoefficientEntry& e) {
        nlohmann::json o;
        o["j"] = e.j;
        if (d_ == 1) {
            o["k"] = e.k;
        } else {
            o["k"] = {e.k, e.l};
            o["l"] = {e.type & 1, e.type >> 1};
        }
        o["value"] = e.value;
        return o;
    };
    auto& arr = j["entries"] = nlohmann::json::array();
    auto& coarse = j["scaling"] = nlohmann::json::array();
    for (const auto& e : entries(true)) (e.type == 0 ? coarse : arr).push_back(entry_json(e));
    j["coarse_energy"] = coarse_energy();
    return j.dump();
}

int max_analysis_scale(const Grid1D& g) { return g.resolution_exponent() - 2; }

int default_min_scale(const Grid1D& g, int extra) {
    const double span = g.spacing * static_cast<double>(g.count);
    return -static_cast<int>(std::ceil(std::log2(4.0 * span) - 1e-12)) - extra;
}

namespace {

// Values of 2^{j/2} eval(type, 2^j x_i - k) on the grid indices meeting the support.
struct AxisAtom {
    std::size_t first = 0;
    std::vector<double> values;
};

// Translates k whose support [k, k+S] / 2^j meets [xa, xb].
std::pair<long, long> translate_range(int j, int S, double xa, double xb) {
    const long kmin = static_cast<long>(std::ceil(std::ldexp(xa, j) - S - 1e-12));
    const long kmax = static_cast<long>(std::floor(std::ldexp(xb, j) + 1e-12));
    return {kmin, kmax};
}

AxisAtom axis_atom(const WaveletBasis& basis, int type, int j, long k, const Grid1D& g, std::size_t lo, std::size_t hi) {
    const int S = basis.support();
    const double a = std::ldexp(static_cast<double>(k), -j);
    const double b = std::ldexp(static_cast<double>(k + S), -j);
    const double ia = std::ceil((a - g.origin) / g.spacing - 1e-9);
    const double ib = std::floor((b - g.origin) / g.spacing + 1e-9);
    AxisAtom atom;
    if (ib < static_cast<double>(lo) || ia > static_cast<double>(hi)) return atom;
    const auto first = static_cast<std::size_t>(std::max(ia, static_cast<double>(lo)));
    const auto last = static_cast<std::size_t>(std::min(ib, static_cast<double>(hi)));
    atom.first = first;
    atom.values.resize(last + 1 - first);
    for (std::size_t i = first; i <= last; ++i) atom.values[i - first] = basis.eval(type, j, k, g.point(i));
    return atom;
}

void check_scales(const Grid1D& g, int j_min, int j_max) {
    if (j_min > j_max) throw Error("analyze: j_min exceeds j_max");
    const int bound = max_analysis_scale(g);
    if (j_max > bound) {
        std::ostringstream msg;
        msg << "analyze: j_max = " << j_max << " is too fine for grid spacing " << g.spacing << "; admissible bound is "
            << bound;
        throw Error(msg.str());
    }
    if (j_min < -kMaxScale) throw Error("analyze: j_min below -" + std::to_string(kMaxScale));
}

WaveletCoefficients analyze_1d(const GridFunction& f, const WaveletBasis& basis, int j_min, int j_max, AnalyzeOptions opt) {
    const auto& g = f.grid();
    check_scales(g, j_min, j_max);
    WaveletCoefficients out(1, j_min, j_max, basis.name());
    const double energy = std::pow(lp_norm(f, 2.0), 2.0);
    out.set_input_energy(energy);
    const auto [ia, ib] = f.support_indices();
    if (ia > ib) return out;
    std::vector<double> wf(g.count);
    for (std::size_t i = ia; i <= ib; ++i) wf[i] = trapezoid_weight(g, i) * f[i];
    const int S = basis.support();
    auto run = [&](int j, int type) {
        const auto [kmin, kmax] = translate_range(j, S, g.point(ia), g.point(ib));
        CoefficientBlock blk{j, type, kmin, 0, static_cast<std::size_t>(kmax - kmin + 1), 1, {}};
        blk.values.assign(blk.nk, 0.0);
        for (long k = kmin; k <= kmax; ++k) {
            const auto atom = axis_atom(basis, type, j, k, g, ia, ib);
            double s = 0.0;
            for (std::size_t i = 0; i < atom.values.size(); ++i) s += wf[atom.first + i] * atom.values[i];
            blk.values[static_cast<std::size_t>(k - kmin)] = s;
        }
        out.put(std::move(blk));
    };
    if (opt.scaling) run(j_min, 0);
    for (int j = j_min; j <= j_max; ++j) run(j, 1);
    return out;
}

WaveletCoefficients analyze_2d(const GridFunction& f, const WaveletBasis& basis, int j_min, int j_max, AnalyzeOptions opt) {
    const auto& g = f.grid2d();
    check_scales(g.x, j_min, j_max);
    check_scales(g.y, j_min, j_max);
    WaveletCoefficients out(2, j_min, j_max, basis.name());
    out.set_input_energy(std::pow(lp_norm(f, 2.0), 2.0));
    const auto [xa, xb] = f.support_indices(0);
    const auto [ya, yb] = f.support_indices(1);
    if (xa > xb) return out;
    const int S = basis.support();
    const auto v = f.values();
    const std::size_t nyr = yb - ya + 1;

    for (int j = j_min; j <= j_max; ++j) {
        const auto [kmin, kmax] = translate_range(j, S, g.x.point(xa), g.x.point(xb));
        const auto [lmin, lmax] = translate_range(j, S, g.y.point(ya), g.y.point(yb));
        const std::size_t nk = static_cast<std::size_t>(kmax - kmin + 1), nl = static_cast<std::size_t>(lmax - lmin + 1);
        const bool with_scaling = opt.scaling && j == j_min;
        // Contract along x for psi^0 and psi^1: B[t][k][iy - ya].
        std::vector<double> B[2];
        std::vector<AxisAtom> ay[2];
        for (int t = 0; t < 2; ++t) {
            B[t].assign(nk * nyr, 0.0);
            for (long k = kmin; k <= kmax; ++k) {
                auto atom = axis_atom(basis, t, j, k, g.x, xa, xb);
                for (std::size_t i = 0; i < atom.values.size(); ++i) atom.values[i] *= trapezoid_weight(g.x, atom.first + i);
                double* row = &B[t][static_cast<std::size_t>(k - kmin) * nyr];
                for (std::size_t iy = ya; iy <= yb; ++iy) {
                    const double* fr = &v[g.index(0, iy)];
                    double s = 0.0;
                    for (std::size_t i = 0; i < atom.values.size(); ++i) s += fr[atom.first + i] * atom.values[i];
                    row[iy - ya] = s;
                }
            }
            for (long l = lmin; l <= lmax; ++l) {
                auto atom = axis_atom(basis, t, j, l, g.y, ya, yb);
                for (std::size_t i = 0; i < atom.values.size(); ++i) atom.values[i] *= trapezoid_weight(g.y, atom.first + i);
                ay[t].push_back(std::move(atom));
            }
        }
        for (int type = with_scaling ? 0 : 1; type <= 3; ++type) {
            const int l1 = type & 1, l2 = type >> 1;
            CoefficientBlock blk{j, type, kmin, lmin, nk, nl, std::vector<double>(nk * nl, 0.0)};
            for (std::size_t il = 0; il < nl; ++il) {
                const auto& atom = ay[l2][il];
                for (std::size_t ik = 0; ik < nk; ++ik) {
                    const double* row = &B[l1][ik * nyr];
                    double s = 0.0;
                    for (std::size_t i = 0; i < atom.values.size(); ++i) s += row[atom.first + i - ya] * atom.values[i];
                    blk.values[il * nk + ik] = s;
                }
            }
            out.put(std::move(blk));
        }
    }
    return out;
}

} // namespace

WaveletCoefficients analyze(const GridFunction& f, const WaveletBasis& basis, int j_min, int j_max, AnalyzeOptions opt) {
    return f.dim() == 1 ? analyze_1d(f, basis, j_min, j_max, opt) : analyze_2d(f, basis, j_min, j_max, opt);
}

GridFunction synthesize(const WaveletCoefficients& c, const WaveletBasis& basis, const Grid1D& grid) {
    if (c.dim() != 1) throw Error("synthesize: 2D coefficients need a 2D grid");
    if (c.basis_name() != basis.name()) throw Error("synthesize: coefficients were computed with " + c.basis_name());
    std::vector<double> out(grid.count, 0.0);
    for (const auto& b : c.blocks()) {
        for (std::size_t ik = 0; ik < b.nk; ++ik) {
            const double v = b.values[ik];
            if (v == 0.0) continue;
            const auto atom = axis_atom(basis, b.type, b.j, b.k0 + static_cast<long>(ik), grid, 0, grid.count - 1);
            for (std::size_t i = 0; i < atom.values.size(); ++i) out[atom.first + i] += v * atom.values[i];
        }
    }
    return GridFunction(grid, std::move(out));
}

GridFunction synthesize(const WaveletCoefficients& c, const WaveletBasis& basis, const Grid2D& grid) {
    if (c.dim() != 2) throw Error("synthesize: 1D coefficients need a 1D grid");
    if (c.basis_name() != basis.name()) throw Error("synthesize: coefficients were computed with " + c.basis_name());
    std::vector<double> out(grid.size(), 0.0);
    const std::size_t nx = grid.x.count, ny = grid.y.count;
    for (const auto& b : c.blocks()) {
        const int l1 = b.type & 1, l2 = b.type >> 1;
        // T[ik][iy] = sum_l c[k][l] psi^{l2}_{j,l}(y_iy)
        std::vector<double> T(b.nk * ny, 0.0);
        bool any = false;
        for (std::size_t il = 0; il < b.nl; ++il) {
            const auto atom = axis_atom(basis, l2, b.j, b.l0 + static_cast<long>(il), grid.y, 0, ny - 1);
            for (std::size_t ik = 0; ik < b.nk; ++ik) {
                const double v = b.values[il * b.nk + ik];
                if (v == 0.0) continue;
                any = true;
                double* row = &T[ik * ny];
                for (std::size_t i = 0; i < atom.values.size(); ++i) row[atom.first + i] += v * atom.values[i];
            }
        }
        if (!any) continue;
        for (std::size_t ik = 0; ik < b.nk; ++ik) {
            const double* row = &T[ik * ny];
            const auto atom = axis_atom(basis, l1, b.j, b.k0 + static_cast<long>(ik), grid.x, 0, nx - 1);
            if (atom.values.empty()) continue;
            for (std::size_t iy = 0; iy < ny; ++iy) {
                const double t = row[iy];
                if (t == 0.0) continue;
                double* o = &out[grid.index(atom.first, iy)];
                for (std::size_t i = 0; i < atom.values.size(); ++i) o[i] += t * atom.values[i];
            }
        }
    }
    return GridFunction(grid, std::move(out));
}

WaveletCoefficients dilate_coeffs(const WaveletCoefficients& c, int m) {
    const long lo = static_cast<long>(c.j_min()) + m, hi = static_cast<long>(c.j_max()) + m;
    if (std::abs(lo) > kMaxScale || std::abs(hi) > kMaxScale) {
        std::ostringstream msg;
        msg << "dilate_coeffs: shifted scale range [" << lo << ", " << hi << "] exceeds |j| <= " << kMaxScale;
        throw Error(msg.str());
    }
    WaveletCoefficients out(c.dim(), static_cast<int>(lo), static_cast<int>(hi), c.basis_name());
    const double factor = 1.0 / std::sqrt(std::ldexp(1.0, m * c.dim()));
    for (auto b : c.blocks()) {
        b.j += m;
        for (auto& v : b.values) v *= factor;
        out.put(std::move(b));
    }
    if (c.input_energy() >= 0.0) out.set_input_energy(c.input_energy() * std::ldexp(1.0, -m * c.dim()));
    return out;
}

void pyramid_step(const std::vector<double>& x, const WaveletBasis& basis, std::vector<double>& approx,
                  std::vector<double>& detail) {
    const std::size_t n = x.size();
    if (n < 2 || n % 2 != 0) throw Error("pyramid_step: input length must be even and positive");
    const auto& h = basis.scaling_filter();
    const auto& g = basis.wavelet_filter();
    approx.assign(n / 2, 0.0);
    detail.assign(n / 2, 0.0);
    for (std::size_t i = 0; i < n / 2; ++i)
        for (std::size_t k = 0; k < h.size(); ++k) {
            const double xv = x[(2 * i + k) % n];
            approx[i] += h[k] * xv;
            detail[i] += g[k] * xv;
        }
}

} // namespace besov
