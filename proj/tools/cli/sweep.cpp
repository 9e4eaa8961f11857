#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "besov/error.hpp"
#include "besov/inequalities.hpp"
#include "besov/random.hpp"
#include "besov/reconstruct.hpp"
#include "besov/zoo.hpp"

namespace besov::cli {

using json = nlohmann::json;

SlopeFit fit_slope(const std::vector<std::pair<double, double>>& rows) {
    if (rows.size() < 3) throw Error("fit_slope: need at least 3 rows");
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : rows) {
        if (!(x > 0.0) || !(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
            throw Error("fit_slope: values must be positive and finite");
        const double lx = std::log(x), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(rows.size());
    const double den = n * sxx - sx * sx;
    if (!(std::abs(den) > 1e-12 * n * sxx)) throw Error("fit_slope: x values are all equal");
    SlopeFit f;
    f.n = rows.size();
    f.slope = (n * sxy - sx * sy) / den;
    f.intercept = (sy - f.slope * sx) / n;
    double ss = 0.0;
    for (const auto& [x, y] : rows) {
        const double r = std::log(y) - (f.intercept + f.slope * std::log(x));
        ss += r * r;
    }
    f.residual = std::sqrt(ss / n);
    return f;
}

namespace {

std::string trim(std::string s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// "2^-3" -> (true, -3); plain numbers -> (false, value)
std::pair<bool, double> parse_atom(const std::string& text) {
    const auto t = trim(text);
    if (t == "inf" || t == "Inf" || t == "infinity") return {false, kInf};
    std::size_t used = 0;
    if (t.rfind("2^", 0) == 0) {
        const double e = std::stod(t.substr(2), &used);
        if (used != t.size() - 2) throw Error("parse_values: bad power '" + t + "'");
        return {true, e};
    }
    const double v = std::stod(t, &used);
    if (used != t.size()) throw Error("parse_values: bad number '" + t + "'");
    return {false, v};
}

} // namespace

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        try {
            if (const auto dots = item.find(".."); dots != std::string::npos) {
                const auto [pa, a] = parse_atom(item.substr(0, dots));
                const auto [pb, b] = parse_atom(item.substr(dots + 2));
                if (pa != pb) throw Error("parse_values: range ends must both be powers of two or plain numbers");
                if (a != std::round(a) || b != std::round(b)) throw Error("parse_values: range ends must be integral");
                const int step = b >= a ? 1 : -1;
                for (int k = static_cast<int>(a);; k += step) {
                    out.push_back(pa ? std::ldexp(1.0, k) : static_cast<double>(k));
                    if (k == static_cast<int>(b)) break;
                }
            } else {
                const auto [pw, v] = parse_atom(item);
                out.push_back(pw ? std::exp2(v) : v);
            }
        } catch (const std::logic_error&) {
            throw Error("parse_values: cannot parse '" + item + "'");
        }
    }
    if (out.empty()) throw Error("parse_values: empty list '" + text + "'");
    return out;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double RunConfig::param(const std::string& key, double fallback) const {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

namespace {

json numbers_json(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(std::isinf(x) ? json("inf") : json(x));
    return a;
}

std::vector<double> numbers_from(const json& j) {
    if (j.is_string()) return parse_values(j.get<std::string>());
    std::vector<double> out;
    for (const auto& x : j) out.push_back(x.is_string() ? parse_values(x.get<std::string>()).at(0) : x.get<double>());
    return out;
}

} // namespace

json RunConfig::to_json() const {
    json j;
    j["command"] = command;
    j["b"] = numbers_json(b);
    j["p"] = numbers_json(p);
    j["s"] = numbers_json(s);
    j["seeds"] = seeds;
    j["alpha"] = numbers_json(alpha);
    j["m"] = numbers_json(m);
    j["labels"] = labels;
    json pj = json::object();
    for (const auto& [k, v] : params) pj[k] = std::isinf(v) ? json("inf") : json(v);
    j["params"] = pj;
    j["geometry"] = geometry;
    j["out_dir"] = out_dir;
    j["jobs"] = jobs;
    return j;
}

void RunConfig::merge_json(const json& j) {
    if (!j.is_object()) throw Error("config: expected a JSON object");
    if (j.contains("command")) command = j["command"].get<std::string>();
    if (j.contains("b")) b = numbers_from(j["b"]);
    if (j.contains("p")) p = numbers_from(j["p"]);
    if (j.contains("s")) s = numbers_from(j["s"]);
    if (j.contains("alpha")) alpha = numbers_from(j["alpha"]);
    if (j.contains("m")) m = numbers_from(j["m"]);
    if (j.contains("seeds")) seeds = j["seeds"].get<std::vector<std::uint64_t>>();
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("params"))
        for (const auto& [k, v] : j["params"].items()) params[k] = v.is_string() ? parse_values(v.get<std::string>()).at(0) : v.get<double>();
    if (j.contains("geometry")) geometry = j["geometry"].get<std::string>();
    if (j.contains("out_dir")) out_dir = j["out_dir"].get<std::string>();
    if (j.contains("jobs")) jobs = j["jobs"].get<int>();
}

void RunConfig::validate() const {
    if (jobs < 1) throw Error("config: jobs must be >= 1");
    if (seeds.empty()) throw Error("config: seed list is empty");
    if (out_dir.empty()) throw Error("config: output directory is empty");
    for (double x : b)
        if (!(x > 0.0) || !std::isfinite(x)) throw Error("config: b values must be positive");
    for (double x : p)
        if (!(x >= 1.0) || !std::isfinite(x)) throw Error("config: p values must lie in [1, inf)");
}

std::string SweepResult::csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
    out += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
        out += "\n";
    }
    return out;
}

std::string SweepResult::json() const {
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["pipeline"] = pipeline;
    j["config"] = config;
    j["fingerprint"] = fingerprint;
    j["columns"] = columns;
    j["rows"] = reports;
    nlohmann::json fj = nlohmann::json::array();
    for (const auto& f : fits)
        fj.push_back({{"group", f.group},
                      {"quantity", f.quantity},
                      {"slope", f.fit.slope},
                      {"intercept", f.fit.intercept},
                      {"residual", f.fit.residual},
                      {"n", f.fit.n}});
    j["fits"] = fj;
    j["failures"] = failures;
    j["passed"] = passed();
    return j.dump(2) + "\n";
}

namespace {

// Short form for group keys and messages.
std::string tag(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Tuple {
    double b = 0.0;
    double p = 2.0;
    double s = 0.0;
    double alpha = 1.0;
    int m = 0;
    std::uint64_t seed = 1;
    std::string label;
};

std::string describe(const Tuple& t) {
    std::ostringstream o;
    if (t.b > 0.0) o << "b=" << tag(t.b) << " ";
    else o << "m=" << t.m << " alpha=" << tag(t.alpha) << " ";
    o << "p=" << tag(t.p);
    if (t.s > 0.0) o << " s=" << tag(t.s);
    o << " seed=" << t.seed;
    if (!t.label.empty()) o << " label=" << t.label;
    return o.str();
}

struct Outcome {
    std::vector<std::string> cells;
    nlohmann::json report;
    std::vector<std::string> failures;
    bool ok = true;
};

struct Pipeline {
    std::vector<std::string> columns;
    std::function<std::vector<Tuple>(const RunConfig&)> tuples;
    std::function<Outcome(const Tuple&, const RunConfig&)> eval;
    std::function<void(SweepResult&, const std::vector<Tuple>&, const std::vector<Outcome>&, const RunConfig&)> finish;
    std::function<nlohmann::json(const RunConfig&)> fingerprint;
};

std::vector<double> or_default(const std::vector<double>& v, const std::string& fallback) {
    return v.empty() ? parse_values(fallback) : v;
}

std::string flag(bool v) { return v ? "1" : "0"; }

std::string num(double v) { return format_number(v); }


nlohmann::json grid_json(const Grid1D& g) {
    return {{"origin", g.origin}, {"spacing", g.spacing}, {"count", g.count}};
}

nlohmann::json base_fingerprint() {
    return {{"schema", kSchemaVersion},
            {"basis", "db4"},
            {"basis_order", 4},
            {"lowpass_profile", "smooth_ramp exp(-1/t) normalized"},
            {"split", "spectral omega=0.5"},
            {"partition", "shepard bumps radius 2b"},
            {"delta_default", kDefaultDelta}};
}

const WaveletBasis& db4() {
    static const WaveletBasis b = WaveletBasis::daubechies(4);
    return b;
}

ZooSpec zoo_by_label(const std::string& label) {
    for (const auto& s : standard_zoo())
        if (s.label == label) return s;
    throw Error("unknown zoo label '" + label + "'");
}

std::vector<std::string> zoo_labels() {
    std::vector<std::string> out;
    for (const auto& s : standard_zoo()) out.push_back(s.label);
    return out;
}

// Fits `quantity` (column index) against b for every group key.
void fit_groups(SweepResult& r, const std::vector<Tuple>& tuples, const std::vector<Outcome>& outs,
                const std::function<std::string(const Tuple&)>& key, const std::string& quantity,
                const std::function<double(const Outcome&)>& value,
                const std::function<double(const Tuple&)>& abscissa = [](const Tuple& t) { return t.b; }) {
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::pair<double, double>>> groups;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        if (!outs[i].ok) continue;
        const auto k = key(tuples[i]);
        if (!groups.count(k)) order.push_back(k);
        groups[k].emplace_back(abscissa(tuples[i]), value(outs[i]));
    }
    for (const auto& k : order) {
        const auto& rows = groups[k];
        std::set<double> xs;
        for (const auto& row : rows) xs.insert(row.first);
        if (xs.size() < 3) continue;
        try {
            r.fits.push_back({k, quantity, fit_slope(rows)});
        } catch (const Error& e) {
            r.failures.push_back(k + ": " + quantity + " fit failed: " + e.what());
        }
    }
}

Grid1D fine_grid(const RunConfig& cfg) {
    return Grid1D::span(-8.0, 8.0, std::ldexp(1.0, -static_cast<int>(cfg.param("grid_exponent", 12))));
}

ZooSpec smoothness_spec(const Tuple& t, const RunConfig& cfg) {
    return besov_random_spec(t.s, t.p, cfg.param("q", kInf), 0, static_cast<int>(cfg.param("j_hi", 10)), -4.0, 4.0,
                             t.seed);
}

void check_slopes(SweepResult& r, const std::string& quantity, const RunConfig& cfg, bool per_s) {
    const double tol = cfg.param("slope_tol", 0.15);
    const bool designed = std::isinf(cfg.param("q", kInf));
    for (const auto& f : r.fits) {
        if (f.quantity != quantity || !per_s) continue;
        const auto pos = f.group.find("s=");
        const double s = std::stod(f.group.substr(pos + 2));
        if (designed && std::abs(f.fit.slope - s) > tol)
            r.failures.push_back(f.group + ": " + quantity + " slope " + tag(f.fit.slope) + " outside s +- " + tag(tol));
        if (!designed && f.fit.slope < s - 0.1)
            r.failures.push_back(f.group + ": " + quantity + " slope " + tag(f.fit.slope) + " below s - 0.1");
    }
}

std::string s_group(const Tuple& t) { return "s=" + tag(t.s) + ",p=" + tag(t.p) + ",seed=" + std::to_string(t.seed); }

std::map<std::string, Pipeline> registry() {
    std::map<std::string, Pipeline> reg;

    reg["sampling"] = Pipeline{
        {"b", "p", "seed", "N", "gate", "hypothesis_ok", "gate_marginal", "trace_ratio", "cell_ratio", "cell_in_band"},
        [](const RunConfig& cfg) {
            std::vector<Tuple> out;
            for (double b : or_default(cfg.b, "2^-3..2^-7"))
                for (double p : or_default(cfg.p, "2"))
                    for (auto seed : cfg.seeds) out.push_back({b, p, 0.0, 1.0, 0, seed, ""});
            return out;
        },
        [](const Tuple& t, const RunConfig& cfg) {
            const auto grid = default_grid_1d();
            const auto f = make(bandlimited_spec(cfg.param("band", 1.0), t.seed), grid).f;
            const double w = cfg.param("window", 14.0);
            const auto seq = SamplingSequence1D::random(t.b, -w, w, Rng::derive(t.seed, 1));
            SamplingOptions opt;
            opt.p = t.p;
            opt.delta = cfg.param("delta", kDefaultDelta);
            const auto r = sampling_ratio(f, seq, opt);
            Outcome o;
            o.cells = {num(t.b), num(t.p), std::to_string(t.seed), num(r.N), num(r.gate), flag(r.hypothesis_ok),
                       flag(r.gate_marginal), num(r.trace_ratio), num(r.cell_ratio), flag(r.cell_in_band)};
            o.report = nlohmann::json::parse(r.to_json());
            if (r.hypothesis_ok && !r.cell_in_band && !r.gate_marginal)
                o.failures.push_back(describe(t) + ": cell ratio " + num(r.cell_ratio) + " outside [1/2, 5/2] below the gate");
            return o;
        },
        [](SweepResult&, const std::vector<Tuple>&, const std::vector<Outcome>&, const RunConfig&) {},
        [](const RunConfig& cfg) {
            auto fp = base_fingerprint();
            fp["grid"] = grid_json(default_grid_1d());
            fp["function"] = "bandlimited-random band=" + num(cfg.param("band", 1.0));
            return fp;
        }};

    reg["uncertainty"] = Pipeline{
        {"b", "p", "seed", "epsilon", "besov_norm", "lp_norm", "c_emp", "hypothesis_met"},
        [](const RunConfig& cfg) {
            std::vector<Tuple> out;
            for (double b : or_default(cfg.b, "2^-4..2^-9"))
                for (double p : or_default(cfg.p, "1,2"))
                    for (auto seed : cfg.seeds) out.push_back({b, p, 0.0, 1.0, 0, seed, ""});
            return out;
        },
        [](const Tuple& t, const RunConfig& cfg) {
            const int k = static_cast<int>(std::ceil(-std::log2(t.b) - 1e-9));
            const auto grid = Grid1D::span(-4.0, 4.0, std::ldexp(1.0, -std::max(10, k + 3)));
            const auto z = make(gap_spline_spec(t.b, cfg.param("lo", -3.0), cfg.param("hi", 3.0), t.seed), grid);
            const auto u = uncertainty_check(z.f, *z.sequence, t.p, db4());
            Outcome o;
            o.cells = {num(t.b), num(t.p), std::to_string(t.seed), num(u.epsilon), num(u.besov_norm), num(u.lp_norm),
                       num(u.c_emp), flag(u.hypothesis_met)};
            o.report = nlohmann::json::parse(u.to_json());
            if (!u.hypothesis_met || !(u.c_emp > 0.0)) {
                o.failures.push_back(describe(t) + ": gap function without positive c_emp");
                o.ok = false;
            }
            return o;
        },
        [](SweepResult& r, const std::vector<Tuple>& ts, const std::vector<Outcome>& os, const RunConfig&) {
            fit_groups(r, ts, os, [](const Tuple& t) { return "p=" + tag(t.p) + ",seed=" + std::to_string(t.seed); },
                       "c_emp", [](const Outcome& o) { return std::stod(o.cells[6]); });
        },
        [](const RunConfig& cfg) {
            auto fp = base_fingerprint();
            fp["grid"] = "[-4,4], spacing min(2^-10, 2^-(k+3)) for b = 2^-k";
            fp["function"] = "gap-spline on [" + num(cfg.param("lo", -3.0)) + "," + num(cfg.param("hi", 3.0)) + "]";
            return fp;
        }};

    reg["intb"] = Pipeline{
        {"label", "b", "p", "seed", "lhs", "rhs", "ratio"},
        [](const RunConfig& cfg) {
            std::vector<Tuple> out;
            const auto labels = cfg.labels.empty() ? zoo_labels() : cfg.labels;
            for (const auto& label : labels)
                for (double p : or_default(cfg.p, "1,2"))
                    for (double b : or_default(cfg.b, "2^-3..2^-6"))
                        for (auto seed : cfg.seeds) out.push_back({b, p, 0.0, 1.0, 0, seed, label});
            return out;
        },
        [](const Tuple& t, const RunConfig& cfg) {
            const auto grid = default_grid_1d();
            const auto f = make(zoo_by_label(t.label), grid).f;
            const double w = cfg.param("window", 15.0);
            const auto seq = SamplingSequence1D::random(t.b, -w, w, Rng::derive(t.seed, 2));
            const auto d = intB_diagnostic(f, seq, t.p, db4());
            Outcome o;
            o.cells = {t.label, num(t.b), num(t.p), std::to_string(t.seed), num(d.lhs), num(d.rhs), num(d.ratio)};
            o.report = {{"label", t.label}, {"b", t.b}, {"p", t.p}, {"lhs", d.lhs}, {"rhs", d.rhs}, {"ratio", d.ratio}};
            if (!std::isfinite(d.ratio)) o.failures.push_back(describe(t) + ": non-finite ratio");
            o.ok = std::isfinite(d.ratio) && d.ratio > 0.0;
            return o;
        },
        [](SweepResult& r, const std::vector<Tuple>& ts, const std::vector<Outcome>& os, const RunConfig& cfg) {
            fit_groups(r, ts, os,
                       [](const Tuple& t) { return t.label + ",p=" + tag(t.p) + ",seed=" + std::to_string(t.seed); },
                       "ratio", [](const Outcome& o) { return std::stod(o.cells[6]); });
            // Slope against b; the ratio may not grow as b halves.
            for (const auto& f : r.fits)
                if (-f.fit.slope > cfg.param("trend_tol", 0.1))
                    r.failures.push_back(f.group + ": ratio grows as b halves (slope " + tag(-f.fit.slope) + ")");
        },
        [](const RunConfig&) {
            auto fp = base_fingerprint();
            fp["grid"] = grid_json(default_grid_1d());
            return fp;
        }};

    reg["heisenberg"] = Pipeline{
        {"label", "alpha", "p", "m", "product"},
        [](const RunConfig& cfg) {
            std::vector<Tuple> out;
            const auto labels = cfg.labels.empty() ? std::vector<std::string>{"bump-r1", "bump-r0.2", "gauss-w1"}
                                                   : cfg.labels;
            for (const auto& label : labels)
                for (double alpha : or_default(cfg.alpha, "1"))
                    for (double p : or_default(cfg.p, "2"))
                        for (double m : or_default(cfg.m, "-2..0"))
                            out.push_back({0.0, p, 0.0, alpha, static_cast<int>(m), 1, label});
            return out;
        },
        [](const Tuple& t, const RunConfig&) {
            const auto grid = default_grid_1d();
            const auto f = make(dilate_spec(zoo_by_label(t.label), t.m), grid).f;
            const double h = heisenberg_product(f, t.alpha, t.p, db4());
            Outcome o;
            o.cells = {t.label, num(t.alpha), num(t.p), std::to_string(t.m), num(h)};
            o.report = {{"label", t.label}, {"alpha", t.alpha}, {"p", t.p}, {"m", t.m}, {"product", h}};
            if (!(h > 0.0) || !std::isfinite(h)) {
                o.failures.push_back(describe(t) + ": product not positive");
                o.ok = false;
            }
            return o;
        },
        [](SweepResult& r, const std::vector<Tuple>& ts, const std::vector<Outcome>& os, const RunConfig& cfg) {
            fit_groups(
                r, ts, os, [](const Tuple& t) { return t.label + ",alpha=" + tag(t.alpha) + ",p=" + tag(t.p); },
                "product", [](const Outcome& o) { return std::stod(o.cells[4]); },
                [](const Tuple& t) { return std::ldexp(1.0, -t.m); });
            std::map<std::string, std::pair<double, double>> range;
            for (std::size_t i = 0; i < ts.size(); ++i) {
                if (!os[i].ok) continue;
                const auto k = ts[i].label + ",alpha=" + tag(ts[i].alpha) + ",p=" + tag(ts[i].p);
                const double v = std::stod(os[i].cells[4]);
                auto [it, fresh] = range.try_emplace(k, v, v);
                it->second = {std::min(it->second.first, v), std::max(it->second.second, v)};
            }
            for (const auto& [k, mm] : range)
                if (mm.second - mm.first > cfg.param("invariance_tol", 1e-4) * mm.second)
                    r.failures.push_back(k + ": product varies under dilation by " +
                                         tag((mm.second - mm.first) / mm.second));
        },
        [](const RunConfig&) {
            auto fp = base_fingerprint();
            fp["grid"] = grid_json(default_grid_1d());
            return fp;
        }};

    reg["approx"] = Pipeline{
        {"b", "p", "s", "seed", "tail", "pl_error", "lp_norm"},
        [](const RunConfig& cfg) {
            std::vector<Tuple> out;
            for (double s : or_default(cfg.s, "0.6,0.9"))
                for (double p : or_default(cfg.p, "2"))
                    for (auto seed : cfg.seeds)
                        for (double b : or_default(cfg.b, "2^-3..2^-7")) out.push_back({b, p, s, 1.0, 0, seed, ""});
            return out;
        },
        [](const Tuple& t, const RunConfig& cfg) {
            const auto grid = fine_grid(cfg);
            const auto f = make(smoothness_spec(t, cfg), grid).f;
            const auto seq = SamplingSequence1D::random(t.b, -6.0, 6.0, Rng::derive(t.seed, 3));
            const double tail = lp_norm(bandlimited_split(f, t.b).h, t.p);
            const double pl = lp_norm(f - interp_pl(trace(f, seq), seq, grid), t.p);
            const double norm = lp_norm(f, t.p);
            Outcome o;
            o.cells = {num(t.b), num(t.p), num(t.s), std::to_string(t.seed), num(tail), num(pl), num(norm)};
            o.report = {{"b", t.b}, {"p", t.p}, {"s", t.s}, {"seed", t.seed}, {"tail", tail}, {"pl_error", pl},
                        {"lp_norm", norm}};
            return o;
        },
        [](SweepResult& r, const std::vector<Tuple>& ts, const std::vector<Outcome>& os, const RunConfig& cfg) {
            fit_groups(r, ts, os, s_group, "tail", [](const Outcome& o) { return std::stod(o.cells[4]); });
            fit_groups(r, ts, os, s_group, "pl_error", [](const Outcome& o) { return std::stod(o.cells[5]); });
            check_slopes(r, "tail", cfg, true);
            check_slopes(r, "pl_error", cfg, true);
        },
        [](const RunConfig& cfg) {
            auto fp = base_fingerprint();
            fp["grid"] = grid_json(fine_grid(cfg));
            fp["function"] = "besov-random j=0.." + num(cfg.param("j_hi", 10)) + " q=" + num(cfg.param("q", kInf));
            return fp;
        }};

    reg["reconstruct"] = Pipeline{
        {"b", "p", "s", "seed", "total_error", "h_norm", "g_error", "h_reconstruction", "relative_error", "iterations"},
        [](const RunConfig& cfg) {
            std::vector<Tuple> out;
            for (double s : or_default(cfg.s, "0.9"))
                for (double p : or_default(cfg.p, "2"))
                    for (auto seed : cfg.seeds)
                        for (double b : or_default(cfg.b, "2^-3..2^-7")) out.push_back({b, p, s, 1.0, 0, seed, ""});
            return out;
        },
        [](const Tuple& t, const RunConfig& cfg) {
            const auto grid = fine_grid(cfg);
            const auto f = make(smoothness_spec(t, cfg), grid).f;
            const auto seq = SamplingSequence1D::random(t.b, -6.0, 6.0, Rng::derive(t.seed, 3));
            ReconstructionConfig rc;
            rc.c = cfg.param("c", 0.5);
            if (cfg.params.count("a")) rc.a = cfg.param("a", 0.25);
            rc.iterations = static_cast<int>(cfg.param("iters", 12));
            rc.p = t.p;
            const Reconstructor rec(seq, grid, rc);
            const auto rep = full_pipeline(f, rec, {}, t.s);
            Outcome o;
            o.cells = {num(t.b), num(t.p), num(t.s), std::to_string(t.seed), num(*rep.total_error), num(*rep.h_norm),
                       num(*rep.g_error), num(*rep.h_reconstruction), num(*rep.relative_error),
                       std::to_string(rep.iterations)};
            o.report = nlohmann::json::parse(rep.to_json());
            if (rep.diverged) o.failures.push_back(describe(t) + ": iteration diverged");
            return o;
        },
        [](SweepResult& r, const std::vector<Tuple>& ts, const std::vector<Outcome>& os, const RunConfig& cfg) {
            fit_groups(r, ts, os, s_group, "total_error", [](const Outcome& o) { return std::stod(o.cells[4]); });
            check_slopes(r, "total_error", cfg, true);
        },
        [](const RunConfig& cfg) {
            auto fp = base_fingerprint();
            fp["grid"] = grid_json(fine_grid(cfg));
            fp["c"] = cfg.param("c", 0.5);
            fp["iterations"] = cfg.param("iters", 12);
            return fp;
        }};

    return reg;
}

} // namespace

std::vector<std::string> sweep_pipelines() {
    std::vector<std::string> out;
    for (const auto& [k, v] : registry()) out.push_back(k);
    return out;
}

SweepResult run_sweep(const RunConfig& cfg) {
    cfg.validate();
    const auto reg = registry();
    const auto it = reg.find(cfg.command);
    if (it == reg.end()) throw Error("sweep: unknown pipeline '" + cfg.command + "'");
    const auto& pl = it->second;
    const auto tuples = pl.tuples(cfg);
    std::vector<Outcome> outs(tuples.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tuples.size(); i = next++) {
            try {
                outs[i] = pl.eval(tuples[i], cfg);
            } catch (const std::exception& e) {
                outs[i].ok = false;
                outs[i].failures.push_back("tuple " + std::to_string(i) + " (" + describe(tuples[i]) + "): " + e.what());
            }
        }
    };
    const int jobs = std::min<int>(cfg.jobs, static_cast<int>(std::max<std::size_t>(tuples.size(), 1)));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    SweepResult r;
    r.pipeline = cfg.command;
    r.columns = pl.columns;
    r.config = cfg.to_json();
    r.fingerprint = pl.fingerprint(cfg);
    for (std::size_t i = 0; i < tuples.size(); ++i) {
        for (const auto& f : outs[i].failures) r.failures.push_back(f);
        if (outs[i].cells.empty()) continue;
        r.rows.push_back(outs[i].cells);
        r.reports.push_back(outs[i].report);
    }
    pl.finish(r, tuples, outs, cfg);
    return r;
}

void write_sweep(const SweepResult& r, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    const auto base = std::filesystem::path(out_dir) / ("sweep_" + r.pipeline);
    std::ofstream csv(base.string() + ".csv", std::ios::binary);
    std::ofstream js(base.string() + ".json", std::ios::binary);
    if (!csv || !js) throw Error("cannot write sweep outputs under " + out_dir);
    csv << r.csv();
    js << r.json();
}

} // namespace besov::cli
