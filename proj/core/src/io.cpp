#include "besov/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "besov/error.hpp"

namespace besov {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Uniform axis from the sorted distinct coordinates seen in a file.
Grid1D axis_from(const std::vector<double>& coords) {
    if (coords.size() < 2) throw Error("CSV: need at least two distinct coordinates per axis");
    const double h = (coords.back() - coords.front()) / static_cast<double>(coords.size() - 1);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const double expect = coords.front() + h * static_cast<double>(i);
        if (std::abs(coords[i] - expect) > 1e-9 * std::max(1.0, std::abs(expect)))
            throw Error("CSV: coordinates are not uniformly spaced");
    }
    return Grid1D::make(coords.front(), h, coords.size());
}

nlohmann::json axis_json(const Grid1D& g) {
    return {{"origin", g.origin}, {"spacing", g.spacing}, {"count", g.count}};
}

Grid1D axis_from_json(const nlohmann::json& j) {
    return Grid1D::make(j.at("origin").get<double>(), j.at("spacing").get<double>(), j.at("count").get<std::size_t>());
}

} // namespace

void write_csv(const GridFunction& f, std::ostream& out) {
    const auto v = f.values();
    if (f.dim() == 1) {
        const auto& g = f.grid();
        out << "x,value\n";
        for (std::size_t i = 0; i < g.count; ++i) out << fmt(g.point(i)) << ',' << fmt(v[i]) << '\n';
        return;
    }
    const auto& g = f.grid2d();
    out << "x,y,value\n";
    for (std::size_t iy = 0; iy < g.y.count; ++iy)
        for (std::size_t ix = 0; ix < g.x.count; ++ix)
            out << fmt(g.x.point(ix)) << ',' << fmt(g.y.point(iy)) << ',' << fmt(v[g.index(ix, iy)]) << '\n';
}

std::string to_csv(const GridFunction& f) {
    std::ostringstream s;
    write_csv(f, s);
    return s.str();
}

GridFunction read_csv(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw Error("CSV: empty input");
    if (!header.empty() && header.back() == '\r') header.pop_back();
    const bool two_d = header == "x,y,value";
    if (!two_d && header != "x,value") throw Error("CSV: expected header 'x,value' or 'x,y,value', got '" + header + "'");

    std::vector<double> xs, ys, vals;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<double> cols;
        while (std::getline(row, cell, ',')) {
            try {
                cols.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw Error("CSV: bad number on line " + std::to_string(lineno));
            }
        }
        if (cols.size() != (two_d ? 3u : 2u)) throw Error("CSV: wrong column count on line " + std::to_string(lineno));
        xs.push_back(cols[0]);
        if (two_d) ys.push_back(cols[1]);
        vals.push_back(cols.back());
    }
    if (!two_d) return GridFunction(axis_from(xs), std::move(vals));

    // Rows are written with x fastest; recover the axes from the first row and column.
    std::size_t nx = 1;
    while (nx < ys.size() && ys[nx] == ys[0]) ++nx;
    if (vals.size() % nx != 0) throw Error("CSV: 2D data is not a full rectangular grid");
    const std::size_t ny = vals.size() / nx;
    std::vector<double> ax(xs.begin(), xs.begin() + static_cast<long>(nx));
    std::vector<double> ay(ny);
    for (std::size_t iy = 0; iy < ny; ++iy) ay[iy] = ys[iy * nx];
    return GridFunction(Grid2D::make(axis_from(ax), axis_from(ay)), std::move(vals));
}

GridFunction load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_csv(in);
}

void save_csv(const GridFunction& f, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    write_csv(f, out);
}

std::string to_json(const GridFunction& f) {
    nlohmann::json j;
    if (f.dim() == 1)
        j["grid"] = axis_json(f.grid());
    else
        j["grid"] = {{"x", axis_json(f.grid2d().x)}, {"y", axis_json(f.grid2d().y)}};
    j["values"] = std::vector<double>(f.values().begin(), f.values().end());
    return j.dump();
}

GridFunction grid_function_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        const auto& g = j.at("grid");
        auto values = j.at("values").get<std::vector<double>>();
        if (g.contains("x")) return GridFunction(Grid2D::make(axis_from_json(g.at("x")), axis_from_json(g.at("y"))), std::move(values));
        return GridFunction(axis_from_json(g), std::move(values));
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("grid function JSON: ") + e.what());
    }
}

} // namespace besov
