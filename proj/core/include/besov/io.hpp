#pragma once

#include <iosfwd>
#include <string>

#include "besov/grid.hpp"

namespace besov {

// CSV with header `x,value` (1D) or `x,y,value` (2D), 17 significant digits.
void write_csv(const GridFunction& f, std::ostream& out);
std::string to_csv(const GridFunction& f);
// Inverse of write_csv; the grid is recovered from the coordinate columns,
// which must be uniform.
GridFunction read_csv(std::istream& in);
GridFunction load_csv(const std::string& path);
void save_csv(const GridFunction& f, const std::string& path);

// {"grid":{"origin","spacing","count"},"values":[...]}; 2D grids store
// "grid":{"x":{...},"y":{...}}.
std::string to_json(const GridFunction& f);
GridFunction grid_function_from_json(const std::string& text);

} // namespace besov
