#pragma once

#include <stdexcept>
#include <string>

namespace besov {

// Raised for every contract violation in the library (bad arguments,
// unsupported configurations, numerical preconditions that do not hold).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace besov
