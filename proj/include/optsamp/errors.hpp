#pragma once

#include <stdexcept>
#include <string>

namespace optsamp {

/// Malformed input: bad dimensions, invalid distributions, parse failures.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally sound input for which the request cannot be satisfied:
/// unidentifiable sets under the plain trace objective, empty budget polytopes,
/// exhausted resampling budgets.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace optsamp
