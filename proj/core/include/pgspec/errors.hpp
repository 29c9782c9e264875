#pragma once

#include <stdexcept>
#include <string>

namespace pgspec {

/// Malformed input document (JSON syntax or schema violation).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Band clusters around distinct potential levels are not separated at the
/// requested coupling; the caller should increase mu.
struct ClusterOverlapError : std::runtime_error {
    ClusterOverlapError(double mu_value, const std::string& what_arg)
        : std::runtime_error(what_arg), mu(mu_value) {}
    double mu;
};

/// Requested grid/diagonalization work exceeds the configured budget.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pgspec
