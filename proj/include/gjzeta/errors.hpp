#pragma once

#include <stdexcept>
#include <string>

namespace gjzeta {

// Field / ring operations on invalid input (inverting zero, zero divisors).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A p-adic value could not be resolved at the working precision.  Callers
// that own a precision budget catch this and retry with a larger N.
struct PrecisionError : std::runtime_error {
    int suggested_precision;
    explicit PrecisionError(const std::string& what, int suggested = 0)
        : std::runtime_error(what), suggested_precision(suggested) {}
};

// A flag-table level is too small for the requested operation.
struct LevelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Inconsistent inputs (incompatible data, bad character tables, bad config).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration or level grew past the configured budget.  Distinct from
// failure: the caller reports the check as inconclusive.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gjzeta
