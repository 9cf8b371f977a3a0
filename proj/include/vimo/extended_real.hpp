#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vimo {

/// Extended-real conventions for proper convex functions. Values live in
/// R ∪ {+infinity}; NaN and -infinity are rejected at the oracle boundary.
/// Subtraction with two infinite operands is undefined and raises.
namespace ext {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

inline bool is_finite(double v) { return std::isfinite(v); }

/// Validates a value produced by a function-value oracle.
inline double checked(double v, const char* what) {
    if (std::isnan(v) || v == -infinity) {
        throw std::domain_error(std::string(what) + ": oracle returned NaN or -infinity");
    }
    return v;
}

/// a + b with inf + finite = inf.
inline double add(double a, double b) {
    if (a == infinity || b == infinity) return infinity;
    return a + b;
}

/// a - b with inf - finite = inf; inf - inf raises.
inline double sub(double a, double b) {
    if (a == infinity && b == infinity) {
        throw std::domain_error("extended real: infinity - infinity is undefined");
    }
    if (a == infinity) return infinity;
    if (b == infinity) return -infinity;
    return a - b;
}

}  // namespace ext

}  // namespace vimo
