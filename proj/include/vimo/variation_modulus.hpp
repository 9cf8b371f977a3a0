#pragma once

#include <functional>
#include <string>

namespace vimo {

/// Modulus C(r1, r2) entering the semi-bounded-variation inequality. A valid
/// modulus is continuous with C(r1, tau r2)/tau -> 0 as tau -> 0 for fixed
/// positive arguments ("vanishing slope").
struct VariationModulus {
    std::function<double(double, double)> eval;
    std::string description;

    static VariationModulus zero();

    /// C(r1, r2) = coeff * r2^exponent. Vanishing slope requires exponent > 1.
    static VariationModulus power(double coeff, double exponent);

    /// Dyadic vanishing-slope test at (r1, r2): eval(r1, 2^-k r2) * 2^k must be
    /// below tol on the tail of k = 0..depth.
    bool has_vanishing_slope(double r1, double r2, double tol = 1e-6, int depth = 80) const;

    /// Sampled continuity over [0, r1_max] x [0, r2_max]: small argument
    /// perturbations must not jump the value.
    bool looks_continuous(double r1_max, double r2_max, int grid = 16) const;
};

}  // namespace vimo
