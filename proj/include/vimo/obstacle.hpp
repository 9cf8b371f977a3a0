#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "vimo/checkers.hpp"
#include "vimo/problem.hpp"
#include "vimo/vector.hpp"

namespace vimo {

/// Uniform finite-difference grid on the unit interval (dimension 1) or the
/// unit square (dimension 2); boundary nodes carry the contact constraint.
struct GridConfig {
    int dimension = 1;       // 1 or 2
    int nodes_per_axis = 3;  // >= 3

    GridConfig(int dim, int nodes);

    double spacing() const { return 1.0 / (nodes_per_axis - 1); }
    std::size_t total_nodes() const;
    Vector node_position(std::size_t idx) const;
    bool is_boundary(std::size_t idx) const;
    std::vector<std::size_t> boundary_nodes() const;
};

/// Quasi-linear coefficients a_ij(x, y, xi) with the growth data (p, g, k,
/// gamma) they are checked against. dy_interval, when present, is the
/// subdifferential interval of the y-dependence and generates the multivalued
/// part of the assembled operator.
struct CoefficientField {
    int space_dim = 1;
    double p = 2.0;
    std::function<double(const Vector& x, double y, const Vector& xi, int i, int j)> a;
    std::function<double(const Vector& x)> g;
    std::vector<double> k;  // k_0 .. k_n
    std::function<double(double)> gamma;
    std::function<std::pair<double, double>(const Vector& x, double y, const Vector& xi, int i)>
        dy_interval;  // optional

    /// a_ij = delta_ij (1 + |y|^(p-2)) with growth data satisfying the checker
    /// by construction (gamma is a ramp that stays zero on the sample envelope
    /// and diverges beyond it).
    static CoefficientField isotropic_default(int dim, double p);

    /// a_ij = delta_ij with the same ramp-style growth data (p = 2).
    static CoefficientField constant_unit(int dim);
};

struct GrowthCheckOptions {
    double sample_range = 3.0;
    double tolerance = 1e-9;
    double continuity_probe = 1e-6;
};

/// Sampled validation of the three coefficient conditions: continuity in x,
/// the growth bound |a_ij| <= g + k_0 |y|^(p-2) + sum k_i |xi_i|^(p-2), and
/// ellipticity sum a_ij xi_i xi_j >= gamma(R) R with diverging gamma.
ClassReport check_growth_conditions(const CoefficientField& coeffs, int samples,
                                    std::uint64_t seed, const GrowthCheckOptions& opt = {});

/// Discrete Signorini-type instance: K constrains boundary node values to be
/// nonnegative, the operator is the finite-difference form of the quasi-linear
/// weak term plus (optionally) the subdifferential part of the nonsmooth
/// coefficient dependence.
struct SignoriniInstance {
    GridConfig grid;
    CoefficientField coeffs;
    std::vector<std::size_t> boundary_index_set;
    VIMOProblem problem;
    bool multivalued = false;
};

/// Assembles the grid instance. Runs the coefficient battery first and throws
/// std::domain_error if it fails. enable_multivalued adds the subdifferential
/// part when the field carries a dy_interval (the switch for single-valued
/// baselines).
SignoriniInstance build_signorini_problem(const GridConfig& grid, const CoefficientField& coeffs,
                                          const Vector& f_grid, bool enable_multivalued = true,
                                          int battery_samples = 200, std::uint64_t seed = 7);

/// Discrete conormal flux at each boundary node (one-sided differences
/// weighted by the coefficients), aligned with instance.boundary_index_set.
std::vector<double> boundary_flux(const SignoriniInstance& instance, const Vector& y);

/// Signorini complementarity at every boundary node: y >= -tol, flux >= -tol,
/// |y * flux| <= tol.
ClassReport verify_complementarity(const SignoriniInstance& instance, const Vector& y, double tol);

/// Linear (1D) / bilinear (2D) interpolation of a grid function onto a finer
/// grid of the same dimension.
Vector prolong(const GridConfig& from, const GridConfig& to, const Vector& values);

}  // namespace vimo
