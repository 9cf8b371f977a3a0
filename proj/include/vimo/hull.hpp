#pragma once

#include <vector>

#include "vimo/vector.hpp"

namespace vimo {

struct MinNormPoint {
    Vector point;                 // nearest point of the hull to the target
    std::vector<double> weights;  // convex weights over the generators
    double distance = 0.0;
};

/// Nearest point of co{generators} to `target`, computed with away-step
/// Frank-Wolfe (linearly convergent on polytopes). Exact weights for the
/// degenerate one- and two-generator cases.
MinNormPoint nearest_hull_point(const std::vector<Vector>& generators, const Vector& target,
                                int max_iter = 4000, double gap_tol = 1e-14);

/// Distance from `target` to co{generators} + cone{cone_generators}: the cone
/// part is removed by alternating nonnegative projection onto the cone span.
double distance_to_hull_plus_cone(const std::vector<Vector>& generators,
                                  const std::vector<Vector>& cone_generators,
                                  const Vector& target);

/// Projection of v onto the finitely generated cone {sum t_i g_i, t >= 0}
/// (nonnegative least squares by cyclic coordinate descent).
Vector project_onto_cone(const std::vector<Vector>& cone_generators, const Vector& v);

}  // namespace vimo
