#pragma once

#include <memory>
#include <vector>

#include "vimo/convex_function.hpp"
#include "vimo/vector.hpp"

namespace vimo {

/// Nonempty closed convex constraint set, certified by construction kind.
/// Every kind provides membership and (exact or Dykstra-iterated) Euclidean
/// projection; polytopes and boxes additionally expose normal-cone generators
/// and vertices. Value type; cheap to copy.
class ConvexSet {
public:
    enum class Kind { Box, Ball, Polytope, IntersectionWithBall, WholeSpace, Epigraph };

    /// Coordinate box; entries may be -inf / +inf for one-sided constraints.
    static ConvexSet box(std::vector<double> lo, std::vector<double> hi);

    static ConvexSet ball(Vector center, double radius);

    /// { y : <rows_i, y> <= offsets_i }. Rows are normalized internally.
    static ConvexSet polytope(std::vector<Vector> rows, std::vector<double> offsets);

    static ConvexSet whole_space(std::size_t dim);

    static ConvexSet intersect_with_ball(ConvexSet base, Vector center, double radius);

    /// { (y, mu) : y in base ∩ dom phi, mu >= phi(y) } in R^(n+1). Used by the
    /// epigraph lift; projection alternates between the epigraph of phi and
    /// base x R.
    static ConvexSet epigraph(ProperConvexFunction phi, ConvexSet base);

    std::size_t dim() const;
    Kind kind() const;

    bool contains(const Vector& y, double tol = 1e-9) const;

    /// Euclidean projection. Exact for box/ball/whole-space; Dykstra iteration
    /// for polytopes, ball intersections and epigraphs.
    Vector project(const Vector& y) const;

    /// sup over the set of <., xi>; +inf when unbounded in that direction.
    /// Polytope support assumes a bounded polytope (vertex maximum); the
    /// intersection kind returns the min-of-supports upper bound.
    double support(const Vector& xi) const;

    bool is_bounded() const;

    /// Upper bound on sup ||y|| over the set; +inf when unbounded.
    double bounding_radius() const;

    /// Generators of the normal cone at y (active-constraint normals). Only
    /// boxes, polytopes and the whole space carry generator structure; other
    /// kinds throw std::logic_error.
    std::vector<Vector> normal_cone_generators(const Vector& y, double tol = 1e-9) const;

    /// Vertex set of a bounded box or polytope.
    std::vector<Vector> vertices() const;

    /// Largest s >= 0 with y + s d in the set (+inf when the ray stays
    /// inside). Exact for boxes and polytopes, bisection otherwise; y must be
    /// a member.
    double max_ray_step(const Vector& y, const Vector& d) const;

    /// The slice { u : embed(u, anchor) in K } on the listed coordinates.
    ConvexSet restrict(const std::vector<std::size_t>& free, const Vector& anchor) const;

    /// A point of the set suitable as a probe/start center.
    Vector an_interior_point() const;

private:
    struct Impl;
    explicit ConvexSet(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

}  // namespace vimo
