#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "vimo/vector.hpp"

namespace vimo {

/// Oracle for a set-valued map A: R^n -> 2^(R^n). The map is touched only
/// through its upper support function sup_{d in A(y)} <d, xi>, selections from
/// the closed convex hull of A(y), and norm bounds on the image. Support
/// values of A and of its closed convex hull coincide, so the oracle cannot
/// (and need not) distinguish the two.
///
/// Contract:
///   - support(y, .) is positively homogeneous and subadditive;
///     support(y, 0) = 0 exactly.
///   - selection(y, hint) lies in co A(y); for hint != 0 it approaches the
///     argsup of <., hint> over co A(y).
///   - norm_bounds(y) = (m, M) with m <= inf ||d||, sup ||d|| <= M over A(y)
///     for constructor-built maps; combinators may widen the interval.
///   - The map is strong: the oracles are defined for every y.
/// All oracles must be pure; instances are immutable and safe to share.
class SetValuedOperator {
public:
    using SupportFn = std::function<double(const Vector&, const Vector&)>;
    using SelectionFn = std::function<Vector(const Vector&, const Vector&)>;
    using NormFn = std::function<std::pair<double, double>(const Vector&)>;

    SetValuedOperator(std::size_t dim, SupportFn support, SelectionFn selection, NormFn norms);

    std::size_t dim() const { return dim_; }

    /// [A(y), xi]_+ . Throws on dimension mismatch; throws std::domain_error
    /// if the oracle yields NaN.
    double support_plus(const Vector& y, const Vector& xi) const;

    /// [A(y), xi]_- = -[A(y), -xi]_+ .
    double support_minus(const Vector& y, const Vector& xi) const;

    /// An element of co A(y); see class contract for the hint semantics.
    Vector selection(const Vector& y, const Vector& hint) const;

    /// ( [[Ay]]_- , [[Ay]]_+ ). +infinity signals an unbounded image.
    std::pair<double, double> norm_bounds(const Vector& y) const;
    double norm_minus(const Vector& y) const { return norm_bounds(y).first; }
    double norm_plus(const Vector& y) const { return norm_bounds(y).second; }

private:
    std::size_t dim_;
    SupportFn support_;
    SelectionFn selection_;
    NormFn norms_;
};

/// Minkowski sum: support functions add, selections add, norm bounds are
/// interval-arithmetic envelopes.
SetValuedOperator sum_operator(const SetValuedOperator& a, const SetValuedOperator& b);

class ProperConvexFunction;

/// The subdifferential map of a convex function, realized through one-sided
/// difference quotients: support_plus(y, xi) evaluates the directional
/// derivative phi'(y; xi) from above on a decreasing t-grid with `samples`
/// points; selection returns the function's subgradient oracle.
SetValuedOperator subdifferential_operator(const ProperConvexFunction& phi, int samples);

/// Constructors for concrete operators (testing batteries and demos).
namespace ops {

/// A(y) = {F(y)} for a single-valued map.
SetValuedOperator single_valued(std::size_t dim, std::function<Vector(const Vector&)> f);

/// A(y) = {M y} for a dense matrix (rows x cols = dim x dim).
SetValuedOperator linear(const std::vector<std::vector<double>>& matrix);

/// A(y) = {y}.
SetValuedOperator identity(std::size_t dim);

/// A(y) = {-y}.
SetValuedOperator negative_identity(std::size_t dim);

/// A(y) = {||y||^(p-2) y}.
SetValuedOperator power_norm(std::size_t dim, double p);

/// A(y) = {(y_1^3, ..., y_n^3)}.
SetValuedOperator componentwise_cubic(std::size_t dim);

/// Constant map A(y) = S for a finite point set S (support of the set itself,
/// not only its hull; norm bounds are exact for S).
SetValuedOperator constant_finite_set(std::size_t dim, std::vector<Vector> points);

/// y-dependent finite point set.
SetValuedOperator finite_set_map(std::size_t dim,
                                 std::function<std::vector<Vector>(const Vector&)> points);

/// Coordinate-box image A(y) = prod_i [lo_i(y), hi_i(y)].
SetValuedOperator box_valued(std::size_t dim,
                             std::function<std::pair<Vector, Vector>(const Vector&)> bounds);

/// Constant box image.
SetValuedOperator constant_box(const Vector& lo, const Vector& hi);

/// Coordinatewise subdifferential of the l1 norm: A(y)_i = sign(y_i),
/// the full interval [-1, 1] where y_i = 0.
SetValuedOperator subdiff_l1(std::size_t dim);

/// 1D battery map A(y) = {0} for y <= 0, {-1} for y > 0 (radial
/// semi-continuity counterexample).
SetValuedOperator step_down_1d();

/// 1D battery map A(y) = {1/y} for y != 0, {0} at 0 (local boundedness
/// counterexample; the norm oracle is exact, so it stays finite pointwise).
SetValuedOperator reciprocal_1d();

}  // namespace ops

}  // namespace vimo
