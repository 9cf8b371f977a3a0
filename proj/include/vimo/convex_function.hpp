#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "vimo/vector.hpp"

namespace vimo {

class Sampler;

/// Proper convex lower semi-continuous function phi: R^n -> R ∪ {+inf},
/// exposed through a value oracle, a subgradient selection, and a proximal
/// map. dom phi = {y : value(y) < +inf} must be nonempty.
///
/// Restriction to a coordinate subspace (off-subspace coordinates anchored)
/// is available for the built-in kinds; custom functions may supply a hook.
class ProperConvexFunction {
public:
    using ValueFn = std::function<double(const Vector&)>;
    using SubgradFn = std::function<Vector(const Vector&)>;
    using ProxFn = std::function<Vector(const Vector&, double)>;
    using RestrictFn = std::function<ProperConvexFunction(const std::vector<std::size_t>&,
                                                          const Vector& anchor)>;

    ProperConvexFunction(std::size_t dim, ValueFn value, SubgradFn subgrad, ProxFn prox,
                         RestrictFn restrict_hook = nullptr);

    std::size_t dim() const { return dim_; }

    /// phi(y); +infinity outside dom phi. NaN / -infinity raise.
    double value(const Vector& y) const;

    /// One element of the subdifferential at y (y must be in dom phi).
    Vector subgradient(const Vector& y) const;

    /// prox_{tau phi}(y) = argmin_v phi(v) + ||v - y||^2 / (2 tau).
    Vector prox(const Vector& y, double tau) const;

    bool has_restriction() const { return static_cast<bool>(restrict_); }

    /// The function u -> phi(embed(u)) on the coordinates `free` with the
    /// remaining coordinates frozen at `anchor`.
    ProperConvexFunction restrict(const std::vector<std::size_t>& free, const Vector& anchor) const;

    /// Sampled convexity check: value(l a + (1-l) b) <= l value(a) + (1-l) value(b)
    /// on random pairs with finite values. Throws std::domain_error on violation.
    void validate_convexity(Sampler& sampler, int pairs, double radius, double tol = 1e-7) const;

    static ProperConvexFunction zero(std::size_t dim);

    /// phi(y) = w ||y||_1.
    static ProperConvexFunction l1_norm(std::size_t dim, double weight = 1.0);

    /// phi(y) = ||y||^2 / 2.
    static ProperConvexFunction half_sqnorm(std::size_t dim);

    /// phi(y) = sum_i max(0, y_i).
    static ProperConvexFunction positive_part(std::size_t dim);

private:
    std::size_t dim_;
    ValueFn value_;
    SubgradFn subgrad_;
    ProxFn prox_;
    RestrictFn restrict_;
};

}  // namespace vimo
