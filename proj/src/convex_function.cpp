#include "vimo/convex_function.hpp"

#include <cmath>
#include <stdexcept>

#include "vimo/extended_real.hpp"
#include "vimo/sampling.hpp"

namespace vimo {

ProperConvexFunction::ProperConvexFunction(std::size_t dim, ValueFn value, SubgradFn subgrad,
                                           ProxFn prox, RestrictFn restrict_hook)
    : dim_(dim),
      value_(std::move(value)),
      subgrad_(std::move(subgrad)),
      prox_(std::move(prox)),
      restrict_(std::move(restrict_hook)) {
    if (dim_ == 0) throw std::invalid_argument("ProperConvexFunction: dim must be positive");
}

double ProperConvexFunction::value(const Vector& y) const {
    check_dim(y, dim_, "phi.value");
    return ext::checked(value_(y), "phi.value");
}

Vector ProperConvexFunction::subgradient(const Vector& y) const {
    check_dim(y, dim_, "phi.subgradient");
    Vector g = subgrad_(y);
    check_dim(g, dim_, "phi.subgradient result");
    if (!g.is_finite()) throw std::domain_error("phi.subgradient returned non-finite vector");
    return g;
}

Vector ProperConvexFunction::prox(const Vector& y, double tau) const {
    check_dim(y, dim_, "phi.prox");
    if (!(tau > 0.0)) throw std::invalid_argument("phi.prox: tau must be positive");
    Vector p = prox_(y, tau);
    check_dim(p, dim_, "phi.prox result");
    if (!p.is_finite()) throw std::domain_error("phi.prox returned non-finite point");
    return p;
}

ProperConvexFunction ProperConvexFunction::restrict(const std::vector<std::size_t>& free,
                                                    const Vector& anchor) const {
    if (!restrict_) {
        throw std::logic_error("ProperConvexFunction: no restriction hook for this function");
    }
    check_dim(anchor, dim_, "phi.restrict anchor");
    return restrict_(free, anchor);
}

void ProperConvexFunction::validate_convexity(Sampler& sampler, int pairs, double radius,
                                              double tol) const {
    for (int i = 0; i < pairs; ++i) {
        Vector a = sampler.random_point(dim_, -radius, radius);
        Vector b = sampler.random_point(dim_, -radius, radius);
        double lambda = sampler.uniform01();
        double fa = value(a), fb = value(b);
        if (fa == ext::infinity || fb == ext::infinity) continue;
        double mid = value(lambda * a + (1.0 - lambda) * b);
        double chord = lambda * fa + (1.0 - lambda) * fb;
        if (mid > chord + tol * (1.0 + std::abs(chord))) {
            throw std::domain_error("ProperConvexFunction: sampled convexity violated");
        }
    }
}

ProperConvexFunction ProperConvexFunction::zero(std::size_t dim) {
    auto restrict_hook = [](const std::vector<std::size_t>& free, const Vector&) {
        return zero(free.size());
    };
    return ProperConvexFunction(
        dim, [](const Vector&) { return 0.0; }, [dim](const Vector&) { return Vector(dim); },
        [](const Vector& y, double) { return y; }, restrict_hook);
}

ProperConvexFunction ProperConvexFunction::l1_norm(std::size_t dim, double weight) {
    if (weight < 0.0) throw std::invalid_argument("l1_norm: weight must be nonnegative");
    auto value = [weight](const Vector& y) {
        double s = 0.0;
        for (std::size_t i = 0; i < y.dim(); ++i) s += std::abs(y[i]);
        return weight * s;
    };
    auto subgrad = [weight](const Vector& y) {
        Vector g(y.dim());
        for (std::size_t i = 0; i < y.dim(); ++i) {
            g[i] = (y[i] > 0.0) ? weight : (y[i] < 0.0 ? -weight : 0.0);
        }
        return g;
    };
    auto prox = [weight](const Vector& y, double tau) {
        // soft threshold at tau * weight
        double t = tau * weight;
        Vector p(y.dim());
        for (std::size_t i = 0; i < y.dim(); ++i) {
            if (y[i] > t) {
                p[i] = y[i] - t;
            } else if (y[i] < -t) {
                p[i] = y[i] + t;
            } else {
                p[i] = 0.0;
            }
        }
        return p;
    };
    auto restrict_hook = [weight](const std::vector<std::size_t>& free, const Vector& anchor) {
        // separable: restriction is the same function plus a constant; the
        // constant does not affect subgradients or prox, and value offsets
        // cancel in every inequality the toolkit evaluates.
        (void)anchor;
        return l1_norm(free.size(), weight);
    };
    return ProperConvexFunction(dim, value, subgrad, prox, restrict_hook);
}

ProperConvexFunction ProperConvexFunction::half_sqnorm(std::size_t dim) {
    auto restrict_hook = [](const std::vector<std::size_t>& free, const Vector&) {
        return half_sqnorm(free.size());
    };
    return ProperConvexFunction(
        dim, [](const Vector& y) { return 0.5 * dot(y, y); }, [](const Vector& y) { return y; },
        [](const Vector& y, double tau) { return (1.0 / (1.0 + tau)) * y; }, restrict_hook);
}

ProperConvexFunction ProperConvexFunction::positive_part(std::size_t dim) {
    auto value = [](const Vector& y) {
        double s = 0.0;
        for (std::size_t i = 0; i < y.dim(); ++i) s += std::max(0.0, y[i]);
        return s;
    };
    auto subgrad = [](const Vector& y) {
        Vector g(y.dim());
        for (std::size_t i = 0; i < y.dim(); ++i) g[i] = (y[i] > 0.0) ? 1.0 : 0.0;
        return g;
    };
    auto prox = [](const Vector& y, double tau) {
        Vector p(y.dim());
        for (std::size_t i = 0; i < y.dim(); ++i) {
            if (y[i] > tau) {
                p[i] = y[i] - tau;
            } else if (y[i] < 0.0) {
                p[i] = y[i];
            } else {
                p[i] = 0.0;
            }
        }
        return p;
    };
    auto restrict_hook = [](const std::vector<std::size_t>& free, const Vector&) {
        return positive_part(free.size());
    };
    return ProperConvexFunction(dim, value, subgrad, prox, restrict_hook);
}

}  // namespace vimo
