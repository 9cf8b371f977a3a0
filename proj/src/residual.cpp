#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vimo/extended_real.hpp"
#include "vimo/sampling.hpp"
#include "vimo/solvers.hpp"

namespace vimo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double probe_radius(const VIMOProblem& problem, const ProbeOptions& opt) {
    if (opt.radius > 0.0) return opt.radius;
    double br = problem.K().bounding_radius();
    if (std::isfinite(br)) {
        return br + norm_inf(problem.witness()) + 1.0;
    }
    return std::max({2.0, 2.0 * norm_inf(problem.witness()), 2.0 * norm_inf(problem.f())});
}

std::vector<Vector> make_probes(const VIMOProblem& problem, const ProbeOptions& opt) {
    const double radius = probe_radius(problem, opt);
    const Vector center = opt.center.value_or(problem.witness());
    check_dim(center, problem.dim(), "make_probes center");
    const std::size_t n = problem.dim();
    Vector lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = center[i] - radius;
        hi[i] = center[i] + radius;
    }
    Sampler sampler(opt.seed);
    auto cloud = sampler.box_points(lo, hi, static_cast<std::size_t>(std::max(1, opt.count)));
    std::vector<Vector> probes;
    probes.reserve(cloud.size() + 1);
    probes.push_back(problem.witness());
    for (auto& p : cloud) {
        probes.push_back(problem.K().project(p));
    }
    // extreme points are the binding probes on polyhedral sets
    const auto kind = problem.K().kind();
    if ((kind == ConvexSet::Kind::Box || kind == ConvexSet::Kind::Polytope) &&
        problem.K().is_bounded() && n <= 10) {
        for (auto& v : problem.K().vertices()) probes.push_back(std::move(v));
    }
    // axis sweeps through the witness and the origin: violations supported on
    // kink lines of the operator have zero width in the other coordinates and
    // the generic cloud misses them
    if (kind == ConvexSet::Kind::Box && n <= 10) {
        const Vector origin_in = problem.K().project(Vector(n));
        for (const Vector& base : {center, origin_in}) {
            for (std::size_t i = 0; i < n; ++i) {
                for (int t = 0; t <= 32; ++t) {
                    Vector p = base;
                    p[i] = center[i] - radius + 2.0 * radius * t / 32.0;
                    probes.push_back(problem.K().project(p));
                }
            }
        }
    }
    return probes;
}

double residual(const VIMOProblem& problem, const Vector& y, const std::vector<Vector>& probes) {
    check_dim(y, problem.dim(), "residual");
    if (!problem.K().contains(y, 1e-6)) {
        throw std::domain_error("residual: point is not in K");
    }
    double phi_y = problem.phi().value(y);
    if (phi_y == ext::infinity) {
        throw std::domain_error("residual: point is outside dom phi");
    }
    double worst = 0.0;  // the probe xi = y contributes exactly zero
    for (const auto& xi : probes) {
        double phi_xi = problem.phi().value(xi);
        if (phi_xi == ext::infinity) continue;
        Vector d = xi - y;
        double sup = problem.A().support_plus(y, d);
        if (sup == kInf) continue;
        double v = dot(problem.f(), d) - sup - phi_xi + phi_y;
        worst = std::max(worst, v);
    }
    return worst;
}

Vector nearest_selection(const SetValuedOperator& a, const Vector& y, const Vector& target,
                         int max_iter) {
    Vector w = a.selection(y, target);
    for (int it = 0; it < max_iter; ++it) {
        Vector grad = w - target;  // gradient of 1/2 ||w - target||^2
        Vector s = a.selection(y, -grad);
        Vector dir = s - w;
        double denom = dot(dir, dir);
        if (denom <= 1e-30) break;
        double gap = -dot(grad, dir);
        if (gap <= 1e-15 * (1.0 + dot(grad, grad))) break;
        double gamma = std::clamp(gap / denom, 0.0, 1.0);
        w += gamma * dir;
    }
    return w;
}

std::pair<Vector, Vector> decompose_witness(const VIMOProblem& problem, const Vector& y, double tau,
                                            int rounds) {
    Vector g = problem.phi().subgradient(y);
    Vector w = nearest_selection(problem.A(), y, problem.f() - g);
    for (int it = 0; it < rounds; ++it) {
        Vector g_target = problem.f() - w;
        Vector x = y + tau * g_target;
        Vector p = problem.phi().prox(x, tau);
        Vector g_new = (1.0 / tau) * (x - p);
        double move = distance(g_new, g);
        g = g_new;
        w = nearest_selection(problem.A(), y, problem.f() - g);
        if (move < 1e-13 * (1.0 + norm(g))) break;
    }
    return {w, g};
}

}  // namespace vimo
