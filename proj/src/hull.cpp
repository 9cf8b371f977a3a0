#include "vimo/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vimo {

MinNormPoint nearest_hull_point(const std::vector<Vector>& generators, const Vector& target,
                                int max_iter, double gap_tol) {
    if (generators.empty()) {
        throw std::invalid_argument("nearest_hull_point: no generators");
    }
    const std::size_t m = generators.size();
    for (const auto& g : generators) check_dim(g, target.dim(), "nearest_hull_point");

    // start from the generator nearest the target
    std::size_t start = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        double d = distance(generators[i], target);
        if (d < best) {
            best = d;
            start = i;
        }
    }
    std::vector<double> alpha(m, 0.0);
    alpha[start] = 1.0;
    Vector x = generators[start];

    for (int it = 0; it < max_iter; ++it) {
        Vector grad = x - target;
        // toward vertex: argmin <grad, g>; away vertex: argmax over the support
        std::size_t fw = 0, away = start;
        double fw_val = std::numeric_limits<double>::infinity();
        double away_val = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            double v = dot(grad, generators[i]);
            if (v < fw_val) {
                fw_val = v;
                fw = i;
            }
            if (alpha[i] > 0.0 && v > away_val) {
                away_val = v;
                away = i;
            }
        }
        double gap = dot(grad, x) - fw_val;
        if (gap <= gap_tol) break;

        bool use_away = (away_val - dot(grad, x)) > gap && alpha[away] < 1.0;
        Vector dir = use_away ? (x - generators[away]) : (generators[fw] - x);
        double gamma_max = use_away ? alpha[away] / (1.0 - alpha[away]) : 1.0;
        double denom = dot(dir, dir);
        if (denom <= 0.0) break;
        double gamma = std::clamp(-dot(grad, dir) / denom, 0.0, gamma_max);
        if (gamma <= 0.0) break;

        if (use_away) {
            for (std::size_t i = 0; i < m; ++i) alpha[i] *= (1.0 + gamma);
            alpha[away] -= gamma;
        } else {
            for (std::size_t i = 0; i < m; ++i) alpha[i] *= (1.0 - gamma);
            alpha[fw] += gamma;
        }
        x += gamma * dir;
    }

    MinNormPoint out;
    out.point = x;
    out.weights = std::move(alpha);
    out.distance = distance(x, target);
    return out;
}

Vector project_onto_cone(const std::vector<Vector>& cone_generators, const Vector& v) {
    if (cone_generators.empty()) return Vector(v.dim());
    const std::size_t m = cone_generators.size();
    std::vector<double> t(m, 0.0);
    std::vector<double> gg(m);
    for (std::size_t i = 0; i < m; ++i) gg[i] = dot(cone_generators[i], cone_generators[i]);
    Vector x(v.dim());
    for (int cycle = 0; cycle < 500; ++cycle) {
        double change = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (gg[i] <= 0.0) continue;
            // optimal t_i given the others
            double num = dot(cone_generators[i], v - x) + t[i] * gg[i];
            double ti = std::max(0.0, num / gg[i]);
            double delta = ti - t[i];
            if (delta != 0.0) {
                x += delta * cone_generators[i];
                t[i] = ti;
                change += std::abs(delta);
            }
        }
        if (change < 1e-15) break;
    }
    return x;
}

double distance_to_hull_plus_cone(const std::vector<Vector>& generators,
                                  const std::vector<Vector>& cone_generators,
                                  const Vector& target) {
    if (cone_generators.empty()) {
        return nearest_hull_point(generators, target).distance;
    }
    // alternate: h in co(gens) nearest to (target - cone part), cone part
    // absorbing the remainder
    Vector cone_part(target.dim());
    double dist = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 60; ++it) {
        auto mn = nearest_hull_point(generators, target - cone_part);
        cone_part = project_onto_cone(cone_generators, target - mn.point);
        double d = distance(mn.point + cone_part, target);
        if (d > dist - 1e-15) {
            dist = std::min(dist, d);
            break;
        }
        dist = d;
    }
    return dist;
}

}  // namespace vimo
