#include "vimo/obstacle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vimo/convex_set.hpp"
#include "vimo/extended_real.hpp"
#include "vimo/sampling.hpp"

namespace vimo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One grid edge along an axis: the unknowns it couples and its midpoint data.
struct Edge {
    std::size_t node_a = 0;  // lower-index endpoint
    std::size_t node_b = 0;
    int axis = 0;
    Vector mid;
};

std::vector<Edge> grid_edges(const GridConfig& grid) {
    std::vector<Edge> edges;
    const int n = grid.nodes_per_axis;
    if (grid.dimension == 1) {
        for (int i = 0; i + 1 < n; ++i) {
            Edge e;
            e.node_a = static_cast<std::size_t>(i);
            e.node_b = static_cast<std::size_t>(i + 1);
            e.axis = 0;
            e.mid = 0.5 * (grid.node_position(e.node_a) + grid.node_position(e.node_b));
            edges.push_back(std::move(e));
        }
    } else {
        auto idx = [n](int ix, int iy) { return static_cast<std::size_t>(iy * n + ix); };
        for (int iy = 0; iy < n; ++iy) {
            for (int ix = 0; ix + 1 < n; ++ix) {
                Edge e;
                e.node_a = idx(ix, iy);
                e.node_b = idx(ix + 1, iy);
                e.axis = 0;
                e.mid = 0.5 * (grid.node_position(e.node_a) + grid.node_position(e.node_b));
                edges.push_back(std::move(e));
            }
        }
        for (int iy = 0; iy + 1 < n; ++iy) {
            for (int ix = 0; ix < n; ++ix) {
                Edge e;
                e.node_a = idx(ix, iy);
                e.node_b = idx(ix, iy + 1);
                e.axis = 1;
                e.mid = 0.5 * (grid.node_position(e.node_a) + grid.node_position(e.node_b));
                edges.push_back(std::move(e));
            }
        }
    }
    return edges;
}

// Edge gradient stand-in passed to the coefficients: exact along the edge
// axis, zero transversally (the default battery depends on y only).
Vector edge_gradient(const GridConfig& grid, int axis, double d) {
    Vector g(grid.dimension);
    g[axis] = d;
    return g;
}

}  // namespace

GridConfig::GridConfig(int dim, int nodes) : dimension(dim), nodes_per_axis(nodes) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("GridConfig: dimension must be 1 or 2");
    if (nodes < 3) throw std::invalid_argument("GridConfig: need at least 3 nodes per axis");
}

std::size_t GridConfig::total_nodes() const {
    return dimension == 1 ? static_cast<std::size_t>(nodes_per_axis)
                          : static_cast<std::size_t>(nodes_per_axis) * nodes_per_axis;
}

Vector GridConfig::node_position(std::size_t idx) const {
    const double h = spacing();
    if (dimension == 1) {
        return Vector{static_cast<double>(idx) * h};
    }
    const int n = nodes_per_axis;
    int ix = static_cast<int>(idx % n);
    int iy = static_cast<int>(idx / n);
    return Vector{ix * h, iy * h};
}

bool GridConfig::is_boundary(std::size_t idx) const {
    const int n = nodes_per_axis;
    if (dimension == 1) {
        return idx == 0 || idx == static_cast<std::size_t>(n - 1);
    }
    int ix = static_cast<int>(idx % n);
    int iy = static_cast<int>(idx / n);
    return ix == 0 || iy == 0 || ix == n - 1 || iy == n - 1;
}

std::vector<std::size_t> GridConfig::boundary_nodes() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < total_nodes(); ++i) {
        if (is_boundary(i)) out.push_back(i);
    }
    return out;
}

CoefficientField CoefficientField::isotropic_default(int dim, double p) {
    if (p < 2.0) throw std::invalid_argument("CoefficientField: p must be >= 2");
    CoefficientField c;
    c.space_dim = dim;
    c.p = p;
    c.a = [p](const Vector&, double y, const Vector&, int i, int j) {
        if (i != j) return 0.0;
        return 1.0 + std::pow(std::abs(y), p - 2.0);
    };
    c.g = [](const Vector&) { return 1.0; };
    c.k.assign(static_cast<std::size_t>(dim) + 1, 1.0);
    // ramp: zero on the sampled envelope, divergent beyond it
    c.gamma = [](double R) { return std::max(0.0, R - 64.0); };
    if (p == 2.0) {
        c.dy_interval = nullptr;  // constant coefficient: no multivalued part
    } else {
        c.dy_interval = [p](const Vector&, double y, const Vector&, int i) {
            if (i != 0 && i != 1) return std::make_pair(0.0, 0.0);
            double q = p - 2.0;
            if (y == 0.0) {
                // subdifferential of |y|^q at 0: [-1, 1] for q = 1, {0} for q > 1
                return (q == 1.0) ? std::make_pair(-1.0, 1.0) : std::make_pair(0.0, 0.0);
            }
            double der = q * std::pow(std::abs(y), q - 1.0) * (y > 0.0 ? 1.0 : -1.0);
            return std::make_pair(der, der);
        };
    }
    return c;
}

CoefficientField CoefficientField::constant_unit(int dim) {
    CoefficientField c = isotropic_default(dim, 2.0);
    c.a = [](const Vector&, double, const Vector&, int i, int j) {
        return (i == j) ? 1.0 : 0.0;
    };
    return c;
}

ClassReport check_growth_conditions(const CoefficientField& coeffs, int samples,
                                    std::uint64_t seed, const GrowthCheckOptions& opt) {
    if (samples < 1) throw std::invalid_argument("check_growth_conditions: samples >= 1");
    if (coeffs.k.size() != static_cast<std::size_t>(coeffs.space_dim) + 1) {
        throw std::invalid_argument("check_growth_conditions: k must have n+1 entries");
    }
    Sampler sampler(seed);
    const int n = coeffs.space_dim;
    ClassReport rep;
    rep.check_name = "growth_conditions";
    double margin = kInf;
    int used = 0;

    // condition 3 (asymptotic part) first: gamma must diverge along the
    // R-grid; a bounded gamma is the canonical failure
    {
        std::vector<double> grid_vals;
        double r = 1e3;
        for (int kk = 0; kk < 9; ++kk, r *= 4.0) grid_vals.push_back(coeffs.gamma(r));
        bool increasing = true;
        for (std::size_t i = 1; i < grid_vals.size(); ++i) {
            increasing = increasing && grid_vals[i] > grid_vals[i - 1];
        }
        if (!increasing || grid_vals.back() - grid_vals.front() < 1.0) {
            ClassWitness w;
            w.values = grid_vals;
            w.detail = "condition 3: gamma(R) fails to diverge along the R-grid";
            rep.verdict = Verdict::Fail;
            rep.witness = std::move(w);
            rep.samples_used = static_cast<int>(grid_vals.size());
            rep.margin = grid_vals.back() - grid_vals.front();
            return rep;
        }
    }

    for (int s = 0; s < samples; ++s) {
        Vector x(n);
        for (int i = 0; i < n; ++i) x[i] = sampler.uniform(0.0, 1.0);
        double y = sampler.uniform(-opt.sample_range, opt.sample_range);
        Vector xi(n);
        for (int i = 0; i < n; ++i) xi[i] = sampler.uniform(-opt.sample_range, opt.sample_range);
        ++used;

        // condition 1: continuity of a_ij in x (small-probe oscillation)
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double base = coeffs.a(x, y, xi, i, j);
                Vector xp = x;
                for (int d = 0; d < n; ++d) {
                    xp[d] = std::min(1.0, x[d] + opt.continuity_probe);
                }
                double probe = coeffs.a(xp, y, xi, i, j);
                if (std::abs(probe - base) > 0.01 * (1.0 + std::abs(base))) {
                    ClassWitness w;
                    w.points = {x, xi};
                    w.values = {base, probe, y};
                    w.detail = "condition 1: a_ij jumps under a vanishing x-perturbation";
                    rep.verdict = Verdict::Fail;
                    rep.witness = std::move(w);
                    rep.samples_used = used;
                    rep.margin = -std::abs(probe - base);
                    return rep;
                }
            }
        }

        // condition 2: |a_ij| <= g(x) + k_0 |y|^(p-2) + sum_i k_i |xi_i|^(p-2)
        double bound = coeffs.g(x) + coeffs.k[0] * std::pow(std::abs(y), coeffs.p - 2.0);
        for (int i = 0; i < n; ++i) {
            bound += coeffs.k[static_cast<std::size_t>(i) + 1] *
                     std::pow(std::abs(xi[i]), coeffs.p - 2.0);
        }
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double aij = coeffs.a(x, y, xi, i, j);
                double slack = bound - std::abs(aij);
                margin = std::min(margin, slack);
                if (slack < -opt.tolerance) {
                    ClassWitness w;
                    w.points = {x, xi};
                    w.values = {aij, bound, y};
                    w.detail = "condition 2: growth bound violated";
                    rep.verdict = Verdict::Fail;
                    rep.witness = std::move(w);
                    rep.samples_used = used;
                    rep.margin = slack;
                    return rep;
                }
            }
        }

        // condition 3 (pointwise part): sum a_ij xi_i xi_j >= gamma(R) R
        double quad = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                quad += coeffs.a(x, y, xi, i, j) * xi[i] * xi[j];
            }
        }
        double big_r = std::abs(y);
        for (int i = 0; i < n; ++i) big_r += std::abs(xi[i]);
        double slack = quad - coeffs.gamma(big_r) * big_r;
        margin = std::min(margin, slack);
        if (slack < -opt.tolerance) {
            ClassWitness w;
            w.points = {x, xi};
            w.values = {quad, coeffs.gamma(big_r) * big_r, y};
            w.detail = "condition 3: ellipticity bound violated on a sample";
            rep.verdict = Verdict::Fail;
            rep.witness = std::move(w);
            rep.samples_used = used;
            rep.margin = slack;
            return rep;
        }
    }

    rep.verdict = Verdict::Pass;
    rep.samples_used = used;
    rep.margin = margin;
    rep.notes.push_back("gamma grid growth: " + std::to_string(coeffs.gamma(1e3)) + " -> " +
                        std::to_string(coeffs.gamma(1e3 * std::pow(4.0, 8))));
    return rep;
}

SignoriniInstance build_signorini_problem(const GridConfig& grid, const CoefficientField& coeffs,
                                          const Vector& f_grid, bool enable_multivalued,
                                          int battery_samples, std::uint64_t seed) {
    if (coeffs.space_dim != grid.dimension) {
        throw std::invalid_argument("build_signorini_problem: dimension mismatch");
    }
    check_dim(f_grid, grid.total_nodes(), "build_signorini_problem(f)");
    auto battery = check_growth_conditions(coeffs, battery_samples, seed);
    if (!battery.passed()) {
        throw std::domain_error("build_signorini_problem: coefficient battery failed (" +
                                (battery.witness ? battery.witness->detail : "") + ")");
    }
    if (grid.dimension == 2) {
        // the edge-wise assembly covers diagonal fields only
        Sampler probe(seed);
        for (int t = 0; t < 8; ++t) {
            Vector x{probe.uniform(0.0, 1.0), probe.uniform(0.0, 1.0)};
            Vector xi{probe.uniform(-1.0, 1.0), probe.uniform(-1.0, 1.0)};
            double y = probe.uniform(-1.0, 1.0);
            if (std::abs(coeffs.a(x, y, xi, 0, 1)) > 1e-12 ||
                std::abs(coeffs.a(x, y, xi, 1, 0)) > 1e-12) {
                throw std::invalid_argument(
                    "build_signorini_problem: 2D assembly requires diagonal coefficients");
            }
        }
    }

    const std::size_t total = grid.total_nodes();
    const double h = grid.spacing();
    const auto edges = grid_edges(grid);
    const auto coeff = coeffs;
    const auto grd = grid;

    // single-valued weak part: row_j = sum over incident edges of
    // +- a(mid, ybar, d) d / h
    auto apply_a1 = [edges, coeff, grd, h, total](const Vector& y) {
        Vector out(total);
        for (const auto& e : edges) {
            double d = (y[e.node_b] - y[e.node_a]) / h;
            double ybar = 0.5 * (y[e.node_a] + y[e.node_b]);
            double c = coeff.a(e.mid, ybar, edge_gradient(grd, e.axis, d), e.axis, e.axis);
            double flow = c * d / h;
            out[e.node_a] -= flow;
            out[e.node_b] += flow;
        }
        return out;
    };
    SetValuedOperator a1 = ops::single_valued(total, apply_a1);

    bool multivalued = enable_multivalued && static_cast<bool>(coeffs.dy_interval);
    SetValuedOperator assembled = a1;
    if (multivalued) {
        // subdifferential part: each edge contributes s * d^2 / 4 to both
        // endpoints, s in the coefficient's y-subdifferential interval
        auto edge_terms = [edges, coeff, grd, h](const Vector& y) {
            std::vector<std::pair<double, double>> intervals;
            std::vector<double> weights;  // d^2 / 4 per edge
            intervals.reserve(edges.size());
            weights.reserve(edges.size());
            for (const auto& e : edges) {
                double d = (y[e.node_b] - y[e.node_a]) / h;
                double ybar = 0.5 * (y[e.node_a] + y[e.node_b]);
                auto iv = coeff.dy_interval(e.mid, ybar, edge_gradient(grd, e.axis, d), e.axis);
                intervals.push_back(iv);
                weights.push_back(d * d / 4.0);
            }
            return std::make_pair(intervals, weights);
        };
        auto support = [edges, edge_terms, total](const Vector& y, const Vector& xi) {
            auto [intervals, weights] = edge_terms(y);
            double s = 0.0;
            for (std::size_t k = 0; k < edges.size(); ++k) {
                double m = weights[k] * (xi[edges[k].node_a] + xi[edges[k].node_b]);
                s += (m >= 0.0) ? intervals[k].second * m : intervals[k].first * m;
            }
            return s;
        };
        auto selection = [edges, edge_terms, total](const Vector& y, const Vector& hint) {
            auto [intervals, weights] = edge_terms(y);
            Vector out(total);
            for (std::size_t k = 0; k < edges.size(); ++k) {
                double m = weights[k] * (hint[edges[k].node_a] + hint[edges[k].node_b]);
                double s;
                if (m > 0.0) {
                    s = intervals[k].second;
                } else if (m < 0.0) {
                    s = intervals[k].first;
                } else {
                    s = 0.5 * (intervals[k].first + intervals[k].second);
                }
                out[edges[k].node_a] += s * weights[k];
                out[edges[k].node_b] += s * weights[k];
            }
            return out;
        };
        auto norms = [edges, edge_terms, total](const Vector& y) -> std::pair<double, double> {
            auto [intervals, weights] = edge_terms(y);
            Vector lo(total), hi(total);
            for (std::size_t k = 0; k < edges.size(); ++k) {
                double wlo = intervals[k].first * weights[k];
                double whi = intervals[k].second * weights[k];
                if (wlo > whi) std::swap(wlo, whi);
                for (std::size_t nd : {edges[k].node_a, edges[k].node_b}) {
                    lo[nd] += wlo;
                    hi[nd] += whi;
                }
            }
            double hi_sq = 0.0, lo_sq = 0.0;
            for (std::size_t i = 0; i < total; ++i) {
                double m = std::max(std::abs(lo[i]), std::abs(hi[i]));
                hi_sq += m * m;
                double gap = std::max({0.0, lo[i], -hi[i]});
                lo_sq += gap * gap;
            }
            return {std::sqrt(lo_sq), std::sqrt(hi_sq)};
        };
        SetValuedOperator a2(total, support, selection, norms);
        assembled = sum_operator(a1, a2);
    }

    // K: boundary node values >= 0, interior free
    std::vector<double> lo(total), hi(total);
    for (std::size_t i = 0; i < total; ++i) {
        lo[i] = grid.is_boundary(i) ? 0.0 : -kInf;
        hi[i] = kInf;
    }
    ConvexSet k = ConvexSet::box(std::move(lo), std::move(hi));

    VIMOProblem problem(std::move(assembled), ProperConvexFunction::zero(total), std::move(k),
                        f_grid, Vector(total));
    SignoriniInstance inst{grid, coeffs, grid.boundary_nodes(), std::move(problem), multivalued};
    return inst;
}

std::vector<double> boundary_flux(const SignoriniInstance& instance, const Vector& y) {
    const GridConfig& grid = instance.grid;
    check_dim(y, grid.total_nodes(), "boundary_flux");
    const double h = grid.spacing();
    const int n = grid.nodes_per_axis;
    std::vector<double> flux;
    flux.reserve(instance.boundary_index_set.size());

    auto one_sided = [&](std::size_t node, std::size_t inward, int axis) {
        // outward normal derivative ~ (y(node) - y(inward)) / h, weighted by
        // the coefficient at the boundary point
        double d = (y[node] - y[inward]) / h;
        double oriented = (node > inward) ? d : -d;  // axis derivative dy/dx_axis
        Vector x = grid.node_position(node);
        double c = instance.coeffs.a(x, y[node], edge_gradient(grid, axis, oriented), axis, axis);
        return c * d;
    };

    for (std::size_t node : instance.boundary_index_set) {
        if (grid.dimension == 1) {
            flux.push_back(node == 0 ? one_sided(0, 1, 0)
                                     : one_sided(node, node - 1, 0));
            continue;
        }
        int ix = static_cast<int>(node % n);
        int iy = static_cast<int>(node / n);
        double total = 0.0;
        int faces = 0;
        auto idx = [n](int a, int b) { return static_cast<std::size_t>(b * n + a); };
        if (ix == 0) {
            total += one_sided(node, idx(1, iy), 0);
            ++faces;
        }
        if (ix == n - 1) {
            total += one_sided(node, idx(n - 2, iy), 0);
            ++faces;
        }
        if (iy == 0) {
            total += one_sided(node, idx(ix, 1), 1);
            ++faces;
        }
        if (iy == n - 1) {
            total += one_sided(node, idx(ix, n - 2), 1);
            ++faces;
        }
        flux.push_back(faces > 0 ? total / std::sqrt(static_cast<double>(faces)) : 0.0);
    }
    return flux;
}

ClassReport verify_complementarity(const SignoriniInstance& instance, const Vector& y,
                                   double tol) {
    check_dim(y, instance.grid.total_nodes(), "verify_complementarity");
    for (std::size_t node : instance.boundary_index_set) {
        if (y[node] < -tol) {
            throw std::domain_error("verify_complementarity: infeasible point (boundary value < 0)");
        }
    }
    auto flux = boundary_flux(instance, y);
    ClassReport rep;
    rep.check_name = "complementarity";
    double margin = kInf;
    for (std::size_t b = 0; b < instance.boundary_index_set.size(); ++b) {
        std::size_t node = instance.boundary_index_set[b];
        double yv = y[node];
        double fv = flux[b];
        double product_slack = tol - std::abs(yv * fv);
        margin = std::min({margin, yv, fv, product_slack});
        ++rep.samples_used;
        if (yv < -tol || fv < -tol || product_slack < -tol) {
            ClassWitness w;
            w.points = {instance.grid.node_position(node)};
            w.values = {yv, fv};
            w.detail = "complementarity violated at a boundary node";
            rep.verdict = Verdict::Fail;
            rep.witness = std::move(w);
            rep.margin = std::min({yv, fv, product_slack});
            return rep;
        }
    }
    rep.verdict = Verdict::Pass;
    rep.margin = margin;
    return rep;
}

Vector prolong(const GridConfig& from, const GridConfig& to, const Vector& values) {
    if (from.dimension != to.dimension) {
        throw std::invalid_argument("prolong: dimensions differ");
    }
    check_dim(values, from.total_nodes(), "prolong");
    const double hf = from.spacing();
    auto sample1d = [&](double x, const Vector& v, int stride, int offset) {
        double t = x / hf;
        int i0 = std::clamp(static_cast<int>(std::floor(t)), 0, from.nodes_per_axis - 2);
        double w = t - i0;
        return (1.0 - w) * v[offset + stride * i0] + w * v[offset + stride * (i0 + 1)];
    };
    Vector out(to.total_nodes());
    if (from.dimension == 1) {
        for (std::size_t j = 0; j < to.total_nodes(); ++j) {
            out[j] = sample1d(to.node_position(j)[0], values, 1, 0);
        }
        return out;
    }
    const int nf = from.nodes_per_axis;
    for (std::size_t j = 0; j < to.total_nodes(); ++j) {
        Vector p = to.node_position(j);
        double tx = p[0] / hf, ty = p[1] / hf;
        int ix = std::clamp(static_cast<int>(std::floor(tx)), 0, nf - 2);
        int iy = std::clamp(static_cast<int>(std::floor(ty)), 0, nf - 2);
        double wx = tx - ix, wy = ty - iy;
        auto at = [&](int a, int b) { return values[static_cast<std::size_t>(b * nf + a)]; };
        out[j] = (1 - wx) * (1 - wy) * at(ix, iy) + wx * (1 - wy) * at(ix + 1, iy) +
                 (1 - wx) * wy * at(ix, iy + 1) + wx * wy * at(ix + 1, iy + 1);
    }
    return out;
}

}  // namespace vimo
