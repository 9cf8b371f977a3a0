#include "vimo/convex_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "vimo/extended_real.hpp"

namespace vimo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Gaussian elimination with partial pivoting; nullopt for singular systems.
std::optional<Vector> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        }
        if (std::abs(a[piv][col]) < 1e-12) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            double m = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= m * a[col][c];
            b[r] -= m * b[col];
        }
    }
    Vector x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    if (!x.is_finite()) return std::nullopt;
    return x;
}

Vector project_halfspace(const Vector& y, const Vector& unit_row, double offset) {
    double slack = dot(unit_row, y) - offset;
    if (slack <= 0.0) return y;
    return y - slack * unit_row;
}

Vector project_ball(const Vector& y, const Vector& center, double radius) {
    Vector d = y - center;
    double n = norm(d);
    if (n <= radius) return y;
    return center + (radius / n) * d;
}

}  // namespace

struct ConvexSet::Impl {
    Kind kind;
    std::size_t dim = 0;

    // box (entries may be +-inf)
    std::vector<double> lo, hi;
    // ball / intersection
    Vector center;
    double radius = 0.0;
    // polytope (unit rows)
    std::vector<Vector> rows;
    std::vector<double> offsets;
    // intersection / epigraph base
    std::shared_ptr<const Impl> base;
    // epigraph
    std::shared_ptr<const ProperConvexFunction> phi;

    mutable std::vector<Vector> vertex_cache;
    mutable bool vertices_computed = false;
};

ConvexSet::ConvexSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

ConvexSet ConvexSet::box(std::vector<double> lo, std::vector<double> hi) {
    if (lo.size() != hi.size()) throw std::invalid_argument("ConvexSet::box: bounds mismatch");
    if (lo.empty()) throw std::invalid_argument("ConvexSet::box: empty dimension");
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (std::isnan(lo[i]) || std::isnan(hi[i]) || lo[i] > hi[i]) {
            throw std::invalid_argument("ConvexSet::box: invalid bounds");
        }
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Box;
    impl->dim = lo.size();
    impl->lo = std::move(lo);
    impl->hi = std::move(hi);
    return ConvexSet(impl);
}

ConvexSet ConvexSet::ball(Vector center, double radius) {
    if (!(radius >= 0.0) || !center.is_finite()) {
        throw std::invalid_argument("ConvexSet::ball: invalid data");
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Ball;
    impl->dim = center.dim();
    impl->center = std::move(center);
    impl->radius = radius;
    return ConvexSet(impl);
}

ConvexSet ConvexSet::polytope(std::vector<Vector> rows, std::vector<double> offsets) {
    if (rows.empty() || rows.size() != offsets.size()) {
        throw std::invalid_argument("ConvexSet::polytope: rows/offsets mismatch");
    }
    const std::size_t n = rows[0].dim();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        check_dim(rows[i], n, "ConvexSet::polytope");
        double len = norm(rows[i]);
        if (len < 1e-12) throw std::invalid_argument("ConvexSet::polytope: zero row");
        rows[i] *= 1.0 / len;
        offsets[i] /= len;
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Polytope;
    impl->dim = n;
    impl->rows = std::move(rows);
    impl->offsets = std::move(offsets);
    ConvexSet set(impl);
    // nonemptiness certificate: the projection of any point must land inside
    Vector probe = set.project(Vector(n));
    if (!set.contains(probe, 1e-5)) {
        throw std::invalid_argument("ConvexSet::polytope: set appears empty");
    }
    return set;
}

ConvexSet ConvexSet::whole_space(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("ConvexSet::whole_space: empty dimension");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::WholeSpace;
    impl->dim = dim;
    return ConvexSet(impl);
}

ConvexSet ConvexSet::intersect_with_ball(ConvexSet base, Vector center, double radius) {
    check_dim(center, base.dim(), "ConvexSet::intersect_with_ball");
    if (!(radius > 0.0)) throw std::invalid_argument("intersect_with_ball: radius must be > 0");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::IntersectionWithBall;
    impl->dim = base.dim();
    impl->center = std::move(center);
    impl->radius = radius;
    impl->base = base.impl_;
    ConvexSet set(impl);
    Vector probe = set.project(set.impl_->center);
    if (!set.contains(probe, 1e-5)) {
        throw std::invalid_argument("ConvexSet::intersect_with_ball: intersection appears empty");
    }
    return set;
}

ConvexSet ConvexSet::epigraph(ProperConvexFunction phi, ConvexSet base) {
    if (phi.dim() != base.dim()) throw std::invalid_argument("ConvexSet::epigraph: dim mismatch");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Epigraph;
    impl->dim = base.dim() + 1;
    impl->base = base.impl_;
    impl->phi = std::make_shared<const ProperConvexFunction>(std::move(phi));
    return ConvexSet(impl);
}

std::size_t ConvexSet::dim() const { return impl_->dim; }
ConvexSet::Kind ConvexSet::kind() const { return impl_->kind; }

bool ConvexSet::contains(const Vector& y, double tol) const {
    check_dim(y, impl_->dim, "ConvexSet::contains");
    const Impl& s = *impl_;
    switch (s.kind) {
        case Kind::Box:
            for (std::size_t i = 0; i < s.dim; ++i) {
                if (y[i] < s.lo[i] - tol || y[i] > s.hi[i] + tol) return false;
            }
            return true;
        case Kind::Ball:
            return distance(y, s.center) <= s.radius + tol;
        case Kind::Polytope:
            for (std::size_t i = 0; i < s.rows.size(); ++i) {
                if (dot(s.rows[i], y) > s.offsets[i] + tol) return false;
            }
            return true;
        case Kind::WholeSpace:
            return true;
        case Kind::IntersectionWithBall:
            return ConvexSet(s.base).contains(y, tol) && distance(y, s.center) <= s.radius + tol;
        case Kind::Epigraph: {
            Vector yy(s.dim - 1);
            for (std::size_t i = 0; i + 1 < s.dim; ++i) yy[i] = y[i];
            double mu = y[s.dim - 1];
            double val = s.phi->value(yy);
            return ConvexSet(s.base).contains(yy, tol) && val <= mu + tol;
        }
    }
    return false;
}

Vector ConvexSet::project(const Vector& y) const {
    check_dim(y, impl_->dim, "ConvexSet::project");
    const Impl& s = *impl_;
    switch (s.kind) {
        case Kind::Box: {
            Vector p(s.dim);
            for (std::size_t i = 0; i < s.dim; ++i) p[i] = std::clamp(y[i], s.lo[i], s.hi[i]);
            return p;
        }
        case Kind::Ball:
            return project_ball(y, s.center, s.radius);
        case Kind::WholeSpace:
            return y;
        case Kind::Polytope: {
            if (contains(y, 0.0)) return y;
            // Dykstra over the halfspaces
            const std::size_t m = s.rows.size();
            Vector x = y;
            std::vector<Vector> corr(m, Vector(s.dim));
            for (int cycle = 0; cycle < 2000; ++cycle) {
                double shift = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    Vector z = x + corr[i];
                    Vector xn = project_halfspace(z, s.rows[i], s.offsets[i]);
                    corr[i] = z - xn;
                    shift += distance(xn, x);
                    x = xn;
                }
                if (shift < 1e-13 * (1.0 + norm(x))) break;
            }
            return x;
        }
        case Kind::IntersectionWithBall: {
            ConvexSet base(s.base);
            Vector x = y;
            Vector p(s.dim), q(s.dim);
            for (int cycle = 0; cycle < 2000; ++cycle) {
                Vector x1 = base.project(x + p);
                p = (x + p) - x1;
                Vector x2 = project_ball(x1 + q, s.center, s.radius);
                q = (x1 + q) - x2;
                double shift = distance(x2, x);
                x = x2;
                if (shift < 1e-13 * (1.0 + norm(x))) break;
            }
            return x;
        }
        case Kind::Epigraph: {
            ConvexSet base(s.base);
            const std::size_t n = s.dim - 1;
            auto project_epi = [&](const Vector& v) {
                Vector xx(n);
                for (std::size_t i = 0; i < n; ++i) xx[i] = v[i];
                double m = v[n];
                double fx = s.phi->value(xx);
                if (fx <= m) return v;
                // root of phi(prox_{l phi}(x)) - (m + l) in l > 0
                double lo_l = 0.0, hi_l = 1.0;
                for (int it = 0; it < 60; ++it) {
                    double g = s.phi->value(s.phi->prox(xx, hi_l)) - (m + hi_l);
                    if (g <= 0.0) break;
                    lo_l = hi_l;
                    hi_l *= 2.0;
                }
                for (int it = 0; it < 80; ++it) {
                    double mid = 0.5 * (lo_l + hi_l);
                    if (mid <= 0.0) break;
                    double g = s.phi->value(s.phi->prox(xx, mid)) - (m + mid);
                    if (g > 0.0) {
                        lo_l = mid;
                    } else {
                        hi_l = mid;
                    }
                }
                double lam = hi_l;
                Vector px = s.phi->prox(xx, lam);
                Vector out(n + 1);
                for (std::size_t i = 0; i < n; ++i) out[i] = px[i];
                out[n] = m + lam;
                return out;
            };
            auto project_base_cyl = [&](const Vector& v) {
                Vector xx(n);
                for (std::size_t i = 0; i < n; ++i) xx[i] = v[i];
                Vector px = base.project(xx);
                Vector out(n + 1);
                for (std::size_t i = 0; i < n; ++i) out[i] = px[i];
                out[n] = v[n];
                return out;
            };
            Vector x = y;
            Vector p(s.dim), q(s.dim);
            for (int cycle = 0; cycle < 500; ++cycle) {
                Vector x1 = project_epi(x + p);
                p = (x + p) - x1;
                Vector x2 = project_base_cyl(x1 + q);
                q = (x1 + q) - x2;
                double shift = distance(x2, x);
                x = x2;
                if (shift < 1e-13 * (1.0 + norm(x))) break;
            }
            // land feasibly: lift mu if the alternation left it marginally low
            Vector xx(n);
            for (std::size_t i = 0; i < n; ++i) xx[i] = x[i];
            double fx = s.phi->value(xx);
            if (fx > x[n]) x[n] = fx;
            return x;
        }
    }
    throw std::logic_error("ConvexSet::project: unreachable");
}

double ConvexSet::support(const Vector& xi) const {
    check_dim(xi, impl_->dim, "ConvexSet::support");
    const Impl& s = *impl_;
    switch (s.kind) {
        case Kind::Box: {
            double v = 0.0;
            for (std::size_t i = 0; i < s.dim; ++i) {
                if (xi[i] > 0.0) {
                    if (s.hi[i] == kInf) return kInf;
                    v += s.hi[i] * xi[i];
                } else if (xi[i] < 0.0) {
                    if (s.lo[i] == -kInf) return kInf;
                    v += s.lo[i] * xi[i];
                }
            }
            return v;
        }
        case Kind::Ball:
            return dot(s.center, xi) + s.radius * norm(xi);
        case Kind::WholeSpace:
            return norm(xi) == 0.0 ? 0.0 : kInf;
        case Kind::Polytope: {
            const auto& vs = vertices();
            double best = -kInf;
            for (const auto& v : vs) best = std::max(best, dot(v, xi));
            return best;
        }
        case Kind::IntersectionWithBall: {
            double a = ConvexSet(s.base).support(xi);
            double b = dot(s.center, xi) + s.radius * norm(xi);
            return std::min(a, b);
        }
        case Kind::Epigraph:
            throw std::logic_error("ConvexSet::support: not available for epigraph sets");
    }
    throw std::logic_error("ConvexSet::support: unreachable");
}

bool ConvexSet::is_bounded() const { return bounding_radius() < kInf; }

double ConvexSet::bounding_radius() const {
    const Impl& s = *impl_;
    switch (s.kind) {
        case Kind::Box: {
            double r2 = 0.0;
            for (std::size_t i = 0; i < s.dim; ++i) {
                double m = std::max(std::abs(s.lo[i]), std::abs(s.hi[i]));
                if (m == kInf) return kInf;
                r2 += m * m;
            }
            return std::sqrt(r2);
        }
        case Kind::Ball:
            return norm(s.center) + s.radius;
        case Kind::WholeSpace:
            return kInf;
        case Kind::Polytope: {
            const auto& vs = vertices();
            if (vs.empty()) return kInf;
            // sampled recession check: a far point that projects far signals
            // an unbounded polytope
            double vr = 0.0;
            for (const auto& v : vs) vr = std::max(vr, norm(v));
            for (std::size_t i = 0; i < s.dim; ++i) {
                for (double sign : {1.0, -1.0}) {
                    Vector far = (sign * 1e7) * basis_vector(s.dim, i);
                    if (norm(project(far)) > 10.0 * (vr + 1.0) + 1e3) return kInf;
                }
            }
            return vr;
        }
        case Kind::IntersectionWithBall:
            return std::min(ConvexSet(s.base).bounding_radius(), norm(s.center) + s.radius);
        case Kind::Epigraph:
            return kInf;
    }
    return kInf;
}

std::vector<Vector> ConvexSet::normal_cone_generators(const Vector& y, double tol) const {
    check_dim(y, impl_->dim, "ConvexSet::normal_cone_generators");
    const Impl& s = *impl_;
    std::vector<Vector> gens;
    switch (s.kind) {
        case Kind::Box:
            for (std::size_t i = 0; i < s.dim; ++i) {
                if (s.hi[i] != kInf && y[i] >= s.hi[i] - tol) gens.push_back(basis_vector(s.dim, i));
                if (s.lo[i] != -kInf && y[i] <= s.lo[i] + tol) gens.push_back(-basis_vector(s.dim, i));
            }
            return gens;
        case Kind::Polytope:
            for (std::size_t i = 0; i < s.rows.size(); ++i) {
                if (dot(s.rows[i], y) >= s.offsets[i] - tol) gens.push_back(s.rows[i]);
            }
            return gens;
        case Kind::WholeSpace:
            return gens;
        default:
            throw std::logic_error(
                "ConvexSet::normal_cone_generators: only boxes, polytopes and the whole space "
                "carry generator structure");
    }
}

std::vector<Vector> ConvexSet::vertices() const {
    const Impl& s = *impl_;
    if (s.vertices_computed) return s.vertex_cache;
    std::vector<Vector> out;
    if (s.kind == Kind::Box) {
        for (std::size_t i = 0; i < s.dim; ++i) {
            if (s.lo[i] == -kInf || s.hi[i] == kInf) {
                throw std::logic_error("ConvexSet::vertices: unbounded box");
            }
        }
        if (s.dim > 16) throw std::logic_error("ConvexSet::vertices: box dimension too large");
        const std::size_t count = std::size_t{1} << s.dim;
        for (std::size_t mask = 0; mask < count; ++mask) {
            Vector v(s.dim);
            for (std::size_t i = 0; i < s.dim; ++i) {
                v[i] = (mask & (std::size_t{1} << i)) ? s.hi[i] : s.lo[i];
            }
            out.push_back(std::move(v));
        }
    } else if (s.kind == Kind::Polytope) {
        const std::size_t n = s.dim;
        const std::size_t m = s.rows.size();
        if (m < n) throw std::logic_error("ConvexSet::vertices: polytope cannot be bounded");
        std::vector<std::size_t> idx(n);
        // enumerate all n-subsets of rows
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start,
                                                                std::size_t depth) {
            if (depth == n) {
                std::vector<std::vector<double>> a(n, std::vector<double>(n));
                std::vector<double> b(n);
                for (std::size_t r = 0; r < n; ++r) {
                    for (std::size_t c = 0; c < n; ++c) a[r][c] = s.rows[idx[r]][c];
                    b[r] = s.offsets[idx[r]];
                }
                auto v = solve_linear(std::move(a), std::move(b));
                if (!v) return;
                for (std::size_t r = 0; r < m; ++r) {
                    if (dot(s.rows[r], *v) > s.offsets[r] + 1e-8) return;
                }
                for (const auto& w : out) {
                    if (distance(w, *v) < 1e-9) return;
                }
                out.push_back(std::move(*v));
                return;
            }
            for (std::size_t i = start; i < m; ++i) {
                idx[depth] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
    } else {
        throw std::logic_error("ConvexSet::vertices: only boxes and polytopes have vertices");
    }
    s.vertex_cache = out;
    s.vertices_computed = true;
    return out;
}

double ConvexSet::max_ray_step(const Vector& y, const Vector& d) const {
    check_dim(y, impl_->dim, "ConvexSet::max_ray_step(y)");
    check_dim(d, impl_->dim, "ConvexSet::max_ray_step(d)");
    const Impl& s = *impl_;
    switch (s.kind) {
        case Kind::Box: {
            double step = kInf;
            for (std::size_t i = 0; i < s.dim; ++i) {
                if (d[i] > 0.0 && s.hi[i] != kInf) {
                    step = std::min(step, (s.hi[i] - y[i]) / d[i]);
                } else if (d[i] < 0.0 && s.lo[i] != -kInf) {
                    step = std::min(step, (s.lo[i] - y[i]) / d[i]);
                }
            }
            return std::max(step, 0.0);
        }
        case Kind::Polytope: {
            double step = kInf;
            for (std::size_t r = 0; r < s.rows.size(); ++r) {
                double along = dot(s.rows[r], d);
                if (along > 1e-15) {
                    step = std::min(step, (s.offsets[r] - dot(s.rows[r], y)) / along);
                }
            }
            return std::max(step, 0.0);
        }
        case Kind::Ball: {
            // largest s with ||y + s d - c|| = radius
            Vector rel = y - s.center;
            double a = dot(d, d);
            if (a == 0.0) return kInf;
            double b = dot(rel, d);
            double c = dot(rel, rel) - s.radius * s.radius;
            double disc = b * b - a * c;
            if (disc < 0.0) return 0.0;
            return std::max(0.0, (-b + std::sqrt(disc)) / a);
        }
        case Kind::WholeSpace:
            return kInf;
        default: {
            // bisection against membership
            if (!contains(y + 1e-12 * d, 1e-10)) return 0.0;
            double hi = 1.0;
            double cap = bounding_radius();
            if (!std::isfinite(cap)) cap = 1e8;
            while (hi < 2.0 * cap && contains(y + hi * d, 1e-10)) hi *= 2.0;
            if (hi >= 2.0 * cap) return kInf;
            double lo = hi * 0.5;
            for (int it = 0; it < 80; ++it) {
                double mid = 0.5 * (lo + hi);
                if (contains(y + mid * d, 1e-10)) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return lo;
        }
    }
}

ConvexSet ConvexSet::restrict(const std::vector<std::size_t>& free, const Vector& anchor) const {
    check_dim(anchor, impl_->dim, "ConvexSet::restrict anchor");
    if (free.empty()) throw std::invalid_argument("ConvexSet::restrict: empty coordinate set");
    for (std::size_t i : free) {
        if (i >= impl_->dim) throw std::invalid_argument("ConvexSet::restrict: index out of range");
    }
    const Impl& s = *impl_;
    const std::size_t k = free.size();
    switch (s.kind) {
        case Kind::Box: {
            std::vector<double> lo(k), hi(k);
            for (std::size_t j = 0; j < k; ++j) {
                lo[j] = s.lo[free[j]];
                hi[j] = s.hi[free[j]];
            }
            return box(std::move(lo), std::move(hi));
        }
        case Kind::Ball: {
            double rem = s.radius * s.radius;
            std::vector<bool> is_free(s.dim, false);
            for (std::size_t j : free) is_free[j] = true;
            for (std::size_t i = 0; i < s.dim; ++i) {
                if (!is_free[i]) {
                    double d = anchor[i] - s.center[i];
                    rem -= d * d;
                }
            }
            if (rem < 0.0) {
                throw std::domain_error("ConvexSet::restrict: slice of ball is empty");
            }
            Vector c(k);
            for (std::size_t j = 0; j < k; ++j) c[j] = s.center[free[j]];
            return ball(std::move(c), std::sqrt(rem));
        }
        case Kind::Polytope: {
            std::vector<bool> is_free(s.dim, false);
            for (std::size_t j : free) is_free[j] = true;
            std::vector<Vector> rows;
            std::vector<double> offs;
            for (std::size_t r = 0; r < s.rows.size(); ++r) {
                Vector row(k);
                double off = s.offsets[r];
                double row_norm = 0.0;
                for (std::size_t j = 0; j < k; ++j) {
                    row[j] = s.rows[r][free[j]];
                    row_norm += row[j] * row[j];
                }
                for (std::size_t i = 0; i < s.dim; ++i) {
                    if (!is_free[i]) off -= s.rows[r][i] * anchor[i];
                }
                if (row_norm < 1e-20) {
                    if (off < -1e-9) {
                        throw std::domain_error("ConvexSet::restrict: slice of polytope is empty");
                    }
                    continue;  // constraint does not touch the free coordinates
                }
                rows.push_back(std::move(row));
                offs.push_back(off);
            }
            if (rows.empty()) return whole_space(k);
            return polytope(std::move(rows), std::move(offs));
        }
        case Kind::WholeSpace:
            return whole_space(k);
        case Kind::IntersectionWithBall: {
            ConvexSet base_slice = ConvexSet(s.base).restrict(free, anchor);
            double rem = s.radius * s.radius;
            std::vector<bool> is_free(s.dim, false);
            for (std::size_t j : free) is_free[j] = true;
            for (std::size_t i = 0; i < s.dim; ++i) {
                if (!is_free[i]) {
                    double d = anchor[i] - s.center[i];
                    rem -= d * d;
                }
            }
            if (rem < 0.0) {
                throw std::domain_error("ConvexSet::restrict: slice is empty");
            }
            Vector c(k);
            for (std::size_t j = 0; j < k; ++j) c[j] = s.center[free[j]];
            return intersect_with_ball(std::move(base_slice), std::move(c), std::sqrt(rem));
        }
        case Kind::Epigraph:
            throw std::logic_error("ConvexSet::restrict: epigraph sets cannot be sliced");
    }
    throw std::logic_error("ConvexSet::restrict: unreachable");
}

Vector ConvexSet::an_interior_point() const {
    const Impl& s = *impl_;
    switch (s.kind) {
        case Kind::Box: {
            Vector p(s.dim);
            for (std::size_t i = 0; i < s.dim; ++i) {
                if (s.lo[i] == -kInf && s.hi[i] == kInf) {
                    p[i] = 0.0;
                } else if (s.lo[i] == -kInf) {
                    p[i] = s.hi[i] - 1.0;
                } else if (s.hi[i] == kInf) {
                    p[i] = s.lo[i] + 1.0;
                } else {
                    p[i] = 0.5 * (s.lo[i] + s.hi[i]);
                }
            }
            return p;
        }
        case Kind::Ball:
            return s.center;
        case Kind::WholeSpace:
            return Vector(s.dim);
        case Kind::Polytope: {
            const auto& vs = vertices();
            if (vs.empty()) throw std::logic_error("an_interior_point: polytope has no vertices");
            Vector c(s.dim);
            for (const auto& v : vs) c += v;
            c *= 1.0 / static_cast<double>(vs.size());
            return c;
        }
        case Kind::IntersectionWithBall: {
            Vector p = ConvexSet(s.base).an_interior_point();
            return project(project_ball(p, s.center, s.radius));
        }
        case Kind::Epigraph:
            throw std::logic_error("an_interior_point: not available for epigraph sets");
    }
    throw std::logic_error("an_interior_point: unreachable");
}

}  // namespace vimo
