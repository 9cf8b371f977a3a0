#include "vimo/set_valued_operator.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vimo/convex_function.hpp"
#include "vimo/extended_real.hpp"

namespace vimo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_zero(const Vector& v) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (v[i] != 0.0) return false;
    }
    return true;
}

}  // namespace

SetValuedOperator::SetValuedOperator(std::size_t dim, SupportFn support, SelectionFn selection,
                                     NormFn norms)
    : dim_(dim),
      support_(std::move(support)),
      selection_(std::move(selection)),
      norms_(std::move(norms)) {
    if (dim_ == 0) throw std::invalid_argument("SetValuedOperator: dim must be positive");
}

double SetValuedOperator::support_plus(const Vector& y, const Vector& xi) const {
    check_dim(y, dim_, "support_plus(y)");
    check_dim(xi, dim_, "support_plus(xi)");
    if (is_zero(xi)) return 0.0;
    double v = support_(y, xi);
    if (std::isnan(v)) throw std::domain_error("support oracle returned NaN");
    return v;
}

double SetValuedOperator::support_minus(const Vector& y, const Vector& xi) const {
    return -support_plus(y, -xi);
}

Vector SetValuedOperator::selection(const Vector& y, const Vector& hint) const {
    check_dim(y, dim_, "selection(y)");
    check_dim(hint, dim_, "selection(hint)");
    Vector w = selection_(y, hint);
    check_dim(w, dim_, "selection result");
    if (!w.is_finite()) throw std::domain_error("selection oracle returned non-finite point");
    return w;
}

std::pair<double, double> SetValuedOperator::norm_bounds(const Vector& y) const {
    check_dim(y, dim_, "norm_bounds");
    auto [lo, hi] = norms_(y);
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
        throw std::domain_error("norm oracle returned invalid bounds");
    }
    return {lo, hi};
}

SetValuedOperator sum_operator(const SetValuedOperator& a, const SetValuedOperator& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("sum_operator: dimension mismatch");
    auto support = [a, b](const Vector& y, const Vector& xi) {
        return ext::add(a.support_plus(y, xi), b.support_plus(y, xi));
    };
    auto selection = [a, b](const Vector& y, const Vector& hint) {
        return a.selection(y, hint) + b.selection(y, hint);
    };
    auto norms = [a, b](const Vector& y) -> std::pair<double, double> {
        auto [al, ah] = a.norm_bounds(y);
        auto [bl, bh] = b.norm_bounds(y);
        double hi = ah + bh;
        double lo = std::max({0.0, al - bh, bl - ah});
        if (std::isnan(hi)) hi = kInf;
        if (!std::isfinite(lo)) lo = 0.0;
        return {lo, hi};
    };
    return SetValuedOperator(a.dim(), support, selection, norms);
}

SetValuedOperator subdifferential_operator(const ProperConvexFunction& phi, int samples) {
    if (samples < 1) throw std::invalid_argument("subdifferential_operator: samples must be >= 1");
    const std::size_t n = phi.dim();
    auto quotient_limit = [phi, samples](const Vector& y, const Vector& xi) -> double {
        double fy = phi.value(y);
        if (fy == ext::infinity) {
            throw std::domain_error("subdifferential_operator: point outside dom phi");
        }
        // One-sided difference quotients of a convex function decrease to
        // phi'(y; xi) as t decreases; the smallest finite quotient on the grid
        // approximates the limit from above.
        double best = kInf;
        double t = 1.0;
        for (int k = 0; k < samples; ++k, t *= 0.5) {
            double ft = phi.value(y + t * xi);
            if (ft == ext::infinity) continue;
            best = std::min(best, (ft - fy) / t);
        }
        return best;
    };
    auto selection = [phi](const Vector& y, const Vector&) { return phi.subgradient(y); };
    auto norms = [quotient_limit, n](const Vector& y) -> std::pair<double, double> {
        // Axis-interval envelope: d_i in [-s(-e_i), s(e_i)] for every d.
        double hi_sq = 0.0, lo_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            Vector e = basis_vector(n, i);
            double up = quotient_limit(y, e);
            double dn = quotient_limit(y, -e);
            double hi_i = std::max(std::abs(up), std::abs(dn));
            hi_sq += hi_i * hi_i;
            double gap = std::max({0.0, -dn, -up});
            lo_sq += gap * gap;
        }
        return {std::sqrt(lo_sq), std::sqrt(hi_sq)};
    };
    return SetValuedOperator(n, quotient_limit, selection, norms);
}

namespace ops {

SetValuedOperator single_valued(std::size_t dim, std::function<Vector(const Vector&)> f) {
    auto support = [f](const Vector& y, const Vector& xi) { return dot(f(y), xi); };
    auto selection = [f](const Vector& y, const Vector&) { return f(y); };
    auto norms = [f](const Vector& y) -> std::pair<double, double> {
        double n = norm(f(y));
        return {n, n};
    };
    return SetValuedOperator(dim, support, selection, norms);
}

SetValuedOperator linear(const std::vector<std::vector<double>>& matrix) {
    const std::size_t n = matrix.size();
    for (const auto& row : matrix) {
        if (row.size() != n) throw std::invalid_argument("ops::linear: matrix must be square");
    }
    auto apply = [matrix, n](const Vector& y) {
        Vector out(n);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += matrix[i][j] * y[j];
            out[i] = s;
        }
        return out;
    };
    return single_valued(n, apply);
}

SetValuedOperator identity(std::size_t dim) {
    return single_valued(dim, [](const Vector& y) { return y; });
}

SetValuedOperator negative_identity(std::size_t dim) {
    return single_valued(dim, [](const Vector& y) { return -y; });
}

SetValuedOperator power_norm(std::size_t dim, double p) {
    if (p < 2.0) throw std::invalid_argument("ops::power_norm: p must be >= 2");
    return single_valued(dim, [p](const Vector& y) {
        double r = norm(y);
        double scale = (r == 0.0) ? 0.0 : std::pow(r, p - 2.0);
        return scale * y;
    });
}

SetValuedOperator componentwise_cubic(std::size_t dim) {
    return single_valued(dim, [](const Vector& y) {
        Vector out(y.dim());
        for (std::size_t i = 0; i < y.dim(); ++i) out[i] = y[i] * y[i] * y[i];
        return out;
    });
}

SetValuedOperator finite_set_map(std::size_t dim,
                                 std::function<std::vector<Vector>(const Vector&)> points) {
    auto support = [points](const Vector& y, const Vector& xi) {
        auto pts = points(y);
        if (pts.empty()) throw std::domain_error("finite_set_map: empty image");
        double best = -kInf;
        for (const auto& d : pts) best = std::max(best, dot(d, xi));
        return best;
    };
    auto selection = [points](const Vector& y, const Vector& hint) {
        auto pts = points(y);
        if (pts.empty()) throw std::domain_error("finite_set_map: empty image");
        std::size_t arg = 0;
        double best = -kInf;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            double v = dot(pts[i], hint);
            if (v > best) {
                best = v;
                arg = i;
            }
        }
        return pts[arg];
    };
    auto norms = [points](const Vector& y) -> std::pair<double, double> {
        auto pts = points(y);
        double lo = kInf, hi = 0.0;
        for (const auto& d : pts) {
            double n = norm(d);
            lo = std::min(lo, n);
            hi = std::max(hi, n);
        }
        return {lo, hi};
    };
    return SetValuedOperator(dim, support, selection, norms);
}

SetValuedOperator constant_finite_set(std::size_t dim, std::vector<Vector> points) {
    if (points.empty()) throw std::invalid_argument("constant_finite_set: empty set");
    for (const auto& p : points) check_dim(p, dim, "constant_finite_set");
    return finite_set_map(dim, [points](const Vector&) { return points; });
}

SetValuedOperator box_valued(std::size_t dim,
                             std::function<std::pair<Vector, Vector>(const Vector&)> bounds) {
    auto support = [bounds](const Vector& y, const Vector& xi) {
        auto [lo, hi] = bounds(y);
        double s = 0.0;
        for (std::size_t i = 0; i < xi.dim(); ++i) s += std::max(lo[i] * xi[i], hi[i] * xi[i]);
        return s;
    };
    auto selection = [bounds](const Vector& y, const Vector& hint) {
        auto [lo, hi] = bounds(y);
        Vector w(hint.dim());
        for (std::size_t i = 0; i < hint.dim(); ++i) {
            if (hint[i] > 0.0) {
                w[i] = hi[i];
            } else if (hint[i] < 0.0) {
                w[i] = lo[i];
            } else {
                w[i] = 0.5 * (lo[i] + hi[i]);
            }
        }
        return w;
    };
    auto norms = [bounds](const Vector& y) -> std::pair<double, double> {
        auto [lo, hi] = bounds(y);
        double hi_sq = 0.0, lo_sq = 0.0;
        for (std::size_t i = 0; i < lo.dim(); ++i) {
            double m = std::max(std::abs(lo[i]), std::abs(hi[i]));
            hi_sq += m * m;
            double gap = std::max({0.0, lo[i], -hi[i]});
            lo_sq += gap * gap;
        }
        return {std::sqrt(lo_sq), std::sqrt(hi_sq)};
    };
    return SetValuedOperator(dim, support, selection, norms);
}

SetValuedOperator constant_box(const Vector& lo, const Vector& hi) {
    check_dim(hi, lo.dim(), "constant_box");
    for (std::size_t i = 0; i < lo.dim(); ++i) {
        if (lo[i] > hi[i]) throw std::invalid_argument("constant_box: lo > hi");
    }
    return box_valued(lo.dim(), [lo, hi](const Vector&) { return std::make_pair(lo, hi); });
}

SetValuedOperator subdiff_l1(std::size_t dim) {
    return box_valued(dim, [](const Vector& y) {
        Vector lo(y.dim()), hi(y.dim());
        for (std::size_t i = 0; i < y.dim(); ++i) {
            if (y[i] > 0.0) {
                lo[i] = hi[i] = 1.0;
            } else if (y[i] < 0.0) {
                lo[i] = hi[i] = -1.0;
            } else {
                lo[i] = -1.0;
                hi[i] = 1.0;
            }
        }
        return std::make_pair(lo, hi);
    });
}

SetValuedOperator step_down_1d() {
    return single_valued(1, [](const Vector& y) {
        Vector w(1);
        w[0] = (y[0] > 0.0) ? -1.0 : 0.0;
        return w;
    });
}

SetValuedOperator reciprocal_1d() {
    return single_valued(1, [](const Vector& y) {
        Vector w(1);
        w[0] = (y[0] != 0.0) ? 1.0 / y[0] : 0.0;
        return w;
    });
}

}  // namespace ops

}  // namespace vimo
