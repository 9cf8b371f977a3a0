#include "vimo/checkers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "vimo/extended_real.hpp"

namespace vimo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ClassReport make_pass(std::string name, int samples, double margin) {
    ClassReport r;
    r.verdict = Verdict::Pass;
    r.samples_used = samples;
    r.margin = margin;
    r.check_name = std::move(name);
    return r;
}

ClassReport make_fail(std::string name, int samples, double margin, ClassWitness witness) {
    ClassReport r;
    r.verdict = Verdict::Fail;
    r.samples_used = samples;
    r.margin = margin;
    r.check_name = std::move(name);
    r.witness = std::move(witness);
    return r;
}

std::size_t tail_start(std::size_t size) { return size / 2; }

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass:
            return "pass";
        case Verdict::Fail:
            return "fail";
        case Verdict::Inconclusive:
            return "inconclusive";
    }
    return "?";
}

Trajectory::Trajectory(std::vector<Vector> pts, Vector lim, std::vector<Vector> sels)
    : points(std::move(pts)), limit(std::move(lim)), selections(std::move(sels)) {
    if (points.empty()) throw std::invalid_argument("Trajectory: no points");
    if (!selections.empty() && selections.size() != points.size()) {
        throw std::invalid_argument("Trajectory: selections must match points");
    }
    double prev = kInf;
    for (const auto& p : points) {
        check_dim(p, limit.dim(), "Trajectory point");
        double gap = distance(p, limit);
        if (gap >= prev) {
            throw std::invalid_argument("Trajectory: gaps must strictly decrease");
        }
        prev = gap;
    }
    if (prev > 1e-6) {
        throw std::invalid_argument("Trajectory: final gap above 1e-6");
    }
}

Trajectory Trajectory::geometric(const Vector& limit, const Vector& direction, double r0,
                                 double ratio, int count, const SetValuedOperator* a,
                                 const Vector* hint) {
    if (!(r0 > 0.0) || !(ratio > 0.0) || !(ratio < 1.0) || count < 1) {
        throw std::invalid_argument("Trajectory::geometric: bad schedule");
    }
    double dn = norm(direction);
    if (dn == 0.0) throw std::invalid_argument("Trajectory::geometric: zero direction");
    Vector u = (1.0 / dn) * direction;
    std::vector<Vector> pts;
    std::vector<Vector> sels;
    double r = r0 * ratio;
    for (int j = 0; j < count; ++j, r *= ratio) {
        Vector p = limit + r * u;
        if (a != nullptr) {
            Vector h = (hint != nullptr) ? *hint : u;
            sels.push_back(a->selection(p, h));
        }
        pts.push_back(std::move(p));
    }
    return Trajectory(std::move(pts), limit, std::move(sels));
}

ClassReport check_monotone(const SetValuedOperator& a,
                           const std::vector<std::pair<Vector, Vector>>& pairs,
                           const CheckOptions& opt) {
    if (pairs.empty()) throw std::invalid_argument("check_monotone: empty pair list");
    double margin = kInf;
    for (const auto& [y1, y2] : pairs) {
        Vector d = y1 - y2;
        double lower = a.support_minus(y1, d);
        double upper = a.support_plus(y2, d);
        double slack = lower - upper;
        margin = std::min(margin, slack);
        if (slack < -opt.tolerance) {
            ClassWitness w;
            w.points = {y1, y2};
            w.values = {lower, upper};
            w.detail = "[A(y1),y1-y2]_- < [A(y2),y1-y2]_+";
            return make_fail("monotone", static_cast<int>(pairs.size()), slack, std::move(w));
        }
    }
    return make_pass("monotone", static_cast<int>(pairs.size()), margin);
}

ClassReport check_semibounded_variation(const SetValuedOperator& a, const VariationModulus& c,
                                        double R,
                                        const std::vector<std::pair<Vector, Vector>>& pairs,
                                        const std::optional<Vector>& weights,
                                        const CheckOptions& opt) {
    if (pairs.empty()) throw std::invalid_argument("check_semibounded_variation: empty pair list");
    if (!(R > 0.0)) throw std::invalid_argument("check_semibounded_variation: R must be positive");
    for (const auto& [y1, y2] : pairs) {
        if (norm(y1) > R + opt.tolerance || norm(y2) > R + opt.tolerance) {
            throw std::invalid_argument(
                "check_semibounded_variation: pair outside the ball of radius R");
        }
    }
    bool modulus_ok = c.has_vanishing_slope(R, 1.0, opt.limit_tolerance) &&
                      c.has_vanishing_slope(R, R, opt.limit_tolerance) &&
                      c.looks_continuous(R, 2.0 * R);
    double margin = kInf;
    for (const auto& [y1, y2] : pairs) {
        Vector d = y1 - y2;
        double wn = weights ? weighted_norm(d, *weights) : norm(d);
        double lower = a.support_minus(y1, d);
        double upper = a.support_plus(y2, d);
        double slack = lower - upper + c.eval(R, wn);
        margin = std::min(margin, slack);
        if (slack < -opt.tolerance) {
            ClassWitness w;
            w.points = {y1, y2};
            w.values = {lower, upper, c.eval(R, wn)};
            w.detail = "[A(y1),y1-y2]_- < [A(y2),y1-y2]_+ - C(R,||y1-y2||')";
            auto rep =
                make_fail("semibounded_variation", static_cast<int>(pairs.size()), slack, std::move(w));
            rep.notes.push_back(std::string("modulus vanishing slope: ") +
                                (modulus_ok ? "pass" : "fail"));
            return rep;
        }
    }
    if (!modulus_ok) {
        ClassWitness w;
        w.detail = "modulus lacks vanishing slope: C(R, tau r)/tau does not tend to 0";
        auto rep = make_fail("semibounded_variation", static_cast<int>(pairs.size()), margin,
                             std::move(w));
        rep.notes.push_back("modulus vanishing slope: fail");
        return rep;
    }
    auto rep = make_pass("semibounded_variation", static_cast<int>(pairs.size()), margin);
    rep.notes.push_back("modulus vanishing slope: pass");
    return rep;
}

ClassReport check_radial_semicontinuity(const SetValuedOperator& a,
                                        const std::vector<std::array<Vector, 3>>& triples,
                                        const std::vector<double>& t_grid, bool weaker_variant,
                                        const CheckOptions& opt) {
    if (t_grid.empty()) throw std::invalid_argument("check_radial_semicontinuity: empty grid");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] < t_grid[i - 1]) || !(t_grid[i] > 0.0)) {
            throw std::invalid_argument(
                "check_radial_semicontinuity: grid must be strictly decreasing and positive");
        }
    }
    if (t_grid.back() > 1e-6) {
        throw std::invalid_argument("check_radial_semicontinuity: grid must reach below 1e-6");
    }
    double margin = kInf;
    int samples = 0;
    // liminf surrogate: minimum over the deepest grid levels (within a fixed
    // factor of the smallest t)
    const double tail_cut = t_grid.back() * 64.0;
    for (const auto& [y, xi, h_given] : triples) {
        const Vector h = weaker_variant ? -xi : h_given;
        double lower = a.support_minus(y, h);
        double liminf = kInf;
        for (double t : t_grid) {
            if (t > tail_cut) continue;
            liminf = std::min(liminf, a.support_plus(y + t * xi, h));
            ++samples;
        }
        double slack = liminf - lower;
        margin = std::min(margin, slack);
        if (slack < -opt.limit_tolerance) {
            ClassWitness w;
            w.points = {y, xi, h};
            w.values = {liminf, lower};
            w.detail = "liminf_t [A(y+t xi),h]_+ < [A(y),h]_-";
            return make_fail(weaker_variant ? "radial_semicontinuity_weak" : "radial_semicontinuity",
                             samples, slack, std::move(w));
        }
    }
    return make_pass(weaker_variant ? "radial_semicontinuity_weak" : "radial_semicontinuity",
                     samples, margin);
}

ClassReport check_coercivity(const SetValuedOperator& a, const Vector& y0,
                             const std::vector<double>& radii, const CoercivityOptions& opt) {
    if (radii.size() < 2) throw std::invalid_argument("check_coercivity: need at least two radii");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
            throw std::invalid_argument("check_coercivity: radii must be positive increasing");
        }
    }
    if (radii.back() < 1e3) {
        throw std::invalid_argument("check_coercivity: schedule must reach 1e3");
    }
    Sampler sampler(opt.base.seed);
    auto dirs = sampler.unit_directions(y0.dim(), opt.directions);
    std::vector<double> quotients;
    quotients.reserve(radii.size());
    for (double r : radii) {
        double worst = kInf;
        for (const auto& u : dirs) {
            Vector y = r * u;
            double val = a.support_minus(y, y - y0);
            if (opt.phi != nullptr) {
                double p = opt.phi->value(y);
                if (p == ext::infinity) continue;
                val -= p;
            }
            worst = std::min(worst, val / r);
        }
        quotients.push_back(worst);
    }
    double margin = kInf;
    for (std::size_t i = 1; i < quotients.size(); ++i) {
        margin = std::min(margin, quotients[i] - quotients[i - 1]);
    }
    int samples = static_cast<int>(radii.size()) * opt.directions;
    if (margin <= opt.base.tolerance) {
        ClassWitness w;
        w.values = quotients;
        w.detail = "normalized lower support quotient fails to increase along the radii";
        return make_fail("coercivity", samples, margin, std::move(w));
    }
    auto rep = make_pass("coercivity", samples, margin);
    rep.notes.push_back("quotient grew from " + std::to_string(quotients.front()) + " to " +
                        std::to_string(quotients.back()));
    return rep;
}

ClassReport check_local_boundedness(const SetValuedOperator& a, const Vector& y, double eps,
                                    int probes, const LocalBoundednessOptions& opt) {
    if (!(eps > 0.0)) throw std::invalid_argument("check_local_boundedness: eps must be positive");
    Sampler sampler(opt.base.seed);
    auto dirs = sampler.unit_directions(y.dim(), std::max(1, opt.per_shell));
    int used = 0;

    double global_max = a.norm_bounds(y).second;
    ++used;
    std::vector<double> shell_max;
    double r = eps;
    const int shells = std::max(opt.shells, probes / std::max(1, opt.per_shell));
    for (int k = 0; k < shells; ++k, r *= 0.5) {
        double m = 0.0;
        for (const auto& u : dirs) {
            double v = a.norm_bounds(y + r * u).second;
            ++used;
            m = std::max(m, v);
        }
        shell_max.push_back(m);
        global_max = std::max(global_max, m);
    }

    if (global_max == kInf) {
        ClassWitness w;
        w.points = {y};
        w.values = {global_max};
        w.detail = "norm oracle returned +inf inside the probe ball";
        return make_fail("local_boundedness", used, -kInf, std::move(w));
    }
    // divergence heuristic: maxima strictly growing into the tightest shells
    // and already past the blow-up threshold
    bool growing = shell_max.size() >= 4;
    for (std::size_t k = shell_max.size() >= 4 ? shell_max.size() - 4 : 0;
         k + 1 < shell_max.size(); ++k) {
        growing = growing && shell_max[k + 1] > shell_max[k] * 1.5;
    }
    if (growing && shell_max.back() > opt.blowup_threshold) {
        ClassWitness w;
        w.points = {y};
        w.values = {shell_max.back()};
        w.detail = "image norms blow up along shells shrinking into y";
        return make_fail("local_boundedness", used, -shell_max.back(), std::move(w));
    }
    auto rep = make_pass("local_boundedness", used, global_max);
    rep.notes.push_back("M = " + std::to_string(global_max));
    return rep;
}

ClassReport check_local_boundedness_sequential(const SetValuedOperator& a, const Trajectory& traj,
                                               const CheckOptions&) {
    double m = 0.0;
    int used = 0;
    for (std::size_t j = tail_start(traj.points.size()); j < traj.points.size(); ++j) {
        double v = a.norm_bounds(traj.points[j]).second;
        ++used;
        if (v == kInf) {
            ClassWitness w;
            w.points = {traj.points[j]};
            w.values = {v};
            w.detail = "norm oracle returned +inf on the trajectory tail";
            return make_fail("local_boundedness_sequential", used, -kInf, std::move(w));
        }
        m = std::max(m, v);
    }
    auto rep = make_pass("local_boundedness_sequential", used, m);
    rep.notes.push_back("tail bound M = " + std::to_string(m));
    return rep;
}

ClassReport check_pseudomonotone_surrogate(const SetValuedOperator& a, const Trajectory& traj,
                                           const std::vector<Vector>& probe_points,
                                           const PseudoMonotoneOptions& opt) {
    if (traj.selections.empty()) {
        throw std::invalid_argument("check_pseudomonotone_surrogate: trajectory needs selections");
    }
    const auto& y = traj.limit;
    const std::size_t tail = tail_start(traj.points.size());
    int used = 0;

    // hypothesis: limsup <w_j, y_j - y> <= 0 (surrogate: max over the tail)
    double limsup = -kInf;
    for (std::size_t j = tail; j < traj.points.size(); ++j) {
        limsup = std::max(limsup, dot(traj.selections[j], traj.points[j] - y));
        ++used;
    }
    if (limsup > opt.base.limit_tolerance) {
        ClassReport r;
        r.verdict = Verdict::Inconclusive;
        r.samples_used = used;
        r.margin = limsup;
        r.check_name = opt.generalized ? "generalized_pseudomonotone" : "pseudomonotone";
        r.notes.push_back("hypothesis limsup <w_j, y_j - y> <= 0 not met; definition is vacuous");
        return r;
    }

    double margin = kInf;
    for (const auto& v : probe_points) {
        double liminf = kInf;
        for (std::size_t j = tail; j < traj.points.size(); ++j) {
            liminf = std::min(liminf, dot(traj.selections[j], traj.points[j] - v));
            ++used;
        }
        double rhs = a.support_minus(y, y - v);
        double slack = liminf - rhs;
        margin = std::min(margin, slack);
        if (slack < -opt.base.limit_tolerance) {
            ClassWitness w;
            w.points = {v};
            w.values = {liminf, rhs};
            w.detail = "liminf <w_j, y_j - v> < [A(y), y - v]_-";
            return make_fail(opt.generalized ? "generalized_pseudomonotone" : "pseudomonotone",
                             used, slack, std::move(w));
        }
    }

    if (opt.generalized) {
        // w_j must converge; its limit must lie in co A(y) and the inner
        // products must converge to <w, y>.
        const Vector& w_lim = traj.selections.back();
        double wgap = 0.0;
        for (std::size_t j = tail; j < traj.selections.size(); ++j) {
            wgap = std::max(wgap, distance(traj.selections[j], w_lim) -
                                      distance(traj.selections.back(), w_lim));
        }
        double drift = distance(traj.selections[tail], w_lim);
        if (drift > std::sqrt(opt.base.limit_tolerance)) {
            ClassReport r;
            r.verdict = Verdict::Inconclusive;
            r.samples_used = used;
            r.margin = -drift;
            r.check_name = "generalized_pseudomonotone";
            r.notes.push_back("selections do not settle; w_j -> w hypothesis not met");
            return r;
        }
        double ip_gap = 0.0;
        for (std::size_t j = tail; j < traj.points.size(); ++j) {
            ip_gap = std::max(ip_gap,
                              std::abs(dot(traj.selections[j], traj.points[j]) - dot(w_lim, y)));
        }
        if (ip_gap > 1e2 * opt.base.limit_tolerance) {
            ClassWitness w;
            w.points = {w_lim};
            w.values = {ip_gap};
            w.detail = "<w_j, y_j> does not converge to <w, y>";
            return make_fail("generalized_pseudomonotone", used, -ip_gap, std::move(w));
        }
        // membership of the limit in co A(y), tested through support values
        Sampler sampler(opt.base.seed);
        for (const auto& dir : sampler.unit_directions(y.dim(), 32)) {
            double gap = a.support_plus(y, dir) - dot(w_lim, dir);
            ++used;
            margin = std::min(margin, gap);
            if (gap < -opt.base.limit_tolerance) {
                ClassWitness w;
                w.points = {w_lim, dir};
                w.values = {dot(w_lim, dir), a.support_plus(y, dir)};
                w.detail = "limit selection escapes co A(y): <w, dir> > [A(y), dir]_+";
                return make_fail("generalized_pseudomonotone", used, gap, std::move(w));
            }
        }
        (void)wgap;
    }

    return make_pass(opt.generalized ? "generalized_pseudomonotone" : "pseudomonotone", used,
                     margin);
}

std::vector<std::pair<Vector, Vector>> sample_pairs(std::size_t dim, int count, double radius,
                                                    std::uint64_t seed) {
    Sampler sampler(seed);
    Vector lo(dim), hi(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        lo[i] = -radius;
        hi[i] = radius;
    }
    auto pts = sampler.box_points(lo, hi, static_cast<std::size_t>(2 * count));
    std::vector<std::pair<Vector, Vector>> pairs;
    pairs.reserve(count);
    for (int i = 0; i < count; ++i) {
        pairs.emplace_back(pts[2 * i], pts[2 * i + 1]);
    }
    return pairs;
}

}  // namespace vimo
