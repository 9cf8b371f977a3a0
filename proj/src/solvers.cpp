#include "vimo/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>

#include "vimo/extended_real.hpp"
#include "vimo/hull.hpp"
#include "vimo/sampling.hpp"

namespace vimo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Zero-snap candidates around y: coordinates within kappa of zero are set to
/// zero and the point re-projected onto K. Candidates are only proposals; the
/// caller accepts one only when its probe residual meets the tolerance.
std::vector<Vector> snap_candidates(const VIMOProblem& problem, const Vector& y, double step) {
    std::vector<Vector> out;
    const double scale = 1.0 + norm_inf(y);
    for (double kappa : {1e-9, 1e-6, 1e-3, 2.0 * step, 0.1 * scale}) {
        Vector z = y;
        bool changed = false;
        for (std::size_t i = 0; i < z.dim(); ++i) {
            if (z[i] != 0.0 && std::abs(z[i]) <= kappa) {
                z[i] = 0.0;
                changed = true;
            }
        }
        if (!changed) continue;
        Vector pz = problem.K().project(z);
        bool dup = false;
        for (const auto& c : out) {
            if (distance(c, pz) < 1e-15) dup = true;
        }
        if (!dup && distance(pz, y) > 0.0) out.push_back(std::move(pz));
    }
    return out;
}

bool phi_looks_zero(const VIMOProblem& problem, const std::vector<Vector>& probes) {
    if (problem.phi().value(problem.witness()) != 0.0) return false;
    std::size_t checked = 0;
    for (const auto& p : probes) {
        if (problem.phi().value(p) != 0.0) return false;
        if (++checked >= 16) break;
    }
    return true;
}

}  // namespace

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged:
            return "converged";
        case SolveStatus::MaxIter:
            return "max_iter";
        case SolveStatus::Infeasible:
            return "infeasible";
    }
    return "?";
}

SolveReport solve_extragradient(const VIMOProblem& problem, const Vector& y0,
                                const SolverOptions& opt) {
    check_dim(y0, problem.dim(), "solve_extragradient");
    if (!problem.K().contains(y0, 1e-6) || problem.phi().value(y0) == ext::infinity) {
        throw std::invalid_argument("solve_extragradient: start point is not in K ∩ dom phi");
    }

    SolveReport rep;
    rep.method = "extragradient";

    const double cloud_radius = probe_radius(problem, opt.probes);
    ProbeOptions probe_opt = opt.probes;
    auto probes = make_probes(problem, probe_opt);
    Vector probe_center = probe_opt.center.value_or(problem.witness());
    // the sampled residual is meaningful only near the probe cloud; re-center
    // it when the iterate escapes
    auto recenter = [&](const Vector& at) {
        if (norm_inf(at - probe_center) > 0.75 * cloud_radius) {
            probe_center = at;
            probe_opt.center = at;
            probes = make_probes(problem, probe_opt);
        }
    };

    const auto& A = problem.A();
    const auto& phi = problem.phi();
    const auto& K = problem.K();
    const Vector& f = problem.f();

    Vector y = K.project(y0);
    double tau = opt.step;

    // sampled probes can miss sharply peaked or narrowly supported
    // violations; aim extra probes along the natural residual direction, at
    // force-sized steps (curved phi peaks there) and out to the feasible
    // boundary (flat phi accumulates there)
    auto sharp_residual = [&](const Vector& at) -> double {
        double r = residual(problem, at, probes);
        auto [w, g] = decompose_witness(problem, at, 1.0, 8);
        Vector force = f - w - g;
        double fn = norm(force);
        if (fn <= 0.0) return r;
        Vector dir = (1.0 / fn) * force;
        double reach = K.max_ray_step(at, dir);
        if (!std::isfinite(reach)) reach = 2.0 * cloud_radius;
        std::vector<Vector> targeted;
        auto aim = [&](double s) {
            if (!(s > 0.0) || !std::isfinite(s)) return;
            Vector xi = K.project(at + s * dir);
            if (phi.value(xi) == ext::infinity) return;
            targeted.push_back(std::move(xi));
        };
        for (double c : {1e-3, 1e-2, 0.1, 0.5, 1.0, 2.0, 8.0}) aim(c * fn);
        for (double frac : {1.0, 0.25, 1.0 / 16.0, 1.0 / 64.0}) aim(frac * reach);
        if (!targeted.empty()) r = std::max(r, residual(problem, at, targeted));
        return r;
    };

    // stationarity gap of the forward map at a fixed reference step: linear in
    // the distance to the solution where the residual merit can be quadratic,
    // so certified points are polished against it
    const double fp_tau = 0.01;
    auto fixed_point_gap = [&](const Vector& at) -> double {
        Vector g = phi.subgradient(at);
        Vector w = nearest_selection(A, at, f - g);
        Vector z = phi.prox(K.project(at - fp_tau * (w - f)), fp_tau);
        return distance(at, z) / fp_tau;
    };

    // best certified point (probe residual <= tol), ranked by stationarity gap
    bool have_candidate = false;
    Vector cand_y;
    double cand_res = 0.0, cand_fp = kInf;
    int cand_iter = 0;
    int polish_budget = 200;
    int stagnant_checks = 0;

    auto finalize = [&]() {
        rep.y = cand_y;
        rep.residual = cand_res;
        rep.iterations = cand_iter;
        rep.status = SolveStatus::Converged;
        rep.witness_w = decompose_witness(problem, cand_y).first;
    };

    // returns true when the candidate is good enough to stop immediately
    auto consider = [&](const Vector& point, double r, int iter, const char* note) -> bool {
        double fp = fixed_point_gap(point);
        if (fp < cand_fp) {
            have_candidate = true;
            cand_y = point;
            cand_res = r;
            cand_fp = fp;
            cand_iter = iter;
            stagnant_checks = 0;
            if (note != nullptr) rep.notes.push_back(note);
        }
        return cand_fp <= opt.tol;
    };

    auto certify = [&](const Vector& cand, int iter, const char* note) -> bool {
        double r = sharp_residual(cand);
        rep.trace.emplace_back(iter, r);
        if (r <= opt.tol && consider(cand, r, iter, note)) {
            finalize();
            return true;
        }
        return false;
    };

    double best_res = sharp_residual(y);
    Vector best_y = y;
    rep.trace.emplace_back(0, best_res);
    if (best_res <= opt.tol && consider(y, best_res, 0, nullptr)) {
        finalize();
        return rep;
    }
    double prev_res = best_res;

    auto forward = [&](const Vector& point, const Vector& w) {
        return phi.prox(K.project(point - tau * (w - f)), tau);
    };

    int k = 0;
    for (k = 1; k <= opt.max_iter; ++k) {
        Vector g = phi.subgradient(y);
        Vector w = nearest_selection(A, y, f - g);
        Vector y_trial = forward(y, w);
        Vector g_trial = phi.subgradient(y_trial);
        Vector w_trial = nearest_selection(A, y_trial, f - g_trial);
        Vector y_next = forward(y, w_trial);

        double moved = distance(y_next, y);
        y = y_next;
        if (!y.is_finite() || norm(y) > 1e10 * (1.0 + norm(best_y))) {
            // runaway step: back off hard and restart from the best point
            tau *= 0.25;
            y = best_y;
            if (tau <= 1e-14) {
                rep.notes.push_back("step collapsed while containing divergence");
                break;
            }
            continue;
        }

        bool stalled = moved <= 1e-14 * (1.0 + norm(y));
        if (k % opt.check_every == 0 || stalled || k == opt.max_iter) {
            recenter(y);
            double r = sharp_residual(y);
            rep.trace.emplace_back(k, r);
            if (r <= opt.tol) {
                if (consider(y, r, k, nullptr)) {
                    finalize();
                    return rep;
                }
            } else {
                // the trial point can be the solution while the base iterate
                // is a spurious fixed point of the correction map
                if (certify(y_trial, k, "accepted the trial point")) return rep;
                for (const auto& cand : snap_candidates(problem, y, tau)) {
                    if (phi.value(cand) == ext::infinity) continue;
                    if (certify(cand, k, "landed by zero-snap")) return rep;
                }
                for (const auto& cand : snap_candidates(problem, y_trial, tau)) {
                    if (phi.value(cand) == ext::infinity) continue;
                    if (certify(cand, k, "landed by zero-snap")) return rep;
                }
            }
            if (have_candidate) {
                // polish phase: the stationarity gap drives further progress
                ++stagnant_checks;
                if (--polish_budget <= 0 || stagnant_checks > 12) {
                    finalize();
                    rep.notes.push_back("polish ended by budget");
                    return rep;
                }
            }
            if (r < best_res) {
                best_res = r;
                best_y = y;
            } else if (r > best_res * (1.0 + 1e-9) && r > prev_res * (1.0 - 1e-6)) {
                // stuck above the best point with no decrease in sight:
                // the step is too long; halve it and restart from the best
                tau = std::max(tau * 0.5, 1e-14);
                y = best_y;
            }
            prev_res = r;
            if (stalled) break;
        }
    }

    if (have_candidate) {
        finalize();
        rep.notes.push_back("polish ended at the iteration cap");
        return rep;
    }
    rep.y = best_y;
    rep.residual = best_res;
    rep.iterations = std::min(k, opt.max_iter);
    rep.status = SolveStatus::MaxIter;
    rep.witness_w = decompose_witness(problem, best_y).first;
    return rep;
}

GalerkinFilter::GalerkinFilter(std::vector<std::vector<std::size_t>> chain)
    : subspaces(std::move(chain)) {
    if (subspaces.empty()) throw std::invalid_argument("GalerkinFilter: empty chain");
    std::set<std::size_t> prev;
    for (auto& sub : subspaces) {
        std::set<std::size_t> cur(sub.begin(), sub.end());
        if (cur.size() != sub.size()) {
            throw std::invalid_argument("GalerkinFilter: duplicate index in a subspace");
        }
        if (!prev.empty() || &sub != &subspaces.front()) {
            if (cur.size() <= prev.size() ||
                !std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) {
                throw std::invalid_argument("GalerkinFilter: chain must be strictly nested");
            }
        }
        prev = std::move(cur);
        std::sort(sub.begin(), sub.end());
    }
}

GalerkinFilter GalerkinFilter::full(std::size_t dim) {
    std::vector<std::size_t> all(dim);
    for (std::size_t i = 0; i < dim; ++i) all[i] = i;
    return GalerkinFilter({all});
}

GalerkinFilter GalerkinFilter::prefixes(std::size_t dim, const std::vector<std::size_t>& sizes) {
    std::vector<std::vector<std::size_t>> chain;
    for (std::size_t s : sizes) {
        if (s == 0 || s > dim) throw std::invalid_argument("GalerkinFilter::prefixes: bad size");
        std::vector<std::size_t> sub(s);
        for (std::size_t i = 0; i < s; ++i) sub[i] = i;
        chain.push_back(std::move(sub));
    }
    return GalerkinFilter(std::move(chain));
}

SolveReport solve_galerkin(const VIMOProblem& problem, const GalerkinFilter& filter,
                           const GalerkinOptions& opt) {
    if (!problem.K().is_bounded()) {
        throw std::invalid_argument(
            "solve_galerkin: K must be bounded (compose with solve_truncated first)");
    }
    for (const auto& sub : filter.subspaces) {
        for (std::size_t i : sub) {
            if (i >= problem.dim()) {
                throw std::invalid_argument("solve_galerkin: filter index out of range");
            }
        }
    }

    SolveReport rep;
    rep.method = "galerkin";
    const auto full_probes = make_probes(problem, opt.solver.probes);

    Vector current = problem.witness();
    int total_iters = 0;
    int stage = 0;
    for (const auto& sub : filter.subspaces) {
        ++stage;
        std::optional<VIMOProblem> restricted_opt;
        try {
            restricted_opt.emplace(problem.restrict(sub));
        } catch (const std::domain_error& e) {
            rep.notes.push_back("stage " + std::to_string(stage) +
                                ": restricted feasible set empty, skipped (" + e.what() + ")");
            continue;
        }
        VIMOProblem& restricted = *restricted_opt;
        Vector u0(sub.size());
        for (std::size_t j = 0; j < sub.size(); ++j) u0[j] = current[sub[j]];
        if (!restricted.K().contains(u0, 1e-9)) u0 = restricted.K().project(u0);

        bool use_homotopy = false;
        if (opt.inner == GalerkinOptions::Inner::Homotopy) {
            use_homotopy = true;
        } else if (opt.inner == GalerkinOptions::Inner::Auto) {
            auto kind = restricted.K().kind();
            use_homotopy = (kind == ConvexSet::Kind::Box || kind == ConvexSet::Kind::Polytope) &&
                           restricted.K().is_bounded() &&
                           phi_looks_zero(restricted, make_probes(restricted, opt.solver.probes));
        }

        SolveReport inner;
        if (use_homotopy) {
            HomotopyOptions hopt;
            hopt.tol = opt.solver.tol;
            hopt.probes = opt.solver.probes;
            hopt.fallback = opt.solver;
            inner = homotopy_solve(restricted.K(), restricted.A(), restricted.f(), hopt);
            rep.notes.push_back("stage " + std::to_string(stage) + ": homotopy inner solve");
        } else {
            inner = solve_extragradient(restricted, u0, opt.solver);
            rep.notes.push_back("stage " + std::to_string(stage) + ": extragradient inner solve");
        }
        total_iters += inner.iterations;

        current = problem.embed(sub, inner.y);
        double full_res = residual(problem, current, full_probes);
        rep.trace.emplace_back(stage, full_res);
    }

    rep.y = current;
    rep.residual = rep.trace.empty() ? kInf : rep.trace.back().second;
    rep.iterations = total_iters;
    rep.status = (rep.residual <= opt.solver.tol) ? SolveStatus::Converged : SolveStatus::MaxIter;
    rep.witness_w = decompose_witness(problem, current).first;
    return rep;
}

std::vector<Vector> auxiliary_map(const ConvexSet& k_f, const SetValuedOperator& a,
                                  const Vector& f, double eps, double lambda, const Vector& y) {
    if (eps < 0.0) throw std::invalid_argument("auxiliary_map: eps must be nonnegative");
    if (lambda < 0.0 || lambda > 1.0) {
        throw std::invalid_argument("auxiliary_map: lambda must lie in [0, 1]");
    }
    const std::size_t n = k_f.dim();
    check_dim(y, n, "auxiliary_map(y)");
    check_dim(f, n, "auxiliary_map(f)");
    if (!k_f.contains(y, 1e-7)) throw std::domain_error("auxiliary_map: y is not in K_F");

    // P_eps(y): ray extreme points of [K_F ∩ (y - N(y))] \ B_eps(y) - y
    auto normals = k_f.normal_cone_generators(y, 1e-7);
    const bool on_boundary = !normals.empty();
    std::vector<Vector> ray_dirs;
    for (const auto& nrm : normals) ray_dirs.push_back(-1.0 * nrm);
    if (normals.size() > 1) {
        Vector mix(n);
        for (const auto& nrm : normals) mix -= nrm;
        if (norm(mix) > 1e-12) ray_dirs.push_back((1.0 / norm(mix)) * mix);
    }

    std::vector<Vector> p_gens;
    if (eps == 0.0) p_gens.push_back(Vector(n));  // y itself survives the empty ball
    for (const auto& d : ray_dirs) {
        double dn = norm(d);
        if (dn < 1e-14) continue;
        Vector u = (1.0 / dn) * d;
        double far = k_f.max_ray_step(y, u);
        if (!std::isfinite(far)) far = k_f.bounding_radius();
        if (far <= 1e-12) continue;
        if (eps > 0.0) {
            if (eps <= far) {
                p_gens.push_back(eps * u);
                p_gens.push_back(far * u);
            }
            // rays fully swallowed by the eps-ball contribute nothing
        } else {
            p_gens.push_back(far * u);
        }
    }
    if (p_gens.empty()) {
        if (on_boundary) {
            throw std::domain_error(
                "auxiliary_map: eps too large, P_eps is empty at a boundary point");
        }
        p_gens.push_back(Vector(n));  // interior convention
    }

    // lambda part: f - w over a fixed battery of selections from co A(y)
    std::vector<Vector> w_battery;
    auto push_w = [&](const Vector& w) {
        for (const auto& q : w_battery) {
            if (distance(q, w) < 1e-12) return;
        }
        w_battery.push_back(w);
    };
    for (std::size_t i = 0; i < n; ++i) {
        push_w(a.selection(y, basis_vector(n, i)));
        push_w(a.selection(y, -basis_vector(n, i)));
    }
    push_w(nearest_selection(a, y, f));

    std::vector<Vector> gens;
    auto push_gen = [&](const Vector& g) {
        for (const auto& q : gens) {
            if (distance(q, g) < 1e-13) return;
        }
        gens.push_back(g);
    };
    for (const auto& p : p_gens) {
        for (const auto& w : w_battery) {
            push_gen((1.0 - lambda) * p + lambda * (f - w));
        }
    }
    return gens;
}

SolveReport homotopy_solve(const ConvexSet& k_f, const SetValuedOperator& a, const Vector& f,
                           const HomotopyOptions& opt) {
    if (k_f.kind() != ConvexSet::Kind::Box && k_f.kind() != ConvexSet::Kind::Polytope) {
        throw std::invalid_argument("homotopy_solve: K_F must be a polytope (or box)");
    }
    if (!k_f.is_bounded()) {
        throw std::invalid_argument("homotopy_solve: K_F must be a bounded polytope");
    }
    if (opt.lambda_schedule.empty() || opt.lambda_schedule.back() != 1.0) {
        throw std::invalid_argument("homotopy_solve: schedule must increase to 1");
    }
    for (std::size_t i = 1; i < opt.lambda_schedule.size(); ++i) {
        if (!(opt.lambda_schedule[i] > opt.lambda_schedule[i - 1])) {
            throw std::invalid_argument("homotopy_solve: schedule must increase to 1");
        }
    }

    SolveReport rep;
    rep.method = "homotopy";

    VIMOProblem restricted(a, ProperConvexFunction::zero(f.dim()), k_f, f,
                           k_f.project(k_f.an_interior_point()));
    const auto probes = make_probes(restricted, opt.probes);

    Vector y = restricted.witness();
    int total_steps = 0;
    bool broke_down = false;

    for (double lambda : opt.lambda_schedule) {
        double step = opt.step;
        double prev_dist = kInf;
        int stage_steps = 0;
        for (; stage_steps < opt.max_steps_per_stage; ++stage_steps, ++total_steps) {
            auto gens = auxiliary_map(k_f, a, f, opt.eps, lambda, y);
            auto normals = k_f.normal_cone_generators(y, 1e-7);
            double dist = distance_to_hull_plus_cone(gens, normals, Vector(y.dim()));
            if (dist <= std::max(opt.tol, 1e-10) * (1.0 + norm(f))) break;
            // move along the tangential part of the residual force
            Vector force = nearest_hull_point(gens, Vector(y.dim())).point;
            if (!normals.empty()) force -= project_onto_cone(normals, force);
            if (norm(force) < 1e-15) break;
            Vector y_next = k_f.project(y + step * force);
            if (dist > prev_dist * (1.0 + 1e-12)) step = std::max(0.5 * step, 1e-10);
            prev_dist = dist;
            if (distance(y_next, y) < 1e-16 * (1.0 + norm(y))) {
                y = y_next;
                break;
            }
            y = y_next;
        }
        if (stage_steps >= opt.max_steps_per_stage) {
            broke_down = true;
            break;
        }
    }

    double res = broke_down ? kInf : residual(restricted, y, probes);
    if (!broke_down && res <= opt.tol) {
        rep.y = y;
        rep.residual = res;
        rep.iterations = total_steps;
        rep.status = SolveStatus::Converged;
        rep.witness_w = nearest_selection(a, y, f);
        rep.notes.push_back("homotopy path succeeded");
        return rep;
    }

    // breakdown: extragradient on the restricted problem
    SolverOptions fb = opt.fallback;
    fb.tol = opt.tol;
    SolveReport inner = solve_extragradient(restricted, restricted.witness(), fb);
    inner.method = "homotopy+extragradient-fallback";
    inner.notes.push_back(broke_down ? "homotopy breakdown: no zero found at some lambda"
                                     : "homotopy endpoint failed residual verification");
    inner.iterations += total_steps;
    return inner;
}

SolveReport solve_truncated(const VIMOProblem& problem, const TruncationOptions& opt) {
    if (opt.radii.empty()) throw std::invalid_argument("solve_truncated: empty radius schedule");
    for (std::size_t i = 1; i < opt.radii.size(); ++i) {
        if (!(opt.radii[i] > opt.radii[i - 1])) {
            throw std::invalid_argument("solve_truncated: radii must increase");
        }
    }

    SolveReport rep;
    rep.method = "truncated";
    const auto full_probes = make_probes(problem, opt.inner.probes);

    Vector origin(problem.dim());
    SolveReport best;
    best.residual = kInf;
    int stage = 0;
    for (double R : opt.radii) {
        ++stage;
        std::optional<ConvexSet> k_r_opt;
        try {
            k_r_opt = (problem.K().kind() == ConvexSet::Kind::WholeSpace)
                          ? ConvexSet::ball(origin, R)
                          : ConvexSet::intersect_with_ball(problem.K(), origin, R);
        } catch (const std::invalid_argument&) {
            rep.notes.push_back("radius " + std::to_string(R) + ": restricted set infeasible");
            continue;
        }
        const ConvexSet& k_r = *k_r_opt;
        Vector witness_r = k_r.project(problem.witness());
        if (!k_r.contains(witness_r, 1e-6) ||
            problem.phi().value(witness_r) == ext::infinity) {
            rep.notes.push_back("radius " + std::to_string(R) + ": restricted set infeasible");
            continue;
        }
        VIMOProblem truncated(problem.A(), problem.phi(), k_r, problem.f(), witness_r);
        // tighter inner tolerance: the unrestricted probe cloud is wider, so
        // the same point measures a larger residual there
        SolverOptions inner_opt = opt.inner;
        inner_opt.tol = opt.inner.tol * 0.05;
        SolveReport inner = solve_extragradient(truncated, witness_r, inner_opt);
        rep.iterations += inner.iterations;

        double full_res = kInf;
        if (problem.K().contains(inner.y, 1e-6)) {
            full_res = residual(problem, inner.y, full_probes);
        }
        rep.trace.emplace_back(stage, full_res);
        if (full_res < best.residual) {
            best = inner;
            best.residual = full_res;
        }

        bool interior = norm(inner.y) < R * (1.0 - opt.interior_margin);
        if (inner.converged() && interior && full_res <= opt.inner.tol) {
            rep.y = inner.y;
            rep.residual = full_res;
            rep.status = SolveStatus::Converged;
            rep.witness_w = inner.witness_w;
            rep.notes.push_back("stopped at radius " + std::to_string(R) +
                                " with an interior solution");
            return rep;
        }
    }

    if (best.y.dim() != problem.dim()) {
        // no radius produced a feasible restricted problem
        rep.y = problem.witness();
        rep.residual = kInf;
        rep.status = SolveStatus::Infeasible;
        rep.witness_w = Vector(problem.dim());
        rep.notes.push_back("no feasible truncation stage");
        return rep;
    }
    rep.y = best.y;
    rep.residual = best.residual;
    rep.status = SolveStatus::MaxIter;
    rep.witness_w = best.witness_w;
    rep.notes.push_back("schedule exhausted without an interior solution (coercivity likely absent)");
    return rep;
}

SolveReport solve_inclusion(const SetValuedOperator& a, const Vector& f,
                            const TruncationOptions& opt) {
    VIMOProblem problem(a, ProperConvexFunction::zero(f.dim()), ConvexSet::whole_space(f.dim()), f,
                        Vector(f.dim()));
    SolveReport rep = solve_truncated(problem, opt);
    rep.method = "truncated-inclusion";
    return rep;
}

LiftedProblem::LiftedProblem(VIMOProblem base)
    : base_(base), lifted_([&base]() -> VIMOProblem {
          const std::size_t n = base.dim();
          const SetValuedOperator& a = base.A();

          auto head = [n](const Vector& v) {
              Vector y(n);
              for (std::size_t i = 0; i < n; ++i) y[i] = v[i];
              return y;
          };
          auto support = [a, head](const Vector& yt, const Vector& xit) {
              Vector xi(head(xit));
              return a.support_plus(head(yt), xi);
          };
          auto selection = [a, head, n](const Vector& yt, const Vector& hintt) {
              Vector w = a.selection(head(yt), head(hintt));
              Vector out(n + 1);
              for (std::size_t i = 0; i < n; ++i) out[i] = w[i];
              return out;  // lifted operator is (A(y), 0)
          };
          auto norms = [a, head](const Vector& yt) { return a.norm_bounds(head(yt)); };
          SetValuedOperator lifted_a(n + 1, support, selection, norms);

          ConvexSet lifted_k = ConvexSet::epigraph(base.phi(), base.K());
          Vector lifted_f(n + 1);
          for (std::size_t i = 0; i < n; ++i) lifted_f[i] = base.f()[i];
          lifted_f[n] = -1.0;

          Vector lifted_witness(n + 1);
          for (std::size_t i = 0; i < n; ++i) lifted_witness[i] = base.witness()[i];
          lifted_witness[n] = base.phi().value(base.witness());

          return VIMOProblem(std::move(lifted_a), ProperConvexFunction::zero(n + 1),
                             std::move(lifted_k), std::move(lifted_f), std::move(lifted_witness));
      }()) {}

Vector LiftedProblem::lift_point(const Vector& y) const {
    check_dim(y, base_.dim(), "LiftedProblem::lift_point");
    double v = base_.phi().value(y);
    if (v == ext::infinity) {
        throw std::domain_error("LiftedProblem::lift_point: y outside dom phi");
    }
    Vector out(base_.dim() + 1);
    for (std::size_t i = 0; i < base_.dim(); ++i) out[i] = y[i];
    out[base_.dim()] = v;
    return out;
}

SolveReport LiftedProblem::unlift(const SolveReport& lifted_report, double mu_tol) const {
    check_dim(lifted_report.y, base_.dim() + 1, "LiftedProblem::unlift");
    const std::size_t n = base_.dim();
    Vector y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = lifted_report.y[i];
    double mu = lifted_report.y[n];
    double phi_y = base_.phi().value(y);
    double mu_gap = std::abs(mu - phi_y);

    SolveReport rep;
    rep.method = "epigraph-lift";
    rep.iterations = lifted_report.iterations;
    rep.trace = lifted_report.trace;
    rep.status = lifted_report.status;
    rep.y = base_.K().project(y);
    rep.residual = residual(base_, rep.y, make_probes(base_));
    rep.witness_w = decompose_witness(base_, rep.y).first;
    rep.notes.push_back("mu gap |mu - phi(y)| = " + std::to_string(mu_gap));
    if (lifted_report.converged() && mu_gap > mu_tol) {
        throw std::runtime_error("LiftedProblem::unlift: mu != phi(y) at a converged solution");
    }
    return rep;
}

LiftedProblem epigraph_lift(const VIMOProblem& problem) { return LiftedProblem(problem); }

}  // namespace vimo
