#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vimo/problem.hpp"
#include "vimo/vector.hpp"

namespace vimo {

enum class SolveStatus { Converged, MaxIter, Infeasible };

std::string to_string(SolveStatus s);

/// Solver outcome. A Converged report certifies residual <= tol on the probe
/// battery; witness_w is an element of co A(y) supporting the inequality in
/// the sense of the hull-witness guarantee for pure VIs.
struct SolveReport {
    Vector y;
    double residual = 0.0;
    int iterations = 0;
    Vector witness_w;
    std::vector<std::pair<int, double>> trace;  // (iteration or stage, residual)
    SolveStatus status = SolveStatus::MaxIter;
    std::string method;
    std::vector<std::string> notes;

    bool converged() const { return status == SolveStatus::Converged; }
};

struct ProbeOptions {
    int count = 256;
    std::uint64_t seed = 1;
    double radius = 0.0;            // 0: derived from the set / data scale
    std::optional<Vector> center;   // default: the problem witness
};

/// Effective probe radius for the given options (the auto rule resolved).
double probe_radius(const VIMOProblem& problem, const ProbeOptions& opt = {});

/// Probe battery in K ∩ dom phi (low-discrepancy points projected onto K).
std::vector<Vector> make_probes(const VIMOProblem& problem, const ProbeOptions& opt = {});

/// Worst violation of the defining inequality over the probes:
///   max(0, sup_xi <f, xi - y> - [A(y), xi - y]_+ - phi(xi) + phi(y)).
/// Zero exactly at solutions (the probe xi = y contributes zero). Throws
/// std::domain_error for y outside K ∩ dom phi.
double residual(const VIMOProblem& problem, const Vector& y, const std::vector<Vector>& probes);

/// Nearest point of co A(y) to `target`, computed by Frank-Wolfe over the
/// selection oracle. Used for solver steps, solution witnesses and the
/// auxiliary-map battery.
Vector nearest_selection(const SetValuedOperator& a, const Vector& y, const Vector& target,
                         int max_iter = 48);

/// Splits f into w + g with w in co A(y) and g a subgradient of phi at y,
/// as exactly as the oracles allow. Returns (w, g).
std::pair<Vector, Vector> decompose_witness(const VIMOProblem& problem, const Vector& y,
                                            double tau = 1.0, int rounds = 48);

struct SolverOptions {
    double step = 0.1;   // halved whenever the residual increases
    double tol = 1e-7;
    int max_iter = 5000;
    int check_every = 10;
    ProbeOptions probes;
};

/// Extragradient iteration on the inclusion form co A(y) + dphi(y) + N_K(y) ∋ f:
/// trial and correction steps use nearest selections from co A, the prox of
/// phi and the projection onto K. Stops when the probe residual of the
/// defining inequality reaches tol; kink solutions are landed exactly through
/// residual-verified snap candidates.
SolveReport solve_extragradient(const VIMOProblem& problem, const Vector& y0,
                                const SolverOptions& opt = {});

/// Nested chain of coordinate subspaces F_1 ⊂ F_2 ⊂ ... (0-based indices).
struct GalerkinFilter {
    std::vector<std::vector<std::size_t>> subspaces;

    explicit GalerkinFilter(std::vector<std::vector<std::size_t>> chain);

    static GalerkinFilter full(std::size_t dim);

    /// Chain of index prefixes of the given sizes (last may be dim).
    static GalerkinFilter prefixes(std::size_t dim, const std::vector<std::size_t>& sizes);
};

struct GalerkinOptions {
    enum class Inner { Auto, Extragradient, Homotopy };
    Inner inner = Inner::Auto;
    SolverOptions solver;
};

/// Solves the restricted problem on K ∩ F for each subspace of the filter in
/// order, warm-starting each stage from the previous solution and anchoring
/// off-subspace coordinates at the problem witness. Requires bounded K (use
/// truncation first otherwise). The trace records per-stage residuals of the
/// full problem.
SolveReport solve_galerkin(const VIMOProblem& problem, const GalerkinFilter& filter,
                           const GalerkinOptions& opt = {});

/// Finite generator battery whose convex hull approximates the proof's
/// auxiliary map at (lambda, y):
///   co{ (1-lambda) P_eps(y) + lambda (f - co A(y)) },
/// with P_eps(y) = [K_F ∩ (y - N_{K_F}(y))] \ B_eps(y) - y realized by ray
/// extreme points. With eps = 0 the ball is empty and the interior convention
/// P = {0} applies. Throws std::domain_error when eps is so large that P is
/// empty at a boundary point.
std::vector<Vector> auxiliary_map(const ConvexSet& k_f, const SetValuedOperator& a,
                                  const Vector& f, double eps, double lambda, const Vector& y);

struct HomotopyOptions {
    std::vector<double> lambda_schedule = {0.0, 0.25, 0.5, 0.75, 1.0};
    double eps = 0.0;
    double tol = 1e-7;
    int max_steps_per_stage = 2000;
    double step = 0.25;
    ProbeOptions probes;
    SolverOptions fallback;
};

/// Tracks approximate zeros of the auxiliary map along the lambda schedule on
/// a bounded polytope (or box), ending at a restricted-VI solution verified by
/// the probe residual. On breakdown it falls back to the extragradient on the
/// restricted problem and records which path succeeded.
SolveReport homotopy_solve(const ConvexSet& k_f, const SetValuedOperator& a, const Vector& f,
                           const HomotopyOptions& opt = {});

struct TruncationOptions {
    std::vector<double> radii = {1.0, 2.0, 4.0, 8.0, 16.0, 32.0};
    SolverOptions inner;
    double interior_margin = 1e-4;  // relative: accept ||y|| < R (1 - margin)
};

/// Coercive truncation: solves on K ∩ B_R along the radius schedule and stops
/// at the first solution strictly interior to the ball whose unrestricted
/// probe residual meets tol. Exhaustion (no interior solution) reports
/// MaxIter, the signature of a non-coercive instance.
SolveReport solve_truncated(const VIMOProblem& problem, const TruncationOptions& opt = {});

/// Inclusion mode: solves co A(y) ∋ f by truncation over the whole space with
/// trivial phi.
SolveReport solve_inclusion(const SetValuedOperator& a, const Vector& f,
                            const TruncationOptions& opt = {});

/// Epigraph pathway: lifted pure-VI instance on X x R with the epigraph
/// constraint set and right side (f, -1).
class LiftedProblem {
public:
    explicit LiftedProblem(VIMOProblem base);

    const VIMOProblem& base() const { return base_; }
    const VIMOProblem& lifted() const { return lifted_; }
    std::size_t lifted_dim() const { return lifted_.dim(); }

    /// (y, phi(y)).
    Vector lift_point(const Vector& y) const;

    /// Strips the lifted coordinate, re-certifies the base residual and
    /// asserts mu = phi(y) within mu_tol on converged reports.
    SolveReport unlift(const SolveReport& lifted_report, double mu_tol = 1e-6) const;

private:
    VIMOProblem base_;
    VIMOProblem lifted_;
};

LiftedProblem epigraph_lift(const VIMOProblem& problem);

}  // namespace vimo
