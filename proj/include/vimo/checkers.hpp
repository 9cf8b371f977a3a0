#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vimo/convex_function.hpp"
#include "vimo/sampling.hpp"
#include "vimo/set_valued_operator.hpp"
#include "vimo/variation_modulus.hpp"
#include "vimo/vector.hpp"

namespace vimo {

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

/// Points and values at which a checker observed a violation; re-running the
/// same checker on the witness points alone reproduces the failure.
struct ClassWitness {
    std::vector<Vector> points;
    std::vector<double> values;
    std::string detail;
};

/// Outcome of a sampled class check. A pass certifies the defining inequality
/// on the supplied evidence only; margin is the worst slack observed (>= -tol
/// for a pass). A fail carries a re-verifiable witness.
struct ClassReport {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<ClassWitness> witness;
    int samples_used = 0;
    double margin = 0.0;
    std::string check_name;
    std::vector<std::string> notes;

    bool passed() const { return verdict == Verdict::Pass; }
};

/// Finite stand-in for a convergent sequence y_j -> y: gaps ||y_j - y|| must
/// be strictly decreasing with the final gap below 1e-6. Selections w_j from
/// co A(y_j) are optional and required only by the pseudo-monotone checker.
struct Trajectory {
    std::vector<Vector> points;
    Vector limit;
    std::vector<Vector> selections;  // empty or one per point

    Trajectory(std::vector<Vector> pts, Vector lim, std::vector<Vector> sels = {});

    /// y_j = y + r0 * ratio^j * direction, j = 1..count, with selections drawn
    /// from the operator toward `hint` when one is given.
    static Trajectory geometric(const Vector& limit, const Vector& direction, double r0,
                                double ratio, int count, const SetValuedOperator* a = nullptr,
                                const Vector* hint = nullptr);
};

struct CheckOptions {
    double tolerance = 1e-9;        // algebraic slack
    double limit_tolerance = 1e-6;  // limit-based checks
    std::uint64_t seed = 0;
};

/// Definition of monotone maps: [A(y1), y1-y2]_- >= [A(y2), y1-y2]_+ for every
/// pair.
ClassReport check_monotone(const SetValuedOperator& a,
                           const std::vector<std::pair<Vector, Vector>>& pairs,
                           const CheckOptions& opt = {});

/// Semi-bounded variation on the ball of radius R:
///   [A(y1), y1-y2]_- >= [A(y2), y1-y2]_+ - C(R, ||y1-y2||'),
/// where ||.||' is the diagonal-weighted norm given by `weights` (unit weights
/// when absent). Also validates the vanishing-slope property of C and records
/// the result.
ClassReport check_semibounded_variation(const SetValuedOperator& a, const VariationModulus& c,
                                        double R,
                                        const std::vector<std::pair<Vector, Vector>>& pairs,
                                        const std::optional<Vector>& weights = std::nullopt,
                                        const CheckOptions& opt = {});

/// Radial semi-continuity: liminf_{t->+0} [A(y + t xi), h]_+ >= [A(y), h]_-,
/// decided on the tail of the given t-grid. weaker_variant forces h = -xi (the
/// relaxed condition that still yields the pseudo-monotone surrogate).
ClassReport check_radial_semicontinuity(const SetValuedOperator& a,
                                        const std::vector<std::array<Vector, 3>>& triples,
                                        const std::vector<double>& t_grid,
                                        bool weaker_variant = false, const CheckOptions& opt = {});

struct CoercivityOptions {
    int directions = 16;
    const ProperConvexFunction* phi = nullptr;  // subtract phi(y) (mixed coercivity)
    CheckOptions base;
};

/// Coercivity: min over sampled unit u of [A(r u), r u - y0]_- / r must grow
/// strictly along the radius schedule.
ClassReport check_coercivity(const SetValuedOperator& a, const Vector& y0,
                             const std::vector<double>& radii,
                             const CoercivityOptions& opt = {});

struct LocalBoundednessOptions {
    int shells = 40;
    int per_shell = 8;
    double blowup_threshold = 1e8;
    CheckOptions base;
};

/// Local boundedness at y: [[A(xi)]]_+ stays finite and stable on probe shells
/// shrinking into the eps-ball around y. +inf from the norm oracle is a fail,
/// not an error; so is unbounded growth along the shells.
ClassReport check_local_boundedness(const SetValuedOperator& a, const Vector& y, double eps,
                                    int probes, const LocalBoundednessOptions& opt = {});

/// Sequential variant: requires a uniform norm bound on the trajectory tail.
ClassReport check_local_boundedness_sequential(const SetValuedOperator& a, const Trajectory& traj,
                                               const CheckOptions& opt = {});

struct PseudoMonotoneOptions {
    bool generalized = false;  // additionally require w_j -> w, <w_j,y_j> -> <w,y>, w in co A(y)
    CheckOptions base;
};

/// Finite surrogate of the pseudo-monotone definition. If the hypothesis
/// limsup <w_j, y_j - y> <= tol holds on the trajectory tail, then every probe
/// v must satisfy liminf <w_j, y_j - v> >= [A(y), y - v]_- - tol (the weakest
/// value any witness w(v) in A(y) could give, so a pass is necessary for the
/// true property). Verdict is Inconclusive when the hypothesis fails.
ClassReport check_pseudomonotone_surrogate(const SetValuedOperator& a, const Trajectory& traj,
                                           const std::vector<Vector>& probe_points,
                                           const PseudoMonotoneOptions& opt = {});

/// Seeded battery of sample pairs in the box [-radius, radius]^dim.
std::vector<std::pair<Vector, Vector>> sample_pairs(std::size_t dim, int count, double radius,
                                                    std::uint64_t seed);

}  // namespace vimo
