#include <array>
#include <cmath>

#include "doctest.h"
#include "vimo/checkers.hpp"
#include "vimo/report_io.hpp"
#include "vimo/sampling.hpp"
#include "vimo/set_valued_operator.hpp"

using namespace vimo;

namespace {

std::vector<double> radial_grid() {
    std::vector<double> grid;
    for (double t = 1.0; t > 1e-10; t *= 0.25) grid.push_back(t);
    return grid;
}

// monotone, radially semi-continuous constructor-battery members
std::vector<std::pair<std::string, SetValuedOperator>> harness_battery() {
    std::vector<std::pair<std::string, SetValuedOperator>> battery;
    battery.emplace_back("identity", ops::identity(2));
    battery.emplace_back("linear_spd", ops::linear({{2.0, 0.5}, {0.5, 1.0}}));
    battery.emplace_back("rotation", ops::linear({{0.0, -1.0}, {1.0, 0.0}}));
    battery.emplace_back("subdiff_l1", ops::subdiff_l1(2));
    battery.emplace_back("power_norm", ops::power_norm(2, 3.0));
    battery.emplace_back("cubic", ops::componentwise_cubic(2));
    battery.emplace_back("sum_id_subdiff", sum_operator(ops::identity(2), ops::subdiff_l1(2)));
    return battery;
}

}  // namespace

TEST_CASE("monotone checker on the subdifferential of |.|") {
    auto a = ops::subdiff_l1(1);
    auto pairs = sample_pairs(1, 200, 2.0, 31);
    auto rep = check_monotone(a, pairs);
    CHECK(rep.passed());
    CHECK(rep.margin >= -1e-9);
}

TEST_CASE("monotone checker fails -y with a re-verifiable witness") {
    auto a = ops::negative_identity(1);
    std::vector<std::pair<Vector, Vector>> pairs = {{Vector{1.0}, Vector{0.0}}};
    auto rep = check_monotone(a, pairs);
    REQUIRE(rep.verdict == Verdict::Fail);
    REQUIRE(rep.witness.has_value());
    // [A(1), 1]_- = -1 strictly below [A(0), 1]_+ = 0
    CHECK(rep.witness->values[0] == doctest::Approx(-1.0));
    CHECK(rep.witness->values[1] == doctest::Approx(0.0));
    // the stored witness reproduces the violation on its own
    auto again = check_monotone(a, {{rep.witness->points[0], rep.witness->points[1]}});
    CHECK(again.verdict == Verdict::Fail);
    CHECK(again.margin < -1e-9);
}

TEST_CASE("a rotation is monotone with zero margin") {
    auto rot = ops::linear({{0.0, -1.0}, {1.0, 0.0}});
    auto pairs = sample_pairs(2, 100, 2.0, 32);
    // direct evaluation of the quadratic form: <R d, d> = 0 for every pair
    for (const auto& [y1, y2] : pairs) {
        Vector d = y1 - y2;
        Vector rd{-d[1], d[0]};
        CHECK(dot(rd, d) == doctest::Approx(0.0));
    }
    auto rep = check_monotone(rot, pairs);
    CHECK(rep.passed());
    CHECK(rep.margin == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("monotone operators have semi-bounded variation with C = 0") {
    auto pairs = sample_pairs(2, 200, 2.0, 33);
    for (auto& [name, a] : harness_battery()) {
        CAPTURE(name);
        auto mono = check_monotone(a, pairs);
        REQUIRE(mono.passed());
        auto sbv = check_semibounded_variation(a, VariationModulus::zero(), 10.0, pairs);
        CHECK(sbv.passed());
    }
}

TEST_CASE("subdiff minus identity has semi-bounded variation with C = r2^2") {
    auto a = sum_operator(ops::subdiff_l1(1), ops::negative_identity(1));
    auto pairs = sample_pairs(1, 200, 2.0, 34);
    // hand expansion: [A(y1), d]_- = [d|y1|, d]_- - y1 d and
    // [A(y2), d]_+ = [d|y2|, d]_+ - y2 d, so the slack is the monotone part
    // of the subdifferential minus d^2 plus C = d^2: nonnegative throughout
    for (const auto& [y1, y2] : pairs) {
        double d = y1[0] - y2[0];
        auto sub = [](double y, double dir) {  // [d|y|, dir]_+ in 1D
            if (y > 0.0) return dir;
            if (y < 0.0) return -dir;
            return std::abs(dir);
        };
        double lower = -sub(y1[0], -d) - y1[0] * d;
        double upper = sub(y2[0], d) - y2[0] * d;
        CHECK(lower - upper + d * d >= -1e-9);
    }
    auto rep = check_semibounded_variation(a, VariationModulus::power(1.0, 2.0), 10.0, pairs);
    CHECK(rep.passed());
}

TEST_CASE("-y fails semi-bounded variation against C = r2^(3/2)") {
    auto a = ops::negative_identity(1);
    // ||y1 - y2|| = 4: lower = -16, upper - C = 0 - 8
    std::vector<std::pair<Vector, Vector>> pairs = {{Vector{4.0}, Vector{0.0}}};
    auto rep = check_semibounded_variation(a, VariationModulus::power(1.0, 1.5), 5.0, pairs);
    REQUIRE(rep.verdict == Verdict::Fail);
    CHECK(rep.margin == doctest::Approx(-8.0));
    REQUIRE(rep.witness.has_value());
    auto again = check_semibounded_variation(a, VariationModulus::power(1.0, 1.5), 5.0,
                                             {{rep.witness->points[0], rep.witness->points[1]}});
    CHECK(again.verdict == Verdict::Fail);
}

TEST_CASE("semi-bounded variation rejects pairs outside the R-ball and bad moduli") {
    auto a = ops::identity(1);
    std::vector<std::pair<Vector, Vector>> far = {{Vector{20.0}, Vector{0.0}}};
    CHECK_THROWS_AS(
        check_semibounded_variation(a, VariationModulus::zero(), 5.0, far),
        std::invalid_argument);

    // a linear modulus lacks the vanishing slope; the checker reports it
    auto pairs = sample_pairs(1, 50, 2.0, 35);
    auto rep = check_semibounded_variation(a, VariationModulus::power(1.0, 1.0), 5.0, pairs);
    CHECK(rep.verdict == Verdict::Fail);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->detail.find("vanishing slope") != std::string::npos);
}

TEST_CASE("weighted compact norm enters the SBV inequality") {
    auto a = ops::negative_identity(1);
    std::vector<std::pair<Vector, Vector>> pairs = {{Vector{2.0}, Vector{0.0}}};
    // slack = -4 + C(w * 2): weights 4 give ||d||' = 4, C = r2^2 = 16: pass
    auto heavy = check_semibounded_variation(a, VariationModulus::power(1.0, 2.0), 5.0, pairs,
                                             Vector{4.0});
    CHECK(heavy.passed());
    // unit weights give C = 4 exactly: slack 0
    auto unit = check_semibounded_variation(a, VariationModulus::power(1.0, 2.0), 5.0, pairs);
    CHECK(unit.passed());
    CHECK(unit.margin == doctest::Approx(0.0));
}

TEST_CASE("radial semi-continuity: continuous, kinked and broken maps") {
    auto grid = radial_grid();

    auto id = ops::identity(1);
    auto rep = check_radial_semicontinuity(
        id, {{Vector{0.3}, Vector{1.0}, Vector{-0.7}}}, grid);
    CHECK(rep.passed());

    // d|.| at 0 along xi = 1 with h = 1: [A(t), 1]_+ = 1 on the whole grid,
    // [A(0), 1]_- = -1
    auto sub = ops::subdiff_l1(1);
    for (double t : grid) {
        CHECK(sub.support_plus(Vector{t}, Vector{1.0}) == doctest::Approx(1.0));
    }
    CHECK(sub.support_minus(Vector{0.0}, Vector{1.0}) == doctest::Approx(-1.0));
    rep = check_radial_semicontinuity(sub, {{Vector{0.0}, Vector{1.0}, Vector{1.0}}}, grid);
    CHECK(rep.passed());

    // step-down map: liminf = -1 < [A(0), 1]_- = 0
    auto step = ops::step_down_1d();
    for (double t : grid) {
        CHECK(step.support_plus(Vector{t}, Vector{1.0}) == doctest::Approx(-1.0));
    }
    rep = check_radial_semicontinuity(step, {{Vector{0.0}, Vector{1.0}, Vector{1.0}}}, grid);
    REQUIRE(rep.verdict == Verdict::Fail);
    CHECK(rep.margin == doctest::Approx(-1.0));
    REQUIRE(rep.witness.has_value());

    // the Remark's weaker variant forces h = -xi; the step map passes it
    rep = check_radial_semicontinuity(step, {{Vector{0.0}, Vector{1.0}, Vector{1.0}}}, grid,
                                      /*weaker_variant=*/true);
    CHECK(rep.passed());
}

TEST_CASE("coercivity checker: growing, bounded and power quotients") {
    std::vector<double> radii = {1.0, 4.0, 16.0, 64.0, 256.0, 1024.0};

    auto id = ops::identity(2);
    auto rep = check_coercivity(id, Vector(2), radii);
    CHECK(rep.passed());

    auto constant = ops::constant_finite_set(2, {Vector{1.0, 2.0}});
    rep = check_coercivity(constant, Vector(2), radii);
    CHECK(rep.verdict == Verdict::Fail);

    // A(y) = ||y|| y (p = 3): quotient r^2 on every unit direction
    auto pw = ops::power_norm(2, 3.0);
    for (double r : radii) {
        Vector u{1.0, 0.0};
        CHECK(pw.support_minus(r * u, r * u) / r == doctest::Approx(r * r));
    }
    rep = check_coercivity(pw, Vector(2), radii);
    CHECK(rep.passed());

    // mixed variant: quotient (r^2 - phi(ru)/r) still diverges for
    // phi = ||.||^2/2 (subtracts r/2)
    auto phi = ProperConvexFunction::half_sqnorm(2);
    CoercivityOptions opt;
    opt.phi = &phi;
    rep = check_coercivity(pw, Vector(2), radii, opt);
    CHECK(rep.passed());
}

TEST_CASE("local boundedness: bounded map, blow-up map, trajectory tail") {
    auto sub = ops::subdiff_l1(1);
    auto rep = check_local_boundedness(sub, Vector{0.0}, 0.5, 128);
    CHECK(rep.passed());
    CHECK(rep.margin == doctest::Approx(1.0));  // M = 1

    auto recip = ops::reciprocal_1d();
    rep = check_local_boundedness(recip, Vector{0.0}, 0.5, 128);
    CHECK(rep.verdict == Verdict::Fail);

    auto traj = Trajectory::geometric(Vector{0.0}, Vector{1.0}, 1.0, 0.5, 30, &sub);
    rep = check_local_boundedness_sequential(sub, traj);
    CHECK(rep.passed());
    CHECK(rep.margin == doctest::Approx(1.0));
}

TEST_CASE("trajectory validation") {
    CHECK_THROWS_AS(Trajectory({Vector{1.0}, Vector{1.0}}, Vector{0.0}), std::invalid_argument);
    CHECK_THROWS_AS(Trajectory({Vector{1.0}, Vector{0.5}}, Vector{0.0}), std::invalid_argument);
    CHECK_NOTHROW(Trajectory::geometric(Vector{0.0}, Vector{1.0}, 1.0, 0.5, 30));
}

TEST_CASE("pseudo-monotone surrogate on the identity trajectory") {
    auto id = ops::identity(1);
    auto traj = Trajectory::geometric(Vector{0.0}, Vector{1.0}, 0.1, 0.5, 45, &id);
    auto rep = check_pseudomonotone_surrogate(id, traj, {Vector{1.0}, Vector{-2.0}, Vector{0.5}});
    CHECK(rep.passed());
}

TEST_CASE("pseudo-monotone surrogate is inconclusive when the hypothesis fails") {
    auto id = ops::identity(1);
    std::vector<Vector> pts, sels;
    double r = 0.5;
    for (int j = 0; j < 20; ++j, r *= 0.5) {
        pts.push_back(Vector{r});
        sels.push_back(Vector{1.0 / r});  // <w_j, y_j - 0> = 1 for every j
    }
    pts.push_back(Vector{1e-8});
    sels.push_back(Vector{1e8});
    Trajectory traj(pts, Vector{0.0}, sels);
    auto rep = check_pseudomonotone_surrogate(id, traj, {Vector{1.0}});
    CHECK(rep.verdict == Verdict::Inconclusive);
}

TEST_CASE("missing selections raise") {
    auto id = ops::identity(1);
    auto traj = Trajectory::geometric(Vector{0.0}, Vector{1.0}, 0.1, 0.5, 20);
    CHECK_THROWS_AS(check_pseudomonotone_surrogate(id, traj, {Vector{1.0}}),
                    std::invalid_argument);
}

TEST_CASE("implication harness: radial semi-continuity + SBV imply the surrogate classes") {
    // radially semi-continuous + SBV (here monotone, C = 0) implies the
    // pseudo-monotone surrogate, local and sequential local boundedness pass
    auto grid = radial_grid();
    auto pairs = sample_pairs(2, 100, 2.0, 36);
    Sampler sampler(37);
    for (auto& [name, a] : harness_battery()) {
        CAPTURE(name);
        std::vector<std::array<Vector, 3>> triples;
        for (int i = 0; i < 12; ++i) {
            triples.push_back({sampler.random_point(2, -2.0, 2.0),
                               sampler.random_point(2, -1.0, 1.0),
                               sampler.random_point(2, -1.0, 1.0)});
        }
        REQUIRE(check_radial_semicontinuity(a, triples, grid).passed());
        REQUIRE(check_semibounded_variation(a, VariationModulus::zero(), 10.0, pairs).passed());

        for (int t = 0; t < 4; ++t) {
            Vector limit = sampler.random_point(2, -1.0, 1.0);
            Vector dir = sampler.random_point(2, -1.0, 1.0);
            if (norm(dir) < 1e-3) dir = Vector{1.0, 0.0};
            auto traj = Trajectory::geometric(limit, dir, 0.1, 0.5, 45, &a, &dir);
            std::vector<Vector> probes;
            for (int i = 0; i < 8; ++i) probes.push_back(sampler.random_point(2, -2.0, 2.0));
            auto pm = check_pseudomonotone_surrogate(a, traj, probes);
            CHECK(pm.passed());
            auto seq = check_local_boundedness_sequential(a, traj);
            CHECK(seq.passed());
        }
        CHECK(check_local_boundedness(a, sampler.random_point(2, -1.0, 1.0), 0.5, 64).passed());
    }
}

TEST_CASE("generalized pseudo-monotone mode checks the limit selection") {
    auto id = ops::identity(1);
    auto traj = Trajectory::geometric(Vector{0.5}, Vector{1.0}, 0.1, 0.5, 45, &id);
    PseudoMonotoneOptions opt;
    opt.generalized = true;
    auto rep = check_pseudomonotone_surrogate(id, traj, {Vector{1.0}, Vector{0.0}}, opt);
    CHECK(rep.passed());
}

TEST_CASE("reports are reproducible for a fixed seed") {
    auto a = ops::subdiff_l1(2);
    CheckOptions opt;
    opt.seed = 99;
    auto pairs = sample_pairs(2, 100, 2.0, opt.seed);
    auto r1 = check_monotone(a, pairs, opt);
    auto r2 = check_monotone(a, sample_pairs(2, 100, 2.0, opt.seed), opt);
    CHECK(r1 == r2);

    LocalBoundednessOptions lopt;
    lopt.base.seed = 99;
    auto l1 = check_local_boundedness(a, Vector(2), 0.5, 64, lopt);
    auto l2 = check_local_boundedness(a, Vector(2), 0.5, 64, lopt);
    CHECK(l1 == l2);
}
