#include <cmath>
#include <functional>

#include "doctest.h"
#include "vimo/convex_function.hpp"
#include "vimo/convex_set.hpp"
#include "vimo/extended_real.hpp"
#include "vimo/problem.hpp"
#include "vimo/sampling.hpp"
#include "vimo/variation_modulus.hpp"

using namespace vimo;

namespace {

// test-side oracle: golden-section minimizer of a 1D convex function
double minimize_1d(const std::function<double(double)>& f, double lo, double hi) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    for (int it = 0; it < 200; ++it) {
        if (f(c) < f(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - gr * (b - a);
        d = a + gr * (b - a);
    }
    return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("projection lands in the set for every kind") {
    Sampler sampler(21);
    std::vector<ConvexSet> sets;
    sets.push_back(ConvexSet::box(std::vector<double>{0.0, -1.0}, std::vector<double>{1.0, 2.0}));
    sets.push_back(ConvexSet::ball(Vector{0.5, 0.5}, 1.5));
    sets.push_back(ConvexSet::polytope({Vector{1.0, 1.0}, Vector{-1.0, 0.0}, Vector{0.0, -1.0}},
                                       {1.0, 0.0, 0.0}));
    sets.push_back(ConvexSet::whole_space(2));
    sets.push_back(ConvexSet::intersect_with_ball(
        ConvexSet::box(std::vector<double>{0.0, -1.0}, std::vector<double>{1.0, 2.0}), Vector{0.0, 0.0}, 1.0));
    sets.push_back(
        ConvexSet::epigraph(ProperConvexFunction::l1_norm(1), ConvexSet::whole_space(1)));

    for (const auto& set : sets) {
        for (int s = 0; s < 50; ++s) {
            Vector y = sampler.random_point(set.dim(), -4.0, 4.0);
            Vector p = set.project(y);
            CHECK(set.contains(p, 1e-7));
            // projections of feasible points are fixed points
            CHECK(distance(set.project(p), p) < 1e-6);
        }
    }
}

TEST_CASE("box data and one-sided bounds") {
    auto box = ConvexSet::box(std::vector<double>{0.0, -ext::infinity},
                              std::vector<double>{1.0, ext::infinity});
    CHECK(box.contains(Vector{0.5, 100.0}));
    CHECK(!box.contains(Vector{-0.5, 0.0}));
    CHECK(!box.is_bounded());
    Vector p = box.project(Vector{2.0, 7.0});
    CHECK(p[0] == doctest::Approx(1.0));
    CHECK(p[1] == doctest::Approx(7.0));
    CHECK_THROWS_AS(box.vertices(), std::logic_error);

    auto unit = ConvexSet::box(std::vector<double>{0.0, 0.0}, std::vector<double>{1.0, 1.0});
    CHECK(unit.vertices().size() == 4);
    CHECK(unit.support(Vector{1.0, -1.0}) == doctest::Approx(1.0));
    CHECK(unit.bounding_radius() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("ball support and projection formulas") {
    auto ball = ConvexSet::ball(Vector{1.0, 0.0}, 2.0);
    CHECK(ball.support(Vector{0.0, 1.0}) == doctest::Approx(2.0));
    CHECK(ball.support(Vector{3.0, 4.0}) == doctest::Approx(3.0 + 2.0 * 5.0));
    Vector p = ball.project(Vector{5.0, 0.0});
    CHECK(p[0] == doctest::Approx(3.0));
    // sampled support oracle: no point of the set may beat the formula
    Sampler sampler(22);
    for (int s = 0; s < 100; ++s) {
        Vector y = ball.project(sampler.random_point(2, -4.0, 4.0));
        Vector xi = sampler.random_point(2, -2.0, 2.0);
        CHECK(dot(y, xi) <= ball.support(xi) + 1e-9);
    }
}

TEST_CASE("polytope vertices, support and normal cones") {
    // triangle x + y <= 1, x >= 0, y >= 0
    auto tri = ConvexSet::polytope({Vector{1.0, 1.0}, Vector{-1.0, 0.0}, Vector{0.0, -1.0}},
                                   {1.0, 0.0, 0.0});
    auto vs = tri.vertices();
    REQUIRE(vs.size() == 3);
    CHECK(tri.support(Vector{1.0, 0.0}) == doctest::Approx(1.0));
    CHECK(tri.support(Vector{-1.0, -1.0}) == doctest::Approx(0.0));
    CHECK(tri.is_bounded());

    // interior: no active normals
    CHECK(tri.normal_cone_generators(Vector{0.2, 0.2}).empty());
    // edge x = 0: one active row
    auto edge = tri.normal_cone_generators(Vector{0.0, 0.5});
    REQUIRE(edge.size() == 1);
    CHECK(edge[0][0] == doctest::Approx(-1.0));
    // vertex (0,0): two active rows
    CHECK(tri.normal_cone_generators(Vector{0.0, 0.0}).size() == 2);

    // Dykstra projection against a brute-force grid oracle
    Vector target{1.2, 1.3};
    Vector p = tri.project(target);
    double best = 1e30;
    Vector best_pt(2);
    for (int i = 0; i <= 400; ++i) {
        for (int j = 0; j <= 400; ++j) {
            Vector cand{i / 400.0, j / 400.0};
            if (!tri.contains(cand, 1e-12)) continue;
            if (distance(cand, target) < best) {
                best = distance(cand, target);
                best_pt = cand;
            }
        }
    }
    CHECK(distance(p, best_pt) < 5e-3);
    CHECK(distance(p, target) <= best + 1e-6);
}

TEST_CASE("epigraph membership and projection") {
    auto epi = ConvexSet::epigraph(ProperConvexFunction::l1_norm(1), ConvexSet::whole_space(1));
    CHECK(epi.contains(Vector{1.0, 1.0}));   // mu = phi(y)
    CHECK(!epi.contains(Vector{1.0, 0.5}));  // mu < phi(y)
    CHECK(epi.contains(Vector{-0.5, 2.0}));

    // projection oracle: for fixed xi the best mu is max(phi(xi), m)
    Vector target{1.0, -1.0};
    Vector p = epi.project(target);
    double best = 1e30;
    Vector best_pt(2);
    for (int i = 0; i <= 40000; ++i) {
        double xi = -2.0 + 4.0 * i / 40000.0;
        double mu = std::max(std::abs(xi), target[1]);
        Vector cand{xi, mu};
        double d = distance(cand, target);
        if (d < best) {
            best = d;
            best_pt = cand;
        }
    }
    CHECK(distance(p, best_pt) < 1e-3);
    CHECK(epi.contains(p, 1e-9));
}

TEST_CASE("empty polytopes and empty intersections are rejected") {
    // x <= -1 and x >= 1 cannot both hold
    CHECK_THROWS_AS(ConvexSet::polytope({Vector{1.0}, Vector{-1.0}}, {-1.0, -1.0}),
                    std::invalid_argument);
    // a far-away ball misses the box entirely
    auto box = ConvexSet::box(std::vector<double>{0.0, 0.0}, std::vector<double>{1.0, 1.0});
    CHECK_THROWS_AS(ConvexSet::intersect_with_ball(box, Vector{10.0, 10.0}, 1.0),
                    std::invalid_argument);
    CHECK_NOTHROW(ConvexSet::intersect_with_ball(box, Vector{0.0, 0.0}, 1.0));
}

TEST_CASE("restriction slices sets correctly") {
    auto box = ConvexSet::box(std::vector<double>{0.0, -1.0, 2.0}, std::vector<double>{1.0, 1.0, 3.0});
    auto slice = box.restrict({0, 2}, Vector{0.5, 0.0, 2.5});
    CHECK(slice.dim() == 2);
    CHECK(slice.contains(Vector{0.5, 2.5}));
    CHECK(!slice.contains(Vector{0.5, 1.0}));

    auto ball = ConvexSet::ball(Vector{0.0, 0.0}, 2.0);
    auto bslice = ball.restrict({0}, Vector{0.0, 1.0});
    CHECK(bslice.kind() == ConvexSet::Kind::Ball);
    CHECK(bslice.contains(Vector{std::sqrt(3.0) - 1e-9}));
    CHECK(!bslice.contains(Vector{std::sqrt(3.0) + 1e-3}));

    auto half = ConvexSet::polytope({Vector{1.0, 1.0}}, {1.0});
    auto hslice = half.restrict({0}, Vector{0.0, 0.25});
    CHECK(hslice.contains(Vector{0.75}));
    CHECK(!hslice.contains(Vector{0.8}));
}

TEST_CASE("proper convex functions: values, subgradients, prox") {
    auto l1 = ProperConvexFunction::l1_norm(2, 1.5);
    CHECK(l1.value(Vector{1.0, -2.0}) == doctest::Approx(4.5));
    Vector g = l1.subgradient(Vector{1.0, -2.0});
    CHECK(g[0] == doctest::Approx(1.5));
    CHECK(g[1] == doctest::Approx(-1.5));

    // prox against the golden-section oracle, coordinate by coordinate
    for (double x : {2.0, 0.4, -3.0, 0.0}) {
        for (double tau : {0.1, 1.0, 2.5}) {
            double expected = minimize_1d(
                [&](double v) { return 1.5 * std::abs(v) + (v - x) * (v - x) / (2.0 * tau); },
                -10.0, 10.0);
            Vector p = l1.prox(Vector{x, 0.0}, tau);
            CHECK(p[0] == doctest::Approx(expected).epsilon(1e-6));
        }
    }

    auto sq = ProperConvexFunction::half_sqnorm(2);
    Vector ps = sq.prox(Vector{3.0, -1.0}, 0.5);
    CHECK(ps[0] == doctest::Approx(2.0));

    auto pos = ProperConvexFunction::positive_part(1);
    for (double x : {2.0, 0.4, -3.0}) {
        double expected = minimize_1d(
            [&](double v) { return std::max(0.0, v) + (v - x) * (v - x) / 2.0; }, -10.0, 10.0);
        CHECK(pos.prox(Vector{x}, 1.0)[0] == doctest::Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("subgradient inequality and prox optimality on samples") {
    Sampler sampler(23);
    std::vector<ProperConvexFunction> funcs = {
        ProperConvexFunction::zero(2), ProperConvexFunction::l1_norm(2),
        ProperConvexFunction::half_sqnorm(2), ProperConvexFunction::positive_part(2)};
    for (const auto& phi : funcs) {
        for (int s = 0; s < 100; ++s) {
            Vector y = sampler.random_point(2, -3.0, 3.0);
            Vector xi = sampler.random_point(2, -3.0, 3.0);
            double fy = phi.value(y);
            Vector g = phi.subgradient(y);
            CHECK(phi.value(xi) >= fy + dot(g, xi - y) - 1e-9);

            // prox optimality: (y - p)/tau is a subgradient at p
            double tau = 0.3 + sampler.uniform01();
            Vector p = phi.prox(y, tau);
            Vector gp = (1.0 / tau) * (y - p);
            CHECK(phi.value(xi) >= phi.value(p) + dot(gp, xi - p) - 1e-8);
        }
    }
}

TEST_CASE("sampled convexity validation rejects a non-convex oracle") {
    auto bad = ProperConvexFunction(
        1, [](const Vector& y) { return -y[0] * y[0]; }, [](const Vector& y) { return -2.0 * y; },
        [](const Vector& y, double) { return y; });
    Sampler sampler(24);
    CHECK_THROWS_AS(bad.validate_convexity(sampler, 100, 2.0), std::domain_error);

    auto good = ProperConvexFunction::l1_norm(1);
    CHECK_NOTHROW(good.validate_convexity(sampler, 100, 2.0));
}

TEST_CASE("variation modulus vanishing slope") {
    CHECK(VariationModulus::zero().has_vanishing_slope(1.0, 1.0));
    CHECK(VariationModulus::power(1.0, 2.0).has_vanishing_slope(5.0, 3.0));
    CHECK(VariationModulus::power(1.0, 1.5).has_vanishing_slope(5.0, 4.0));
    // linear modulus: C(r1, tau r2)/tau = r2 does not vanish
    CHECK(!VariationModulus::power(1.0, 1.0).has_vanishing_slope(5.0, 4.0));
}

TEST_CASE("variation modulus sampled continuity") {
    CHECK(VariationModulus::power(2.0, 2.0).looks_continuous(5.0, 5.0));
    VariationModulus jumpy{[](double, double r2) { return r2 > 1.0 ? 5.0 : 0.0; }, "step"};
    CHECK(!jumpy.looks_continuous(5.0, 5.0));
}

TEST_CASE("problem construction validates dimensions and the witness") {
    auto a = ops::identity(2);
    auto phi = ProperConvexFunction::zero(2);
    auto k = ConvexSet::box(std::vector<double>{0.0, 0.0}, std::vector<double>{1.0, 1.0});
    CHECK_NOTHROW(VIMOProblem(a, phi, k, Vector{1.0, 1.0}, Vector{0.5, 0.5}));
    CHECK_THROWS_AS(VIMOProblem(a, phi, k, Vector{1.0, 1.0}, Vector{2.0, 0.5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(VIMOProblem(a, phi, k, Vector{1.0}, Vector{0.5, 0.5}),
                    std::invalid_argument);
}

TEST_CASE("restricted problems anchor off-subspace coordinates") {
    auto a = ops::linear({{2.0, 1.0}, {1.0, 3.0}});
    auto problem = VIMOProblem(a, ProperConvexFunction::zero(2),
                               ConvexSet::box(std::vector<double>{0.0, 0.0}, std::vector<double>{1.0, 1.0}),
                               Vector{1.0, 1.0}, Vector{0.25, 0.75});
    auto sub = problem.restrict({0});
    CHECK(sub.dim() == 1);
    // support of the restriction agrees with the full operator on embedded args
    Vector u{0.5};
    Vector y_full = problem.embed({0}, u);
    CHECK(y_full[1] == doctest::Approx(0.75));
    double expect = a.support_plus(y_full, Vector{1.0, 0.0});
    CHECK(sub.A().support_plus(u, Vector{1.0}) == doctest::Approx(expect));
    CHECK(sub.f()[0] == doctest::Approx(1.0));
}
