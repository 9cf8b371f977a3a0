#include <cmath>
#include <vector>

#include "doctest.h"
#include "vimo/convex_function.hpp"
#include "vimo/extended_real.hpp"
#include "vimo/sampling.hpp"
#include "vimo/set_valued_operator.hpp"

using namespace vimo;

namespace {

// named operators for the property battery
std::vector<std::pair<std::string, SetValuedOperator>> operator_battery() {
    std::vector<std::pair<std::string, SetValuedOperator>> battery;
    battery.emplace_back("identity", ops::identity(2));
    battery.emplace_back("linear_spd", ops::linear({{2.0, 0.5}, {0.5, 1.0}}));
    battery.emplace_back("rotation", ops::linear({{0.0, -1.0}, {1.0, 0.0}}));
    battery.emplace_back("negative_identity", ops::negative_identity(2));
    battery.emplace_back("subdiff_l1", ops::subdiff_l1(2));
    battery.emplace_back("constant_box", ops::constant_box(Vector{0.0, 0.0}, Vector{1.0, 1.0}));
    battery.emplace_back("constant_points",
                         ops::constant_finite_set(2, {Vector{3.0, 4.0}, Vector{-1.0, 0.5}}));
    battery.emplace_back("power_norm", ops::power_norm(2, 3.0));
    battery.emplace_back("cubic", ops::componentwise_cubic(2));
    battery.emplace_back("sum_id_subdiff", sum_operator(ops::identity(2), ops::subdiff_l1(2)));
    battery.emplace_back("two_point_map", ops::finite_set_map(2, [](const Vector& y) {
                             return std::vector<Vector>{y, 2.0 * y};
                         }));
    battery.emplace_back("shifted_subdiff",
                         sum_operator(ops::subdiff_l1(2), ops::negative_identity(2)));
    return battery;
}

}  // namespace

TEST_CASE("vector basics and finiteness guard") {
    Vector v{1.0, -2.0};
    CHECK(v.dim() == 2);
    CHECK(dot(v, Vector{3.0, 1.0}) == doctest::Approx(1.0));
    CHECK(norm(Vector{3.0, 4.0}) == doctest::Approx(5.0));
    CHECK_THROWS_AS((Vector{1.0, std::numeric_limits<double>::quiet_NaN()}),
                    std::invalid_argument);
    CHECK_THROWS_AS((Vector{std::numeric_limits<double>::infinity()}), std::invalid_argument);
    CHECK_THROWS_AS(dot(v, Vector{1.0}), std::invalid_argument);
    CHECK(weighted_norm(Vector{3.0, 4.0}, Vector{1.0, 1.0}) == doctest::Approx(5.0));
    CHECK(weighted_norm(Vector{2.0, 0.0}, Vector{4.0, 1.0}) == doctest::Approx(4.0));
}

TEST_CASE("extended real rules") {
    CHECK(ext::add(ext::infinity, 3.0) == ext::infinity);
    CHECK(ext::sub(ext::infinity, 5.0) == ext::infinity);
    CHECK(ext::sub(2.0, 1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(ext::sub(ext::infinity, ext::infinity), std::domain_error);
    CHECK_THROWS_AS(ext::checked(std::nan(""), "t"), std::domain_error);
}

TEST_CASE("support values of the subdifferential of |.|") {
    auto a = ops::subdiff_l1(1);
    // sup over d in [-1,1] of 2 d
    CHECK(a.support_plus(Vector{0.0}, Vector{2.0}) == doctest::Approx(2.0));
    CHECK(a.support_plus(Vector{2.0}, Vector{5.0}) == doctest::Approx(5.0));
    CHECK(a.support_minus(Vector{0.0}, Vector{2.0}) == doctest::Approx(-2.0));
}

TEST_CASE("support of a singleton map is the inner product") {
    auto a = ops::identity(2);
    CHECK(a.support_plus(Vector{1.0, 2.0}, Vector{3.0, -1.0}) == doctest::Approx(1.0));
    CHECK(a.support_minus(Vector{1.0, 2.0}, Vector{3.0, -1.0}) == doctest::Approx(1.0));
}

TEST_CASE("support of a constant box maximizes coordinatewise") {
    auto a = ops::constant_box(Vector{0.0, 0.0}, Vector{1.0, 1.0});
    CHECK(a.support_plus(Vector{0.3, -2.0}, Vector{1.0, -1.0}) == doctest::Approx(1.0));
}

TEST_CASE("support at xi = 0 is exactly zero") {
    for (auto& [name, a] : operator_battery()) {
        CAPTURE(name);
        CHECK(a.support_plus(Vector{0.7, -0.3}, Vector{0.0, 0.0}) == 0.0);
    }
}

TEST_CASE("selection follows the hint to the argsup") {
    auto sub = ops::subdiff_l1(1);
    CHECK(sub.selection(Vector{0.0}, Vector{1.0})[0] == doctest::Approx(1.0));
    CHECK(sub.selection(Vector{0.0}, Vector{-1.0})[0] == doctest::Approx(-1.0));

    auto lin = ops::linear({{2.0, 0.0}, {0.0, 3.0}});
    Vector w = lin.selection(Vector{1.0, -1.0}, Vector{0.3, 0.9});
    CHECK(w[0] == doctest::Approx(2.0));
    CHECK(w[1] == doctest::Approx(-3.0));

    // Minkowski sum [-1,1] + {0} at y = 0: argsup toward -1 is -1
    auto s = sum_operator(ops::subdiff_l1(1), ops::identity(1));
    CHECK(s.selection(Vector{0.0}, Vector{-1.0})[0] == doctest::Approx(-1.0));
}

TEST_CASE("norm bounds") {
    auto sub = ops::subdiff_l1(1);
    CHECK(sub.norm_plus(Vector{0.0}) == doctest::Approx(1.0));
    CHECK(sub.norm_minus(Vector{0.0}) == doctest::Approx(0.0));

    auto interval = ops::constant_box(Vector{-2.0}, Vector{3.0});
    CHECK(interval.norm_plus(Vector{0.0}) == doctest::Approx(3.0));

    auto point = ops::constant_finite_set(2, {Vector{3.0, 4.0}});
    CHECK(point.norm_plus(Vector{0.0, 0.0}) == doctest::Approx(5.0));
    CHECK(point.norm_minus(Vector{0.0, 0.0}) == doctest::Approx(5.0));
}

TEST_CASE("sum operator adds support functions and selections") {
    auto s = sum_operator(ops::subdiff_l1(1), ops::identity(1));
    // d|2| = {1}, identity contributes 2
    CHECK(s.support_plus(Vector{2.0}, Vector{1.0}) == doctest::Approx(3.0));

    auto z = ops::constant_finite_set(1, {Vector{0.0}});
    auto zz = sum_operator(z, z);
    CHECK(zz.support_plus(Vector{5.0}, Vector{1.0}) == doctest::Approx(0.0));
    CHECK(zz.support_plus(Vector{5.0}, Vector{-1.0}) == doctest::Approx(0.0));

    auto b = ops::constant_box(Vector{0.0}, Vector{1.0});
    CHECK(sum_operator(b, b).support_plus(Vector{0.0}, Vector{1.0}) == doctest::Approx(2.0));
}

TEST_CASE("subdifferential operator approximates directional derivatives") {
    auto abs1 = ProperConvexFunction::l1_norm(1);
    auto da = subdifferential_operator(abs1, 24);
    CHECK(da.support_plus(Vector{0.0}, Vector{1.0}) == doctest::Approx(1.0));

    auto sq = ProperConvexFunction::half_sqnorm(2);
    auto dsq = subdifferential_operator(sq, 24);
    CHECK(dsq.support_plus(Vector{1.0, 0.0}, Vector{0.0, 1.0}) ==
          doctest::Approx(0.0).epsilon(1e-6));

    // phi = max(0, y) at 0 along xi = -1: one-sided quotients on the grid
    // (phi(-t) - phi(0)) / t vanish identically, so the limit is 0
    auto pos = ProperConvexFunction::positive_part(1);
    double expected = std::numeric_limits<double>::infinity();
    double t = 1.0;
    for (int k = 0; k < 24; ++k, t *= 0.5) {
        expected = std::min(expected, (std::max(0.0, -t) - 0.0) / t);
    }
    CHECK(expected == doctest::Approx(0.0));
    auto dpos = subdifferential_operator(pos, 24);
    CHECK(dpos.support_plus(Vector{0.0}, Vector{-1.0}) == doctest::Approx(expected).epsilon(1e-6));
    // and the two-sided value at the kink, for contrast
    CHECK(dpos.support_plus(Vector{0.0}, Vector{1.0}) == doctest::Approx(1.0));
}

TEST_CASE("dimension mismatches are rejected") {
    auto a = ops::identity(2);
    CHECK_THROWS_AS(a.support_plus(Vector{1.0}, Vector{1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(a.selection(Vector{1.0, 0.0}, Vector{1.0}), std::invalid_argument);
    CHECK_THROWS_AS(sum_operator(ops::identity(1), ops::identity(2)), std::invalid_argument);
}

TEST_CASE("sublinearity of support functions on the battery") {
    Sampler sampler(11);
    for (auto& [name, a] : operator_battery()) {
        CAPTURE(name);
        for (int s = 0; s < 200; ++s) {
            Vector y = sampler.random_point(2, -2.0, 2.0);
            Vector xi1 = sampler.random_point(2, -2.0, 2.0);
            Vector xi2 = sampler.random_point(2, -2.0, 2.0);
            double lambda = sampler.uniform(0.0, 3.0);

            double s1 = a.support_plus(y, xi1);
            double s2 = a.support_plus(y, xi2);
            double hom = a.support_plus(y, lambda * xi1);
            double add = a.support_plus(y, xi1 + xi2);

            double scale = 1.0 + std::abs(s1) + std::abs(s2);
            CHECK(hom == doctest::Approx(lambda * s1).epsilon(1e-9));
            CHECK(add <= s1 + s2 + 1e-9 * scale);
        }
    }
}

TEST_CASE("duality between the support pair") {
    Sampler sampler(12);
    for (auto& [name, a] : operator_battery()) {
        CAPTURE(name);
        for (int s = 0; s < 100; ++s) {
            Vector y = sampler.random_point(2, -2.0, 2.0);
            Vector xi = sampler.random_point(2, -2.0, 2.0);
            CHECK(a.support_minus(y, xi) == -a.support_plus(y, -xi));  // exact by construction
            CHECK(a.support_minus(y, xi) <= a.support_plus(y, xi) + 1e-12);
        }
    }
}

TEST_CASE("selections stay inside co A(y)") {
    Sampler sampler(13);
    for (auto& [name, a] : operator_battery()) {
        CAPTURE(name);
        for (int s = 0; s < 10; ++s) {
            Vector y = sampler.random_point(2, -2.0, 2.0);
            Vector hint = sampler.random_point(2, -1.0, 1.0);
            Vector w = a.selection(y, hint);
            auto dirs = Sampler(100 + s).unit_directions(2, 100);
            for (const auto& xi : dirs) {
                CHECK(dot(w, xi) <= a.support_plus(y, xi) + 1e-9);
            }
        }
    }
}

TEST_CASE("hull invariance: a finite set and its hull vertices agree on supports") {
    // interior and edge points of the hull must not change any support value
    std::vector<Vector> verts = {Vector{0.0, 0.0}, Vector{1.0, 0.0}, Vector{0.0, 1.0}};
    std::vector<Vector> fat = verts;
    fat.push_back(Vector{0.25, 0.25});  // interior
    fat.push_back(Vector{0.5, 0.0});    // edge midpoint
    auto lean = ops::constant_finite_set(2, verts);
    auto full = ops::constant_finite_set(2, fat);
    Sampler sampler(14);
    Vector y{0.0, 0.0};
    for (int s = 0; s < 200; ++s) {
        Vector xi = sampler.random_point(2, -3.0, 3.0);
        CHECK(lean.support_plus(y, xi) == doctest::Approx(full.support_plus(y, xi)));
    }
}

TEST_CASE("Cauchy-Schwarz bound against the norm oracle") {
    Sampler sampler(15);
    for (auto& [name, a] : operator_battery()) {
        CAPTURE(name);
        for (int s = 0; s < 100; ++s) {
            Vector y = sampler.random_point(2, -2.0, 2.0);
            Vector xi = sampler.random_point(2, -2.0, 2.0);
            double bound = a.norm_plus(y) * norm(xi);
            CHECK(std::abs(a.support_plus(y, xi)) <= bound + 1e-9 * (1.0 + bound));
        }
    }
}

TEST_CASE("norm oracle dominates sampled support on unit directions") {
    Sampler sampler(16);
    for (auto& [name, a] : operator_battery()) {
        CAPTURE(name);
        Vector y = sampler.random_point(2, -2.0, 2.0);
        auto [lo, hi] = a.norm_bounds(y);
        CHECK(lo <= hi);
        for (const auto& xi : sampler.unit_directions(2, 64)) {
            CHECK(a.support_plus(y, xi) <= hi + 1e-9 * (1.0 + std::abs(hi)));
        }
    }
}
