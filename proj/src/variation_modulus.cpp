#include "vimo/variation_modulus.hpp"

#include <cmath>
#include <stdexcept>

namespace vimo {

VariationModulus VariationModulus::zero() {
    return {[](double, double) { return 0.0; }, "C = 0"};
}

VariationModulus VariationModulus::power(double coeff, double exponent) {
    if (coeff < 0.0) throw std::invalid_argument("VariationModulus::power: negative coefficient");
    return {[coeff, exponent](double, double r2) { return coeff * std::pow(r2, exponent); },
            "C = " + std::to_string(coeff) + " * r2^" + std::to_string(exponent)};
}

bool VariationModulus::looks_continuous(double r1_max, double r2_max, int grid) const {
    if (!(r1_max > 0.0) || !(r2_max > 0.0) || grid < 2) {
        throw std::invalid_argument("looks_continuous: bad arguments");
    }
    // bisect every grid cell edge toward its largest value gap; a gap that
    // survives at vanishing width is a jump
    auto segment_ok = [this](double r1a, double r2a, double r1b, double r2b) {
        for (int it = 0; it < 48; ++it) {
            double fa = eval(r1a, r2a);
            double fb = eval(r1b, r2b);
            if (!std::isfinite(fa) || !std::isfinite(fb)) return false;
            if (std::abs(fb - fa) <= 1e-3 * (1.0 + std::abs(fa))) return true;
            double m1 = 0.5 * (r1a + r1b), m2 = 0.5 * (r2a + r2b);
            double fm = eval(m1, m2);
            if (std::abs(fm - fa) >= std::abs(fb - fm)) {
                r1b = m1;
                r2b = m2;
            } else {
                r1a = m1;
                r2a = m2;
            }
        }
        double fa = eval(r1a, r2a);
        double fb = eval(r1b, r2b);
        return std::abs(fb - fa) <= 1e-3 * (1.0 + std::abs(fa));
    };
    for (int i = 0; i <= grid; ++i) {
        for (int j = 0; j < grid; ++j) {
            double r1 = r1_max * i / grid;
            double r2a = r2_max * j / grid;
            double r2b = r2_max * (j + 1) / grid;
            if (!segment_ok(r1, r2a, r1, r2b)) return false;
            double r2 = r2_max * i / grid;
            double r1a = r1_max * j / grid;
            double r1b = r1_max * (j + 1) / grid;
            if (!segment_ok(r1a, r2, r1b, r2)) return false;
        }
    }
    return true;
}

bool VariationModulus::has_vanishing_slope(double r1, double r2, double tol, int depth) const {
    if (!(r1 > 0.0) || !(r2 > 0.0)) {
        throw std::invalid_argument("has_vanishing_slope: arguments must be positive");
    }
    // the last few terms of the dyadic sequence must all sit below tol
    const int tail = 4;
    double scale = 1.0;
    int below = 0;
    for (int k = 0; k <= depth; ++k, scale *= 2.0) {
        double v = eval(r1, r2 / scale) * scale;
        if (!std::isfinite(v)) return false;
        below = (std::abs(v) < tol) ? below + 1 : 0;
    }
    return below >= tail;
}

}  // namespace vimo
