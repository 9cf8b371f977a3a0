#include "vimo/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace vimo {

namespace {

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                           41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};

double radical_inverse(std::size_t k, int base) {
    double inv = 1.0 / base;
    double f = inv;
    double r = 0.0;
    while (k > 0) {
        r += f * static_cast<double>(k % base);
        k /= base;
        f *= inv;
    }
    return r;
}

}  // namespace

std::uint64_t Sampler::next() {
    // splitmix64
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Sampler::uniform01() {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
}

double Sampler::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

Vector Sampler::halton(std::size_t k, std::size_t dim) const {
    if (dim == 0) throw std::invalid_argument("Sampler::halton: empty dimension");
    constexpr std::size_t max_halton_dim = sizeof(kPrimes) / sizeof(kPrimes[0]);
    Vector p(dim);
    if (dim <= max_halton_dim) {
        const std::size_t offset = 37 + (seed_ % 1009);
        for (std::size_t i = 0; i < dim; ++i) {
            p[i] = radical_inverse(k + offset, kPrimes[i]);
        }
        return p;
    }
    // Halton degrades past a few dozen dimensions; fall back to a stateless
    // splitmix stream keyed by (seed, k)
    std::uint64_t s = (seed_ + 0x632be59bd9b4e019ULL) ^ (0x9e3779b97f4a7c15ULL * (k + 1));
    for (std::size_t i = 0; i < dim; ++i) {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        p[i] = static_cast<double>(z >> 11) * (1.0 / 9007199254740992.0);
    }
    return p;
}

std::vector<Vector> Sampler::box_points(const Vector& lo, const Vector& hi,
                                        std::size_t count) const {
    check_dim(hi, lo.dim(), "Sampler::box_points");
    std::vector<Vector> pts;
    pts.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Vector u = halton(k, lo.dim());
        Vector p(lo.dim());
        for (std::size_t i = 0; i < lo.dim(); ++i) {
            p[i] = lo[i] + (hi[i] - lo[i]) * u[i];
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

std::vector<Vector> Sampler::unit_directions(std::size_t dim, std::size_t count) const {
    std::vector<Vector> dirs;
    dirs.reserve(count);
    std::size_t k = 0;
    while (dirs.size() < count) {
        Vector u = halton(k++, dim);
        Vector d(dim);
        for (std::size_t i = 0; i < dim; ++i) d[i] = 2.0 * u[i] - 1.0;
        double n = norm(d);
        if (n < 1e-6) continue;
        d *= 1.0 / n;
        dirs.push_back(std::move(d));
    }
    return dirs;
}

Vector Sampler::random_point(std::size_t dim, double lo, double hi) {
    Vector p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = uniform(lo, hi);
    return p;
}

}  // namespace vimo
