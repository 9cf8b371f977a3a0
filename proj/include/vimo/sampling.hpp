#pragma once

#include <cstdint>
#include <vector>

#include "vimo/vector.hpp"

namespace vimo {

/// Deterministic seeded sample streams. Point batteries use a Halton
/// low-discrepancy sequence with a seed-dependent offset; scalar draws use
/// splitmix64. Identical (seed, count) always reproduces the same battery,
/// independent of platform and standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed ^ 0x9e3779b97f4a7c15ULL), seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform double in [0, 1).
    double uniform01();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// k-th Halton point in [0,1)^dim, offset by the seed.
    Vector halton(std::size_t k, std::size_t dim) const;

    /// Low-discrepancy battery of `count` points in the box [lo, hi].
    std::vector<Vector> box_points(const Vector& lo, const Vector& hi, std::size_t count) const;

    /// Battery of unit directions (Halton points mapped through a cube-to-sphere
    /// normalization; skips near-zero raw points).
    std::vector<Vector> unit_directions(std::size_t dim, std::size_t count) const;

    /// Pseudo-random point with coordinates uniform in [lo, hi].
    Vector random_point(std::size_t dim, double lo, double hi);

private:
    std::uint64_t next();

    std::uint64_t state_;
    std::uint64_t seed_;
};

}  // namespace vimo
