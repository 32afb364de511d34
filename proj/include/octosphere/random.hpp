#pragma once
// Seeded, platform-independent sampling.
//
// Generator: splitmix64
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
// Uniform doubles take the top 53 bits; normals use Box-Muller (cosine branch only).

#include "octosphere/linalg.hpp"

#include <cstdint>

namespace octosphere {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double normal();

private:
    std::uint64_t state_;
};

Vec7d random_unit7(Rng& rng);
/// Unit vector orthogonal to x.
Vec7d random_tangent(Rng& rng, const Vec7d& x);
/// Orthonormal pair tangent at x.
std::pair<Vec7d, Vec7d> random_tangent_pair(Rng& rng, const Vec7d& x);
/// Unit vector inside chart i (component i-1 > -1/2 + margin).
Vec7d random_in_chart(Rng& rng, int chart, double margin = 0.05);
Mat7d random_skew(Rng& rng);

} // namespace octosphere
