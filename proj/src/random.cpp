#include "octosphere/random.hpp"

#include <cmath>
#include <numbers>

namespace octosphere {

std::uint64_t Rng::next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double Rng::uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

double Rng::normal() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Vec7d random_unit7(Rng& rng) {
    for (;;) {
        Vec7d v;
        for (int k = 0; k < 7; ++k) v(k) = rng.normal();
        double n = v.norm();
        if (n > 1e-6) return v / n;
    }
}

Vec7d random_tangent(Rng& rng, const Vec7d& x) {
    for (;;) {
        Vec7d v;
        for (int k = 0; k < 7; ++k) v(k) = rng.normal();
        v -= x.dot(v) * x;
        double n = v.norm();
        if (n > 1e-6) return v / n;
    }
}

std::pair<Vec7d, Vec7d> random_tangent_pair(Rng& rng, const Vec7d& x) {
    Vec7d a = random_tangent(rng, x);
    for (;;) {
        Vec7d b = random_tangent(rng, x);
        b -= a.dot(b) * a;
        double n = b.norm();
        if (n > 1e-6) return {a, b / n};
    }
}

Vec7d random_in_chart(Rng& rng, int chart, double margin) {
    for (;;) {
        Vec7d y = random_unit7(rng);
        if (y(chart - 1) > -0.5 + margin) return y;
    }
}

Mat7d random_skew(Rng& rng) {
    Mat7d m = Mat7d::Zero();
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
            m(i, j) = rng.normal();
            m(j, i) = -m(i, j);
        }
    return m;
}

} // namespace octosphere
