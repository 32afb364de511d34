#include <doctest.h>

#include <optional>

#include "octosphere/charts.hpp"
#include "octosphere/random.hpp"

using namespace octosphere;
using Q = QuadScalar;

namespace {

// Black-box Gauss-Newton on |f(x) e_i - y|^2 + (|x|^2 - 1)^2 with a finite-difference Jacobian.
std::optional<Vec7d> newton_preimage(int i, const Vec7d& y, Vec7d x) {
    for (int it = 0; it < 100; ++it) {
        auto residual = [&](const Vec7d& z) {
            Eigen::Matrix<double, 8, 1> r;
            r.head<7>() = f_matrix_raw(z).col(i - 1) - y;
            r(7) = z.squaredNorm() - 1;
            return r;
        };
        Eigen::Matrix<double, 8, 1> r = residual(x);
        if (r.norm() < 1e-14) return x;
        Eigen::Matrix<double, 8, 7> jac;
        for (int k = 0; k < 7; ++k) {
            Vec7d d = Vec7d::Zero();
            d(k) = 1e-7;
            jac.col(k) = (residual(Vec7d(x + d)) - residual(Vec7d(x - d))) / 2e-7;
        }
        x -= jac.colPivHouseholderQr().solve(r);
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("chart membership and covering") {
    Vec7d e1 = Vec7d::Unit(0);
    CHECK(chart_contains(1, e1));
    CHECK_FALSE(chart_contains(1, Vec7d(-e1)));
    Vec7<Q> edge = Vec7<Q>::Zero();
    edge(0) = Q::frac(-1, 2);
    CHECK_FALSE(chart_contains(1, edge));
    CHECK_THROWS_AS(chart_contains(0, e1), DomainError);

    Rng rng(7);
    double worst = 0;
    for (int t = 0; t < 100000; ++t) {
        Vec7d y = random_unit7(rng);
        worst = std::max(worst, -y.maxCoeff());
        REQUIRE(chart_contains(best_chart(y), y));
    }
    CHECK(worst < 0.5);
}

TEST_CASE("north pole") {
    Vec7<Q> e1 = Vec7<Q>::Unit(0);
    CHECK(solve_x_of_y(1, e1) == e1);
    auto fr = frame_at(1, e1);
    CHECK(fr.B == lambda_matrix<Q>());
}

TEST_CASE("first chart against the closed forms") {
    Rng rng(9);
    for (int t = 0; t < 200; ++t) {
        Vec7d y = random_in_chart(rng, 1);
        Vec7d x = solve_x_of_y(1, y);
        const double w = std::sqrt(2 * y(0) + 1), den = std::sqrt(3.0) * (y(0) + 1);
        REQUIRE(x(0) == doctest::Approx(w / std::sqrt(3.0)).epsilon(1e-13));
        REQUIRE(x(1) == doctest::Approx((w * y(1) - y(2)) / den).epsilon(1e-12));
        REQUIRE(x(2) == doctest::Approx((y(1) + w * y(2)) / den).epsilon(1e-12));
        REQUIRE(x(3) == doctest::Approx((w * y(3) - y(4)) / den).epsilon(1e-12));
        REQUIRE(x(4) == doctest::Approx((y(3) + w * y(4)) / den).epsilon(1e-12));
        REQUIRE(x(5) == doctest::Approx((w * y(5) + y(6)) / den).epsilon(1e-12));
        // the last coordinate pairs y7 with the root and -y6 (the y6 <-> y7 swapped variant
        // does not reproduce the column)
        REQUIRE(x(6) == doctest::Approx((w * y(6) - y(5)) / den).epsilon(1e-12));

        auto fr = frame_at(1, y);
        double y1 = y(0), y2 = y(1), y3 = y(2);
        double xi3 = (y1 * y2 * y3 + w / 2 * (y1 * y1 + y2 * y2 - y3 * y3 + 2 * y1 + 1)) / (y1 * y1 + 2 * y1 + 1);
        REQUIRE(fr.B(2, 1) == doctest::Approx(xi3).epsilon(1e-11));
    }
    // swapped variant fails somewhere
    Vec7d y = random_in_chart(rng, 1);
    Vec7d x = solve_x_of_y(1, y);
    const double w = std::sqrt(2 * y(0) + 1), den = std::sqrt(3.0) * (y(0) + 1);
    x(6) = (-y(6) + w * y(5)) / den;
    CHECK(max_abs(f_matrix_raw(x).col(0) - y) > 1e-3);
}

TEST_CASE("all charts: frame invariants") {
    Rng rng(13);
    for (int i = 1; i <= 7; ++i) {
        for (int t = 0; t < 1000; ++t) {
            Vec7d y = random_in_chart(rng, i);
            auto fr = frame_at(i, y);
            REQUIRE(frame_defect(fr) < 1e-10);
            auto tf = fr.tangent_frame();
            REQUIRE(max_abs(Eigen::Matrix<double, 1, 6>(y.transpose() * tf)) < 1e-10);
        }
    }
}

TEST_CASE("exact frames") {
    // y = (1/2, 1/2, 1/2, 1/2, 0, 0, 0) lies in every chart.
    Vec7<Q> y = Vec7<Q>::Zero();
    for (int k = 0; k < 4; ++k) y(k) = Q::frac(1, 2);
    for (int i = 1; i <= 7; ++i) {
        auto fr = frame_at(i, y);
        CHECK(Vec7<Q>(fr.B.col(i - 1)) == y);
        CHECK(fr.B * fr.B.transpose() == Mat7<Q>::Identity());
    }
    // 2y_i + 1 = 2, sqrt(2/3) is in the field
    Vec7<Q> z = Vec7<Q>::Zero();
    z(0) = Q::frac(1, 2);
    z(1) = Q(0, 0, Rational(1, 2), 0);
    CHECK(Vec7<Q>(frame_at(1, z).B.col(0)) == z);
}

TEST_CASE("solver against numeric root finding") {
    Rng rng(17);
    for (int i = 1; i <= 7; ++i) {
        for (int t = 0; t < 3; ++t) {
            Vec7d y = random_in_chart(rng, i, 0.1);
            Vec7d ours = solve_x_of_y(i, y), other = solve_x_of_y(i, y, -1);
            bool hit_ours = false;
            for (int s = 0; s < 20; ++s) {
                auto root = newton_preimage(i, y, random_unit7(rng));
                if (!root) continue;
                // every root found is one of the two branches
                double d1 = max_abs(*root - ours), d2 = max_abs(*root - other);
                REQUIRE(std::min(d1, d2) < 1e-8);
                hit_ours = hit_ours || d1 < 1e-8;
            }
            CHECK(hit_ours);
        }
    }
}

TEST_CASE("second branch") {
    Rng rng(19);
    Vec7d y = random_in_chart(rng, 3);
    auto a = frame_at(3, y), b = frame_at(3, y, -1);
    CHECK(frame_defect(b) < 1e-10);
    CHECK(max_abs(a.B - b.B) > 1e-3);
}

TEST_CASE("errors") {
    Vec7d y = -Vec7d::Unit(2);
    CHECK_THROWS_AS(solve_x_of_y(3, y), DomainError);
    CHECK_THROWS_AS(solve_x_of_y(1, Vec7d(2 * Vec7d::Unit(0))), DomainError);
    // sqrt((2y+1)/3) outside the field
    Vec7<Q> z = Vec7<Q>::Zero();
    z(0) = Q::frac(3, 5);
    z(1) = Q::frac(4, 5);
    CHECK_THROWS_AS(solve_x_of_y(1, z), ModeError);
}
