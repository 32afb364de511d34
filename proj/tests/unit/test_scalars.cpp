#include <doctest.h>

#include "octosphere/quad.hpp"
#include "octosphere/random.hpp"
#include "octosphere/scalar.hpp"

#include <cmath>
#include <limits>

using namespace octosphere;

namespace {

QuadScalar random_quad(Rng& rng, int height) {
    auto r = [&] {
        long num = long(rng.next_u64() % (2 * height + 1)) - height;
        long den = long(rng.next_u64() % height) + 1;
        return Rational(num, den);
    };
    Rational a = r(), b = r(), c = r(), d = r();
    a.canonicalize(); b.canonicalize(); c.canonicalize(); d.canonicalize();
    return {a, b, c, d};
}

} // namespace

TEST_CASE("basis products reduce into the canonical basis") {
    CHECK(quad_mul(QuadScalar::sqrt2(), QuadScalar::sqrt3()) == QuadScalar::sqrt6());
    CHECK(QuadScalar::sqrt2() * QuadScalar::sqrt6() == QuadScalar(0, 0, 2, 0));
    CHECK(QuadScalar::sqrt3() * QuadScalar::sqrt6() == QuadScalar(0, 3, 0, 0));
    CHECK(QuadScalar::sqrt6() * QuadScalar::sqrt6() == QuadScalar(6));
    CHECK((QuadScalar(1) + QuadScalar::sqrt3()) * (QuadScalar(-1) + QuadScalar::sqrt3()) == QuadScalar(2));

    QuadScalar a = QuadScalar(1) / (QuadScalar(2) * QuadScalar::sqrt2());
    QuadScalar b = QuadScalar(1) / (QuadScalar(2) * QuadScalar::sqrt6());
    CHECK(a * b == QuadScalar(0, 0, Rational(1, 24), 0));
}

TEST_CASE("inverse") {
    QuadScalar u = QuadScalar(1) + QuadScalar::sqrt3();
    CHECK(quad_inv(u) == QuadScalar(Rational(-1, 2), 0, Rational(1, 2), 0));
    CHECK(quad_inv(QuadScalar::sqrt6()) == QuadScalar(0, 0, 0, Rational(1, 6)));
    CHECK(quad_inv(QuadScalar(2)) == QuadScalar(Rational(1, 2)));
    CHECK_THROWS_AS(quad_inv(QuadScalar(0)), DomainError);
}

TEST_CASE("field axioms on random elements") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        QuadScalar u = random_quad(rng, 9), v = random_quad(rng, 9), w = random_quad(rng, 9);
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * v == v * u);
        CHECK(u * (v + w) == u * v + u * w);
        if (!u.is_zero()) CHECK(u * u.inv() == QuadScalar(1));
    }
}

TEST_CASE("embedding") {
    CHECK(embed(QuadScalar::sqrt6()) == doctest::Approx(2.449489742783178).epsilon(1e-16));
    double m = embed(QuadScalar(0, 0, Rational(-1, 3), 0));
    CHECK(m == -0.5773502691896257);  // correctly rounded
    CHECK(std::abs(m - -0.5773502691896258) <= 4 * std::numeric_limits<double>::epsilon() * 0.5);
    CHECK(embed(QuadScalar(0)) == 0.0);

    // near-cancellation is still resolved to full precision
    QuadScalar c = QuadScalar(Rational(1414213562373095, 1000000000000000)) - QuadScalar::sqrt2();
    CHECK(embed(c) == doctest::Approx(-4.88016887242097e-17).epsilon(1e-14));

    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        QuadScalar u = random_quad(rng, 20), v = random_quad(rng, 20);
        double prod = embed(u) * embed(v);
        double direct = embed(u * v);
        CHECK(std::abs(direct - prod) <= 1e-14 * std::max(1.0, std::abs(direct)));
    }

    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
    CHECK_THROWS_AS(embed(QuadScalar(Rational(big))), std::range_error);
}

TEST_CASE("exact square roots") {
    CHECK(*exact_sqrt(QuadScalar(25)) == QuadScalar(5));
    CHECK(*exact_sqrt(QuadScalar(2)) == QuadScalar::sqrt2());
    CHECK(*exact_sqrt(QuadScalar(Rational(4, 3))) == QuadScalar(0, 0, Rational(2, 3), 0));
    CHECK(*exact_sqrt(QuadScalar(Rational(1, 6))) == QuadScalar(0, 0, 0, Rational(1, 6)));
    CHECK_FALSE(exact_sqrt(QuadScalar(Rational(7, 3))).has_value());
    CHECK_FALSE(exact_sqrt(QuadScalar(-1)).has_value());
    CHECK_THROWS_AS(checked_sqrt(QuadScalar(5), "test"), ModeError);
}

TEST_CASE("sign and printing") {
    CHECK((QuadScalar(3) - QuadScalar(0, 2, 0, 0)).sign() == 1);   // 3 - 2 sqrt2 > 0
    CHECK((QuadScalar(2) - QuadScalar(0, 0, 0, 1)).sign() == -1);  // 2 - sqrt6 < 0
    CHECK(QuadScalar(Rational(1, 2), 0, -1, 0).to_string() == "1/2 - 1*sqrt3");
}

TEST_CASE("rng is deterministic") {
    Rng a(42), b(42);
    for (int i = 0; i < 10; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(0);
    CHECK(c.next_u64() == 0xE220A8397B1DCDAFULL);  // splitmix64 reference value for seed 0
}
