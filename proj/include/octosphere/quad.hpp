#pragma once
// Exact arithmetic in the biquadratic field Q(sqrt2, sqrt3).

#include <gmpxx.h>

#include <array>
#include <optional>
#include <ostream>
#include <string>

namespace octosphere {

using Rational = mpq_class;

/// c0 + c1*sqrt2 + c2*sqrt3 + c3*sqrt6 with rational coefficients.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(int v) : c_{Rational(v), 0, 0, 0} {}
    QuadScalar(long v) : c_{Rational(v), 0, 0, 0} {}
    QuadScalar(const Rational& v) : c_{v, 0, 0, 0} {}
    QuadScalar(Rational c0, Rational c1, Rational c2, Rational c3);

    static QuadScalar sqrt2() { return {0, 1, 0, 0}; }
    static QuadScalar sqrt3() { return {0, 0, 1, 0}; }
    static QuadScalar sqrt6() { return {0, 0, 0, 1}; }
    static QuadScalar frac(long num, long den);

    const Rational& operator[](int k) const { return c_[k]; }
    const std::array<Rational, 4>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;

    QuadScalar operator-() const;
    QuadScalar& operator+=(const QuadScalar& o);
    QuadScalar& operator-=(const QuadScalar& o);
    QuadScalar& operator*=(const QuadScalar& o);
    QuadScalar& operator/=(const QuadScalar& o);

    friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
    friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
    friend QuadScalar operator*(const QuadScalar& a, const QuadScalar& b);
    friend QuadScalar operator/(QuadScalar a, const QuadScalar& b) { return a /= b; }
    friend bool operator==(const QuadScalar& a, const QuadScalar& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QuadScalar& a, const QuadScalar& b) { return !(a == b); }

    /// Galois conjugates: flip the sign of sqrt2 (and sqrt6), or of sqrt3 (and sqrt6).
    QuadScalar conj2() const;
    QuadScalar conj3() const;

    /// Multiplicative inverse; throws DomainError on zero.
    QuadScalar inv() const;

    /// Real value, accurate to a few ulp. Throws std::range_error if out of double range.
    double embed() const;
    /// Sign of the real value (-1, 0, 1), decided with 256-bit floating arithmetic.
    int sign() const;

    std::string to_string() const;

private:
    std::array<Rational, 4> c_{};
};

QuadScalar quad_mul(const QuadScalar& u, const QuadScalar& v);
QuadScalar quad_inv(const QuadScalar& u);
double embed(const QuadScalar& u);

/// Square root inside the field, when one exists and can be found.
/// Handles non-negative rational radicands (answer k*sqrt(d)/m, d in {1,2,3,6}).
std::optional<QuadScalar> exact_sqrt(const QuadScalar& u);

std::ostream& operator<<(std::ostream& os, const QuadScalar& u);

} // namespace octosphere
