#pragma once
// Uniform scalar interface shared by the exact (QuadScalar) and numeric (double) paths.

#include "octosphere/errors.hpp"
#include "octosphere/quad.hpp"

#include <Eigen/Core>

#include <cmath>
#include <optional>

namespace octosphere {

template <class T> struct ScalarOps;

template <> struct ScalarOps<double> {
    static constexpr bool exact = false;
    static double sqrt2() { return std::sqrt(2.0); }
    static double sqrt3() { return std::sqrt(3.0); }
    static double frac(long n, long d) { return double(n) / double(d); }
    static double to_double(double v) { return v; }
    static bool is_zero(double v, double tol) { return std::abs(v) <= tol; }
    static int sign(double v) { return (v > 0) - (v < 0); }
    static double from_quad(const QuadScalar& q) { return q.embed(); }
    static std::optional<double> sqrt(double v) {
        if (v < 0) return std::nullopt;
        return std::sqrt(v);
    }
};

template <> struct ScalarOps<QuadScalar> {
    static constexpr bool exact = true;
    static QuadScalar sqrt2() { return QuadScalar::sqrt2(); }
    static QuadScalar sqrt3() { return QuadScalar::sqrt3(); }
    static QuadScalar frac(long n, long d) { return QuadScalar::frac(n, d); }
    static double to_double(const QuadScalar& v) { return v.embed(); }
    static bool is_zero(const QuadScalar& v, double) { return v.is_zero(); }
    static int sign(const QuadScalar& v) { return v.sign(); }
    static QuadScalar from_quad(const QuadScalar& q) { return q; }
    static std::optional<QuadScalar> sqrt(const QuadScalar& v) { return exact_sqrt(v); }
};

/// Square root that throws ModeError when the exact path cannot represent the result.
template <class T> T checked_sqrt(const T& v, const char* what) {
    auto r = ScalarOps<T>::sqrt(v);
    if (!r) {
        if constexpr (ScalarOps<T>::exact)
            throw ModeError(std::string(what) + ": square root not representable in Q(sqrt2,sqrt3)");
        else
            throw DomainError(std::string(what) + ": square root of a negative number");
    }
    return *r;
}

} // namespace octosphere

namespace Eigen {
template <> struct NumTraits<octosphere::QuadScalar> : GenericNumTraits<octosphere::QuadScalar> {
    typedef octosphere::QuadScalar Real;
    typedef octosphere::QuadScalar NonInteger;
    typedef octosphere::QuadScalar Nested;
    typedef octosphere::QuadScalar Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 16,
        MulCost = 64
    };
    static inline int digits10() { return 0; }
    static inline int max_digits10() { return 0; }
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
};
} // namespace Eigen
