#pragma once
// f: S^6 -> G2, x |-> rotation by 2pi/3 about x, with its derivative and inverse derivative.

#include "octosphere/octonion.hpp"

#include <cmath>

namespace octosphere {

/// Left multiplication by an imaginary vector restricted to im O: L(v) u = im(v u).
/// Column i holds im(v e_i).
template <class T> Mat7<T> left_mult_matrix(const Vec7<T>& v) {
    const auto& tab = octonion_table();
    Mat7<T> m = Mat7<T>::Zero();
    for (int k = 1; k <= 7; ++k)
        for (int i = 1; i <= 7; ++i) {
            const TableEntry& e = tab[k][i];
            if (e.index == 0) continue;
            if (e.sign > 0) m(e.index - 1, i - 1) += v(k - 1);
            else m(e.index - 1, i - 1) -= v(k - 1);
        }
    return m;
}

/// f(x) = -I/2 + (3/2) x x^T + (sqrt3/2) L(x), no validation of |x| = 1.
template <class T> Mat7<T> f_matrix_raw(const Vec7<T>& x) {
    const T half = ScalarOps<T>::frac(1, 2);
    const T three_half = ScalarOps<T>::frac(3, 2);
    Mat7<T> m = left_mult_matrix(x) * (ScalarOps<T>::sqrt3() * half);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            m(i, j) += three_half * x(i) * x(j);
            if (i == j) m(i, j) -= half;
        }
    return m;
}

/// Derivative of f at x along xi: (3/2)(xi x^T + x xi^T) + (sqrt3/2) L(xi).
template <class T> Mat7<T> f_pushforward_raw(const Vec7<T>& x, const Vec7<T>& xi) {
    const T three_half = ScalarOps<T>::frac(3, 2);
    Mat7<T> m = left_mult_matrix(xi) * (ScalarOps<T>::sqrt3() * ScalarOps<T>::frac(1, 2));
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) m(i, j) += three_half * (xi(i) * x(j) + x(i) * xi(j));
    return m;
}

/// (1/3)(2I + f(x)) A x, no tangency check.
template <class T> Vec7<T> f_pullback_raw(const Vec7<T>& x, const Mat7<T>& fx, const Mat7<T>& a) {
    Vec7<T> ax = a * x;
    Vec7<T> r = ax * T(2) + fx * ax;
    return r * ScalarOps<T>::frac(1, 3);
}

namespace detail {
template <class T> void require_unit(const Vec7<T>& x, double tol, const char* who) {
    T n = x.squaredNorm() - T(1);
    if (!ScalarOps<T>::is_zero(n, ScalarOps<T>::exact ? 0.0 : tol))
        throw DomainError(std::string(who) + ": point is not on the unit sphere");
}
template <class T> void require_tangent(const Vec7<T>& x, const Vec7<T>& v, double tol, const char* who) {
    if (!ScalarOps<T>::is_zero(T(x.dot(v)), ScalarOps<T>::exact ? 0.0 : tol))
        throw DomainError(std::string(who) + ": vector is not tangent at x");
}
} // namespace detail

template <class T> Mat7<T> f_matrix(const Vec7<T>& x, double tol = 1e-12) {
    detail::require_unit(x, tol, "f_matrix");
    return f_matrix_raw(x);
}

template <class T> Mat7<T> f_pushforward(const Vec7<T>& x, const Vec7<T>& xi, double tol = 1e-12) {
    detail::require_unit(x, tol, "f_pushforward");
    detail::require_tangent(x, xi, tol * std::max(1.0, std::sqrt(ScalarOps<T>::to_double(T(xi.squaredNorm())))), "f_pushforward");
    return f_pushforward_raw(x, xi);
}

/// Inverse of the derivative on the orbit tangent space, (1/3)(2I + f(x)) A x.
/// Throws NonTangentError when <Ax, x> exceeds tol * |A|.
template <class T> Vec7<T> f_pullback(const Vec7<T>& x, const Mat7<T>& a, double tol = 1e-9) {
    detail::require_unit(x, 1e-12, "f_pullback");
    Vec7<T> ax = a * x;
    T radial = x.dot(ax);
    if (!ScalarOps<T>::is_zero(radial, ScalarOps<T>::exact ? 0.0 : tol * std::max(1.0, to_double(a).norm())))
        throw NonTangentError("f_pullback: <Ax, x> != 0, A is not tangent to the orbit");
    return f_pullback_raw(x, f_matrix_raw(x), a);
}

/// Largest |f(x)xi + (f_* xi) x - xi| entry.
double pushforward_identity_residual(const Vec7d& x, const Vec7d& xi);

/// The centre generator f(e1).
template <class T> Mat7<T> lambda_matrix() {
    Vec7<T> e1 = Vec7<T>::Zero();
    e1(0) = T(1);
    return f_matrix_raw(e1);
}

/// Logarithm of Lambda inside the Cartan subalgebra: principal angles in the (23) and (45)
/// planes, third angle fixed by the g2 relation theta_67 = theta_23 + theta_45.
Mat7d lambda_log();

} // namespace octosphere
