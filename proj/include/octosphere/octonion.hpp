#pragma once

#include "octosphere/linalg.hpp"

#include <array>

namespace octosphere {

/// One entry of the multiplication table: e_row * e_col = sign * e_index.
struct TableEntry {
    int sign;
    int index;
};

/// e_i * e_j for basis indices 0..7.
const std::array<std::array<TableEntry, 8>, 8>& octonion_table();

template <class T> struct Octonion {
    std::array<T, 8> c{};

    static Octonion unit(int k) {
        Octonion o;
        o.c[k] = T(1);
        return o;
    }
    /// Purely imaginary octonion with the given e1..e7 coordinates.
    static Octonion imaginary(const Vec7<T>& v) {
        Octonion o;
        for (int k = 0; k < 7; ++k) o.c[k + 1] = v(k);
        return o;
    }
    Vec7<T> imag_vector() const {
        Vec7<T> v;
        for (int k = 0; k < 7; ++k) v(k) = c[k + 1];
        return v;
    }

    const T& operator[](int k) const { return c[k]; }
    T& operator[](int k) { return c[k]; }

    Octonion operator+(const Octonion& o) const {
        Octonion r;
        for (int k = 0; k < 8; ++k) r.c[k] = c[k] + o.c[k];
        return r;
    }
    Octonion operator-(const Octonion& o) const {
        Octonion r;
        for (int k = 0; k < 8; ++k) r.c[k] = c[k] - o.c[k];
        return r;
    }
    Octonion operator*(const T& s) const {
        Octonion r;
        for (int k = 0; k < 8; ++k) r.c[k] = c[k] * s;
        return r;
    }
    bool operator==(const Octonion& o) const { return c == o.c; }
};

template <class T> Octonion<T> oct_mul(const Octonion<T>& u, const Octonion<T>& v) {
    const auto& tab = octonion_table();
    Octonion<T> w;
    for (int i = 0; i < 8; ++i) {
        if (ScalarOps<T>::is_zero(u.c[i], 0.0)) continue;
        for (int j = 0; j < 8; ++j) {
            if (ScalarOps<T>::is_zero(v.c[j], 0.0)) continue;
            const TableEntry& e = tab[i][j];
            T p = u.c[i] * v.c[j];
            if (e.sign > 0) w.c[e.index] += p;
            else w.c[e.index] -= p;
        }
    }
    return w;
}

template <class T> Octonion<T> operator*(const Octonion<T>& u, const Octonion<T>& v) { return oct_mul(u, v); }

template <class T> Octonion<T> oct_conj(const Octonion<T>& u) {
    Octonion<T> r = u;
    for (int k = 1; k < 8; ++k) r.c[k] = -u.c[k];
    return r;
}

template <class T> T oct_norm2(const Octonion<T>& u) {
    T s(0);
    for (const auto& v : u.c) s += v * v;
    return s;
}

/// Euclidean norm. In exact mode throws ModeError when the norm leaves the field.
template <class T> T oct_norm(const Octonion<T>& u) { return checked_sqrt(oct_norm2(u), "oct_norm"); }

template <class T> Octonion<T> oct_re(const Octonion<T>& u) {
    Octonion<T> r;
    r.c[0] = u.c[0];
    return r;
}

template <class T> Octonion<T> oct_im(const Octonion<T>& u) {
    Octonion<T> r = u;
    r.c[0] = T(0);
    return r;
}

template <class T> Octonion<T> oct_inv(const Octonion<T>& u) {
    T n = oct_norm2(u);
    if (ScalarOps<T>::is_zero(n, 0.0)) throw DomainError("oct_inv: zero octonion");
    return oct_conj(u) * (T(1) / n);
}

/// True iff conjugation by v is an automorphism of im O: 3 (re v)^2 = |im v|^2.
template <class T> bool is_inner_automorphism_seed(const Octonion<T>& v, double tol = 1e-12) {
    T im2 = oct_norm2(oct_im(v));
    if (ScalarOps<T>::is_zero(im2, ScalarOps<T>::exact ? 0.0 : tol * tol))
        throw DomainError("is_inner_automorphism_seed: real octonion");
    T lhs = T(3) * v.c[0] * v.c[0];
    T diff = lhs - im2;
    double scale = ScalarOps<T>::exact ? 0.0 : tol * std::max(1.0, ScalarOps<T>::to_double(lhs + im2));
    return ScalarOps<T>::is_zero(diff, scale);
}

/// (1/4)(e0 + sqrt3 x) u (e0 - sqrt3 x) for a unit imaginary x.
template <class T> Octonion<T> conj_by_point(const Octonion<T>& x, const Octonion<T>& u, double tol = 1e-12) {
    if (!ScalarOps<T>::is_zero(x.c[0], ScalarOps<T>::exact ? 0.0 : tol))
        throw DomainError("conj_by_point: x must be imaginary");
    T n2 = oct_norm2(x);
    if (!ScalarOps<T>::is_zero(n2 - T(1), ScalarOps<T>::exact ? 0.0 : tol))
        throw DomainError("conj_by_point: x must have unit norm");
    const T s3 = ScalarOps<T>::sqrt3();
    Octonion<T> v = Octonion<T>::unit(0) + x * s3;
    Octonion<T> w = Octonion<T>::unit(0) - x * s3;
    return oct_mul(oct_mul(v, u), w) * ScalarOps<T>::frac(1, 4);
}

/// Max residual of phi(e_i e_j) - phi(e_i) phi(e_j) over the basis, phi = diag(1, M).
double automorphism_residual(const Mat7d& m);
bool is_octonion_automorphism(const Mat7d& m, double tol = 1e-10);

} // namespace octosphere
