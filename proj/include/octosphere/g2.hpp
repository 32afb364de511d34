#pragma once
// The complexified Lie algebra g2 inside so(7, C): root basis, real orthonormal basis,
// Hermitian product, brackets and span membership.

#include "octosphere/linalg.hpp"
#include "octosphere/octonion.hpp"

#include <array>
#include <string>
#include <vector>

namespace octosphere {

/// Slots of the root basis, in storage order.
enum RootSlot : int {
    kHplus = 0, kHminus,          // H_{a,+b}, H_{a,-b}
    kVp1, kVm1, kVp2, kVm2, kVp3, kVm3,
    kUp1, kUm1, kUp2, kUm2, kUp3, kUm3,
};

inline int v_slot(int k, int sign) { return kVp1 + 2 * (k - 1) + (sign > 0 ? 0 : 1); }
inline int u_slot(int k, int sign) { return kUp1 + 2 * (k - 1) + (sign > 0 ? 0 : 1); }

template <class T> struct RootBasis {
    std::array<CMat7<T>, 14> e;
    T a, b;

    const CMat7<T>& H(int sign) const { return e[sign > 0 ? kHplus : kHminus]; }
    const CMat7<T>& V(int k, int sign) const { return e[v_slot(k, sign)]; }
    const CMat7<T>& U(int k, int sign) const { return e[u_slot(k, sign)]; }
};

/// Slots of the real basis: H+, H-, X+1, X-1, X+2, X-2, X+3, X-3, Y+1, Y-1, ..., Y-3.
inline int x_slot(int k, int sign) { return 2 + 2 * (k - 1) + (sign > 0 ? 0 : 1); }
inline int y_slot(int k, int sign) { return 8 + 2 * (k - 1) + (sign > 0 ? 0 : 1); }
const std::array<std::string, 14>& real_basis_names();

template <class T> using RealBasis = std::array<Mat7<T>, 14>;

namespace detail {

// One nonzero entry of a displayed matrix: value = re + s*im*i, s the root sign.
struct Pattern {
    int row, col, re, im;
};

template <class T> CMat7<T> from_pattern(std::initializer_list<Pattern> pat, int sign, const T& scale) {
    CMat7<T> m;
    for (const auto& p : pat) {
        m.re(p.row - 1, p.col - 1) = T(p.re) * scale;
        m.im(p.row - 1, p.col - 1) = T(sign * p.im) * scale;
    }
    return m;
}

} // namespace detail

/// The standard root basis at a > 0, b != 0.
template <class T> RootBasis<T> root_basis(const T& a, const T& b) {
    using S = ScalarOps<T>;
    if (S::sign(a) <= 0) throw DomainError("root_basis: requires a > 0");
    if (S::sign(b) == 0) throw DomainError("root_basis: requires b != 0");
    RootBasis<T> rb{{}, a, b};
    const T r = checked_sqrt(T(a * a + b * b), "root_basis");
    const T hs = T(1) / (T(2) * r);
    for (int s : {1, -1}) {
        CMat7<T> m;
        m.re(1, 2) = -a * hs;  m.re(2, 1) = a * hs;
        m.im(3, 4) = -T(s) * b * hs;  m.im(4, 3) = T(s) * b * hs;
        m.re(5, 6) = -a * hs;  m.im(5, 6) = -T(s) * b * hs;
        m.re(6, 5) = a * hs;   m.im(6, 5) = T(s) * b * hs;
        rb.e[s > 0 ? kHplus : kHminus] = m;
    }

    using detail::Pattern;
    const T vs = T(1) / (T(2) * S::sqrt2());
    const T us = T(1) / (T(2) * S::sqrt2() * S::sqrt3());
    for (int s : {1, -1}) {
        rb.e[v_slot(1, s)] = detail::from_pattern<T>(
            {{2, 4, -1, 0}, {2, 5, 0, -1}, {3, 4, 0, 1}, {3, 5, -1, 0},
             {4, 2, 1, 0}, {4, 3, 0, -1}, {5, 2, 0, 1}, {5, 3, 1, 0}}, s, vs);
        rb.e[v_slot(2, s)] = detail::from_pattern<T>(
            {{2, 6, -1, 0}, {2, 7, 0, 1}, {3, 6, 0, 1}, {3, 7, 1, 0},
             {6, 2, 1, 0}, {6, 3, 0, -1}, {7, 2, 0, -1}, {7, 3, -1, 0}}, s, vs);
        rb.e[v_slot(3, s)] = detail::from_pattern<T>(
            {{4, 6, -1, 0}, {4, 7, 0, 1}, {5, 6, 0, 1}, {5, 7, 1, 0},
             {6, 4, 1, 0}, {6, 5, 0, -1}, {7, 4, 0, -1}, {7, 5, -1, 0}}, s, vs);
        rb.e[u_slot(1, s)] = detail::from_pattern<T>(
            {{1, 2, 0, -2}, {1, 3, -2, 0}, {2, 1, 0, 2}, {3, 1, 2, 0},
             {4, 6, -1, 0}, {4, 7, 0, 1}, {5, 6, 0, -1}, {5, 7, -1, 0},
             {6, 4, 1, 0}, {6, 5, 0, 1}, {7, 4, 0, -1}, {7, 5, 1, 0}}, s, us);
        rb.e[u_slot(2, s)] = detail::from_pattern<T>(
            {{1, 4, 0, 2}, {1, 5, 2, 0}, {2, 6, -1, 0}, {2, 7, 0, 1},
             {3, 6, 0, -1}, {3, 7, -1, 0}, {4, 1, 0, -2}, {5, 1, -2, 0},
             {6, 2, 1, 0}, {6, 3, 0, 1}, {7, 2, 0, -1}, {7, 3, 1, 0}}, s, us);
        rb.e[u_slot(3, s)] = detail::from_pattern<T>(
            {{1, 6, 2, 0}, {1, 7, 0, -2}, {2, 4, 0, 1}, {2, 5, 1, 0},
             {3, 4, 1, 0}, {3, 5, 0, -1}, {4, 2, 0, -1}, {4, 3, -1, 0},
             {5, 2, -1, 0}, {5, 3, 0, 1}, {6, 1, -2, 0}, {7, 1, 0, 2}}, s, us);
    }
    return rb;
}

/// tr(V conj(W)^T).
template <class T> Cx<T> hermitian_ip(const CMat7<T>& v, const CMat7<T>& w) {
    T re(0), im(0);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            re += v.re(i, j) * w.re(i, j) + v.im(i, j) * w.im(i, j);
            im += v.im(i, j) * w.re(i, j) - v.re(i, j) * w.im(i, j);
        }
    return {re, im};
}

/// tr(V W^T) for real matrices.
template <class T> T real_ip(const Mat7<T>& v, const Mat7<T>& w) {
    T s(0);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (!ScalarOps<T>::is_zero(w(i, j), 0.0)) s += v(i, j) * w(i, j);
    return s;
}

template <class T> CMat7<T> bracket(const CMat7<T>& v, const CMat7<T>& w) { return v * w - w * v; }
template <class T> Mat7<T> bracket(const Mat7<T>& v, const Mat7<T>& w) { return v * w - w * v; }

/// The real orthonormal basis built from the root basis at (a, b).
/// X_{-k} = i(U_{+k} - U_{-k})/sqrt2 and Y_{-k} = i(V_{+k} - V_{-k})/sqrt2; H- divides by sqrt(-3) = i sqrt3.
template <class T> RealBasis<T> real_basis(const RootBasis<T>& rb) {
    using S = ScalarOps<T>;
    RealBasis<T> out;
    const T r = checked_sqrt(T(rb.a * rb.a + rb.b * rb.b), "real_basis");
    const T inv_s2 = T(1) / S::sqrt2();
    const T inv_s3 = T(1) / S::sqrt3();
    out[0] = (rb.H(1) + rb.H(-1)).re * (r / (T(2) * rb.a));
    out[1] = (rb.H(1) - rb.H(-1)).im * (r * inv_s3 / rb.b) - out[0] * inv_s3;
    for (int k = 1; k <= 3; ++k) {
        out[x_slot(k, 1)] = (rb.U(k, 1) + rb.U(k, -1)).re * inv_s2;
        out[x_slot(k, -1)] = -(rb.U(k, 1) - rb.U(k, -1)).im * inv_s2;
        out[y_slot(k, 1)] = (rb.V(k, 1) + rb.V(k, -1)).re * inv_s2;
        out[y_slot(k, -1)] = -(rb.V(k, 1) - rb.V(k, -1)).im * inv_s2;
    }
    return out;
}

/// Moduli-independent real basis (built at (a, b) = (3, 4), where every normalization is rational).
template <class T> const RealBasis<T>& canonical_real_basis() {
    static const RealBasis<T> rb = real_basis(root_basis<T>(T(3), T(4)));
    return rb;
}

/// Coordinates of a real matrix against the orthonormal real basis.
template <class T> Vec14<T> real_coords(const Mat7<T>& w, const RealBasis<T>& rb) {
    Vec14<T> c;
    for (int k = 0; k < 14; ++k) c(k) = real_ip(w, rb[k]);
    return c;
}

template <class T> Mat7<T> from_real_coords(const Vec14<T>& c, const RealBasis<T>& rb) {
    Mat7<T> m = Mat7<T>::Zero();
    for (int k = 0; k < 14; ++k)
        if (!ScalarOps<T>::is_zero(c(k), 0.0)) m += rb[k] * c(k);
    return m;
}

// Named subsets of the root basis.
template <class T> std::vector<CMat7<T>> cartan_basis(const RootBasis<T>& rb) { return {rb.H(1), rb.H(-1)}; }
template <class T> std::vector<CMat7<T>> su3_basis(const RootBasis<T>& rb) {
    std::vector<CMat7<T>> v{rb.H(1), rb.H(-1)};
    for (int k = 1; k <= 3; ++k) { v.push_back(rb.V(k, 1)); v.push_back(rb.V(k, -1)); }
    return v;
}
template <class T> std::vector<CMat7<T>> m_basis(const RootBasis<T>& rb) {
    std::vector<CMat7<T>> v;
    for (int k = 1; k <= 3; ++k) { v.push_back(rb.U(k, 1)); v.push_back(rb.U(k, -1)); }
    return v;
}
/// Positive Samelson subalgebra: H_{a,+b}, V_{+1..3}, U_{+1..3}.
template <class T> std::vector<CMat7<T>> samelson_basis(const RootBasis<T>& rb) {
    return {rb.H(1), rb.V(1, 1), rb.V(2, 1), rb.V(3, 1), rb.U(1, 1), rb.U(2, 1), rb.U(3, 1)};
}
template <class T> std::vector<CMat7<T>> conj_samelson_basis(const RootBasis<T>& rb) {
    std::vector<CMat7<T>> v;
    for (const auto& m : samelson_basis(rb)) v.push_back(m.conj());
    return v;
}

template <class T> struct SpanResult {
    bool member = false;
    std::vector<Cx<T>> coeffs;
    double residual = 0.0;
};

namespace detail {
SpanResult<double> span_membership_numeric(const CMat7<double>& w, const std::vector<CMat7<double>>& basis,
                                           double tol);
SpanResult<QuadScalar> span_membership_exact(const CMat7<QuadScalar>& w,
                                             const std::vector<CMat7<QuadScalar>>& basis);
} // namespace detail

/// Express W in the span of the basis. Exact mode decides membership exactly;
/// numeric mode uses column-pivoted QR with an absolute residual threshold.
/// Throws DomainError on a rank-deficient basis.
template <class T>
SpanResult<T> span_membership(const CMat7<T>& w, const std::vector<CMat7<T>>& basis, double tol = 1e-9) {
    if constexpr (ScalarOps<T>::exact) {
        (void)tol;
        return detail::span_membership_exact(w, basis);
    } else {
        return detail::span_membership_numeric(w, basis, tol);
    }
}

/// Largest span residual of [B_i, B_j] against the span, over all pairs.
template <class T> double bracket_closure_residual(const std::vector<CMat7<T>>& basis) {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            worst = std::max(worst, span_membership(bracket(basis[i], basis[j]), basis).residual);
    return worst;
}

template <class T> bool is_bracket_closed(const std::vector<CMat7<T>>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!span_membership(bracket(basis[i], basis[j]), basis).member) return false;
    return true;
}

/// Exact linear independence over C (nonsingular Gram matrix).
bool exact_independent(const std::vector<CMat7<QuadScalar>>& mats);

/// Max residual of D(uv) - (Du)v - u(Dv) over basis pairs, D = diag(0, M).
double derivation_residual(const Mat7d& m);
bool is_g2_element(const Mat7d& m, double tol = 1e-10);

/// Exact derivation test.
bool is_g2_element_exact(const Mat7<QuadScalar>& m);

/// Complex rank of a list of complex matrices (numeric, SVD based).
int complex_rank(const std::vector<CMat7<double>>& mats, double tol = 1e-9);

class Rng;
/// Real g2 element with standard normal coordinates in the orthonormal real basis, times scale.
Mat7d random_g2_algebra(Rng& rng, double scale = 1.0);
/// exp of random_g2_algebra(rng, scale), an element of G2.
Mat7d random_g2_group(Rng& rng, double scale = 1.0);

} // namespace octosphere
