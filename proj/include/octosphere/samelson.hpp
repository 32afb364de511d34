#pragma once
// Left-invariant complex structures on g2 from the Samelson family.

#include "octosphere/g2.hpp"

namespace octosphere {

/// Samelson parameters stored as (alpha = 1/a, b); alpha = 0 is a = infinity.
template <class T> struct Moduli {
    T alpha;
    T b;

    static Moduli from_ab(const T& a, const T& b) {
        if (ScalarOps<T>::sign(a) == 0) throw DomainError("Moduli::from_ab: a must be nonzero");
        return {T(1) / a, b};
    }
};

using ModuliD = Moduli<double>;
using ModuliQ = Moduli<QuadScalar>;

template <class T> Moduli<double> to_double(const Moduli<T>& m) {
    return {ScalarOps<T>::to_double(m.alpha), ScalarOps<T>::to_double(m.b)};
}

/// A 14x14 operator on g2 in the real basis order; column k is the image of basis vector k.
template <class T> struct JOperator {
    Mat14<T> matrix;
    Moduli<T> moduli;

    Vec14<T> apply(const Vec14<T>& c) const { return matrix * c; }
    Mat7<T> apply(const Mat7<T>& w, const RealBasis<T>& rb) const {
        return from_real_coords<T>(matrix * real_coords(w, rb), rb);
    }
    Mat7<T> apply(const Mat7<T>& w) const { return apply(w, canonical_real_basis<T>()); }
};

namespace detail {
template <class T> void check_b(const Moduli<T>& m, const char* who) {
    if (ScalarOps<T>::sign(m.b) == 0) throw DomainError(std::string(who) + ": b must be nonzero");
}
} // namespace detail

/// The block form of J_ab. On the Cartan plane, with h+ = H-, h- = -H+:
///   J h+ = (b alpha/2) h+ + (sqrt3 b/2) h-
///   J h- = -(b alpha^2/(2 sqrt3) + 2/(sqrt3 b)) h+ - (b alpha/2) h-
/// and J X+k = X-k, J X-k = -X+k, likewise for Y.
template <class T> JOperator<T> j_operator(const Moduli<T>& m) {
    detail::check_b(m, "j_operator");
    using S = ScalarOps<T>;
    const T& al = m.alpha;
    const T& b = m.b;
    const T p = b * al / T(2);
    const T q = S::sqrt3() * b / T(2);
    const T c = b * al * al / (T(2) * S::sqrt3()) + T(2) / (S::sqrt3() * b);
    JOperator<T> J{Mat14<T>::Zero(), m};
    // column 0: J H+ = -p H+ + c H-;  column 1: J H- = -q H+ + p H-
    J.matrix(0, 0) = -p;
    J.matrix(1, 0) = c;
    J.matrix(0, 1) = -q;
    J.matrix(1, 1) = p;
    for (int k = 1; k <= 3; ++k) {
        for (auto slot : {x_slot, y_slot}) {
            J.matrix(slot(k, -1), slot(k, 1)) = T(1);
            J.matrix(slot(k, 1), slot(k, -1)) = T(-1);
        }
    }
    return J;
}

/// The Cartan block obtained by the literal substitution h+ = sqrt(a) H-, h- = -H+/sqrt(a).
/// Equal to diag(1/sqrt a, sqrt a) * K * diag(sqrt a, 1/sqrt a) for the block K of j_operator.
template <class T> Eigen::Matrix<T, 2, 2> cartan_block_literal(const T& a, const T& b) {
    auto K = j_operator(Moduli<T>::from_ab(a, b)).matrix;
    Eigen::Matrix<T, 2, 2> P;
    P << K(0, 0), K(0, 1) / a, a * K(1, 0), K(1, 1);
    return P;
}

/// J built from J(re W) = -im W on the Samelson subalgebra at (a, b), a > 0.
template <class T> JOperator<T> j_from_subalgebra(const Moduli<T>& m) {
    detail::check_b(m, "j_from_subalgebra");
    if (ScalarOps<T>::sign(m.alpha) <= 0)
        throw DomainError("j_from_subalgebra: the root basis is defined for 0 < a < infinity");
    const T a = T(1) / m.alpha;
    RootBasis<T> rb = root_basis<T>(a, m.b);
    const auto& re = canonical_real_basis<T>();
    auto s = samelson_basis(rb);
    // Real basis of g: re W_k, im W_k. J(re W) = -im W, J(im W) = re W.
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> src(14, 14), dst(14, 14);
    for (int k = 0; k < 7; ++k) {
        src.col(2 * k) = real_coords<T>(s[k].re, re);
        src.col(2 * k + 1) = real_coords<T>(s[k].im, re);
        dst.col(2 * k) = -real_coords<T>(s[k].im, re);
        dst.col(2 * k + 1) = real_coords<T>(s[k].re, re);
    }
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> inv;
    if constexpr (ScalarOps<T>::exact) {
        inv = exact_inverse<T>(src);
    } else {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(src);
        if (!lu.isInvertible()) throw DomainError("j_from_subalgebra: s and conj(s) are not complementary");
        inv = lu.inverse();
    }
    JOperator<T> J{Mat14<T>(dst * inv), m};
    return J;
}

/// J with the X_{+-k} block sign flipped (a non-integrable control).
template <class T> JOperator<T> corrupt_x_block(JOperator<T> J, int k) {
    J.matrix(x_slot(k, -1), x_slot(k, 1)) = -J.matrix(x_slot(k, -1), x_slot(k, 1));
    J.matrix(x_slot(k, 1), x_slot(k, -1)) = -J.matrix(x_slot(k, 1), x_slot(k, -1));
    return J;
}

/// max |J^2 + I| entry.
template <class T> double square_defect(const JOperator<T>& J) {
    Mat14<T> d = J.matrix * J.matrix + Mat14<T>::Identity();
    return max_abs(to_double(d));
}

/// J is orthogonal and skew in the orthonormal basis (so <JV,V> = 0 and |JV| = |V|).
template <class T> bool is_orthogonal_structure(const JOperator<T>& J, double tol = 1e-12) {
    Mat14<T> skew = J.matrix + J.matrix.transpose();
    Mat14<T> orth = J.matrix.transpose() * J.matrix - Mat14<T>::Identity();
    if constexpr (ScalarOps<T>::exact) {
        (void)tol;
        return skew == Mat14<T>::Zero() && orth == Mat14<T>::Zero();
    } else {
        return max_abs(skew) <= tol && max_abs(orth) <= tol;
    }
}

template <class T> bool is_orthogonal_structure(const Moduli<T>& m, double tol = 1e-12) {
    return is_orthogonal_structure(j_operator(m), tol);
}

/// N(V,W) = [JV,JW] - [V,W] - J[JV,W] - J[V,JW] for left-invariant fields.
template <class T> Mat7<T> nijenhuis_algebra(const JOperator<T>& J, const Mat7<T>& v, const Mat7<T>& w) {
    const auto& rb = canonical_real_basis<T>();
    Mat7<T> jv = J.apply(v, rb), jw = J.apply(w, rb);
    return bracket(jv, jw) - bracket(v, w) - J.apply(bracket(jv, w), rb) - J.apply(bracket(v, jw), rb);
}

/// Largest Nijenhuis entry over all unordered pairs of real basis vectors.
template <class T> double nijenhuis_algebra_max(const JOperator<T>& J) {
    const auto& rb = canonical_real_basis<T>();
    double worst = 0.0;
    for (int i = 0; i < 14; ++i)
        for (int j = i + 1; j < 14; ++j) worst = std::max(worst, max_abs(to_double(nijenhuis_algebra(J, rb[i], rb[j]))));
    return worst;
}

/// Diagnostic only: ||P Ad - Ad P|| for the projector P onto the real span of s_ab inside
/// (g2^C)^R and Ad = conjugation by exp(eps Z), Z a real g2 element.
double ad_invariance_defect(const ModuliD& m, const Mat7d& z, double eps);

} // namespace octosphere
