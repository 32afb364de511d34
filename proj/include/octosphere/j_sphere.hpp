#pragma once
// The tensor induced on S^6 by a left-invariant J on g2, through f and its derivative.

#include "octosphere/charts.hpp"
#include "octosphere/samelson.hpp"

#include <functional>
#include <type_traits>
#include <vector>

namespace octosphere {

template <class T> using Mat6 = Eigen::Matrix<T, 6, 6>;

/// Nonzero entries (k, i, j, value) of the canonical real basis, lifted to T.
template <class T> struct BasisEntry {
    int k, i, j;
    T v;
};

template <class T> const std::vector<BasisEntry<T>>& sparse_real_basis() {
    static const std::vector<BasisEntry<T>> entries = [] {
        std::vector<BasisEntry<T>> out;
        const auto& rb = canonical_real_basis<QuadScalar>();
        for (int k = 0; k < 14; ++k)
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j)
                    if (!rb[k](i, j).is_zero()) out.push_back({k, i, j, ScalarOps<T>::from_quad(rb[k](i, j))});
        return out;
    }();
    return entries;
}

template <class T, class S> T lift_to(const S& s) {
    if constexpr (std::is_same_v<S, T>) return s;
    else return ScalarOps<T>::from_quad(s);
}

struct NoSimplify {
    template <class T> void operator()(T&) const {}
};

/// J xi at x for the 14x14 operator jm (entries in S, lifted to T):
///   W = f(x)^T f_*(xi), c = coords(W), Z = J c, then (1/3)(2 f Zx + f f Zx).
/// simplify is applied to intermediates (the symbolic path reduces there).
/// If residual is given it receives max |W - sum c_k E_k| (W must lie in g2).
template <class T, class S, class Simplify = NoSimplify>
Vec7<T> j_vector_raw(const Mat14<S>& jm, const Vec7<T>& x, const Mat7<T>& fx, const Vec7<T>& xi,
                     Simplify simplify = {}, double* residual = nullptr) {
    const auto& basis = sparse_real_basis<T>();
    Mat7<T> a = f_pushforward_raw(x, xi);
    Mat7<T> w = fx.transpose() * a;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) simplify(w(i, j));
    Vec14<T> c = Vec14<T>::Zero();
    for (const auto& e : basis) c(e.k) += w(e.i, e.j) * e.v;
    if constexpr (std::is_same_v<T, double>) {
        if (residual) {
            Mat7<T> back = Mat7<T>::Zero();
            for (const auto& e : basis) back(e.i, e.j) += c(e.k) * e.v;
            *residual = max_abs(Mat7d(w - back));
        }
    }
    Vec14<T> jc = Vec14<T>::Zero();
    for (int k = 0; k < 14; ++k)
        for (int l = 0; l < 14; ++l)
            if (!ScalarOps<S>::is_zero(jm(k, l), 0.0)) jc(k) += c(l) * lift_to<T>(jm(k, l));
    for (int k = 0; k < 14; ++k) simplify(jc(k));
    Vec7<T> zx = Vec7<T>::Zero();
    for (const auto& e : basis) zx(e.i) += jc(e.k) * e.v * x(e.j);
    for (int i = 0; i < 7; ++i) simplify(zx(i));
    Vec7<T> v = fx * zx;
    for (int i = 0; i < 7; ++i) simplify(v(i));
    Vec7<T> out = (v * T(2) + fx * v) * ScalarOps<T>::frac(1, 3);
    for (int i = 0; i < 7; ++i) simplify(out(i));
    return out;
}

/// J xi at x with validation. Numeric: W's expansion residual above 1e-9 raises ConsistencyError.
template <class T> Vec7<T> j_vector(const JOperator<T>& J, const Vec7<T>& x, const Vec7<T>& xi) {
    detail::require_unit(x, 1e-12, "j_vector");
    detail::require_tangent(x, xi, 1e-10, "j_vector");
    Mat7<T> fx = f_matrix_raw(x);
    if constexpr (ScalarOps<T>::exact) {
        return j_vector_raw(J.matrix, x, fx, xi);
    } else {
        double res = 0.0;
        Vec7<T> out = j_vector_raw(J.matrix, x, fx, xi, NoSimplify{}, &res);
        if (res > 1e-9) throw ConsistencyError("j_vector: f(x)^-1 f_*(xi) is not in g2");
        return out;
    }
}

template <class T> T j_element(const Moduli<T>& m, const Vec7<T>& x, const Vec7<T>& xi, const Vec7<T>& eta) {
    detail::require_tangent(x, eta, 1e-10, "j_element");
    return j_vector(j_operator(m), x, xi).dot(eta);
}

/// 6x6 matrix of <J t_p, t_q> over the tangent columns t of the chart frame at y.
template <class T> struct SphereJ {
    int chart;
    Vec7<T> y;
    Mat6<T> J;
    Moduli<T> moduli;
    ChartFrame<T> frame;
};

using SphereJD = SphereJ<double>;

template <class T> SphereJ<T> j_matrix(const Moduli<T>& m, int chart, const Vec7<T>& y) {
    ChartFrame<T> fr = frame_at(chart, y);
    auto tf = fr.tangent_frame();
    JOperator<T> J = j_operator(m);
    Mat6<T> out;
    for (int p = 0; p < 6; ++p) {
        Vec7<T> jt = j_vector(J, y, Vec7<T>(tf.col(p)));
        for (int q = 0; q < 6; ++q) out(p, q) = jt.dot(tf.col(q));
    }
    return {chart, y, out, m, fr};
}

/// max |M^2 + I| and max |M^T M - I|.
double sphere_square_defect(const Mat6d& m);
double sphere_orthogonality_defect(const Mat6d& m);

/// J as a 7x7 map on R^7 at y: J applied to the tangent projection.
Mat7d j_tensor(const ModuliD& m, const Vec7d& y);

/// Matrix of Theta_{y2,y1}: T(q, p) = <Theta t1_p, t2_q> in the chart frames at y1 and y2,
/// with the gauge g_y = B_y.
Mat6d theta(int chart, const Vec7d& y1, const Vec7d& y2);

/// max |M_y - (T^-1)^T M_e1 T^T|, T = theta(1, e1, y): the conjugation J_y = Theta J_e1 Theta^-1.
double factorization_residual(const ModuliD& m, const Vec7d& y);

/// max |M_c1 - G^T M_c2 G| with G = F_c2^T F_c1 the change of tangent frame; y in both charts.
double gauge_covariance_residual(const ModuliD& m, const Vec7d& y, int c1, int c2);

/// A tensor field on S^6 given as a 7x7 map at each point.
using TensorField = std::function<Mat7d(const Vec7d&)>;

TensorField sphere_tensor(const ModuliD& m);
/// Control: the sphere tensor with its component along the first two frame vectors of `chart` negated.
TensorField flipped_block_tensor(const ModuliD& m, int chart);

struct NijenhuisResult {
    Vec6d value;          // Richardson combination of the h and h/2 evaluations, in frame coordinates
    Vec6d coarse;         // at h
    Vec6d fine;           // at h/2
    bool boundary_warning;
};

/// N(X_p, X_q) for frame fields p, q (0-based tangent columns of the chart frame), by central
/// differences along great-circle-normalized curves.
NijenhuisResult nijenhuis_sphere(int chart, const Vec7d& y, const TensorField& field, int p, int q, double h = 1e-4);
NijenhuisResult nijenhuis_sphere(int chart, const Vec7d& y, const ModuliD& m, int p, int q, double h = 1e-4);

} // namespace octosphere
