#pragma once
// Charts U_i = {y_i > -1/2} of S^6, the inverse of the column map pi_i(f(x)) = y, and gauge frames.

#include "octosphere/sphere_map.hpp"

namespace octosphere {

/// B = f(x) with column `chart` (1-based) equal to y; the other six columns frame T_y S^6.
template <class T> struct ChartFrame {
    int chart;
    Vec7<T> y;
    Vec7<T> x;
    Mat7<T> B;

    /// The six tangent columns in their original order.
    Eigen::Matrix<T, 7, 6> tangent_frame() const {
        Eigen::Matrix<T, 7, 6> out;
        for (int c = 0, k = 0; c < 7; ++c)
            if (c != chart - 1) out.col(k++) = B.col(c);
        return out;
    }
};

using ChartFrameD = ChartFrame<double>;

namespace detail {
inline void check_chart_index(int i) {
    if (i < 1 || i > 7) throw DomainError("chart index must be in 1..7");
}
} // namespace detail

template <class T> bool chart_contains(int i, const Vec7<T>& y) {
    detail::check_chart_index(i);
    return ScalarOps<T>::sign(T(y(i - 1) * T(2) + T(1))) > 0;
}

/// Chart whose coordinate y_i is largest (the most interior one).
int best_chart(const Vec7d& y);

/// Solve column i of f(x) = y. branch = +1 takes x_i >= 0 (the gauge used throughout),
/// branch = -1 the other preimage.
template <class T> Vec7<T> solve_x_of_y(int i, const Vec7<T>& y, int branch = 1) {
    detail::check_chart_index(i);
    detail::require_unit(y, 1e-12, "solve_x_of_y");
    if (!chart_contains(i, y)) throw DomainError("solve_x_of_y: y is outside the chart (y_i <= -1/2)");
    using S = ScalarOps<T>;
    const int c = i - 1;
    T xi = checked_sqrt(T((y(c) * T(2) + T(1)) / T(3)), "solve_x_of_y");
    if (branch < 0) xi = -xi;
    Vec7<T> x = Vec7<T>::Zero();
    x(c) = xi;

    // Row j of column i: (3/2) x_i x_j + (sqrt3/2) s x_k where e_k e_i = s e_j.
    const auto& tab = octonion_table();
    auto partner = [&](int j, int& k, int& s) {
        for (int kk = 1; kk <= 7; ++kk)
            if (tab[kk][i].index == j) {
                k = kk;
                s = tab[kk][i].sign;
                return;
            }
        throw ConsistencyError("solve_x_of_y: multiplication table has no partner");
    };
    const T diag = S::frac(3, 2) * xi;
    const T off = S::sqrt3() * S::frac(1, 2);
    std::array<bool, 8> done{};
    done[i] = true;
    for (int j = 1; j <= 7; ++j) {
        if (done[j]) continue;
        int k, sj, sk, jj;
        partner(j, k, sj);
        partner(k, jj, sk);
        // [diag, off*sj; off*sk, diag] [x_j; x_k] = [y_j; y_k]
        const T a12 = off * T(sj), a21 = off * T(sk);
        const T det = diag * diag - a12 * a21;
        x(j - 1) = (diag * y(j - 1) - a12 * y(k - 1)) / det;
        x(k - 1) = (diag * y(k - 1) - a21 * y(j - 1)) / det;
        done[j] = done[k] = true;
    }
    return x;
}

template <class T> ChartFrame<T> frame_at(int i, const Vec7<T>& y, int branch = 1) {
    Vec7<T> x = solve_x_of_y(i, y, branch);
    return {i, y, x, f_matrix_raw(x)};
}

/// Largest violation of the frame invariants: orthogonality, B^3 = id, automorphism, column i = y, det - 1.
double frame_defect(const ChartFrameD& fr);

} // namespace octosphere
