#pragma once
// Fixed-size matrix aliases and small helpers used across the exact and numeric paths.

#include "octosphere/scalar.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace octosphere {

template <class T> using Mat7 = Eigen::Matrix<T, 7, 7>;
template <class T> using Vec7 = Eigen::Matrix<T, 7, 1>;
template <class T> using Mat14 = Eigen::Matrix<T, 14, 14>;
template <class T> using Vec14 = Eigen::Matrix<T, 14, 1>;

using Mat7d = Mat7<double>;
using Vec7d = Vec7<double>;
using Mat6d = Eigen::Matrix<double, 6, 6>;
using Vec6d = Eigen::Matrix<double, 6, 1>;
using Mat7cd = Eigen::Matrix<std::complex<double>, 7, 7>;
using Mat14cd = Eigen::Matrix<std::complex<double>, 14, 14>;

/// Complex number over an arbitrary real scalar (std::complex is only defined for float types).
template <class T> struct Cx {
    T re{0}, im{0};
};

template <class T> Cx<T> operator+(const Cx<T>& a, const Cx<T>& b) { return {a.re + b.re, a.im + b.im}; }
template <class T> Cx<T> operator-(const Cx<T>& a, const Cx<T>& b) { return {a.re - b.re, a.im - b.im}; }
template <class T> Cx<T> operator*(const Cx<T>& a, const Cx<T>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class T> bool operator==(const Cx<T>& a, const Cx<T>& b) { return a.re == b.re && a.im == b.im; }

/// Complex 7x7 matrix stored as real and imaginary parts.
template <class T> struct CMat7 {
    Mat7<T> re = Mat7<T>::Zero();
    Mat7<T> im = Mat7<T>::Zero();

    static CMat7 real(const Mat7<T>& r) { return {r, Mat7<T>::Zero()}; }
    CMat7 conj() const { return {re, -im}; }
    CMat7 transpose() const { return {re.transpose(), im.transpose()}; }
    CMat7 operator-() const { return {-re, -im}; }
    CMat7 operator+(const CMat7& o) const { return {re + o.re, im + o.im}; }
    CMat7 operator-(const CMat7& o) const { return {re - o.re, im - o.im}; }
    CMat7 operator*(const CMat7& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CMat7 scaled(const Cx<T>& c) const { return {re * c.re - im * c.im, re * c.im + im * c.re}; }
    CMat7 scaled(const T& c) const { return {re * c, im * c}; }
    bool operator==(const CMat7& o) const { return re == o.re && im == o.im; }
};

template <class T> Mat7cd to_complex_double(const CMat7<T>& m) {
    Mat7cd r;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            r(i, j) = {ScalarOps<T>::to_double(m.re(i, j)), ScalarOps<T>::to_double(m.im(i, j))};
    return r;
}

template <class T, int R, int C>
Eigen::Matrix<double, R, C> to_double(const Eigen::Matrix<T, R, C>& m) {
    Eigen::Matrix<double, R, C> r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = ScalarOps<T>::to_double(m(i, j));
    return r;
}

/// Max-abs entry of a difference, the residual measure used throughout.
template <class Derived> double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Inverse of a square matrix over an exact field by Gauss-Jordan elimination.
/// Throws DomainError if singular.
template <class T>
Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> exact_inverse(Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> a) {
    const Eigen::Index n = a.rows();
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> inv =
        Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = col; r < n; ++r)
            if (!ScalarOps<T>::is_zero(a(r, col), 0.0)) { piv = r; break; }
        if (piv < 0) throw DomainError("exact_inverse: singular matrix");
        a.row(col).swap(a.row(piv));
        inv.row(col).swap(inv.row(piv));
        T p = T(1) / a(col, col);
        a.row(col) *= p;
        inv.row(col) *= p;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || ScalarOps<T>::is_zero(a(r, col), 0.0)) continue;
            T f = a(r, col);
            a.row(r) -= f * a.row(col);
            inv.row(r) -= f * inv.row(col);
        }
    }
    return inv;
}

} // namespace octosphere
