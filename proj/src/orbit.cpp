#include "octosphere/orbit.hpp"

#include "octosphere/random.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace octosphere {

namespace {

const RealBasis<double>& rb() { return canonical_real_basis<double>(); }

Mat7cd to_mat(const CMat7<double>& w) { return to_complex_double(w); }

} // namespace

Mat7cd to_complex(const Mat7d& g) { return g.cast<cd>(); }

Vec14cd complex_coords(const Mat7cd& w, double tol) {
    Mat7d re = w.real(), im = w.imag();
    Vec14<double> cr = real_coords<double>(re, rb()), ci = real_coords<double>(im, rb());
    Mat7d back_re = from_real_coords<double>(cr, rb()), back_im = from_real_coords<double>(ci, rb());
    double res = std::max(max_abs(Mat7d(re - back_re)), max_abs(Mat7d(im - back_im)));
    if (res > tol * std::max(1.0, w.cwiseAbs().maxCoeff()))
        throw ConsistencyError("complex_coords: matrix is not in g2^C");
    Vec14cd c;
    for (int k = 0; k < 14; ++k) c(k) = {cr(k), ci(k)};
    return c;
}

Vec14cd complex_coords(const CMat7<double>& w, double tol) { return complex_coords(to_mat(w), tol); }

Mat7cd from_complex_coords(const Vec14cd& c) {
    Mat7cd m = Mat7cd::Zero();
    for (int k = 0; k < 14; ++k) m += c(k) * rb()[k].cast<cd>();
    return m;
}

ComplexSubspace span_of(const std::vector<Mat7cd>& mats, double tol) {
    // modified Gram-Schmidt, applied twice per vector
    std::vector<Vec14cd> out;
    for (const auto& m : mats) {
        Vec14cd v = complex_coords(m);
        const double scale = std::max(1.0, v.norm());
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : out) v -= q.dot(v) * q;
        if (v.norm() <= tol * scale) continue;
        out.push_back(v / v.norm());
    }
    ComplexSubspace s{Basis14cd(14, static_cast<Eigen::Index>(out.size()))};
    for (std::size_t k = 0; k < out.size(); ++k) s.basis.col(static_cast<Eigen::Index>(k)) = out[k];
    return s;
}

ComplexSubspace span_of(const std::vector<CMat7<double>>& mats, double tol) {
    std::vector<Mat7cd> v;
    for (const auto& m : mats) v.push_back(to_mat(m));
    return span_of(v, tol);
}

ComplexSubspace m_complex() { return span_of(m_basis(root_basis<double>(3.0, 4.0))); }

namespace {
RootBasis<double> basis_for(const ModuliD& m) {
    if (m.alpha <= 0) throw DomainError("samelson_subspace: the root basis needs 0 < a < infinity");
    return root_basis<double>(1.0 / m.alpha, m.b);
}
} // namespace

ComplexSubspace samelson_subspace(const ModuliD& m) { return span_of(samelson_basis(basis_for(m))); }
ComplexSubspace conj_samelson_subspace(const ModuliD& m) { return span_of(conj_samelson_basis(basis_for(m))); }

ComplexSubspace orbit_tangent(const Mat7cd& g) {
    Eigen::FullPivLU<Mat7cd> lu(g);
    const double big = g.cwiseAbs().maxCoeff();
    if (big == 0.0 || !lu.isInvertible() || lu.rcond() < 1e-12)
        throw DomainError("orbit_tangent: g is numerically singular");
    Mat7cd gi = lu.inverse();
    std::vector<Mat7cd> moved;
    for (const auto& u : m_basis(root_basis<double>(3.0, 4.0))) moved.push_back(g * to_mat(u) * gi);
    return span_of(moved);
}

Mat14cd subspace_projection(const ComplexSubspace& s) { return s.basis * s.basis.adjoint(); }

IntersectionReport intersection_report(const Mat14cd& p, const Mat14cd& q, double tol) {
    Eigen::ComplexEigenSolver<Mat14cd> es(p * q, false);
    if (es.info() != Eigen::Success) throw DomainError("intersection_dim: eigenvalue solver failed");
    IntersectionReport r{0, {}};
    for (int k = 0; k < 14; ++k) r.spectrum.push_back(es.eigenvalues()(k));
    std::sort(r.spectrum.begin(), r.spectrum.end(), [](cd a, cd b) { return std::abs(a) > std::abs(b); });
    bool ambiguous = false;
    for (const cd& mu : r.spectrum) {
        const double d = std::abs(1.0 - mu);
        if (d < tol) ++r.dim;
        else if (d < 10 * tol) ambiguous = true;
    }
    if (ambiguous) throw IndeterminateError("intersection_dim: eigenvalues of PQ too close to 1", r.spectrum);
    return r;
}

int intersection_dim(const Mat14cd& p, const Mat14cd& q, double tol) { return intersection_report(p, q, tol).dim; }

int intersection_dim_power(const Mat14cd& p, const Mat14cd& q, int squarings) {
    Mat14cd m = p * q;
    for (int k = 0; k < squarings; ++k) m = m * m;
    return static_cast<int>(std::lround(m.trace().real()));
}

Mat7cd random_g2c_group(Rng& rng, double real_scale, double imag_scale) {
    Mat7d a = random_g2_algebra(rng, real_scale), b = random_g2_algebra(rng, imag_scale);
    Mat7cd z = a.cast<cd>() + cd(0, 1) * b.cast<cd>();
    return z.exp();
}

} // namespace octosphere
