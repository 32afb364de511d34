#include "octosphere/samelson.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace octosphere {

double ad_invariance_defect(const ModuliD& m, const Mat7d& z, double eps) {
    if (m.alpha <= 0) throw DomainError("ad_invariance_defect: needs 0 < a < infinity");
    const auto& re = canonical_real_basis<double>();
    RootBasis<double> rb = root_basis<double>(1.0 / m.alpha, m.b);
    auto s = samelson_basis(rb);

    // (g2^C)^R = R^28 through (real coords of re part, real coords of im part).
    Eigen::Matrix<double, 28, 14> span;
    for (int k = 0; k < 7; ++k) {
        Vec14<double> cr = real_coords<double>(s[k].re, re), ci = real_coords<double>(s[k].im, re);
        span.col(2 * k) << cr, ci;          // W
        span.col(2 * k + 1) << -ci, cr;     // i W
    }
    Eigen::HouseholderQR<Eigen::Matrix<double, 28, 14>> qr(span);
    Eigen::Matrix<double, 28, 14> q = qr.householderQ() * Eigen::Matrix<double, 28, 14>::Identity();
    Eigen::Matrix<double, 28, 28> p = q * q.transpose();

    Mat7d g = (eps * z).exp();
    Mat14<double> ad;
    for (int k = 0; k < 14; ++k) ad.col(k) = real_coords<double>(Mat7d(g * re[k] * g.transpose()), re);
    Eigen::Matrix<double, 28, 28> big = Eigen::Matrix<double, 28, 28>::Zero();
    big.topLeftCorner<14, 14>() = ad;
    big.bottomRightCorner<14, 14>() = ad;
    return (p * big - big * p).norm();
}

} // namespace octosphere
