#include "octosphere/sphere_map.hpp"

#include <cmath>

namespace octosphere {

double pushforward_identity_residual(const Vec7d& x, const Vec7d& xi) {
    Mat7d fx = f_matrix_raw(x);
    Mat7d dx = f_pushforward_raw(x, xi);
    return max_abs(fx * xi + dx * x - xi);
}

Mat7d lambda_log() {
    const Mat7d lam = lambda_matrix<double>();
    // rotation planes (e2,e3), (e4,e5), (e6,e7): block [[cos, -sin], [sin, cos]]
    auto angle = [&](int p) { return std::atan2(lam(p + 1, p), lam(p, p)); };
    const double th[3] = {angle(1), angle(3), angle(1) + angle(3)};
    Mat7d out = Mat7d::Zero();
    for (int k = 0; k < 3; ++k) {
        int p = 1 + 2 * k;
        if (std::abs(std::cos(th[k]) - lam(p, p)) > 1e-12 || std::abs(std::sin(th[k]) - lam(p + 1, p)) > 1e-12)
            throw ConsistencyError("lambda_log: rotation angles violate the g2 relation");
        out(p + 1, p) = th[k];
        out(p, p + 1) = -th[k];
    }
    return out;
}

} // namespace octosphere
