#include "octosphere/charts.hpp"

#include <algorithm>

namespace octosphere {

int best_chart(const Vec7d& y) {
    Eigen::Index k;
    y.maxCoeff(&k);
    return static_cast<int>(k) + 1;
}

double frame_defect(const ChartFrameD& fr) {
    const Mat7d& b = fr.B;
    const Mat7d id = Mat7d::Identity();
    double d = max_abs(b.transpose() * b - id);
    d = std::max(d, max_abs(b * b * b - id));
    d = std::max(d, std::abs(b.determinant() - 1.0));
    d = std::max(d, automorphism_residual(b));
    d = std::max(d, max_abs(b.col(fr.chart - 1) - fr.y));
    return d;
}

} // namespace octosphere
