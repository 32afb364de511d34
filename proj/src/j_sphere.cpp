#include "octosphere/j_sphere.hpp"

#include <algorithm>

namespace octosphere {

double sphere_square_defect(const Mat6d& m) { return max_abs(Mat6d(m * m + Mat6d::Identity())); }

double sphere_orthogonality_defect(const Mat6d& m) { return max_abs(Mat6d(m.transpose() * m - Mat6d::Identity())); }

Mat7d j_tensor(const ModuliD& m, const Vec7d& y) {
    const Mat14<double>& jm = j_operator(m).matrix;
    const Mat7d fy = f_matrix_raw(y);
    const Mat7d proj = Mat7d::Identity() - y * y.transpose();
    Mat7d out;
    for (int a = 0; a < 7; ++a) out.col(a) = j_vector_raw(jm, y, fy, Vec7d(proj.col(a)));
    return out;
}

namespace {

// Theta_{y2,y1} applied to a tangent vector at y1.
Vec7d theta_apply(const Vec7d& y1, const Vec7d& y2, const Mat7d& g, const Vec7d& xi) {
    Mat7d w = f_matrix_raw(y1).transpose() * f_pushforward_raw(y1, xi);
    Mat7d moved = g * w * g.transpose();
    Mat7d f2 = f_matrix_raw(y2);
    return f_pullback(y2, Mat7d(f2 * moved));
}

Mat6d frame_change(const ChartFrameD& to, const ChartFrameD& from) {
    return to.tangent_frame().transpose() * from.tangent_frame();
}

} // namespace

Mat6d theta(int chart, const Vec7d& y1, const Vec7d& y2) {
    ChartFrameD f1 = frame_at(chart, y1), f2 = frame_at(chart, y2);
    Mat7d g = f2.B * f1.B.transpose();
    auto t1 = f1.tangent_frame(), t2 = f2.tangent_frame();
    Mat6d out;
    for (int p = 0; p < 6; ++p) {
        Vec7d img = theta_apply(y1, y2, g, Vec7d(t1.col(p)));
        for (int q = 0; q < 6; ++q) out(q, p) = img.dot(t2.col(q));
    }
    return out;
}

double factorization_residual(const ModuliD& m, const Vec7d& y) {
    const Vec7d e1 = Vec7d::Unit(0);
    Mat6d t = theta(1, e1, y);
    Mat6d me = j_matrix(m, 1, e1).J, my = j_matrix(m, 1, y).J;
    Mat6d pred = t.inverse().transpose() * me * t.transpose();
    return max_abs(Mat6d(my - pred));
}

double gauge_covariance_residual(const ModuliD& m, const Vec7d& y, int c1, int c2) {
    auto j1 = j_matrix(m, c1, y), j2 = j_matrix(m, c2, y);
    Mat6d g = frame_change(j2.frame, j1.frame);
    return max_abs(Mat6d(j1.J - g.transpose() * j2.J * g));
}

TensorField sphere_tensor(const ModuliD& m) {
    return [m](const Vec7d& y) { return j_tensor(m, y); };
}

TensorField flipped_block_tensor(const ModuliD& m, int chart) {
    return [m, chart](const Vec7d& y) {
        auto tf = frame_at(chart, y).tangent_frame();
        Mat7d p = tf.col(0) * tf.col(0).transpose() + tf.col(1) * tf.col(1).transpose();
        return Mat7d((Mat7d::Identity() - 2 * p) * j_tensor(m, y));
    };
}

namespace {

using VectorField = std::function<Vec7d(const Vec7d&)>;

Vec7d along(const Vec7d& y, const Vec7d& u, double h, const VectorField& v) {
    Vec7d plus = (y + h * u).normalized(), minus = (y - h * u).normalized();
    return (v(plus) - v(minus)) / (2 * h);
}

Vec7d bracket_at(const Vec7d& y, const VectorField& a, const VectorField& b, double h) {
    return along(y, a(y), h, b) - along(y, b(y), h, a);
}

Vec7d nijenhuis_vector(int chart, const Vec7d& y, const TensorField& field, int p, int q, double h) {
    VectorField xp = [chart, p](const Vec7d& z) { return Vec7d(frame_at(chart, z).tangent_frame().col(p)); };
    VectorField xq = [chart, q](const Vec7d& z) { return Vec7d(frame_at(chart, z).tangent_frame().col(q)); };
    VectorField jxp = [&](const Vec7d& z) { return Vec7d(field(z) * xp(z)); };
    VectorField jxq = [&](const Vec7d& z) { return Vec7d(field(z) * xq(z)); };
    const Mat7d jy = field(y);
    return bracket_at(y, jxp, jxq, h) - bracket_at(y, xp, xq, h) - jy * bracket_at(y, jxp, xq, h) -
           jy * bracket_at(y, xp, jxq, h);
}

} // namespace

NijenhuisResult nijenhuis_sphere(int chart, const Vec7d& y, const TensorField& field, int p, int q, double h) {
    if (h <= 0) throw DomainError("nijenhuis_sphere: step must be positive");
    if (p < 0 || p > 5 || q < 0 || q > 5) throw DomainError("nijenhuis_sphere: frame index must be in 0..5");
    if (!chart_contains(chart, y)) throw DomainError("nijenhuis_sphere: y is outside the chart");
    NijenhuisResult r;
    r.boundary_warning = y(chart - 1) + 0.5 < 10 * h;
    auto tf = frame_at(chart, y).tangent_frame();
    r.coarse = tf.transpose() * nijenhuis_vector(chart, y, field, p, q, h);
    r.fine = tf.transpose() * nijenhuis_vector(chart, y, field, p, q, h / 2);
    r.value = (4 * r.fine - r.coarse) / 3;
    return r;
}

NijenhuisResult nijenhuis_sphere(int chart, const Vec7d& y, const ModuliD& m, int p, int q, double h) {
    return nijenhuis_sphere(chart, y, sphere_tensor(m), p, q, h);
}

} // namespace octosphere
