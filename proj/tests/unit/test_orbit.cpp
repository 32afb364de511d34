#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "octosphere/orbit.hpp"
#include "octosphere/random.hpp"

using namespace octosphere;

namespace {

double herm_defect(const Mat14cd& p) { return (p - p.adjoint()).cwiseAbs().maxCoeff(); }
double idem_defect(const Mat14cd& p) { return (p * p - p).cwiseAbs().maxCoeff(); }

Mat14cd rank_one(const Vec14cd& v) { return v * v.adjoint() / v.squaredNorm(); }

} // namespace

TEST_CASE("m complex") {
    auto m = m_complex();
    CHECK(m.dim() == 6);
    CHECK((m.basis.adjoint() * m.basis - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
    Mat14cd p = subspace_projection(m);
    auto rb = root_basis<double>(1.0, 1.0);
    Vec14cd u = complex_coords(rb.U(1, 1));
    CHECK((p * u - u).norm() < 1e-12);
    Vec14cd v = complex_coords(rb.V(1, 1));
    CHECK((p * v).norm() < 1e-12);
}

TEST_CASE("projections") {
    for (const auto& mod : {ModuliD::from_ab(1, 1), ModuliD::from_ab(3, 4), ModuliD::from_ab(0.5, -2)}) {
        Mat14cd s = subspace_projection(samelson_subspace(mod));
        Mat14cd sb = subspace_projection(conj_samelson_subspace(mod));
        CHECK(std::abs(s.trace() - cd(7, 0)) < 1e-12);
        CHECK(std::abs(sb.trace() - cd(7, 0)) < 1e-12);
        CHECK(herm_defect(s) < 1e-12);
        CHECK(idem_defect(s) < 1e-12);
        // s and its conjugate are complementary
        CHECK(intersection_dim(s, sb) == 0);
        CHECK(intersection_dim(s, s) == 7);
    }
    CHECK_THROWS_AS(samelson_subspace(ModuliD{0.0, 1.0}), DomainError);
}

TEST_CASE("intersection with the tangent at the centre") {
    for (const auto& mod : {ModuliD::from_ab(1, 1), ModuliD::from_ab(3, 4), ModuliD::from_ab(2, -1)}) {
        Mat14cd s = subspace_projection(samelson_subspace(mod));
        Mat14cd sb = subspace_projection(conj_samelson_subspace(mod));
        Mat14cd m = subspace_projection(m_complex());
        CHECK(intersection_dim(s, m) == 3);
        CHECK(intersection_dim(sb, m) == 3);
        CHECK(intersection_dim_power(s, m) == 3);
        CHECK(intersection_dim_power(sb, m) == 3);
        for (double tol : {1e-8, 1e-7, 1e-6}) CHECK(intersection_dim(s, m, tol) == 3);
        // the common part is spanned by U+1, U+2, U+3
        auto rb = root_basis<double>(1 / mod.alpha, mod.b);
        for (int k = 1; k <= 3; ++k) {
            Vec14cd u = complex_coords(rb.U(k, 1));
            CHECK((s * u - u).norm() < 1e-12);
            CHECK((m * u - u).norm() < 1e-12);
        }
        auto r = intersection_report(s, m);
        for (const auto& mu : r.spectrum) CHECK(std::abs(mu) <= 1 + 1e-12);
    }
}

TEST_CASE("orbit tangent") {
    Mat14cd m = subspace_projection(m_complex());
    CHECK((subspace_projection(orbit_tangent(Mat7cd::Identity())) - m).cwiseAbs().maxCoeff() < 1e-12);

    Rng rng(23);
    for (int t = 0; t < 10; ++t) CHECK(orbit_tangent(to_complex(random_g2_group(rng))).dim() == 6);

    const auto& re = canonical_real_basis<double>();
    Mat7cd z = 0.3 * (re[x_slot(1, 1)].cast<cd>() + cd(0, 1) * re[y_slot(2, 1)].cast<cd>());
    CHECK(orbit_tangent(Mat7cd(z.exp())).dim() == 6);
    CHECK(orbit_tangent(random_g2c_group(rng, 0.3, 0.2)).dim() == 6);

    // SU(3) fixes the tangent space at the centre
    Vec14<double> c = Vec14<double>::Zero();
    for (int k : {0, 1, 8, 9, 10, 11, 12, 13}) c(k) = rng.normal();
    Mat7d h = from_real_coords<double>(c, re).exp();
    Mat14cd th = subspace_projection(orbit_tangent(to_complex(h)));
    CHECK((th - m).cwiseAbs().maxCoeff() < 1e-10);
    Mat14cd s = subspace_projection(samelson_subspace(ModuliD::from_ab(1, 1)));
    CHECK(intersection_dim(s, th) == 3);

    CHECK_THROWS_AS(orbit_tangent(Mat7cd::Zero()), DomainError);
}

TEST_CASE("coordinates") {
    Rng rng(29);
    Mat7d a = random_g2_algebra(rng), b = random_g2_algebra(rng);
    Mat7cd w = a.cast<cd>() + cd(0, 1) * b.cast<cd>();
    CHECK((from_complex_coords(complex_coords(w)) - w).cwiseAbs().maxCoeff() < 1e-12);
    CHECK_THROWS_AS(complex_coords(Mat7cd(Mat7cd::Identity())), ConsistencyError);
    Mat7cd e = Mat7cd::Zero();
    e(1, 2) = 1;
    e(2, 1) = -1;
    CHECK_THROWS_AS(complex_coords(e), ConsistencyError);
}

TEST_CASE("ambiguous spectrum") {
    Vec14cd e1 = Vec14cd::Zero(), e2 = Vec14cd::Zero();
    e1(0) = 1;
    e2(1) = 1;
    const double c2 = 1 - 5e-7;
    Vec14cd v = std::sqrt(c2) * e1 + std::sqrt(1 - c2) * e2;
    Mat14cd p = rank_one(e1), q = rank_one(v);
    CHECK_THROWS_AS(intersection_dim(p, q), IndeterminateError);
    try {
        intersection_dim(p, q);
    } catch (const IndeterminateError& err) {
        CHECK(err.spectrum.size() == 14);
        CHECK(std::abs(err.spectrum[0] - cd(c2, 0)) < 1e-12);
    }
    CHECK(intersection_dim(p, q, 1e-5) == 1);
    CHECK(intersection_dim(p, q, 1e-8) == 0);
    CHECK(intersection_dim(p, p) == 1);
    CHECK(intersection_dim_power(p, p) == 1);
}
