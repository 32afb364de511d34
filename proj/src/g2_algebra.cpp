#include "octosphere/g2.hpp"
#include "octosphere/random.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace octosphere {

const std::array<std::string, 14>& real_basis_names() {
    static const std::array<std::string, 14> names = {"H+",  "H-",  "X+1", "X-1", "X+2", "X-2", "X+3",
                                                      "X-3", "Y+1", "Y-1", "Y+2", "Y-2", "Y+3", "Y-3"};
    return names;
}

namespace {

Eigen::VectorXcd flatten(const CMat7<double>& m) {
    Eigen::VectorXcd v(49);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) v(7 * i + j) = {m.re(i, j), m.im(i, j)};
    return v;
}

template <class T>
Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> real_gram_system(const std::vector<CMat7<T>>& basis) {
    // G_kl = <B_l, B_k>; the complex system G c = rhs becomes [Gr -Gi; Gi Gr] [u; v] = [rr; ri].
    const int n = int(basis.size());
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> g(2 * n, 2 * n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            Cx<T> z = hermitian_ip(basis[l], basis[k]);
            g(k, l) = z.re;
            g(k, n + l) = -z.im;
            g(n + k, l) = z.im;
            g(n + k, n + l) = z.re;
        }
    return g;
}

} // namespace

namespace detail {

SpanResult<double> span_membership_numeric(const CMat7<double>& w, const std::vector<CMat7<double>>& basis,
                                           double tol) {
    const int n = int(basis.size());
    Eigen::MatrixXcd a(49, n);
    for (int k = 0; k < n; ++k) a.col(k) = flatten(basis[k]);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(a);
    qr.setThreshold(1e-10);
    if (qr.rank() < n) throw DomainError("span_membership: rank-deficient basis");
    Eigen::VectorXcd target = flatten(w);
    Eigen::VectorXcd c = qr.solve(target);
    SpanResult<double> res;
    res.residual = (a * c - target).norm();
    res.member = res.residual <= tol;
    for (int k = 0; k < n; ++k) res.coeffs.push_back({c(k).real(), c(k).imag()});
    return res;
}

SpanResult<QuadScalar> span_membership_exact(const CMat7<QuadScalar>& w,
                                             const std::vector<CMat7<QuadScalar>>& basis) {
    using Q = QuadScalar;
    const int n = int(basis.size());
    auto g = real_gram_system(basis);
    Eigen::Matrix<Q, Eigen::Dynamic, Eigen::Dynamic> ginv;
    try {
        ginv = exact_inverse<Q>(g);
    } catch (const DomainError&) {
        throw DomainError("span_membership: rank-deficient basis");
    }
    Eigen::Matrix<Q, Eigen::Dynamic, 1> rhs(2 * n);
    for (int k = 0; k < n; ++k) {
        Cx<Q> z = hermitian_ip(w, basis[k]);
        rhs(k) = z.re;
        rhs(n + k) = z.im;
    }
    Eigen::Matrix<Q, Eigen::Dynamic, 1> sol = ginv * rhs;
    SpanResult<Q> res;
    CMat7<Q> rem = w;
    for (int k = 0; k < n; ++k) {
        Cx<Q> c{sol(k), sol(n + k)};
        res.coeffs.push_back(c);
        rem = rem - basis[k].scaled(c);
    }
    Q r2 = hermitian_ip(rem, rem).re;
    res.member = r2.is_zero();
    res.residual = std::sqrt(std::max(0.0, r2.embed()));
    return res;
}

} // namespace detail

double derivation_residual(const Mat7d& m) {
    Eigen::Matrix<double, 8, 8> d = Eigen::Matrix<double, 8, 8>::Zero();
    d.bottomRightCorner<7, 7>() = m;
    auto col = [&](int k) {
        Octonion<double> o;
        for (int r = 0; r < 8; ++r) o.c[r] = d(r, k);
        return o;
    };
    const auto& tab = octonion_table();
    double worst = 0.0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const TableEntry& e = tab[i][j];
            Octonion<double> rhs = oct_mul(col(i), Octonion<double>::unit(j)) +
                                   oct_mul(Octonion<double>::unit(i), col(j));
            for (int r = 0; r < 8; ++r) worst = std::max(worst, std::abs(e.sign * d(r, e.index) - rhs.c[r]));
        }
    return worst;
}

bool is_g2_element(const Mat7d& m, double tol) { return derivation_residual(m) <= tol; }

bool is_g2_element_exact(const Mat7<QuadScalar>& m) {
    using Q = QuadScalar;
    auto col = [&](int k) {
        Octonion<Q> o;
        if (k > 0)
            for (int r = 0; r < 7; ++r) o.c[r + 1] = m(r, k - 1);
        return o;
    };
    const auto& tab = octonion_table();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const TableEntry& e = tab[i][j];
            Octonion<Q> lhs = col(e.index) * Q(e.sign);
            Octonion<Q> rhs = oct_mul(col(i), Octonion<Q>::unit(j)) + oct_mul(Octonion<Q>::unit(i), col(j));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

bool exact_independent(const std::vector<CMat7<QuadScalar>>& mats) {
    try {
        exact_inverse<QuadScalar>(real_gram_system(mats));
    } catch (const DomainError&) {
        return false;
    }
    return true;
}

int complex_rank(const std::vector<CMat7<double>>& mats, double tol) {
    if (mats.empty()) return 0;
    Eigen::MatrixXcd a(49, mats.size());
    for (std::size_t k = 0; k < mats.size(); ++k) a.col(Eigen::Index(k)) = flatten(mats[k]);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    int r = 0;
    for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > tol) ++r;
    return r;
}

Mat7d random_g2_algebra(Rng& rng, double scale) {
    Vec14<double> c;
    for (int k = 0; k < 14; ++k) c(k) = scale * rng.normal();
    return from_real_coords<double>(c, canonical_real_basis<double>());
}

Mat7d random_g2_group(Rng& rng, double scale) { return random_g2_algebra(rng, scale).exp(); }

} // namespace octosphere
