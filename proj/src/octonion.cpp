#include "octosphere/octonion.hpp"

#include <algorithm>

namespace octosphere {

const std::array<std::array<TableEntry, 8>, 8>& octonion_table() {
    // Row e_i, column e_j holds e_i * e_j.
    static const std::array<std::array<TableEntry, 8>, 8> table = {{
        {{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}}},
        {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}, {1, 5}, {-1, 4}, {-1, 7}, {1, 6}}},
        {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}, {1, 6}, {1, 7}, {-1, 4}, {-1, 5}}},
        {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}, {1, 7}, {-1, 6}, {1, 5}, {-1, 4}}},
        {{{1, 4}, {-1, 5}, {-1, 6}, {-1, 7}, {-1, 0}, {1, 1}, {1, 2}, {1, 3}}},
        {{{1, 5}, {1, 4}, {-1, 7}, {1, 6}, {-1, 1}, {-1, 0}, {-1, 3}, {1, 2}}},
        {{{1, 6}, {1, 7}, {1, 4}, {-1, 5}, {-1, 2}, {1, 3}, {-1, 0}, {-1, 1}}},
        {{{1, 7}, {-1, 6}, {1, 5}, {1, 4}, {-1, 3}, {-1, 2}, {1, 1}, {-1, 0}}},
    }};
    return table;
}

double automorphism_residual(const Mat7d& m) {
    Eigen::Matrix<double, 8, 8> phi = Eigen::Matrix<double, 8, 8>::Zero();
    phi(0, 0) = 1.0;
    phi.bottomRightCorner<7, 7>() = m;
    auto image = [&](int k) {
        Octonion<double> o;
        for (int r = 0; r < 8; ++r) o.c[r] = phi(r, k);
        return o;
    };
    const auto& tab = octonion_table();
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
        Octonion<double> pi = image(i);
        for (int j = 0; j < 8; ++j) {
            Octonion<double> prod = oct_mul(pi, image(j));
            const TableEntry& e = tab[i][j];
            for (int r = 0; r < 8; ++r)
                worst = std::max(worst, std::abs(prod.c[r] - e.sign * phi(r, e.index)));
        }
    }
    return worst;
}

bool is_octonion_automorphism(const Mat7d& m, double tol) { return automorphism_residual(m) <= tol; }

} // namespace octosphere
