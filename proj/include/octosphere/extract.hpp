#pragma once
// Symbolic matrix elements <J xi, eta>_x = sum P_ij(x) xi_i eta_j and the diagonal
// <J xi, xi>_x = Q0(x) + sum_{i<=j} Q_ij(x) xi_i xi_j, reduced by the sphere relations.

#include "octosphere/poly.hpp"
#include "octosphere/samelson.hpp"

#include <array>

namespace octosphere {

using PolyTable = std::array<std::array<MultiPoly, 7>, 7>;

struct PolyTables {
    ModuliQ moduli;
    MultiPoly bilinear;  // reduced <J xi, eta> in x, xi, eta
    MultiPoly diagonal;  // reduced <J xi, xi> in x, xi
    PolyTable P;         // P[i][j] multiplies xi_{i+1} eta_{j+1}
    MultiPoly Q0;
    PolyTable Q;         // Q[i][j], i <= j, multiplies xi_{i+1} xi_{j+1}
};

/// Runs the sphere pipeline with symbolic x and xi, reducing every intermediate.
PolyTables extract_matrix_elements(const ModuliQ& m);

struct PolyStats {
    int nonzero_p = 0;
    int nonzero_q = 0;          // Q0 plus the upper triangle
    std::size_t max_terms = 0;  // over all P and Q
    int max_x_degree = -1;      // over all P and Q
    bool p77_zero = false;
    bool q77_zero = false;
};

PolyStats poly_stats(const PolyTables& t);

/// sum P_ij(x) xi_i eta_j and Q0(x) + sum Q_ij(x) xi_i xi_j, evaluated numerically.
double eval_bilinear(const PolyTables& t, const Vec7d& x, const Vec7d& xi, const Vec7d& eta);
double eval_diagonal(const PolyTables& t, const Vec7d& x, const Vec7d& xi);

/// Number of (i, j) with reduce(P^a_ij - P^b_ij) != 0.
int symbolic_difference_count(const PolyTables& a, const PolyTables& b);

} // namespace octosphere
