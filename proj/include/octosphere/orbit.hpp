#pragma once
// Complex subspaces of g2^C, orthogonal projections and intersection dimensions.
// Elements are handled through their coordinates in the orthonormal real basis (C^14),
// where hermitian_ip becomes the standard inner product.

#include "octosphere/samelson.hpp"

#include <complex>
#include <vector>

namespace octosphere {

class Rng;

using cd = std::complex<double>;
using Vec14cd = Eigen::Matrix<cd, 14, 1>;
using Basis14cd = Eigen::Matrix<cd, 14, Eigen::Dynamic>;

/// Coordinates of a complex g2 element; throws ConsistencyError if it is not in g2^C (residual > tol).
Vec14cd complex_coords(const Mat7cd& w, double tol = 1e-9);
Vec14cd complex_coords(const CMat7<double>& w, double tol = 1e-9);
Mat7cd from_complex_coords(const Vec14cd& c);

struct ComplexSubspace {
    Basis14cd basis;  // orthonormal columns
    int dim() const { return static_cast<int>(basis.cols()); }
};

/// Orthonormal basis of the span; vectors whose remaining norm falls below tol are dropped.
ComplexSubspace span_of(const std::vector<Mat7cd>& mats, double tol = 1e-12);
ComplexSubspace span_of(const std::vector<CMat7<double>>& mats, double tol = 1e-12);

/// span of U_{+-1}, U_{+-2}, U_{+-3}.
ComplexSubspace m_complex();
/// s_ab and its conjugate; 0 < a < infinity.
ComplexSubspace samelson_subspace(const ModuliD& m);
ComplexSubspace conj_samelson_subspace(const ModuliD& m);

/// span{g U g^-1 : U in m^C}; DomainError if g is numerically singular.
ComplexSubspace orbit_tangent(const Mat7cd& g);

/// Hermitian projector Q Q^H onto the subspace.
Mat14cd subspace_projection(const ComplexSubspace& s);

struct IntersectionReport {
    int dim;
    std::vector<cd> spectrum;  // eigenvalues of PQ, sorted by decreasing modulus
};

/// Counts eigenvalues mu of PQ with |1 - mu| < tol. Eigenvalues with tol <= |1 - mu| < 10 tol
/// make the count ambiguous and raise IndeterminateError.
IntersectionReport intersection_report(const Mat14cd& p, const Mat14cd& q, double tol = 1e-7);
int intersection_dim(const Mat14cd& p, const Mat14cd& q, double tol = 1e-7);

/// Oracle: trace of (PQ)^(2^squarings), rounded.
int intersection_dim_power(const Mat14cd& p, const Mat14cd& q, int squarings = 30);

/// exp of a complex g2 element with real and imaginary parts drawn like random_g2_algebra.
Mat7cd random_g2c_group(Rng& rng, double real_scale, double imag_scale);
Mat7cd to_complex(const Mat7d& g);

} // namespace octosphere
