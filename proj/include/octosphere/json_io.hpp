#pragma once
// JSON encoding of scalars, matrices and polynomial tables, plus exact parsing of moduli.

#include "octosphere/extract.hpp"
#include "octosphere/samelson.hpp"

#include <json.hpp>

#include <string>

namespace octosphere {

using Json = nlohmann::json;

/// {"c0": "p/q", "c1": ..., "c2": ..., "c3": ...}, coefficients of 1, sqrt2, sqrt3, sqrt6.
Json quad_to_json(const QuadScalar& q);
/// Inverse of quad_to_json. Throws DomainError on a malformed object.
QuadScalar quad_from_json(const Json& j);

/// Row-major nested arrays.
Json matrix_to_json(const Eigen::MatrixXd& m);
Json matrix_to_json(const Eigen::Matrix<QuadScalar, Eigen::Dynamic, Eigen::Dynamic>& m);
/// Entries as [re, im] pairs.
Json matrix_to_json(const Eigen::MatrixXcd& m);
Json matrix_to_json(const CMat7<QuadScalar>& m);

Json vector_to_json(const Eigen::VectorXd& v);

/// {"x1^2*xi3": coeff, ...} with coefficients encoded by quad_to_json.
Json poly_to_json(const MultiPoly& p);
std::string monomial_name(const Exponent& e);

Json moduli_to_json(const ModuliD& m);
Json moduli_to_json(const ModuliQ& m);

/// Polynomial tables with their reduction order, moduli and statistics.
Json poly_tables_to_json(const PolyTables& t);

/// Exact parse of a modulus component. Accepted forms, with optional sign:
///   "p", "p/q", "p*sqrtN", "p/q*sqrtN", "sqrtN", "p/sqrtN", "p/q/sqrtN"   (N in 2, 3, 6)
/// Throws ModeError for anything else (including decimals).
QuadScalar parse_exact(const std::string& s);
/// parse_exact when possible, otherwise a plain floating-point number. DomainError if neither.
double parse_real(const std::string& s);

} // namespace octosphere
