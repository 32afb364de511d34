#pragma once
// Sparse polynomials over Q(sqrt2, sqrt3) in 21 variables x1..x7, xi1..xi7, eta1..eta7.

#include "octosphere/scalar.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace octosphere {

constexpr int kPolyVars = 21;
using Exponent = std::array<std::uint8_t, kPolyVars>;

enum class VarBlock { X = 0, Xi = 1, Eta = 2 };

/// 0-based variable index of block variable k (1..7).
constexpr int var_index(VarBlock b, int k) { return 7 * static_cast<int>(b) + k - 1; }
std::string var_name(int index);

int total_degree(const Exponent& e);
int block_degree(const Exponent& e, VarBlock b);
/// Graded lexicographic: total degree first, then exponents of x1, x2, ..., eta7 (larger first).
bool grlex_less(const Exponent& a, const Exponent& b);

class MultiPoly {
public:
    using Term = std::pair<Exponent, QuadScalar>;

    MultiPoly() = default;
    MultiPoly(int c);
    MultiPoly(long c);
    MultiPoly(const QuadScalar& c);

    static MultiPoly var(int index);
    static MultiPoly x(int k) { return var(var_index(VarBlock::X, k)); }
    static MultiPoly xi(int k) { return var(var_index(VarBlock::Xi, k)); }
    static MultiPoly eta(int k) { return var(var_index(VarBlock::Eta, k)); }
    static MultiPoly monomial(const Exponent& e, const QuadScalar& c);
    /// Build from unsorted terms, merging duplicates and dropping zeros.
    static MultiPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    QuadScalar coeff(const Exponent& e) const;

    int degree() const;
    int degree_in(VarBlock b) const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly operator-() const;
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator/(const MultiPoly& a, const MultiPoly& b);  // b must be a nonzero constant
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly scaled(const QuadScalar& c) const;
    double eval(const std::array<double, kPolyVars>& at) const;
    std::string to_string() const;

private:
    std::vector<Term> terms_;  // grlex-sorted, no zero coefficients
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
/// Replace variable `index` by `replacement` everywhere.
MultiPoly poly_subst(const MultiPoly& p, int index, const MultiPoly& replacement);
double poly_eval(const MultiPoly& p, const std::array<double, kPolyVars>& at);

/// The six relations, in application order, as (eliminated monomial, replacement):
///   x7^2, xi7^2, eta7^2 -> 1 - sum_{i<7} (.)_i^2;  x7 xi7, x7 eta7, xi7 eta7 -> -sum_{i<7} (.)_i (.)_i.
const std::vector<std::pair<Exponent, MultiPoly>>& reduction_rules();
std::vector<std::string> reduction_order_names();

/// Rewrite with the first applicable rule until no eliminated monomial divides any term.
MultiPoly reduce(const MultiPoly& p);

template <> struct ScalarOps<MultiPoly> {
    static constexpr bool exact = true;
    static MultiPoly sqrt2() { return MultiPoly(QuadScalar::sqrt2()); }
    static MultiPoly sqrt3() { return MultiPoly(QuadScalar::sqrt3()); }
    static MultiPoly frac(long n, long d) { return MultiPoly(QuadScalar::frac(n, d)); }
    static bool is_zero(const MultiPoly& v, double) { return v.is_zero(); }
    static MultiPoly from_quad(const QuadScalar& q) { return MultiPoly(q); }
};

} // namespace octosphere

namespace Eigen {
template <> struct NumTraits<octosphere::MultiPoly> : GenericNumTraits<octosphere::MultiPoly> {
    typedef octosphere::MultiPoly Real;
    typedef octosphere::MultiPoly NonInteger;
    typedef octosphere::MultiPoly Nested;
    typedef octosphere::MultiPoly Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 256
    };
    static inline int digits10() { return 0; }
    static inline int max_digits10() { return 0; }
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
};
} // namespace Eigen
