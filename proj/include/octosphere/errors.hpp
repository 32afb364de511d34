#pragma once

#include <stdexcept>
#include <string>
#include <vector>
#include <complex>

namespace octosphere {

// Precondition violated by the caller (bad point, zero divisor, rank-deficient basis, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Value cannot be represented exactly in Q(sqrt2, sqrt3).
struct ModeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix handed to the pullback is not tangent to the orbit at f(x).
struct NonTangentError : std::domain_error {
    using std::domain_error::domain_error;
};

// Algebra element expected in g2 failed to expand against the real basis.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Spectrum of PQ has eigenvalues too close to 1 to classify.
struct IndeterminateError : std::runtime_error {
    IndeterminateError(const std::string& what, std::vector<std::complex<double>> spec)
        : std::runtime_error(what), spectrum(std::move(spec)) {}
    std::vector<std::complex<double>> spectrum;
};

} // namespace octosphere
