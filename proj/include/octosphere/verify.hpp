#pragma once
// Batch verification suites over seeded samples, as driven by the command-line tool.

#include "octosphere/json_io.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace octosphere {

struct VerifyConfig {
    std::vector<ModuliD> moduli;  // empty: default_moduli()
    std::uint64_t seed = 1;
    int samples = 100;
    std::map<std::string, double> tol;  // overrides of default_tolerances()
    bool exact = false;                 // also run the exact-arithmetic checks at (3, 4)
};

/// (a, b) = (1, 1), (3, 4) and (alpha, b) = (0, 2/sqrt3).
std::vector<ModuliD> default_moduli();
/// Tolerance names: octonion, g2, samelson, sphere_map, charts, sphere_j, nijenhuis, orbit.
const std::map<std::string, double>& default_tolerances();
/// Throws DomainError for samples < 1, an unknown tolerance name or a tolerance <= 0.
void validate(const VerifyConfig& c);
double tolerance(const VerifyConfig& c, const std::string& name);

struct CheckResult {
    std::string suite;
    std::string name;
    std::string anchor;  // the identity being checked
    double residual = 0.0;
    double tol = 0.0;
    bool expect_above = false;  // the check asserts residual > tol (a detected failure)
    int samples = 0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

const std::vector<std::string>& suite_names();

/// Runs every suite in the order of suite_names().
VerifyReport run_verify(const VerifyConfig& c);
/// A single suite; DomainError for an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& c);

Json report_to_json(const VerifyReport& r, const VerifyConfig& c);

} // namespace octosphere
