#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octosphere/j_sphere.hpp"
#include "octosphere/orbit.hpp"
#include "octosphere/random.hpp"
#include "octosphere/verify.hpp"

namespace py = pybind11;
using namespace octosphere;

namespace {

Vec7d as_vec7(const Eigen::VectorXd& v, const char* who) {
    if (v.size() != 7) throw DomainError(std::string(who) + ": expected 7 components");
    return v;
}

Mat7d as_mat7(const Eigen::MatrixXd& m, const char* who) {
    if (m.rows() != 7 || m.cols() != 7) throw DomainError(std::string(who) + ": expected a 7x7 matrix");
    return m;
}

std::array<double, 8> octonion_mul(const std::array<double, 8>& u, const std::array<double, 8>& v) {
    Octonion<double> a, b;
    a.c = u;
    b.c = v;
    return (a * b).c;
}

std::vector<Eigen::MatrixXcd> root_basis_py(double a, double b) {
    auto rb = root_basis<double>(a, b);
    std::vector<Eigen::MatrixXcd> out;
    for (const auto& e : rb.e) out.emplace_back(to_complex_double(e));
    return out;
}

py::dict frame_py(int chart, const Eigen::VectorXd& y, int branch) {
    auto fr = frame_at(chart, as_vec7(y, "frame_at"), branch);
    py::dict d;
    d["chart"] = fr.chart;
    d["x"] = Eigen::VectorXd(fr.x);
    d["B"] = Eigen::MatrixXd(fr.B);
    d["defect"] = frame_defect(fr);
    return d;
}

py::dict nijenhuis_py(int chart, const Eigen::VectorXd& y, double alpha, double b, int p, int q, double h) {
    auto r = nijenhuis_sphere(chart, as_vec7(y, "nijenhuis_sphere"), ModuliD{alpha, b}, p, q, h);
    py::dict d;
    d["value"] = Eigen::VectorXd(r.value);
    d["coarse"] = Eigen::VectorXd(r.coarse);
    d["fine"] = Eigen::VectorXd(r.fine);
    d["boundary_warning"] = r.boundary_warning;
    return d;
}

std::pair<int, int> intersection_dims(double alpha, double b, const Eigen::MatrixXcd& g, double tol) {
    if (g.rows() != 7 || g.cols() != 7) throw DomainError("intersection_dims: expected a 7x7 matrix");
    ModuliD m{alpha, b};
    Mat14cd t = subspace_projection(orbit_tangent(Mat7cd(g)));
    return {intersection_dim(subspace_projection(samelson_subspace(m)), t, tol),
            intersection_dim(subspace_projection(conj_samelson_subspace(m)), t, tol)};
}

std::string polys_json(const std::string& alpha, const std::string& b) {
    return poly_tables_to_json(extract_matrix_elements(ModuliQ{parse_exact(alpha), parse_exact(b)})).dump();
}

std::string verify_json(std::uint64_t seed, int samples, const std::map<std::string, double>& tol, bool exact,
                        const std::vector<std::pair<double, double>>& moduli) {
    VerifyConfig c;
    c.seed = seed;
    c.samples = samples;
    c.tol = tol;
    c.exact = exact;
    for (const auto& [a, b] : moduli) c.moduli.push_back(ModuliD{a, b});
    return report_to_json(run_verify(c), c).dump();
}

} // namespace

PYBIND11_MODULE(_octosphere, m) {
    m.doc() = "G2 acting on the six-sphere: octonions, Samelson structures, the sphere tensor";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ModeError>(m, "ModeError", PyExc_ArithmeticError);
    py::register_exception<NonTangentError>(m, "NonTangentError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
    py::register_exception<IndeterminateError>(m, "IndeterminateError", PyExc_RuntimeError);

    m.def("octonion_mul", &octonion_mul, py::arg("u"), py::arg("v"));
    m.def("octonion_table", [] {
        std::vector<std::vector<std::pair<int, int>>> t(8);
        for (int i = 0; i < 8; ++i)
            for (const auto& e : octonion_table()[i]) t[i].emplace_back(e.sign, e.index);
        return t;
    }, "(sign, index) pairs with e_i e_j = sign e_index");

    m.def("root_basis", &root_basis_py, py::arg("a"), py::arg("b"), "the 14 complex root-basis matrices");
    m.def("real_basis", [] {
        std::vector<Eigen::MatrixXd> out;
        for (const auto& e : canonical_real_basis<double>()) out.emplace_back(e);
        return out;
    });
    m.def("j_operator", [](double alpha, double b) { return Eigen::MatrixXd(j_operator(ModuliD{alpha, b}).matrix); },
          py::arg("alpha"), py::arg("b"), "14x14 matrix of J on g2, alpha = 1/a");
    m.def("is_orthogonal_structure", [](double alpha, double b) { return is_orthogonal_structure(ModuliD{alpha, b}); },
          py::arg("alpha"), py::arg("b"));
    m.def("nijenhuis_algebra_max", [](double alpha, double b) { return nijenhuis_algebra_max(j_operator(ModuliD{alpha, b})); },
          py::arg("alpha"), py::arg("b"));

    m.def("f_matrix", [](const Eigen::VectorXd& x) { return Eigen::MatrixXd(f_matrix(as_vec7(x, "f_matrix"))); },
          py::arg("x"));
    m.def("f_pushforward", [](const Eigen::VectorXd& x, const Eigen::VectorXd& xi) {
        return Eigen::MatrixXd(f_pushforward(as_vec7(x, "f_pushforward"), as_vec7(xi, "f_pushforward")));
    }, py::arg("x"), py::arg("xi"));
    m.def("f_pullback", [](const Eigen::VectorXd& x, const Eigen::MatrixXd& a) {
        return Eigen::VectorXd(f_pullback(as_vec7(x, "f_pullback"), as_mat7(a, "f_pullback")));
    }, py::arg("x"), py::arg("a"));

    m.def("best_chart", [](const Eigen::VectorXd& y) { return best_chart(as_vec7(y, "best_chart")); }, py::arg("y"));
    m.def("chart_contains", [](int i, const Eigen::VectorXd& y) { return chart_contains(i, as_vec7(y, "chart_contains")); },
          py::arg("chart"), py::arg("y"));
    m.def("frame_at", &frame_py, py::arg("chart"), py::arg("y"), py::arg("branch") = 1);

    m.def("j_matrix", [](double alpha, double b, int chart, const Eigen::VectorXd& y) {
        return Eigen::MatrixXd(j_matrix(ModuliD{alpha, b}, chart, as_vec7(y, "j_matrix")).J);
    }, py::arg("alpha"), py::arg("b"), py::arg("chart"), py::arg("y"));
    m.def("j_tensor", [](double alpha, double b, const Eigen::VectorXd& y) {
        return Eigen::MatrixXd(j_tensor(ModuliD{alpha, b}, as_vec7(y, "j_tensor")));
    }, py::arg("alpha"), py::arg("b"), py::arg("y"));
    m.def("theta", [](int chart, const Eigen::VectorXd& y1, const Eigen::VectorXd& y2) {
        return Eigen::MatrixXd(theta(chart, as_vec7(y1, "theta"), as_vec7(y2, "theta")));
    }, py::arg("chart"), py::arg("y1"), py::arg("y2"));
    m.def("nijenhuis_sphere", &nijenhuis_py, py::arg("chart"), py::arg("y"), py::arg("alpha"), py::arg("b"),
          py::arg("p"), py::arg("q"), py::arg("h") = 1e-4);

    m.def("random_g2_group", [](std::uint64_t seed, double scale) {
        Rng rng(seed);
        return Eigen::MatrixXd(random_g2_group(rng, scale));
    }, py::arg("seed"), py::arg("scale") = 1.0);
    m.def("intersection_dims", &intersection_dims, py::arg("alpha"), py::arg("b"), py::arg("g"),
          py::arg("tol") = 1e-7, "(dim(s cap T), dim(conj s cap T)) against the orbit tangent at g");

    m.def("_polys_json", &polys_json, py::arg("alpha"), py::arg("b"));
    m.def("_verify_json", &verify_json, py::arg("seed"), py::arg("samples"), py::arg("tol"), py::arg("exact"),
          py::arg("moduli"));
}
