// octosphere: verification suites, matrix emission, polynomial export and orbit diagnostics.
// Exit codes: 0 pass, 1 check failure, 2 usage or configuration error.

#include "octosphere/j_sphere.hpp"
#include "octosphere/orbit.hpp"
#include "octosphere/random.hpp"
#include "octosphere/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace octosphere;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t seed = 1;
    int samples = 100;
    std::vector<std::string> moduli;
    std::vector<std::string> tol;
    std::string format = "json";
    bool exact = false;
    std::string out;
    bool normalize = false;

    std::vector<std::string> point;
    int chart = 0;
    double complex_scale = 0.0;
};

const char* kDefaultModuli[][2] = {{"1", "1"}, {"1/3", "4"}, {"0", "2/sqrt3"}};

std::vector<std::pair<std::string, std::string>> moduli_strings(const Options& o, bool first_only) {
    std::vector<std::pair<std::string, std::string>> v;
    if (o.moduli.empty()) {
        for (const auto& d : kDefaultModuli) v.emplace_back(d[0], d[1]);
    } else {
        if (o.moduli.size() % 2) throw UsageError("--moduli takes two values: alpha b");
        for (std::size_t k = 0; k < o.moduli.size(); k += 2) v.emplace_back(o.moduli[k], o.moduli[k + 1]);
    }
    if (first_only) v.resize(1);
    return v;
}

std::vector<ModuliD> numeric_moduli(const Options& o, bool first_only = false) {
    std::vector<ModuliD> out;
    for (const auto& [a, b] : moduli_strings(o, first_only)) {
        ModuliD m{parse_real(a), parse_real(b)};
        if (m.b == 0.0) throw UsageError("moduli: b must be nonzero");
        out.push_back(m);
    }
    return out;
}

std::vector<ModuliQ> exact_moduli(const Options& o, bool first_only = false) {
    std::vector<ModuliQ> out;
    for (const auto& [a, b] : moduli_strings(o, first_only)) {
        ModuliQ m{parse_exact(a), parse_exact(b)};
        if (m.b.is_zero()) throw UsageError("moduli: b must be nonzero");
        out.push_back(m);
    }
    return out;
}

std::map<std::string, double> tolerances(const Options& o) {
    std::map<std::string, double> t;
    for (const auto& s : o.tol) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw UsageError("--tol expects NAME=VALUE, got '" + s + "'");
        t[s.substr(0, eq)] = parse_real(s.substr(eq + 1));
    }
    return t;
}

Vec7d numeric_point(const Options& o) {
    if (o.point.size() != 7) throw UsageError("--point takes seven coordinates");
    Vec7d y;
    for (int k = 0; k < 7; ++k) y(k) = parse_real(o.point[k]);
    double n = y.norm();
    if (n == 0.0) throw UsageError("--point must be nonzero");
    if (std::abs(n - 1.0) > 1e-9) {
        if (!o.normalize) throw UsageError("--point is not a unit vector (pass --normalize to rescale)");
        y /= n;
    }
    return y;
}

Vec7<QuadScalar> exact_point(const Options& o) {
    if (o.point.size() != 7) throw UsageError("--point takes seven coordinates");
    Vec7<QuadScalar> y;
    for (int k = 0; k < 7; ++k) y(k) = parse_exact(o.point[k]);
    QuadScalar n2 = y.squaredNorm();
    if (n2 != QuadScalar(1)) {
        if (!o.normalize) throw UsageError("--point is not a unit vector (pass --normalize to rescale)");
        auto n = exact_sqrt(n2);
        if (!n || n->is_zero()) throw ModeError("--normalize: the norm is not in Q(sqrt2, sqrt3)");
        y /= *n;
    }
    return y;
}

// ---- rendering ----

std::string fmt_num(double v, const char* spec = "%.17g") {
    char buf[48];
    if (spec[std::strlen(spec) - 1] == 'f' && std::abs(v) < 5e-7) v = 0.0;  // no "-0.000000" in aligned output
    std::snprintf(buf, sizeof buf, spec, v == 0.0 ? 0.0 : v);
    return buf;
}

std::string pretty_matrix(const Eigen::MatrixXd& m, const std::string& indent = "  ") {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << indent;
        for (Eigen::Index k = 0; k < m.cols(); ++k) os << fmt_num(m(i, k), "%11.6f") << (k + 1 < m.cols() ? " " : "");
        os << '\n';
    }
    return os.str();
}

template <class T> std::string pretty_matrix_exact(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& m) {
    std::vector<std::string> cells;
    std::size_t w = 1;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            cells.push_back(m(i, k).to_string());
            w = std::max(w, cells.back().size());
        }
    std::ostringstream os;
    std::size_t c = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << "  ";
        for (Eigen::Index k = 0; k < m.cols(); ++k, ++c)
            os << std::string(w - cells[c].size(), ' ') << cells[c] << (k + 1 < m.cols() ? "  " : "");
        os << '\n';
    }
    return os.str();
}

std::string csv_matrix(const std::string& label, const Eigen::MatrixXd& m) {
    std::ostringstream os;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        os << label << ',' << i;
        for (Eigen::Index k = 0; k < m.cols(); ++k) os << ',' << fmt_num(m(i, k));
        os << '\n';
    }
    return os.str();
}

using MatQ = Eigen::Matrix<QuadScalar, Eigen::Dynamic, Eigen::Dynamic>;

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + o.out + "' for writing");
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- subcommands ----

int cmd_verify(const Options& o) {
    VerifyConfig c;
    c.seed = o.seed;
    c.samples = o.samples;
    c.tol = tolerances(o);
    c.exact = o.exact;
    c.moduli = numeric_moduli(o);
    try {
        validate(c);
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    VerifyReport r = run_verify(c);
    if (o.format == "json") {
        emit(o, dump(report_to_json(r, c)));
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "suite,name,anchor,max_residual,tol,expect_above,samples,pass\n";
        for (const auto& k : r.checks)
            os << k.suite << ",\"" << k.name << "\",\"" << k.anchor << "\"," << fmt_num(k.residual) << ','
               << fmt_num(k.tol) << ',' << k.expect_above << ',' << k.samples << ',' << (k.pass ? "pass" : "fail")
               << '\n';
        emit(o, os.str());
    } else {
        std::ostringstream os;
        std::size_t w = 0;
        for (const auto& k : r.checks) w = std::max(w, k.suite.size() + k.name.size() + 1);
        for (const auto& k : r.checks) {
            std::string id = k.suite + "/" + k.name;
            os << (k.pass ? "PASS " : "FAIL ") << id << std::string(w - id.size() + 2, ' ')
               << fmt_num(k.residual, "%10.3e") << (k.expect_above ? " >  " : " <= ") << fmt_num(k.tol, "%8.1e")
               << "  " << k.anchor << '\n';
        }
        int failed = 0;
        for (const auto& k : r.checks) failed += !k.pass;
        os << r.checks.size() - failed << "/" << r.checks.size() << " checks passed\n";
        emit(o, os.str());
    }
    return r.passed() ? 0 : 1;
}

int cmd_j(const Options& o) {
    Json entries = Json::array();
    std::ostringstream text;
    Json head;
    if (o.exact) {
        if (o.format == "csv") throw UsageError("csv output is numeric only");
        Vec7<QuadScalar> y = exact_point(o);
        int chart = o.chart ? o.chart : best_chart(to_double(y));
        if (!chart_contains(chart, y)) throw UsageError("the point is outside chart " + std::to_string(chart));
        auto fr = frame_at(chart, y);
        head = {{"chart", chart}, {"point", Json::array()}, {"exact", true}, {"frame", matrix_to_json(MatQ(fr.B))}};
        for (int k = 0; k < 7; ++k) head["point"].push_back(quad_to_json(y(k)));
        text << "chart " << chart << "\nframe B_y:\n" << pretty_matrix_exact(MatQ(fr.B));
        for (const auto& m : exact_moduli(o)) {
            auto sj = j_matrix(m, chart, y);
            Mat6<QuadScalar> sq = sj.J * sj.J + Mat6<QuadScalar>::Identity();
            Mat6<QuadScalar> orth = sj.J.transpose() * sj.J - Mat6<QuadScalar>::Identity();
            entries.push_back({{"moduli", moduli_to_json(m)},
                               {"J", matrix_to_json(MatQ(sj.J))},
                               {"diagnostics",
                                {{"square_is_minus_id", sq == Mat6<QuadScalar>::Zero()},
                                 {"orthogonal", orth == Mat6<QuadScalar>::Zero()}}}});
            text << "moduli alpha=" << m.alpha.to_string() << " b=" << m.b.to_string() << "\n"
                 << pretty_matrix_exact(MatQ(sj.J));
        }
    } else {
        Vec7d y = numeric_point(o);
        int chart = o.chart ? o.chart : best_chart(y);
        if (!chart_contains(chart, y)) throw UsageError("the point is outside chart " + std::to_string(chart));
        auto fr = frame_at(chart, y);
        head = {{"chart", chart}, {"point", vector_to_json(y)}, {"exact", false},
                {"frame", matrix_to_json(Eigen::MatrixXd(fr.B))}, {"frame_defect", frame_defect(fr)}};
        if (o.format == "csv") text << csv_matrix("frame", fr.B);
        else text << "chart " << chart << "\nframe B_y (defect " << fmt_num(frame_defect(fr), "%.2e") << "):\n"
                  << pretty_matrix(fr.B);
        for (const auto& m : numeric_moduli(o)) {
            auto sj = j_matrix(m, chart, y);
            double sq = sphere_square_defect(sj.J), orth = sphere_orthogonality_defect(sj.J);
            entries.push_back({{"moduli", moduli_to_json(m)},
                               {"J", matrix_to_json(Eigen::MatrixXd(sj.J))},
                               {"diagnostics", {{"square_defect", sq}, {"orthogonality_defect", orth}}}});
            if (o.format == "csv") {
                text << csv_matrix("J[" + fmt_num(m.alpha) + ";" + fmt_num(m.b) + "]", sj.J);
            } else {
                text << "moduli alpha=" << fmt_num(m.alpha, "%g") << " b=" << fmt_num(m.b, "%g")
                     << "  |J^2+1| = " << fmt_num(sq, "%.2e") << "  |J^T J-1| = " << fmt_num(orth, "%.2e") << "\n"
                     << pretty_matrix(sj.J);
            }
        }
    }
    if (o.format == "json") {
        head["entries"] = entries;
        emit(o, dump(head));
    } else {
        emit(o, text.str());
    }
    return 0;
}

int cmd_f(const Options& o) {
    const Mat7d I = Mat7d::Identity();
    if (o.exact) {
        Vec7<QuadScalar> x = exact_point(o);
        Mat7<QuadScalar> f = f_matrix_raw(x);
        const Mat7<QuadScalar> Iq = Mat7<QuadScalar>::Identity();
        Json d = {{"orthogonal", f.transpose() * f == Iq},
                  {"order_three", f * f * f == Iq},
                  {"fixes_point", Vec7<QuadScalar>(f * x) == x}};
        d["automorphism_residual"] = automorphism_residual(to_double(f));
        if (o.format == "json") {
            Json j = {{"point", Json::array()}, {"exact", true}, {"f", matrix_to_json(MatQ(f))}, {"diagnostics", d}};
            for (int k = 0; k < 7; ++k) j["point"].push_back(quad_to_json(x(k)));
            emit(o, dump(j));
        } else if (o.format == "csv") {
            emit(o, csv_matrix("f", to_double(f)));
        } else {
            emit(o, "f(x):\n" + pretty_matrix_exact(MatQ(f)) + "orthogonal " + d["orthogonal"].dump() +
                        "  order three " + d["order_three"].dump() + "  fixes x " + d["fixes_point"].dump() + "\n");
        }
        return 0;
    }
    Vec7d x = numeric_point(o);
    Mat7d f = f_matrix(x);
    double so7 = std::max(max_abs(Mat7d(f.transpose() * f - I)), std::abs(f.determinant() - 1.0));
    double cube = max_abs(Mat7d(f * f * f - I)), fix = max_abs(Vec7d(f * x - x)), aut = automorphism_residual(f);
    bool rotation = so7 <= 1e-10 && cube <= 1e-10 && fix <= 1e-10 && aut <= 1e-10;
    Json d = {{"so7_residual", so7},     {"order_three_residual", cube}, {"fixed_point_residual", fix},
              {"automorphism_residual", aut}, {"g2_rotation", rotation}};
    if (o.format == "json") {
        emit(o, dump({{"point", vector_to_json(x)}, {"exact", false}, {"f", matrix_to_json(Eigen::MatrixXd(f))},
                      {"diagnostics", d}}));
    } else if (o.format == "csv") {
        emit(o, csv_matrix("f", f));
    } else {
        emit(o, "f(x):\n" + pretty_matrix(f) + "|f^T f - 1| " + fmt_num(so7, "%.2e") + "  |f^3 - 1| " +
                    fmt_num(cube, "%.2e") + "  |f x - x| " + fmt_num(fix, "%.2e") + "  automorphism " +
                    fmt_num(aut, "%.2e") + "\n");
    }
    return 0;
}

const char* kRootNames[14] = {"H+", "H-", "V+1", "V-1", "V+2", "V-2", "V+3", "V-3",
                              "U+1", "U-1", "U+2", "U-2", "U+3", "U-3"};

int cmd_basis(const Options& o) {
    Json mats = Json::object();
    std::ostringstream text;
    Json mj;
    if (o.exact) {
        ModuliQ m = exact_moduli(o, true).front();
        if (m.alpha.sign() <= 0) throw UsageError("basis: the root basis needs alpha > 0");
        auto rb = root_basis<QuadScalar>(QuadScalar(1) / m.alpha, m.b);
        for (int k = 0; k < 14; ++k) mats[kRootNames[k]] = matrix_to_json(rb.e[k]);
        mj = moduli_to_json(m);
        if (o.format != "json") throw UsageError("basis --exact supports json only");
    } else {
        ModuliD m = numeric_moduli(o, true).front();
        if (m.alpha <= 0.0) throw UsageError("basis: the root basis needs alpha > 0");
        auto rb = root_basis<double>(1.0 / m.alpha, m.b);
        for (int k = 0; k < 14; ++k) {
            Mat7cd c = to_complex_double(rb.e[k]);
            mats[kRootNames[k]] = matrix_to_json(Eigen::MatrixXcd(c));
            if (o.format == "csv") {
                for (int i = 0; i < 7; ++i)
                    for (int j = 0; j < 7; ++j)
                        if (c(i, j) != 0.0)
                            text << kRootNames[k] << ',' << i << ',' << j << ',' << fmt_num(c(i, j).real()) << ','
                                 << fmt_num(c(i, j).imag()) << '\n';
            } else {
                text << kRootNames[k] << " (real part)\n" << pretty_matrix(c.real()) << kRootNames[k]
                     << " (imaginary part)\n" << pretty_matrix(c.imag());
            }
        }
        mj = moduli_to_json(m);
    }
    if (o.format == "json") emit(o, dump({{"moduli", mj}, {"order", kRootNames}, {"matrices", mats}}));
    else emit(o, (o.format == "csv" ? std::string("name,row,col,re,im\n") : std::string()) + text.str());
    return 0;
}

int cmd_polys(const Options& o) {
    ModuliQ m = exact_moduli(o, true).front();
    PolyTables t = extract_matrix_elements(m);
    if (o.format == "json") {
        emit(o, dump(poly_tables_to_json(t)));
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "table,i,j,monomial,c0,c1,c2,c3\n";
        auto rows = [&](const char* name, int i, int j, const MultiPoly& p) {
            for (const auto& [e, c] : p.terms()) {
                os << name << ',' << i << ',' << j << ',' << monomial_name(e);
                for (int k = 0; k < 4; ++k) os << ',' << c[k].get_str();
                os << '\n';
            }
        };
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j) rows("P", i + 1, j + 1, t.P[i][j]);
        rows("Q0", 0, 0, t.Q0);
        for (int i = 0; i < 7; ++i)
            for (int j = i; j < 7; ++j) rows("Q", i + 1, j + 1, t.Q[i][j]);
        emit(o, os.str());
    } else {
        PolyStats s = poly_stats(t);
        std::ostringstream os;
        os << "nonzero P: " << s.nonzero_p << "  nonzero Q (with Q0): " << s.nonzero_q
           << "  max terms: " << s.max_terms << "  max x-degree: " << s.max_x_degree << "\n";
        for (int i = 0; i < 7; ++i)
            for (int j = 0; j < 7; ++j)
                if (!t.P[i][j].is_zero())
                    os << "P" << i + 1 << j + 1 << " (" << t.P[i][j].size() << " terms) = " << t.P[i][j].to_string()
                       << "\n";
        emit(o, os.str());
    }
    return 0;
}

int cmd_orbit_dim(const Options& o) {
    if (o.complex_scale < 0.0) throw UsageError("--complex-scale must be non-negative");
    std::vector<ModuliD> ms;
    for (const auto& m : numeric_moduli(o))
        if (m.alpha > 0.0) ms.push_back(m);
    if (ms.empty()) throw UsageError("orbit-dim: needs at least one modulus with alpha > 0");
    const double tol = tolerances(o).count("orbit") ? tolerances(o).at("orbit") : default_tolerances().at("orbit");
    std::vector<std::pair<Mat14cd, Mat14cd>> proj;
    for (const auto& m : ms)
        proj.emplace_back(subspace_projection(samelson_subspace(m)), subspace_projection(conj_samelson_subspace(m)));
    Rng rng(o.seed);
    Json rows = Json::array();
    std::ostringstream text;
    if (o.format == "csv") text << "sample,alpha,b,dim_s,dim_conj_s,top_modulus_s,top_modulus_conj_s\n";
    for (int s = 0; s < o.samples; ++s) {
        Mat7cd g = o.complex_scale > 0.0 ? random_g2c_group(rng, 1.0, o.complex_scale) : to_complex(random_g2_group(rng));
        Mat14cd t = subspace_projection(orbit_tangent(g));
        for (std::size_t k = 0; k < ms.size(); ++k) {
            Json row = {{"sample", s}, {"moduli", moduli_to_json(ms[k])}};
            double top[2] = {0, 0};
            for (int side = 0; side < 2; ++side) {
                const Mat14cd& p = side == 0 ? proj[k].first : proj[k].second;
                const char* key = side == 0 ? "s" : "conj_s";
                Json spec = Json::array();
                try {
                    auto rep = intersection_report(p, t, tol);
                    row[std::string("dim_") + key] = rep.dim;
                    for (const auto& mu : rep.spectrum) spec.push_back({mu.real(), mu.imag()});
                    top[side] = rep.spectrum.empty() ? 0.0 : std::abs(rep.spectrum.front());
                } catch (const IndeterminateError& e) {
                    row[std::string("dim_") + key] = nullptr;
                    for (const auto& mu : e.spectrum) spec.push_back({mu.real(), mu.imag()});
                    top[side] = e.spectrum.empty() ? 0.0 : std::abs(e.spectrum.front());
                }
                row[std::string("spectrum_") + key] = spec;
            }
            auto dim_text = [](const Json& d) { return d.is_null() ? std::string("?") : d.dump(); };
            if (o.format == "csv") {
                text << s << ',' << fmt_num(ms[k].alpha) << ',' << fmt_num(ms[k].b) << ',' << dim_text(row["dim_s"])
                     << ',' << dim_text(row["dim_conj_s"]) << ',' << fmt_num(top[0]) << ',' << fmt_num(top[1]) << '\n';
            } else {
                text << "sample " << s << "  alpha=" << fmt_num(ms[k].alpha, "%g") << " b=" << fmt_num(ms[k].b, "%g")
                     << "  dims (" << dim_text(row["dim_s"]) << "," << dim_text(row["dim_conj_s"]) << ")  top |mu| "
                     << fmt_num(top[0], "%.8f") << " " << fmt_num(top[1], "%.8f") << '\n';
            }
            rows.push_back(std::move(row));
        }
    }
    if (o.format == "json")
        emit(o, dump({{"seed", o.seed}, {"samples", o.samples}, {"complex_scale", o.complex_scale}, {"tol", tol},
                      {"rows", rows}}));
    else
        emit(o, text.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"G2, the six-sphere and the Samelson complex structures: checks and exports", "octosphere"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "PRNG seed (splitmix64)");
    app.add_option("--samples", o.samples, "number of random samples");
    app.add_option("--moduli", o.moduli, "alpha b, with alpha = 1/a (repeatable; exact forms like 2/sqrt3 accepted)")
        ->expected(2)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->allow_extra_args(false);
    app.add_option("--tol", o.tol, "tolerance override NAME=VALUE (repeatable)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->allow_extra_args(false);
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_flag("--exact", o.exact, "exact arithmetic in Q(sqrt2, sqrt3)");
    app.add_option("--out", o.out, "write output to FILE");
    app.add_flag("--normalize", o.normalize, "rescale a non-unit --point");

    auto* verify = app.add_subcommand("verify", "run all verification suites");
    auto* j = app.add_subcommand("j", "6x6 matrix of the sphere tensor in a chart frame");
    j->add_option("--point", o.point, "y1 .. y7")->expected(7)->required();
    j->add_option("--chart", o.chart, "chart index 1..7 (default: the best chart)")->check(CLI::Range(1, 7));
    auto* f = app.add_subcommand("f", "the inner automorphism f(x)");
    f->add_option("--point", o.point, "x1 .. x7")->expected(7)->required();
    auto* basis = app.add_subcommand("basis", "the 14 root-basis matrices");
    auto* polys = app.add_subcommand("polys", "exact polynomial matrix elements");
    auto* orbit = app.add_subcommand("orbit-dim", "intersection dimensions against orbit tangent spaces");
    orbit->add_option("--complex-scale", o.complex_scale, "imaginary scale for complex group elements (0: real)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (o.samples < 1) throw UsageError("--samples must be at least 1");
        if (*verify) return cmd_verify(o);
        if (*j) return cmd_j(o);
        if (*f) return cmd_f(o);
        if (*basis) return cmd_basis(o);
        if (*polys) return cmd_polys(o);
        if (*orbit) return cmd_orbit_dim(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ModeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
