#include "octosphere/verify.hpp"

#include "octosphere/j_sphere.hpp"
#include "octosphere/orbit.hpp"
#include "octosphere/random.hpp"

#include <cmath>
#include <functional>

namespace octosphere {

std::vector<ModuliD> default_moduli() {
    return {ModuliD::from_ab(1, 1), ModuliD::from_ab(3, 4), ModuliD{0.0, 2.0 / std::sqrt(3.0)}};
}

const std::map<std::string, double>& default_tolerances() {
    static const std::map<std::string, double> t = {
        {"octonion", 1e-12}, {"g2", 1e-10},      {"samelson", 1e-10},  {"sphere_map", 1e-10},
        {"charts", 1e-10},   {"sphere_j", 1e-9}, {"nijenhuis", 1e-6},  {"orbit", 1e-7},
    };
    return t;
}

void validate(const VerifyConfig& c) {
    if (c.samples < 1) throw DomainError("samples must be at least 1");
    for (const auto& [name, v] : c.tol) {
        if (!default_tolerances().count(name)) throw DomainError("unknown tolerance '" + name + "'");
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("tolerance '" + name + "' must be positive");
    }
    for (const auto& m : c.moduli)
        if (m.b == 0.0 || !std::isfinite(m.b) || !std::isfinite(m.alpha)) throw DomainError("moduli need finite alpha and b != 0");
}

double tolerance(const VerifyConfig& c, const std::string& name) {
    auto it = c.tol.find(name);
    return it != c.tol.end() ? it->second : default_tolerances().at(name);
}

bool VerifyReport::passed() const {
    for (const auto& r : checks)
        if (!r.pass) return false;
    return true;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> s = {"octonion", "g2_basis", "samelson", "sphere_map",
                                               "charts",   "sphere_j", "orbit_dim"};
    return s;
}

namespace {

struct Collector {
    std::string suite;
    std::vector<CheckResult> out;

    void add(const std::string& name, const std::string& anchor, double residual, double tol, int samples,
             bool above = false) {
        CheckResult r{suite, name, anchor, residual, tol, above, samples, false};
        r.pass = std::isfinite(residual) && (above ? residual > tol : residual <= tol);
        out.push_back(std::move(r));
    }
    // exact checks: residual is the number of violations
    void add_exact(const std::string& name, const std::string& anchor, int violations, int samples) {
        add(name, anchor, violations, 0.0, samples);
    }
};

std::string tag(const ModuliD& m) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "[alpha=%.6g b=%.6g]", m.alpha, m.b);
    return buf;
}

const std::vector<ModuliD>& moduli_of(const VerifyConfig& c, std::vector<ModuliD>& storage) {
    storage = c.moduli.empty() ? default_moduli() : c.moduli;
    return storage;
}

Rng suite_rng(const VerifyConfig& c, int k) { return Rng(c.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(k + 1)); }

Octonion<double> random_octonion(Rng& rng) {
    Octonion<double> o;
    for (auto& v : o.c) v = rng.normal();
    return o;
}

Mat6d standard_block() {
    Mat6d m = Mat6d::Zero();
    for (int k = 0; k < 3; ++k) {
        m(2 * k, 2 * k + 1) = 1;
        m(2 * k + 1, 2 * k) = -1;
    }
    return m;
}

void octonion_suite(const VerifyConfig& c, Collector& col) {
    const double tol = tolerance(c, "octonion");
    const auto& tab = octonion_table();
    int bad = 0;
    for (int i = 0; i < 8; ++i) {
        if (tab[0][i].sign != 1 || tab[0][i].index != i || tab[i][0].sign != 1 || tab[i][0].index != i) ++bad;
        for (int j = 1; j < 8; ++j) {
            if (i == 0) continue;
            const auto& e = tab[i][j];
            if (i == j) {
                bad += !(e.index == 0 && e.sign == -1);
                continue;
            }
            const auto& r = tab[j][i];
            bad += !(r.index == e.index && r.sign == -e.sign);
            // e_i e_j = s e_k  implies  e_j e_k = s e_i
            const auto& cyc = tab[j][e.index];
            bad += !(cyc.index == i && cyc.sign == e.sign);
        }
    }
    col.add_exact("multiplication table", "e_i e_j = -e_j e_i, e_i^2 = -1, cyclic triples", bad, 64);

    Rng rng = suite_rng(c, 0);
    double norm_res = 0, alt_res = 0, inner_res = 0;
    for (int s = 0; s < c.samples; ++s) {
        auto u = random_octonion(rng), v = random_octonion(rng);
        double nu = oct_norm2(u), nv = oct_norm2(v);
        norm_res = std::max(norm_res, std::abs(oct_norm2(u * v) - nu * nv) / (nu * nv));
        Octonion<double> d = (u * u) * v - u * (u * v);
        alt_res = std::max(alt_res, std::sqrt(oct_norm2(d)) / (nu * std::sqrt(nv)));
        Vec7d x = random_unit7(rng);
        Octonion<double> xo = Octonion<double>::imaginary(x);
        Mat7d m;
        for (int k = 0; k < 7; ++k) m.col(k) = conj_by_point(xo, Octonion<double>::unit(k + 1)).imag_vector();
        inner_res = std::max(inner_res, automorphism_residual(m));
    }
    col.add("norm multiplicativity", "|uv| = |u||v|", norm_res, tol, c.samples);
    col.add("alternativity", "(uu)v = u(uv)", alt_res, tol, c.samples);
    col.add("inner automorphism", "conjugation by e0 + sqrt3 x is an automorphism", inner_res, tol * 100, c.samples);
}

void g2_suite(const VerifyConfig& c, Collector& col) {
    const double tol = tolerance(c, "g2");
    std::vector<ModuliD> store;
    for (const auto& m : moduli_of(c, store)) {
        if (m.alpha <= 0.0) continue;  // the root basis needs 0 < a < infinity
        RootBasis<double> rb = root_basis<double>(1.0 / m.alpha, m.b);
        double unit = 0;
        for (const auto& e : rb.e) {
            auto ip = hermitian_ip(e, e);
            unit = std::max(unit, std::abs(ip.re - 1.0) + std::abs(ip.im));
        }
        col.add("unit norm " + tag(m), "<E, E> = 1 for the root basis", unit, tol, 14);
        double closure = std::max({bracket_closure_residual(samelson_basis(rb)),
                                   bracket_closure_residual(conj_samelson_basis(rb)),
                                   bracket_closure_residual(su3_basis(rb))});
        col.add("bracket closure " + tag(m), "[s, s] in s, [conj s, conj s] in conj s, [su3, su3] in su3", closure,
                tol, 3);
        auto all = samelson_basis(rb);
        for (const auto& v : conj_samelson_basis(rb)) all.push_back(v);
        col.add_exact("complementary " + tag(m), "s + conj(s) = g2^C", 14 - complex_rank(all), 1);
    }
    const auto& re = canonical_real_basis<double>();
    double der = 0, orth = 0;
    for (int i = 0; i < 14; ++i) {
        der = std::max(der, derivation_residual(re[i]));
        for (int j = 0; j < 14; ++j) orth = std::max(orth, std::abs(real_ip(re[i], re[j]) - (i == j ? 1.0 : 0.0)));
    }
    col.add("real basis derivations", "real basis lies in g2", der, tol, 14);
    col.add("real basis orthonormal", "tr(X Y^T) = delta", orth, tol, 196);

    if (c.exact) {
        RootBasis<QuadScalar> rq = root_basis<QuadScalar>(QuadScalar(3), QuadScalar(4));
        int bad = 0;
        for (const auto& e : rq.e) bad += !(hermitian_ip(e, e) == Cx<QuadScalar>{QuadScalar(1), QuadScalar(0)});
        bad += !is_bracket_closed(samelson_basis(rq));
        bad += !is_bracket_closed(conj_samelson_basis(rq));
        bad += !is_bracket_closed(su3_basis(rq));
        auto all = samelson_basis(rq);
        for (const auto& v : conj_samelson_basis(rq)) all.push_back(v);
        bad += !exact_independent(all);
        col.add_exact("exact structure at (3,4)", "unit norms, closure, s + conj(s) = g2^C", bad, 1);
    }
}

void samelson_suite(const VerifyConfig& c, Collector& col) {
    const double tol = tolerance(c, "samelson");
    const double orth_b = 2.0 / std::sqrt(3.0);
    std::vector<ModuliD> store;
    for (const auto& m : moduli_of(c, store)) {
        auto J = j_operator(m);
        col.add("J^2 " + tag(m), "J^2 = -1", square_defect(J), tol, 1);
        col.add("algebra Nijenhuis " + tag(m), "N_J = 0 on g2", nijenhuis_algebra_max(J), tol, 91);
        if (m.alpha > 0.0) {
            // X, Y blocks coincide; the Cartan block is the transpose of the literal substitution
            Mat14<double> js = j_from_subalgebra(m).matrix, expect = J.matrix;
            expect.topLeftCorner<2, 2>() = cartan_block_literal(1.0 / m.alpha, m.b).transpose();
            col.add("subalgebra correspondence " + tag(m), "J(re W) = -im W on s", max_abs(Mat14<double>(js - expect)),
                    tol, 1);
        }
        Mat14<double> skew = J.matrix + J.matrix.transpose();
        double od = std::max(max_abs(skew), max_abs(Mat14<double>(J.matrix.transpose() * J.matrix - Mat14<double>::Identity())));
        bool special = std::abs(m.alpha) < 1e-14 && std::abs(std::abs(m.b) - orth_b) < 1e-14;
        if (special)
            col.add("orthogonal " + tag(m), "J orthogonal at a = inf, b = +-2/sqrt3", od, tol, 1);
        else
            col.add("not orthogonal " + tag(m), "J orthogonal only at a = inf, b = +-2/sqrt3", od, tol, 1, true);
    }
    if (c.exact) {
        auto J = j_operator(ModuliQ::from_ab(QuadScalar(3), QuadScalar(4)));
        col.add_exact("exact J^2 at (3,4)", "J^2 = -1", !(J.matrix * J.matrix == -Mat14<QuadScalar>::Identity()), 1);
    }
}

void sphere_map_suite(const VerifyConfig& c, Collector& col) {
    const double tol = tolerance(c, "sphere_map");
    Rng rng = suite_rng(c, 3);
    double so7 = 0, cube = 0, fix = 0, anti = 0, aut = 0, quad = 0, push = 0, conf = 0, trip = 0;
    const Mat7d I = Mat7d::Identity();
    for (int s = 0; s < c.samples; ++s) {
        Vec7d x = random_unit7(rng);
        Mat7d f = f_matrix(x);
        so7 = std::max({so7, max_abs(Mat7d(f.transpose() * f - I)), std::abs(f.determinant() - 1.0)});
        cube = std::max(cube, max_abs(Mat7d(f * f * f - I)));
        fix = std::max(fix, max_abs(Vec7d(f * x - x)));
        anti = std::max(anti, max_abs(Mat7d(f_matrix(Vec7d(-x)) - f.transpose())));
        aut = std::max(aut, automorphism_residual(f));
        quad = std::max(quad, max_abs(Mat7d(I + f + f * f - 3.0 * x * x.transpose())));
        auto [xi, eta] = random_tangent_pair(rng, x);
        xi *= rng.uniform(0.5, 2.0);
        eta += rng.uniform(-1, 1) * xi;
        push = std::max(push, pushforward_identity_residual(x, xi));
        Mat7d a = f.transpose() * f_pushforward(x, xi), b = f.transpose() * f_pushforward(x, eta);
        conf = std::max(conf, std::abs(real_ip(a, b) - 9.0 * xi.dot(eta)));
        trip = std::max(trip, max_abs(Vec7d(f_pullback(x, f_pushforward(x, xi)) - xi)));
    }
    col.add("special orthogonal", "f(x) in SO(7)", so7, tol, c.samples);
    col.add("order three", "f(x)^3 = id", cube, tol, c.samples);
    col.add("fixed axis", "f(x) x = x", fix, tol, c.samples);
    col.add("antipode", "f(-x) = f(x)^T", anti, tol, c.samples);
    col.add("automorphism", "f(x) in G2", aut, tol, c.samples);
    col.add("quadratic relation", "id + f + f^2 = 3 x x^T", quad, tol, c.samples);
    col.add("pushforward identity", "f(x) xi + (f_* xi) x = xi", push, tol, c.samples);
    col.add("conformal factor", "<f^-1 f_* xi, f^-1 f_* eta> = 9 <xi, eta>", conf, tol, c.samples);
    col.add("pullback round trip", "f^* f_* xi = xi", trip, tol, c.samples);
    Vec7<QuadScalar> e1 = Vec7<QuadScalar>::Unit(0);
    col.add_exact("north pole", "f(e1) = Lambda", !(f_matrix_raw(e1) == lambda_matrix<QuadScalar>()), 1);
}

void charts_suite(const VerifyConfig& c, Collector& col) {
    const double tol = tolerance(c, "charts");
    Rng rng = suite_rng(c, 4);
    for (int i = 1; i <= 7; ++i) {
        double d = 0;
        for (int s = 0; s < c.samples; ++s) d = std::max(d, frame_defect(frame_at(i, random_in_chart(rng, i))));
        col.add("frame chart " + std::to_string(i), "B_y in G2, B^3 = id, column i = y", d, tol, c.samples);
    }
    Vec7<QuadScalar> e1 = Vec7<QuadScalar>::Unit(0);
    col.add_exact("frame at e1", "B_e1 = Lambda", !(frame_at(1, e1).B == lambda_matrix<QuadScalar>()), 1);
    int uncovered = 0;
    const int n = 10 * c.samples;
    for (int s = 0; s < n; ++s) {
        Vec7d y = random_unit7(rng);
        bool any = false;
        for (int i = 1; i <= 7 && !any; ++i) any = chart_contains(i, y);
        uncovered += !any;
    }
    col.add_exact("covering", "U_1 ... U_7 cover S^6", uncovered, n);
}

void sphere_j_suite(const VerifyConfig& c, Collector& col) {
    const double tol = tolerance(c, "sphere_j");
    std::vector<ModuliD> store;
    const auto& ms = moduli_of(c, store);
    const Vec7d e1 = Vec7d::Unit(0);
    Rng rng = suite_rng(c, 5);
    std::vector<Vec7d> pts;
    for (int s = 0; s < c.samples; ++s) pts.push_back(random_unit7(rng));

    for (const auto& m : ms) {
        col.add("north pole block " + tag(m), "J_e1 is the standard block",
                max_abs(Mat6d(j_matrix(m, 1, e1).J - standard_block())), tol, 1);
        double sq = 0, orth = 0;
        for (const auto& y : pts) {
            Mat6d M = j_matrix(m, best_chart(y), y).J;
            sq = std::max(sq, sphere_square_defect(M));
            orth = std::max(orth, sphere_orthogonality_defect(M));
        }
        col.add("square " + tag(m), "J^2 = -id on T S^6", sq, tol, c.samples);
        col.add("orthogonal " + tag(m), "J^T J = id on T S^6", orth, tol, c.samples);
    }
    double indep = 0;
    for (const auto& y : pts) {
        int ch = best_chart(y);
        Mat6d ref = j_matrix(ms.front(), ch, y).J;
        for (std::size_t k = 1; k < ms.size(); ++k) indep = std::max(indep, max_abs(Mat6d(j_matrix(ms[k], ch, y).J - ref)));
    }
    col.add("moduli independence", "J on S^6 does not depend on (a, b)", indep, tol, c.samples);

    double ident = 0, inv = 0, comp = 0, fact = 0;
    for (int s = 0; s < c.samples; ++s) {
        Vec7d y1 = random_in_chart(rng, 1), y2 = random_in_chart(rng, 1), y3 = random_in_chart(rng, 1);
        ident = std::max(ident, max_abs(Mat6d(theta(1, y1, y1) - Mat6d::Identity())));
        inv = std::max(inv, max_abs(Mat6d(theta(1, y1, y2) * theta(1, y2, y1) - Mat6d::Identity())));
        comp = std::max(comp, max_abs(Mat6d(theta(1, y2, y3) * theta(1, y1, y2) - theta(1, y1, y3))));
        fact = std::max(fact, factorization_residual(ms.front(), y1));
    }
    col.add("theta identity", "Theta_{y,y} = id", ident, tol, c.samples);
    col.add("theta inverse", "Theta_{y1,y2} Theta_{y2,y1} = id", inv, tol, c.samples);
    col.add("theta composition", "Theta_{y3,y2} Theta_{y2,y1} = Theta_{y3,y1}", comp, tol, c.samples);
    col.add("factorization", "J_y = Theta J_e1 Theta^-1", fact, tol, c.samples);

    double gauge = 0;
    int done = 0;
    for (int guard = 0; done < c.samples && guard < 100 * c.samples; ++guard) {
        Vec7d y = random_unit7(rng);
        std::vector<int> in;
        for (int i = 1; i <= 7; ++i)
            if (y(i - 1) > -0.45) in.push_back(i);
        if (in.size() < 2) continue;
        gauge = std::max(gauge, gauge_covariance_residual(ms.front(), y, in[0], in[1]));
        ++done;
    }
    col.add("gauge covariance", "M_c1 = G^T M_c2 G on chart overlaps", gauge, tol, done);

    // integrability by finite differences: e1 plus a few interior points of chart 1
    const double ntol = tolerance(c, "nijenhuis");
    const int npts = std::max(1, c.samples / 20);
    std::vector<Vec7d> npoints{e1};
    for (int s = 0; s < npts; ++s) npoints.push_back(random_in_chart(rng, 1, 0.3));
    for (const auto& m : ms) {
        double worst = 0, control = std::numeric_limits<double>::infinity();
        TensorField field = sphere_tensor(m), flipped = flipped_block_tensor(m, 1);
        for (std::size_t k = 0; k < npoints.size(); ++k) {
            double cw = 0;
            for (int p = 0; p < 6; ++p)
                for (int q = p + 1; q < 6; ++q) {
                    worst = std::max(worst, nijenhuis_sphere(1, npoints[k], field, p, q).value.norm());
                    if (k > 0) cw = std::max(cw, nijenhuis_sphere(1, npoints[k], flipped, p, q).value.norm());
                }
            if (k > 0) control = std::min(control, cw);
        }
        col.add("sphere Nijenhuis " + tag(m), "N_J = 0 on S^6", worst, ntol, static_cast<int>(npoints.size()) * 15);
        col.add("flipped control " + tag(m), "a sign-flipped frame block is not integrable", control, 1e-2, npts, true);
    }
}

void orbit_suite(const VerifyConfig& c, Collector& col) {
    const double tol = tolerance(c, "orbit");
    std::vector<ModuliD> store;
    Rng rng = suite_rng(c, 6);
    const int n = std::max(1, c.samples / 10);
    std::vector<Mat7cd> gs{Mat7cd::Identity()};
    for (int s = 0; s < n; ++s) gs.push_back(to_complex(random_g2_group(rng)));
    for (const auto& m : moduli_of(c, store)) {
        if (m.alpha <= 0.0) continue;
        Mat14cd ps = subspace_projection(samelson_subspace(m)), pc = subspace_projection(conj_samelson_subspace(m));
        double centre = 0, worst = 0;
        for (std::size_t k = 0; k < gs.size(); ++k) {
            Mat14cd t = subspace_projection(orbit_tangent(gs[k]));
            for (const Mat14cd* p : {&ps, &pc}) {
                double miss;
                try {
                    miss = std::abs(intersection_dim(*p, t, tol) - 3);
                } catch (const IndeterminateError&) {
                    miss = 3;
                }
                double& slot = k == 0 ? centre : worst;
                slot = std::max(slot, miss);
            }
        }
        col.add_exact("centre " + tag(m), "dim(s cap T_Lambda O) = dim(conj s cap T_Lambda O) = 3", static_cast<int>(centre), 1);
        col.add_exact("random G2 " + tag(m), "dim(s cap T O) = dim(conj s cap T O) = 3", static_cast<int>(worst), n);
    }
}

} // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& c) {
    validate(c);
    static const std::map<std::string, std::function<void(const VerifyConfig&, Collector&)>> table = {
        {"octonion", octonion_suite}, {"g2_basis", g2_suite}, {"samelson", samelson_suite},
        {"sphere_map", sphere_map_suite}, {"charts", charts_suite}, {"sphere_j", sphere_j_suite},
        {"orbit_dim", orbit_suite},
    };
    auto it = table.find(suite);
    if (it == table.end()) throw DomainError("unknown suite '" + suite + "'");
    Collector col{suite, {}};
    it->second(c, col);
    return col.out;
}

VerifyReport run_verify(const VerifyConfig& c) {
    VerifyReport r;
    for (const auto& s : suite_names()) {
        auto part = run_suite(s, c);
        r.checks.insert(r.checks.end(), part.begin(), part.end());
    }
    return r;
}

Json report_to_json(const VerifyReport& r, const VerifyConfig& c) {
    Json checks = Json::array();
    for (const auto& k : r.checks)
        checks.push_back({{"suite", k.suite},
                          {"name", k.name},
                          {"anchor", k.anchor},
                          {"max_residual", k.residual},
                          {"tol", k.tol},
                          {"expect_above", k.expect_above},
                          {"samples", k.samples},
                          {"pass", k.pass}});
    Json moduli = Json::array();
    std::vector<ModuliD> store;
    for (const auto& m : moduli_of(c, store)) moduli.push_back(moduli_to_json(m));
    Json tols = Json::object();
    for (const auto& [name, v] : default_tolerances()) tols[name] = tolerance(c, name);
    int failed = 0;
    for (const auto& k : r.checks) failed += !k.pass;
    return {{"seed", c.seed},          {"samples", c.samples}, {"exact", c.exact},
            {"moduli", moduli},        {"tolerances", tols},   {"checks", checks},
            {"failed", failed},        {"passed", r.passed()}};
}

} // namespace octosphere
