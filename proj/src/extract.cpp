#include "octosphere/extract.hpp"

#include "octosphere/j_sphere.hpp"

#include <vector>

namespace octosphere {

namespace {

struct Reduce {
    void operator()(MultiPoly& p) const { p = reduce(p); }
};

// Coefficient table of a polynomial that is bilinear in (block a, block b): the x-only parts.
void split_bilinear(const MultiPoly& p, VarBlock a, VarBlock b, PolyTable& out, MultiPoly* constant) {
    std::array<std::array<std::vector<MultiPoly::Term>, 7>, 7> buckets;
    std::vector<MultiPoly::Term> const_terms;
    for (const auto& [e, c] : p.terms()) {
        Exponent xe = e;
        std::vector<int> ia, ib;
        for (int k = 1; k <= 7; ++k) {
            int va = var_index(a, k), vb = var_index(b, k);
            for (int r = 0; r < e[va]; ++r) ia.push_back(k - 1);
            if (a != b)
                for (int r = 0; r < e[vb]; ++r) ib.push_back(k - 1);
            xe[va] = 0;
            xe[vb] = 0;
        }
        if (a == b && ia.size() == 2) {
            ib.push_back(ia[1]);
            ia.pop_back();
        }
        if (ia.empty() && ib.empty() && constant) {
            const_terms.emplace_back(xe, c);
            continue;
        }
        if (ia.size() != 1 || ib.size() != 1) throw ConsistencyError("extract: form is not bilinear after reduction");
        buckets[ia[0]][ib[0]].emplace_back(xe, c);
    }
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) out[i][j] = MultiPoly::from_terms(std::move(buckets[i][j]));
    if (constant) *constant = MultiPoly::from_terms(std::move(const_terms));
}

} // namespace

PolyTables extract_matrix_elements(const ModuliQ& m) {
    JOperator<QuadScalar> J = j_operator(m);
    Vec7<MultiPoly> x, xi;
    for (int k = 1; k <= 7; ++k) {
        x(k - 1) = MultiPoly::x(k);
        xi(k - 1) = MultiPoly::xi(k);
    }
    Mat7<MultiPoly> fx = f_matrix_raw(x);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) fx(i, j) = reduce(fx(i, j));
    Vec7<MultiPoly> jxi = j_vector_raw(J.matrix, x, fx, xi, Reduce{});

    PolyTables t;
    t.moduli = m;
    MultiPoly form;
    for (int k = 1; k <= 7; ++k) form += jxi(k - 1) * MultiPoly::eta(k);
    t.bilinear = reduce(form);
    split_bilinear(t.bilinear, VarBlock::Xi, VarBlock::Eta, t.P, nullptr);

    // the xi7 eta7 rule assumes <xi, eta> = 0, so substitute before reducing
    MultiPoly diag = form;
    for (int k = 1; k <= 7; ++k) diag = poly_subst(diag, var_index(VarBlock::Eta, k), MultiPoly::xi(k));
    t.diagonal = reduce(diag);
    split_bilinear(t.diagonal, VarBlock::Xi, VarBlock::Xi, t.Q, &t.Q0);
    return t;
}

PolyStats poly_stats(const PolyTables& t) {
    PolyStats s;
    auto visit = [&](const MultiPoly& p) {
        s.max_terms = std::max(s.max_terms, p.size());
        s.max_x_degree = std::max(s.max_x_degree, p.degree_in(VarBlock::X));
    };
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            if (!t.P[i][j].is_zero()) ++s.nonzero_p;
            visit(t.P[i][j]);
            if (j >= i) {
                if (!t.Q[i][j].is_zero()) ++s.nonzero_q;
                visit(t.Q[i][j]);
            }
        }
    if (!t.Q0.is_zero()) ++s.nonzero_q;
    visit(t.Q0);
    s.p77_zero = t.P[6][6].is_zero();
    s.q77_zero = t.Q[6][6].is_zero();
    return s;
}

namespace {
std::array<double, kPolyVars> assignment(const Vec7d& x) {
    std::array<double, kPolyVars> a{};
    for (int k = 0; k < 7; ++k) a[k] = x(k);
    return a;
}
} // namespace

double eval_bilinear(const PolyTables& t, const Vec7d& x, const Vec7d& xi, const Vec7d& eta) {
    auto a = assignment(x);
    double s = 0.0;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (!t.P[i][j].is_zero()) s += t.P[i][j].eval(a) * xi(i) * eta(j);
    return s;
}

double eval_diagonal(const PolyTables& t, const Vec7d& x, const Vec7d& xi) {
    auto a = assignment(x);
    double s = t.Q0.eval(a);
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j)
            if (!t.Q[i][j].is_zero()) s += t.Q[i][j].eval(a) * xi(i) * xi(j);
    return s;
}

int symbolic_difference_count(const PolyTables& a, const PolyTables& b) {
    int n = 0;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (!reduce(a.P[i][j] - b.P[i][j]).is_zero()) ++n;
    return n;
}

} // namespace octosphere
