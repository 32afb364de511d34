#include "octosphere/json_io.hpp"

#include <regex>

namespace octosphere {

Json quad_to_json(const QuadScalar& q) {
    Json j;
    for (int k = 0; k < 4; ++k) j["c" + std::to_string(k)] = q[k].get_str();
    return j;
}

QuadScalar quad_from_json(const Json& j) {
    if (!j.is_object()) throw DomainError("quad_from_json: expected an object");
    std::array<Rational, 4> c;
    for (int k = 0; k < 4; ++k) {
        auto it = j.find("c" + std::to_string(k));
        if (it == j.end()) continue;
        if (!it->is_string()) throw DomainError("quad_from_json: coefficients are strings");
        try {
            c[k] = Rational(it->get<std::string>());
            c[k].canonicalize();
        } catch (const std::invalid_argument&) {
            throw DomainError("quad_from_json: bad rational '" + it->get<std::string>() + "'");
        }
        if (c[k].get_den() == 0) throw DomainError("quad_from_json: zero denominator");
    }
    return QuadScalar(c[0], c[1], c[2], c[3]);
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) r.push_back(m(i, k));
        rows.push_back(std::move(r));
    }
    return rows;
}

Json matrix_to_json(const Eigen::Matrix<QuadScalar, Eigen::Dynamic, Eigen::Dynamic>& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) r.push_back(quad_to_json(m(i, k)));
        rows.push_back(std::move(r));
    }
    return rows;
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) r.push_back({m(i, k).real(), m(i, k).imag()});
        rows.push_back(std::move(r));
    }
    return rows;
}

Json matrix_to_json(const CMat7<QuadScalar>& m) {
    Json rows = Json::array();
    for (int i = 0; i < 7; ++i) {
        Json r = Json::array();
        for (int k = 0; k < 7; ++k) r.push_back({quad_to_json(m.re(i, k)), quad_to_json(m.im(i, k))});
        rows.push_back(std::move(r));
    }
    return rows;
}

Json vector_to_json(const Eigen::VectorXd& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

std::string monomial_name(const Exponent& e) {
    std::string s;
    for (int v = 0; v < kPolyVars; ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += '*';
        s += var_name(v);
        if (e[v] > 1) s += '^' + std::to_string(e[v]);
    }
    return s.empty() ? "1" : s;
}

Json poly_to_json(const MultiPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p.terms()) j[monomial_name(e)] = quad_to_json(c);
    return j;
}

Json moduli_to_json(const ModuliD& m) { return {{"alpha", m.alpha}, {"b", m.b}}; }

Json moduli_to_json(const ModuliQ& m) {
    return {{"alpha", quad_to_json(m.alpha)}, {"b", quad_to_json(m.b)}, {"alpha_value", m.alpha.embed()},
            {"b_value", m.b.embed()}};
}

Json poly_tables_to_json(const PolyTables& t) {
    Json out;
    Json p = Json::array(), q = Json::array();
    for (int i = 0; i < 7; ++i) {
        Json prow = Json::array(), qrow = Json::array();
        for (int k = 0; k < 7; ++k) {
            prow.push_back(poly_to_json(t.P[i][k]));
            // upper triangle only; the lower entries are null
            qrow.push_back(k >= i ? poly_to_json(t.Q[i][k]) : Json());
        }
        p.push_back(std::move(prow));
        q.push_back(std::move(qrow));
    }
    out["P"] = std::move(p);
    out["Q"] = std::move(q);
    out["Q0"] = poly_to_json(t.Q0);
    out["reduction_order"] = reduction_order_names();
    out["moduli"] = moduli_to_json(t.moduli);
    PolyStats s = poly_stats(t);
    out["stats"] = {{"nonzero_count", {{"P", s.nonzero_p}, {"Q", s.nonzero_q}}},
                    {"max_terms", s.max_terms},
                    {"max_x_degree", s.max_x_degree},
                    {"P77_zero", s.p77_zero},
                    {"Q77_zero", s.q77_zero}};
    return out;
}

QuadScalar parse_exact(const std::string& s) {
    static const std::regex re(
        R"(^\s*([+-])?(?:(\d+)(?:/(\d+))?)?(?:(\*|/)?sqrt\(?([236])\)?)?\s*$)");
    std::smatch mt;
    if (!std::regex_match(s, mt, re) || (!mt[2].matched && !mt[5].matched))
        throw ModeError("parse_exact: '" + s + "' is not an exact value");
    Rational r = mt[2].matched ? Rational(mt[2].str()) : Rational(1);
    if (mt[3].matched) {
        Rational d(mt[3].str());
        if (d == 0) throw DomainError("parse_exact: zero denominator in '" + s + "'");
        r /= d;
    }
    if (mt[1].matched && mt[1].str() == "-") r = -r;
    QuadScalar v(r);
    if (mt[5].matched) {
        if (mt[2].matched && !mt[4].matched) throw ModeError("parse_exact: '" + s + "' is not an exact value");
        int n = std::stoi(mt[5].str());
        QuadScalar root = n == 2 ? QuadScalar::sqrt2() : n == 3 ? QuadScalar::sqrt3() : QuadScalar::sqrt6();
        if (mt[4].matched && mt[4].str() == "/") v /= root;
        else v *= root;
    }
    return v;
}

double parse_real(const std::string& s) {
    try {
        return parse_exact(s).embed();
    } catch (const ModeError&) {
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw DomainError("parse_real: '" + s + "' is not a number");
    }
    if (used != s.size() || !std::isfinite(v)) throw DomainError("parse_real: '" + s + "' is not a number");
    return v;
}

} // namespace octosphere
