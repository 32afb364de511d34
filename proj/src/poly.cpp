#include "octosphere/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace octosphere {

namespace {

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : e) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using TermMap = std::unordered_map<Exponent, QuadScalar, ExponentHash>;

Exponent add_exp(const Exponent& a, const Exponent& b) {
    Exponent r;
    for (int i = 0; i < kPolyVars; ++i) r[i] = static_cast<std::uint8_t>(a[i] + b[i]);
    return r;
}

bool divides(const Exponent& m, const Exponent& e) {
    for (int i = 0; i < kPolyVars; ++i)
        if (m[i] > e[i]) return false;
    return true;
}

Exponent sub_exp(const Exponent& e, const Exponent& m) {
    Exponent r;
    for (int i = 0; i < kPolyVars; ++i) r[i] = static_cast<std::uint8_t>(e[i] - m[i]);
    return r;
}

MultiPoly from_map(TermMap& m) {
    std::vector<MultiPoly::Term> v;
    v.reserve(m.size());
    for (auto& kv : m)
        if (!kv.second.is_zero()) v.emplace_back(kv.first, std::move(kv.second));
    return MultiPoly::from_terms(std::move(v));
}

} // namespace

std::string var_name(int index) {
    static const char* blocks[] = {"x", "xi", "eta"};
    return std::string(blocks[index / 7]) + std::to_string(index % 7 + 1);
}

int total_degree(const Exponent& e) {
    int d = 0;
    for (auto v : e) d += v;
    return d;
}

int block_degree(const Exponent& e, VarBlock b) {
    int d = 0;
    for (int k = 1; k <= 7; ++k) d += e[var_index(b, k)];
    return d;
}

bool grlex_less(const Exponent& a, const Exponent& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (int i = 0; i < kPolyVars; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MultiPoly::MultiPoly(int c) : MultiPoly(QuadScalar(c)) {}
MultiPoly::MultiPoly(long c) : MultiPoly(QuadScalar(c)) {}
MultiPoly::MultiPoly(const QuadScalar& c) {
    if (!c.is_zero()) terms_.emplace_back(Exponent{}, c);
}

MultiPoly MultiPoly::var(int index) {
    if (index < 0 || index >= kPolyVars) throw DomainError("MultiPoly::var: index out of range");
    Exponent e{};
    e[index] = 1;
    return monomial(e, QuadScalar(1));
}

MultiPoly MultiPoly::monomial(const Exponent& e, const QuadScalar& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace_back(e, c);
    return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grlex_less(a.first, b.first); });
    MultiPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second = p.terms_.back().second + t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

QuadScalar MultiPoly::coeff(const Exponent& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exponent& k) { return grlex_less(t.first, k); });
    if (it != terms_.end() && it->first == e) return it->second;
    return QuadScalar(0);
}

int MultiPoly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, total_degree(t.first));
    return d;
}

int MultiPoly::degree_in(VarBlock b) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, block_degree(t.first, b));
    return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    // merge of two sorted lists
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && grlex_less(terms_[i].first, o.terms_[j].first))) {
            out.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || grlex_less(o.terms_[j].first, terms_[i].first)) {
            out.push_back(o.terms_[j++]);
        } else {
            QuadScalar c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) out.emplace_back(terms_[i].first, std::move(c));
            ++i, ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1 && total_degree(a.terms_[0].first) == 0) return b.scaled(a.terms_[0].second);
    if (b.size() == 1 && total_degree(b.terms_[0].first) == 0) return a.scaled(b.terms_[0].second);
    TermMap acc;
    acc.reserve(a.size() * b.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            Exponent e = add_exp(ta.first, tb.first);
            auto it = acc.find(e);
            if (it == acc.end()) acc.emplace(e, ta.second * tb.second);
            else it->second = it->second + ta.second * tb.second;
        }
    return from_map(acc);
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly operator/(const MultiPoly& a, const MultiPoly& b) {
    if (b.size() != 1 || total_degree(b.terms_[0].first) != 0)
        throw DomainError("MultiPoly division: divisor must be a nonzero constant");
    return a.scaled(b.terms_[0].second.inv());
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != o.terms_[i].first || !(terms_[i].second == o.terms_[i].second)) return false;
    return true;
}

MultiPoly MultiPoly::scaled(const QuadScalar& c) const {
    if (c.is_zero()) return {};
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = t.second * c;
    return r;
}

double MultiPoly::eval(const std::array<double, kPolyVars>& at) const {
    double s = 0.0;
    for (const auto& t : terms_) {
        double m = t.second.embed();
        for (int i = 0; i < kPolyVars; ++i)
            for (int k = 0; k < t.first[i]; ++k) m *= at[i];
        s += m;
    }
    return s;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.to_string() << ")";
        for (int i = 0; i < kPolyVars; ++i) {
            if (it->first[i] == 0) continue;
            os << "*" << var_name(i);
            if (it->first[i] > 1) os << "^" << int(it->first[i]);
        }
    }
    return os.str();
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
double poly_eval(const MultiPoly& p, const std::array<double, kPolyVars>& at) { return p.eval(at); }

MultiPoly poly_subst(const MultiPoly& p, int index, const MultiPoly& replacement) {
    std::vector<MultiPoly> powers{MultiPoly(1)};
    MultiPoly out;
    std::vector<MultiPoly::Term> untouched;
    for (const auto& t : p.terms()) {
        int k = t.first[index];
        if (k == 0) {
            untouched.push_back(t);
            continue;
        }
        while (static_cast<int>(powers.size()) <= k) powers.push_back(powers.back() * replacement);
        Exponent rest = t.first;
        rest[index] = 0;
        out += MultiPoly::monomial(rest, t.second) * powers[k];
    }
    return out + MultiPoly::from_terms(std::move(untouched));
}

const std::vector<std::pair<Exponent, MultiPoly>>& reduction_rules() {
    static const std::vector<std::pair<Exponent, MultiPoly>> rules = [] {
        std::vector<std::pair<Exponent, MultiPoly>> r;
        auto mono = [](int a, int b) {
            Exponent e{};
            ++e[a];
            ++e[b];
            return e;
        };
        const VarBlock blocks[3] = {VarBlock::X, VarBlock::Xi, VarBlock::Eta};
        for (VarBlock b : blocks) {
            MultiPoly rep(1);
            for (int i = 1; i < 7; ++i) rep -= MultiPoly::var(var_index(b, i)) * MultiPoly::var(var_index(b, i));
            r.emplace_back(mono(var_index(b, 7), var_index(b, 7)), rep);
        }
        const std::pair<VarBlock, VarBlock> pairs[3] = {
            {VarBlock::X, VarBlock::Xi}, {VarBlock::X, VarBlock::Eta}, {VarBlock::Xi, VarBlock::Eta}};
        for (auto [b1, b2] : pairs) {
            MultiPoly rep;
            for (int i = 1; i < 7; ++i) rep -= MultiPoly::var(var_index(b1, i)) * MultiPoly::var(var_index(b2, i));
            r.emplace_back(mono(var_index(b1, 7), var_index(b2, 7)), rep);
        }
        return r;
    }();
    return rules;
}

std::vector<std::string> reduction_order_names() {
    return {"x7^2", "xi7^2", "eta7^2", "x7*xi7", "x7*eta7", "xi7*eta7"};
}

namespace {

// Normal form of a single monomial, cached per thread.
const MultiPoly& reduce_monomial(const Exponent& e) {
    thread_local std::unordered_map<Exponent, MultiPoly, ExponentHash> cache;
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    MultiPoly result;
    bool applied = false;
    for (const auto& [m, rep] : reduction_rules()) {
        if (!divides(m, e)) continue;
        Exponent rest = sub_exp(e, m);
        TermMap acc;
        for (const auto& t : rep.terms()) {
            const MultiPoly& sub = reduce_monomial(add_exp(rest, t.first));
            for (const auto& s : sub.terms()) {
                auto f = acc.find(s.first);
                if (f == acc.end()) acc.emplace(s.first, t.second * s.second);
                else f->second = f->second + t.second * s.second;
            }
        }
        result = from_map(acc);
        applied = true;
        break;
    }
    if (!applied) result = MultiPoly::monomial(e, QuadScalar(1));
    return cache.emplace(e, std::move(result)).first->second;
}

} // namespace

MultiPoly reduce(const MultiPoly& p) {
    TermMap acc;
    bool changed = false;
    for (const auto& t : p.terms()) {
        bool reducible = false;
        for (const auto& rule : reduction_rules())
            if (divides(rule.first, t.first)) {
                reducible = true;
                break;
            }
        if (!reducible) {
            auto f = acc.find(t.first);
            if (f == acc.end()) acc.emplace(t.first, t.second);
            else f->second = f->second + t.second;
            continue;
        }
        changed = true;
        for (const auto& s : reduce_monomial(t.first).terms()) {
            auto f = acc.find(s.first);
            if (f == acc.end()) acc.emplace(s.first, t.second * s.second);
            else f->second = f->second + t.second * s.second;
        }
    }
    if (!changed) return p;
    return from_map(acc);
}

} // namespace octosphere
