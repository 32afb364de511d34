#include "octosphere/quad.hpp"
#include "octosphere/errors.hpp"

#include <cfloat>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace octosphere {

namespace {

constexpr mp_bitcnt_t kEmbedBits = 256;

struct Radicals {
    mpf_class s2{0, kEmbedBits}, s3{0, kEmbedBits}, s6{0, kEmbedBits};
    Radicals() {
        s2 = sqrt(mpf_class(2, kEmbedBits));
        s3 = sqrt(mpf_class(3, kEmbedBits));
        s6 = sqrt(mpf_class(6, kEmbedBits));
    }
};

const Radicals& radicals() {
    static const Radicals r;
    return r;
}

mpf_class high_precision_value(const std::array<Rational, 4>& c) {
    const auto& r = radicals();
    mpf_class acc(c[0], kEmbedBits);
    mpf_class t(0, kEmbedBits);
    if (sgn(c[1]) != 0) { t = c[1]; acc += t * r.s2; }
    if (sgn(c[2]) != 0) { t = c[2]; acc += t * r.s3; }
    if (sgn(c[3]) != 0) { t = c[3]; acc += t * r.s6; }
    return acc;
}

} // namespace

QuadScalar::QuadScalar(Rational c0, Rational c1, Rational c2, Rational c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
    for (auto& q : c_) q.canonicalize();
}

QuadScalar QuadScalar::frac(long num, long den) {
    if (den == 0) throw DomainError("QuadScalar::frac: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return QuadScalar(q);
}

bool QuadScalar::is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

bool QuadScalar::is_rational() const {
    return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

QuadScalar QuadScalar::operator-() const {
    QuadScalar r;
    for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
    return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
    for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
    return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
    for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
    return *this;
}

QuadScalar operator*(const QuadScalar& a, const QuadScalar& b) {
    const auto& x = a.c_;
    const auto& y = b.c_;
    QuadScalar r;
    if (a.is_rational()) {
        if (sgn(x[0]) == 0) return r;
        for (int k = 0; k < 4; ++k) r.c_[k] = x[0] * y[k];
        return r;
    }
    if (b.is_rational()) {
        if (sgn(y[0]) == 0) return r;
        for (int k = 0; k < 4; ++k) r.c_[k] = x[k] * y[0];
        return r;
    }
    // sqrt2*sqrt2 = 2, sqrt3*sqrt3 = 3, sqrt6*sqrt6 = 6,
    // sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2 sqrt3, sqrt3*sqrt6 = 3 sqrt2
    r.c_[0] = x[0] * y[0] + 2 * x[1] * y[1] + 3 * x[2] * y[2] + 6 * x[3] * y[3];
    r.c_[1] = x[0] * y[1] + x[1] * y[0] + 3 * (x[2] * y[3] + x[3] * y[2]);
    r.c_[2] = x[0] * y[2] + x[2] * y[0] + 2 * (x[1] * y[3] + x[3] * y[1]);
    r.c_[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
    return r;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
    *this = *this * o;
    return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
    *this = *this * o.inv();
    return *this;
}

QuadScalar QuadScalar::conj2() const { return {c_[0], -c_[1], c_[2], -c_[3]}; }
QuadScalar QuadScalar::conj3() const { return {c_[0], c_[1], -c_[2], -c_[3]}; }

QuadScalar QuadScalar::inv() const {
    if (is_zero()) throw DomainError("quad_inv: zero has no inverse");
    if (is_rational()) return QuadScalar(Rational(1) / c_[0]);
    // u * conj2(u) lies in Q(sqrt3); multiplying by its sqrt3-conjugate lands in Q.
    QuadScalar s = conj2();
    QuadScalar v = *this * s;       // p + q sqrt3
    QuadScalar vbar = v.conj3();    // p - q sqrt3
    Rational n = (v * vbar).c_[0];
    QuadScalar num = s * vbar;
    Rational ninv = Rational(1) / n;
    for (auto& q : num.c_) q *= ninv;
    return num;
}

double QuadScalar::embed() const {
    if (is_rational()) {
        double d = c_[0].get_d();
        if (!std::isfinite(d)) throw std::range_error("embed: value outside double range");
        return d;
    }
    mpf_class v = high_precision_value(c_);
    if (abs(v) > mpf_class(DBL_MAX, kEmbedBits))
        throw std::range_error("embed: value outside double range");
    double d = v.get_d();  // truncates toward zero
    if (!std::isfinite(d)) throw std::range_error("embed: value outside double range");
    // round to nearest: compare against the neighbour on the far side of the truncation
    mpf_class rest = v - mpf_class(d, kEmbedBits);
    if (sgn(rest) != 0) {
        double other = std::nextafter(d, sgn(rest) > 0 ? HUGE_VAL : -HUGE_VAL);
        mpf_class rest_other = v - mpf_class(other, kEmbedBits);
        if (abs(rest_other) < abs(rest)) d = other;
    }
    return d;
}

int QuadScalar::sign() const {
    if (is_zero()) return 0;
    if (is_rational()) return sgn(c_[0]);
    return sgn(high_precision_value(c_));
}

std::string QuadScalar::to_string() const {
    static const char* names[4] = {"", "*sqrt2", "*sqrt3", "*sqrt6"};
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < 4; ++k) {
        if (sgn(c_[k]) == 0) continue;
        if (!first) os << (sgn(c_[k]) > 0 ? " + " : " - ");
        else if (sgn(c_[k]) < 0) os << "-";
        os << Rational(abs(c_[k])).get_str() << names[k];
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

QuadScalar quad_mul(const QuadScalar& u, const QuadScalar& v) { return u * v; }
QuadScalar quad_inv(const QuadScalar& u) { return u.inv(); }
double embed(const QuadScalar& u) { return u.embed(); }

std::optional<QuadScalar> exact_sqrt(const QuadScalar& u) {
    if (u.is_zero()) return QuadScalar(0);
    if (!u.is_rational() || sgn(u[0]) < 0) return std::nullopt;
    // sqrt(n/m) = sqrt(n*m)/m; pull out the square-free part d in {1,2,3,6}.
    mpz_class n = u[0].get_num();
    mpz_class m = u[0].get_den();
    mpz_class nm = n * m;
    for (int d : {1, 2, 3, 6}) {
        if (mpz_divisible_ui_p(nm.get_mpz_t(), d) == 0) continue;
        mpz_class q = nm / d;
        if (mpz_perfect_square_p(q.get_mpz_t()) == 0) continue;
        mpz_class k;
        mpz_sqrt(k.get_mpz_t(), q.get_mpz_t());
        Rational coef(k, m);
        coef.canonicalize();
        QuadScalar r;
        switch (d) {
        case 1: r = QuadScalar(coef, 0, 0, 0); break;
        case 2: r = QuadScalar(0, coef, 0, 0); break;
        case 3: r = QuadScalar(0, 0, coef, 0); break;
        default: r = QuadScalar(0, 0, 0, coef); break;
        }
        return r;
    }
    return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& u) { return os << u.to_string(); }

} // namespace octosphere
