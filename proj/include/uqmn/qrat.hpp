#pragma once

#include "uqmn/poly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace uqmn {

struct division_by_zero : std::domain_error {
    division_by_zero() : std::domain_error("division by zero in Q(q)") {}
};

struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

/// Exact rational function in q over the integers, kept in canonical form:
/// gcd(num, den) = 1 in Z[q], den has positive leading coefficient, and
/// zero is 0/1.  Laurent monomials live here as q^a/1 or 1/q^(-a).
class QRat {
public:
    QRat() : num_(), den_(Int(1)) {}
    explicit QRat(long long n) : num_(Int(n)), den_(Int(1)) {}
    explicit QRat(Int n) : num_(std::move(n)), den_(Int(1)) {}
    explicit QRat(ZPoly n) : num_(std::move(n)), den_(Int(1)) {}
    QRat(ZPoly n, ZPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw division_by_zero();
        normalize();
    }

    static QRat q() { return QRat(ZPoly::monomial(Int(1), 1)); }

    /// q^a for any integer a, negative powers included.
    static QRat qpow(int a) {
        if (a >= 0) return QRat(ZPoly::monomial(Int(1), a));
        return QRat(ZPoly(Int(1)), ZPoly::monomial(Int(1), -a));
    }

    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
    [[nodiscard]] const ZPoly& num() const { return num_; }
    [[nodiscard]] const ZPoly& den() const { return den_; }

    friend QRat operator+(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator-(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRat operator*(const QRat& a, const QRat& b) {
        return QRat(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRat operator/(const QRat& a, const QRat& b) {
        if (b.is_zero()) throw division_by_zero();
        return QRat(a.num_ * b.den_, a.den_ * b.num_);
    }
    QRat operator-() const {
        QRat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    QRat& operator+=(const QRat& b) { return *this = *this + b; }
    QRat& operator-=(const QRat& b) { return *this = *this - b; }
    QRat& operator*=(const QRat& b) { return *this = *this * b; }
    QRat& operator/=(const QRat& b) { return *this = *this / b; }

    /// Canonical forms are unique, so equality is structural.
    friend bool operator==(const QRat& a, const QRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    [[nodiscard]] Rational evaluate(const Rational& q0) const {
        Rational d = den_.evaluate(q0);
        if (d == 0) throw pole_error("pole at q0 while evaluating " + to_string());
        return num_.evaluate(q0) / d;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "(" + num_.to_string() + ")";
        if (!den_.is_one()) s += "/(" + den_.to_string() + ")";
        return s;
    }

    static QRat parse(const std::string& s) {
        if (s.empty() || s.front() != '(') throw std::invalid_argument("malformed Q(q) literal: " + s);
        size_t close = s.find(')');
        if (close == std::string::npos) throw std::invalid_argument("malformed Q(q) literal: " + s);
        ZPoly n = ZPoly::parse(s.substr(1, close - 1));
        if (close + 1 == s.size()) return QRat(std::move(n));
        if (s.compare(close + 1, 2, "/(") != 0 || s.back() != ')')
            throw std::invalid_argument("malformed Q(q) literal: " + s);
        ZPoly d = ZPoly::parse(s.substr(close + 3, s.size() - close - 4));
        return QRat(std::move(n), std::move(d));
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = ZPoly(Int(1));
            return;
        }
        ZPoly g = ZPoly::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        if (den_.leading_coeff() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    ZPoly num_;
    ZPoly den_;
};

/// Value of [f, e] on a weight vector with <h, wt> = hval, i.e.
/// (q^-hval - q^hval) / (q - q^-1); always a Laurent polynomial.
inline QRat quantum_cartan(int hval) {
    return (QRat::qpow(-hval) - QRat::qpow(hval)) / (QRat::q() - QRat::qpow(-1));
}

} // namespace uqmn
