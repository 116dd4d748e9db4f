#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace uqmn {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    Int num = 1, den = 1;
    for (int t = 0; t < b; ++t) {
        num *= Int(a - t);
        den *= Int(t + 1);
    }
    return num / den;
}

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients, stored in ascending degree order with no trailing zeros.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(Int constant) {
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    explicit ZPoly(long long constant) : ZPoly(Int(constant)) {}

    static ZPoly monomial(Int coeff, int degree) {
        ZPoly p;
        if (coeff == 0) return p;
        p.coeffs_.assign(static_cast<size_t>(degree) + 1, Int(0));
        p.coeffs_.back() = std::move(coeff);
        return p;
    }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    [[nodiscard]] const Int& coeff(int d) const {
        static const Int kZero{0};
        if (d < 0 || d >= static_cast<int>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<size_t>(d)];
    }

    [[nodiscard]] const Int& leading_coeff() const {
        if (is_zero()) throw std::domain_error("leading_coeff of zero polynomial");
        return coeffs_.back();
    }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
        ZPoly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Int(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        r.trim();
        return r;
    }

    friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

    ZPoly operator-() const {
        ZPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        ZPoly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.trim();
        return r;
    }

    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

    /// gcd of all integer coefficients, non-negative; 0 for the zero polynomial.
    [[nodiscard]] Int content() const {
        Int g = 0;
        for (const auto& c : coeffs_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    /// Divide every coefficient by d; requires exactness.
    [[nodiscard]] ZPoly divexact_int(const Int& d) const {
        if (d == 0) throw std::domain_error("division by zero integer");
        ZPoly r = *this;
        for (auto& c : r.coeffs_) {
            if (c % d != 0) throw std::domain_error("inexact integer division of polynomial");
            c /= d;
        }
        return r;
    }

    /// Exact polynomial division; throws if the division leaves a remainder.
    [[nodiscard]] ZPoly divexact(const ZPoly& d) const {
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        ZPoly rem = *this;
        ZPoly quot;
        if (rem.degree() >= d.degree())
            quot.coeffs_.assign(static_cast<size_t>(rem.degree() - d.degree()) + 1, Int(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            if (rem.leading_coeff() % d.leading_coeff() != 0)
                throw std::domain_error("inexact polynomial division");
            Int q = rem.leading_coeff() / d.leading_coeff();
            int shift = rem.degree() - d.degree();
            quot.coeffs_[static_cast<size_t>(shift)] = q;
            rem = rem - d * monomial(q, shift);
        }
        if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
        quot.trim();
        return quot;
    }

    /// Pseudo-remainder: lc(d)^(deg a - deg d + 1) * a = q*d + r over Z.
    [[nodiscard]] static ZPoly pseudo_rem(ZPoly a, const ZPoly& d) {
        if (d.is_zero()) throw std::domain_error("pseudo_rem by zero");
        const Int& lc = d.leading_coeff();
        while (!a.is_zero() && a.degree() >= d.degree()) {
            int shift = a.degree() - d.degree();
            Int top = a.leading_coeff();
            ZPoly scaled;
            scaled.coeffs_.reserve(a.coeffs_.size());
            for (auto& c : a.coeffs_) scaled.coeffs_.push_back(c * lc);
            a = scaled - d * monomial(top, shift);
        }
        return a;
    }

    /// Primitive part with positive leading coefficient.
    [[nodiscard]] ZPoly primitive_part() const {
        if (is_zero()) return {};
        ZPoly r = divexact_int(content());
        if (r.leading_coeff() < 0) r = -r;
        return r;
    }

    /// gcd via the primitive pseudo-remainder sequence; result has positive
    /// leading coefficient.
    static ZPoly gcd(ZPoly a, ZPoly b) {
        if (a.is_zero()) return b.is_zero() ? b : b.primitive_part() * ZPoly(b.content());
        if (b.is_zero()) return a.primitive_part() * ZPoly(a.content());
        Int cont = boost::multiprecision::gcd(a.content(), b.content());
        a = a.primitive_part();
        b = b.primitive_part();
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            ZPoly r = pseudo_rem(a, b);
            a = std::move(b);
            b = r.is_zero() ? ZPoly{} : r.primitive_part();
        }
        return a * ZPoly(cont);
    }

    [[nodiscard]] Rational evaluate(const Rational& q0) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + Rational(*it);
        return acc;
    }

    /// Terms in decreasing degree, e.g. "q^2+1", "-2q^3+q-5", "0".
    [[nodiscard]] std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            const Int& c = coeff(d);
            if (c == 0) continue;
            if (!out.empty()) out += (c > 0) ? "+" : "-";
            else if (c < 0) out += "-";
            Int mag = boost::multiprecision::abs(c);
            if (mag != 1 || d == 0) out += mag.str();
            if (d >= 1) out += "q";
            if (d >= 2) out += "^" + std::to_string(d);
        }
        return out;
    }

    /// Inverse of to_string; accepts exactly the emitted grammar.
    static ZPoly parse(const std::string& s) {
        ZPoly r;
        size_t i = 0;
        if (s.empty()) throw std::invalid_argument("empty polynomial literal");
        while (i < s.size()) {
            int sign = 1;
            if (s[i] == '+') { ++i; }
            else if (s[i] == '-') { sign = -1; ++i; }
            std::string digits;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
            Int mag = digits.empty() ? Int(1) : Int(digits);
            int deg = 0;
            if (i < s.size() && s[i] == 'q') {
                ++i;
                deg = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::string e;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e += s[i++];
                    if (e.empty()) throw std::invalid_argument("missing exponent in polynomial literal");
                    deg = std::atoi(e.c_str());
                }
            } else if (digits.empty()) {
                throw std::invalid_argument("malformed polynomial literal: " + s);
            }
            r = r + monomial(sign * mag, deg);
        }
        return r;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

} // namespace uqmn
