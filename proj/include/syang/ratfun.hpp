#pragma once

#include "syang/polynomial.hpp"

#include <utility>
#include <vector>

namespace syang {

/// Rational function num/den over Rational. Normal form: den monic,
/// gcd(num, den) = 1. Equality is structural equality of the normal form.
class RatFun {
public:
    RatFun() : num_(), den_(Polynomial::constant(Rational(1))) {}
    RatFun(const Rational& c)
        : num_(Polynomial::constant(c)), den_(Polynomial::constant(Rational(1))) {}
    RatFun(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    explicit RatFun(Polynomial num)
        : num_(std::move(num)), den_(Polynomial::constant(Rational(1))) {
        normalize();
    }

    /// 1 + f1/x + f2/x^2 + ... + fK/x^K as a rational function of x.
    static RatFun one_plus_inverse_poly(const std::vector<Rational>& f, const std::string& var = "x") {
        std::vector<Rational> num(f.size() + 1);
        num[f.size()] = Rational(1);
        for (std::size_t i = 0; i < f.size(); ++i) num[f.size() - 1 - i] = f[i];
        return RatFun(Polynomial(std::move(num), var),
                      Polynomial::monomial(static_cast<int>(f.size()), Rational(1), var));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun operator-() const { return raw(-num_, den_); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::invalid_argument("RatFun: division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun inverse() const {
        if (is_zero()) throw std::invalid_argument("RatFun: inverse of zero");
        return RatFun(den_, num_);
    }

    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const {
        if (!is_constant()) throw std::invalid_argument("RatFun: not constant");
        return num_.coeff(0);
    }

    bool has_pole_at_infinity() const { return num_.degree() > den_.degree(); }
    Rational value_at_infinity() const {
        if (has_pole_at_infinity()) throw std::invalid_argument("RatFun: pole at infinity");
        if (num_.degree() < den_.degree()) return Rational(0);
        return num_.leading() / den_.leading();
    }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d.is_zero()) throw std::invalid_argument("RatFun: pole at evaluation point");
        return num_.eval(x) / d;
    }

    /// Composition with x -> x + s.
    RatFun shift_arg(const Rational& s) const {
        return RatFun(num_.shift_arg(s), den_.shift_arg(s));
    }

    /// Coefficients c_0..c_order of the expansion at infinity,
    /// f(x) = sum_k c_k x^{-k}. Requires no pole at infinity.
    std::vector<Rational> series_at_infinity(int order) const {
        if (has_pole_at_infinity()) throw std::invalid_argument("series_at_infinity: pole at infinity");
        // In the variable t = 1/x: num(1/t) t^D / (den(1/t) t^D) with D = deg den;
        // both sides become polynomials in t, the denominator has nonzero constant term.
        int d = den_.degree();
        std::vector<Rational> nc(static_cast<std::size_t>(order) + 1), dc(static_cast<std::size_t>(order) + 1);
        for (int i = 0; i <= order; ++i) {
            nc[static_cast<std::size_t>(i)] = num_.coeff(d - i);
            dc[static_cast<std::size_t>(i)] = den_.coeff(d - i);
        }
        std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
        Rational inv0 = dc[0].inverse();
        for (int k = 0; k <= order; ++k) {
            Rational acc = nc[static_cast<std::size_t>(k)];
            for (int j = 1; j <= k; ++j)
                acc -= dc[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
            out[static_cast<std::size_t>(k)] = acc * inv0;
        }
        return out;
    }

    /// Coefficient of x^{-n} in the expansion at infinity.
    Rational series_coeff(int n) const { return series_at_infinity(n).back(); }

    std::string str() const {
        if (den_.is_constant()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    static RatFun raw(Polynomial n, Polynomial d) {
        RatFun f;
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        return f;
    }

    void normalize() {
        if (den_.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
        if (num_.is_zero()) {
            num_ = Polynomial(den_.var());
            den_ = Polynomial::constant(Rational(1), den_.var());
            return;
        }
        Polynomial g = Polynomial::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rational lc = den_.leading();
        if (!lc.is_one()) {
            Rational inv = lc.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

/// series_expand in the shape the rest of the kernel uses.
inline std::vector<Rational> series_expand(const RatFun& f, int order) {
    return f.series_at_infinity(order);
}

} // namespace syang
