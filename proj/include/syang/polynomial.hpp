#pragma once

#include "syang/rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace syang {

class Polynomial;

/// All rational roots with multiplicity, plus the (monic) factor left over
/// after dividing them out.
struct RootExtraction;

/// Dense univariate polynomial over Rational, coefficients ascending by degree.
/// The zero polynomial has an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::string var) : var_(std::move(var)) {}
    Polynomial(std::vector<Rational> coeffs, std::string var = "x")
        : var_(std::move(var)), c_(std::move(coeffs)) {
        trim();
    }
    static Polynomial constant(const Rational& r, std::string var = "x") {
        return Polynomial({r}, std::move(var));
    }
    /// The monomial x^d.
    static Polynomial monomial(int d, const Rational& coeff = Rational(1), std::string var = "x") {
        std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
        c.back() = coeff;
        return Polynomial(std::move(c), std::move(var));
    }

    const std::string& var() const { return var_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Rational& leading() const {
        static const Rational zero;
        return c_.empty() ? zero : c_.back();
    }
    Rational coeff(int d) const {
        if (d < 0 || d >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(d)];
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r(a.var_.empty() ? b.var_ : a.var_);
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            if (i < a.c_.size()) r.c_[i] += a.c_[i];
            if (i < b.c_.size()) r.c_[i] += b.c_[i];
        }
        r.trim();
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial(a.var_.empty() ? b.var_ : a.var_);
        Polynomial r(a.var_.empty() ? b.var_ : a.var_);
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Rational& s) {
        Polynomial r = a;
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }
    friend Polynomial operator*(const Rational& s, const Polynomial& a) { return a * s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::invalid_argument("Polynomial: division by zero");
        Polynomial rem = a;
        Polynomial quo(a.var_);
        quo.c_.assign(a.c_.size(), Rational(0));
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int d = rem.degree() - b.degree();
            Rational f = rem.leading() / b.leading();
            quo.c_[static_cast<std::size_t>(d)] += f;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                rem.c_[i + static_cast<std::size_t>(d)] -= f * b.c_[i];
            rem.trim();
        }
        quo.trim();
        return {quo, rem};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) {
        return divmod(a, b).first;
    }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) {
        return divmod(a, b).second;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    /// Monic gcd; gcd(0, 0) = 0.
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            Polynomial r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    /// Composition with x -> x + s.
    Polynomial shift_arg(const Rational& s) const {
        Polynomial r(var_);
        Polynomial xs({s, Rational(1)}, var_);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * xs + constant(*it, var_);
        return r;
    }

    Polynomial pow(int e) const {
        Polynomial r = constant(Rational(1), var_);
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int d = degree(); d >= 0; --d) {
            const Rational& co = c_[static_cast<std::size_t>(d)];
            if (co.is_zero()) continue;
            if (!s.empty()) s += co.sign() > 0 ? " + " : " - ";
            else if (co.sign() < 0) s += "-";
            Rational a = abs(co);
            if (d == 0 || !a.is_one()) s += a.str();
            if (d > 0) {
                if (!a.is_one()) s += "*";
                s += var_.empty() ? "x" : var_;
                if (d > 1) s += "^" + std::to_string(d);
            }
        }
        return s;
    }

    RootExtraction rational_roots() const;

private:
    friend struct RootExtraction;
    friend RootExtraction rational_roots_impl(const Polynomial&);

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::string var_ = "x";
    std::vector<Rational> c_;
};

struct RootExtraction {
    std::vector<std::pair<Rational, int>> roots;
    Polynomial residual; // monic, no rational roots; constant 1 when fully split
};

namespace detail {
inline std::vector<BigInt> positive_divisors(BigInt n) {
    if (n < 0) n = -n;
    std::vector<BigInt> divs;
    for (BigInt i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i * i != n) divs.push_back(n / i);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}
} // namespace detail

inline RootExtraction Polynomial::rational_roots() const {
    RootExtraction out;
    out.residual = Polynomial::constant(Rational(1), var_);
    if (is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    Polynomial p = monic();
    // roots at zero
    int zero_mult = 0;
    while (!p.is_constant() && p.coeff(0).is_zero()) {
        p.c_.erase(p.c_.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);
    if (p.is_constant()) return out;
    // clear denominators to an integer polynomial
    BigInt lcm = 1;
    for (const auto& co : p.c_) lcm = lcm / boost::multiprecision::gcd(lcm, co.den()) * co.den();
    std::vector<BigInt> ic(p.c_.size());
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        ic[i] = p.c_[i].num() * (lcm / p.c_[i].den());
    // candidates r = s * a/b with a | ic[0], b | ic[deg]
    auto nums = detail::positive_divisors(ic.front());
    auto dens = detail::positive_divisors(ic.back());
    for (const auto& a : nums) {
        for (const auto& b : dens) {
            for (int s : {1, -1}) {
                Rational cand(s * a, b);
                int mult = 0;
                while (!p.is_constant() && p.eval(cand).is_zero()) {
                    p = divmod(p, Polynomial({-cand, Rational(1)}, var_)).first;
                    ++mult;
                }
                if (mult > 0) out.roots.emplace_back(cand, mult);
            }
        }
    }
    out.residual = p.monic();
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

} // namespace syang
