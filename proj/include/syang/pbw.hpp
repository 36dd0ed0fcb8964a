#pragma once

#include "syang/grading.hpp"
#include "syang/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace syang {

/// A single generator t^a_b[n].
struct GenFactor {
    int a = 1, b = 1, n = 1;
    friend auto operator<=>(const GenFactor&, const GenFactor&) = default;
};

/// A grouped factor (t^a_b[n])^k of a basis monomial.
struct PBWFactor {
    int a = 1, b = 1, n = 1, k = 1;
    friend auto operator<=>(const PBWFactor&, const PBWFactor&) = default;
};

/// An ordered basis monomial. Factors run left to right through the blocks
/// odd_neg, even_neg, diag, even_pos, odd_pos; within a block pairs ascend in
/// the pair order, within a pair levels ascend; odd factors carry k = 1.
class PBWMonomial {
public:
    PBWMonomial() = default;
    explicit PBWMonomial(std::vector<PBWFactor> factors) : f_(std::move(factors)) {}

    const std::vector<PBWFactor>& factors() const { return f_; }
    bool empty() const { return f_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& f : f_) d += f.n * f.k;
        return d;
    }
    int length() const {
        int l = 0;
        for (const auto& f : f_) l += f.k;
        return l;
    }
    int parity(const GradingContext& ctx) const {
        int p = 0;
        for (const auto& f : f_) p += ctx.pair_parity(f.a, f.b) * f.k;
        return p % 2;
    }

    std::vector<GenFactor> expand() const {
        std::vector<GenFactor> w;
        for (const auto& f : f_)
            for (int i = 0; i < f.k; ++i) w.push_back({f.a, f.b, f.n});
        return w;
    }

    bool is_canonical(const GradingContext& ctx) const {
        for (std::size_t i = 0; i < f_.size(); ++i) {
            const auto& f = f_[i];
            ctx.check_index(f.a);
            ctx.check_index(f.b);
            if (f.n < 1 || f.k < 1) return false;
            if (ctx.pair_parity(f.a, f.b) == 1 && f.k != 1) return false;
            if (i + 1 < f_.size()) {
                const auto& g = f_[i + 1];
                if (!slot_less(ctx, f.a, f.b, f.n, g.a, g.b, g.n)) return false;
            }
        }
        return true;
    }

    /// Deterministic total order: degree first, then factor lists.
    friend bool operator<(const PBWMonomial& x, const PBWMonomial& y) {
        int dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy;
        return x.f_ < y.f_;
    }
    friend bool operator==(const PBWMonomial& x, const PBWMonomial& y) { return x.f_ == y.f_; }
    friend bool operator!=(const PBWMonomial& x, const PBWMonomial& y) { return !(x == y); }

    std::string str() const {
        if (f_.empty()) return "1";
        std::string s;
        for (const auto& f : f_) {
            if (!s.empty()) s += " ";
            s += "t[" + std::to_string(f.a) + "," + std::to_string(f.b) + ";" +
                 std::to_string(f.n) + "]";
            if (f.k > 1) s += "^" + std::to_string(f.k);
        }
        return s;
    }

private:
    std::vector<PBWFactor> f_;
};

/// A finite Rational-linear combination of basis monomials. The empty map is
/// zero; the empty monomial is the unit.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(GradingContext ctx) : ctx_(ctx) {}

    static AlgebraElement zero(GradingContext ctx) { return AlgebraElement(ctx); }
    static AlgebraElement unit(GradingContext ctx, const Rational& c = Rational(1)) {
        AlgebraElement e(ctx);
        e.add(PBWMonomial{}, c);
        return e;
    }
    static AlgebraElement generator(GradingContext ctx, int a, int b, int n,
                                    const Rational& c = Rational(1)) {
        ctx.check_index(a);
        ctx.check_index(b);
        if (n < 1) throw std::invalid_argument("generator level must be >= 1");
        AlgebraElement e(ctx);
        e.add(PBWMonomial({{a, b, n, 1}}), c);
        return e;
    }

    const GradingContext& ctx() const { return ctx_; }
    const std::map<PBWMonomial, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    Rational coefficient(const PBWMonomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? Rational(0) : it->second;
    }

    void add(const PBWMonomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = t_.find(m);
        if (it == t_.end()) t_[m] = c;
        else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        require_same_ctx(o);
        for (const auto& [m, c] : o.t_) add(m, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        require_same_ctx(o);
        for (const auto& [m, c] : o.t_) add(m, -c);
        return *this;
    }
    AlgebraElement& operator*=(const Rational& s) {
        if (s.is_zero()) t_.clear();
        else
            for (auto& [m, c] : t_) c *= s;
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& s) { return a *= s; }
    friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
    AlgebraElement operator-() const { return *this * Rational(-1); }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.ctx_ == b.ctx_ && a.t_ == b.t_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    /// Defined only for elements homogeneous in parity; the unit is even.
    int parity() const {
        if (t_.empty()) return 0;
        int p = t_.begin()->first.parity(ctx_);
        for (const auto& [m, c] : t_)
            if (m.parity(ctx_) != p)
                throw std::logic_error("parity of inhomogeneous element");
        return p;
    }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*" + m.str();
        }
        return s;
    }

private:
    void require_same_ctx(const AlgebraElement& o) const {
        if (!(ctx_ == o.ctx_))
            throw std::invalid_argument("AlgebraElement: mixed grading contexts");
    }

    GradingContext ctx_;
    std::map<PBWMonomial, Rational> t_;
};

/// Counit: the coefficient of the empty monomial. Every generator with level
/// n >= 1 is annihilated.
inline Rational counit(const AlgebraElement& x) { return x.coefficient(PBWMonomial{}); }

} // namespace syang
