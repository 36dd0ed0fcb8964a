#include "syang/weights.hpp"

#include <algorithm>
#include <stdexcept>

namespace syang {

namespace {

Polynomial rename_var(const Polynomial& p, const std::string& var) {
    return Polynomial(p.coeffs(), var);
}
RatFun rename_var(const RatFun& f, const std::string& var) {
    return RatFun(rename_var(f.num(), var), rename_var(f.den(), var));
}

} // namespace

HighestWeight::HighestWeight(GradingContext c, std::vector<RatFun> v) : ctx(c) {
    comps.reserve(v.size());
    for (auto& f : v) comps.push_back(rename_var(f, "x"));
    validate();
}

void HighestWeight::validate() const {
    if (static_cast<int>(comps.size()) != ctx.size())
        throw std::invalid_argument("HighestWeight: need " + std::to_string(ctx.size()) +
                                    " components");
    for (int a = 1; a <= ctx.size(); ++a) {
        const RatFun& f = at(a);
        if (f.is_zero())
            throw std::invalid_argument("HighestWeight: component " + std::to_string(a) +
                                        " is identically zero");
        if (f.has_pole_at_infinity() ||
            f.value_at_infinity() != Rational(ctx.grade(a) ? -1 : 1))
            throw std::invalid_argument("HighestWeight: component " + std::to_string(a) +
                                        " is not (-1)^{[a]} at infinity");
    }
}

std::string HighestWeight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) s += ", ";
        s += comps[i].str();
    }
    return s + ")";
}

HighestWeight epsilon_weight(const GradingContext& ctx) {
    std::vector<RatFun> comps;
    for (int a = 1; a <= ctx.size(); ++a)
        comps.push_back(RatFun(Rational(ctx.grade(a) ? -1 : 1)));
    return HighestWeight(ctx, std::move(comps));
}

HighestWeight evaluation_weight(const GradingContext& ctx, const GlWeight& mu) {
    if (static_cast<int>(mu.mu.size()) != ctx.size())
        throw std::invalid_argument("evaluation_weight: weight length mismatch");
    std::vector<RatFun> comps;
    for (int a = 1; a <= ctx.size(); ++a) {
        Rational c(ctx.grade(a) ? -1 : 1);
        // (c x + mu_a) / x
        comps.push_back(RatFun(Polynomial({mu.mu[static_cast<std::size_t>(a - 1)], c}),
                               Polynomial::monomial(1)));
    }
    return HighestWeight(ctx, std::move(comps));
}

HighestWeight star_product(const HighestWeight& mu, const HighestWeight& nu) {
    if (!(mu.ctx == nu.ctx)) throw std::invalid_argument("star_product: context mismatch");
    std::vector<RatFun> comps;
    for (int a = 1; a <= mu.ctx.size(); ++a) {
        RatFun f = mu.at(a) * nu.at(a);
        if (mu.ctx.grade(a)) f = -f;
        comps.push_back(std::move(f));
    }
    return HighestWeight(mu.ctx, std::move(comps));
}

HighestWeight twist(const RatFun& f, const HighestWeight& L) {
    if (f.has_pole_at_infinity() || f.value_at_infinity() != Rational(1))
        throw std::invalid_argument("twist: f(infinity) must be 1");
    std::vector<RatFun> comps;
    for (const auto& c : L.comps) comps.push_back(c * f);
    return HighestWeight(L.ctx, std::move(comps));
}

HighestWeight shift_weight(const HighestWeight& L, const Rational& alpha) {
    std::vector<RatFun> comps;
    for (const auto& c : L.comps) comps.push_back(c.shift_arg(alpha));
    return HighestWeight(L.ctx, std::move(comps));
}

ShiftSolve solve_shift_polynomial(const RatFun& f, int shift) {
    if (shift != 1 && shift != -1)
        throw std::invalid_argument("solve_shift_polynomial: shift must be +1 or -1");
    ShiftSolve out;
    if (f.is_zero()) {
        out.reason = "zero input";
        return out;
    }
    if (f.num().degree() != f.den().degree()) {
        out.reason = "numerator and denominator degrees differ";
        return out;
    }
    if (!(f.num().leading() / f.den().leading()).is_one()) {
        out.reason = "f(infinity) is not 1";
        return out;
    }
    if (f.is_one()) {
        out.status = ShiftSolve::Status::solved;
        out.P = Polynomial::constant(Rational(1));
        return out;
    }

    auto nr = f.num().rational_roots();
    auto dr = f.den().rational_roots();
    if (nr.residual.degree() > 0 || dr.residual.degree() > 0) {
        out.status = ShiftSolve::Status::unsupported;
        out.reason = "irrational or non-linear irreducible factors survive rational-root extraction";
        return out;
    }

    // Work in coordinates scaled by the shift sign so chains always step by +1:
    // P root list {v, v-1, ..., u+1} for a denominator top v and numerator u.
    Rational s(shift);
    auto expand = [&](const std::vector<std::pair<Rational, int>>& rs) {
        std::vector<Rational> flat;
        for (const auto& [r, m] : rs)
            for (int i = 0; i < m; ++i) flat.push_back(r * s);
        std::sort(flat.begin(), flat.end(), [](const Rational& x, const Rational& y) { return y < x; });
        return flat;
    };
    std::vector<Rational> num_roots = expand(nr.roots);
    std::vector<Rational> den_roots = expand(dr.roots);
    if (num_roots.size() != den_roots.size()) {
        out.reason = "root counts differ";
        return out;
    }

    // group by residue class: same class iff the difference is an integer
    std::vector<std::pair<Rational, Rational>> pairs; // (den top v, num bottom u), scaled coords
    std::vector<bool> used(num_roots.size(), false);
    for (const auto& v : den_roots) {
        bool matched = false;
        for (std::size_t j = 0; j < num_roots.size(); ++j) {
            if (used[j]) continue;
            Rational d = v - num_roots[j];
            if (d.is_integer() && d.sign() > 0) {
                used[j] = true;
                pairs.push_back({v, num_roots[j]});
                matched = true;
                break;
            }
        }
        if (!matched) {
            out.reason = "chains do not telescope in the required direction";
            return out;
        }
    }

    Polynomial P = Polynomial::constant(Rational(1));
    for (const auto& [v, u] : pairs) {
        for (Rational w = v; u < w; w -= Rational(1)) {
            Rational root = w * s; // back to original coordinates
            P = P * Polynomial({-root, Rational(1)});
        }
    }

    // exact verification: P(x+shift) * den == num * P(x)
    if (P.shift_arg(Rational(shift)) * f.den() != f.num() * P) {
        out.reason = "chains do not telescope in the required direction";
        return out;
    }
    out.status = ShiftSolve::Status::solved;
    out.P = P;
    return out;
}

FdVerdict check_finite_dim(const HighestWeight& L) {
    L.validate();
    const GradingContext& ctx = L.ctx;
    FdVerdict out;
    DrinfeldData data;

    for (int a = 1; a < ctx.size(); ++a) {
        if (a == ctx.M) continue;
        RatFun ratio = L.at(a) / L.at(a + 1);
        int shift = ctx.grade(a) ? -1 : 1;
        ShiftSolve sol = solve_shift_polynomial(ratio, shift);
        if (sol.status == ShiftSolve::Status::unsupported) {
            out.status = FdVerdict::Status::unsupported;
            out.failed_component = a;
            out.reason = sol.reason;
            return out;
        }
        if (sol.status == ShiftSolve::Status::none) {
            out.status = FdVerdict::Status::not_finite;
            out.failed_component = a;
            out.reason = "lambda_" + std::to_string(a) + "/lambda_" + std::to_string(a + 1) +
                         ": " + sol.reason;
            return out;
        }
        auto roots = sol.P.rational_roots();
        std::vector<Rational> ps;
        for (const auto& [r, m] : roots.roots)
            for (int i = 0; i < m; ++i) ps.push_back(-r); // P = prod (x + p)
        std::sort(ps.begin(), ps.end(), [](const Rational& x, const Rational& y) { return y < x; });
        data.P[a] = sol.P;
        data.p_roots[a] = std::move(ps);
    }

    // a = M: lambda_M / lambda_{M+1} = Qtilde_M / Q_M with the -1 normalization
    {
        RatFun ratio = L.at(ctx.M) / L.at(ctx.M + 1);
        const Polynomial& num = ratio.num();
        const Polynomial& den = ratio.den();
        if (num.degree() != den.degree() || num.leading() != Rational(-1)) {
            out.status = FdVerdict::Status::not_finite;
            out.failed_component = ctx.M;
            out.reason = "middle ratio is not -1 at infinity";
            return out;
        }
        Polynomial A = -num; // monic
        Polynomial B = den;  // monic
        auto ar = A.rational_roots();
        auto br = B.rational_roots();
        if (ar.residual.degree() > 0 || br.residual.degree() > 0) {
            out.status = FdVerdict::Status::unsupported;
            out.failed_component = ctx.M;
            out.reason = "middle ratio does not split over the rationals";
            return out;
        }
        if (!Polynomial::gcd(A, B).is_constant()) {
            out.status = FdVerdict::Status::not_finite;
            out.failed_component = ctx.M;
            out.reason = "Qtilde_M and Q_M are not coprime";
            return out;
        }
        data.KM = A.degree();
        for (const auto& [r, m] : ar.roots)
            for (int i = 0; i < m; ++i) data.r1.push_back(-r);
        for (const auto& [r, m] : br.roots)
            for (int i = 0; i < m; ++i) data.r2.push_back(-r);
        auto desc = [](const Rational& x, const Rational& y) { return y < x; };
        std::sort(data.r1.begin(), data.r1.end(), desc);
        std::sort(data.r2.begin(), data.r2.end(), desc);
        data.Qtilde = A;
        data.Q = -B;
    }

    out.status = FdVerdict::Status::finite;
    out.data = std::move(data);
    return out;
}

GlWeight fundamental_gl_weight(const GradingContext& ctx, int t, const Rational& p_or_r1,
                               const std::optional<Rational>& r2) {
    if (t < 1 || t > ctx.size() - 1)
        throw std::invalid_argument("fundamental_gl_weight: row out of range");
    GlWeight w;
    w.mu.resize(static_cast<std::size_t>(ctx.size()));
    const int M = ctx.M;
    for (int b = 1; b <= ctx.size(); ++b) {
        Rational m;
        if (t < M) {
            const Rational& p = p_or_r1;
            m = b <= t ? p + Rational(1) : (b <= M ? p : -p);
        } else if (t == M) {
            if (!r2) throw std::invalid_argument("fundamental_gl_weight: row M needs the pair (r1, r2)");
            m = b <= M ? p_or_r1 : -(*r2);
        } else {
            const Rational& p = p_or_r1;
            m = b <= M ? p - Rational(1) : (b <= t ? Rational(1) - p : -p);
        }
        w.mu[static_cast<std::size_t>(b - 1)] = m;
    }
    return w;
}

WeightFactorization factor_into_fundamentals(const HighestWeight& L, const DrinfeldData& D) {
    const GradingContext& ctx = L.ctx;
    WeightFactorization out;
    for (int t = 1; t < ctx.size(); ++t) {
        if (t == ctx.M) {
            if (static_cast<int>(D.r1.size()) != D.KM || static_cast<int>(D.r2.size()) != D.KM)
                throw std::invalid_argument("factor_into_fundamentals: inconsistent Drinfeld data");
            for (int i = 0; i < D.KM; ++i)
                out.factors.push_back(
                    {t, i + 1,
                     evaluation_weight(ctx, fundamental_gl_weight(
                                                ctx, t, D.r1[static_cast<std::size_t>(i)],
                                                D.r2[static_cast<std::size_t>(i)]))});
        } else {
            auto it = D.p_roots.find(t);
            if (it == D.p_roots.end())
                throw std::invalid_argument("factor_into_fundamentals: missing P_" + std::to_string(t));
            int i = 0;
            for (const auto& p : it->second)
                out.factors.push_back(
                    {t, ++i, evaluation_weight(ctx, fundamental_gl_weight(ctx, t, p))});
        }
    }

    HighestWeight S = epsilon_weight(ctx);
    bool first = true;
    for (const auto& f : out.factors) {
        S = first ? f.weight : star_product(S, f.weight);
        first = false;
    }

    out.twist_fun = L.at(1) / S.at(1);
    if (out.twist_fun.has_pole_at_infinity() || out.twist_fun.value_at_infinity() != Rational(1))
        throw std::invalid_argument("factor_into_fundamentals: Drinfeld data inconsistent with weight");
    for (int a = 1; a <= ctx.size(); ++a)
        if (L.at(a) != S.at(a) * out.twist_fun)
            throw std::invalid_argument(
                "factor_into_fundamentals: Drinfeld data inconsistent with weight at component " +
                std::to_string(a));
    return out;
}

} // namespace syang
