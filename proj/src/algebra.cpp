#include "syang/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace syang {

namespace {

void check_gen(const GradingContext& ctx, const GenFactor& g) {
    ctx.check_index(g.a);
    ctx.check_index(g.b);
    if (g.n < 1) throw std::invalid_argument("generator level must be >= 1");
}

PBWMonomial group_word(const std::vector<GenFactor>& word) {
    std::vector<PBWFactor> fs;
    for (const auto& g : word) {
        if (!fs.empty() && fs.back().a == g.a && fs.back().b == g.b && fs.back().n == g.n)
            ++fs.back().k;
        else
            fs.push_back({g.a, g.b, g.n, 1});
    }
    return PBWMonomial(std::move(fs));
}

} // namespace

std::vector<std::pair<Rational, std::vector<GenFactor>>> StraightenEngine::relation_rhs_words(
    const GenFactor& g1, const GenFactor& g2) const {
    check_gen(ctx_, g1);
    check_gen(ctx_, g2);
    const int a1 = g1.a, b1 = g1.b, m = g1.n;
    const int a2 = g2.a, b2 = g2.b, n = g2.n;
    std::vector<std::pair<Rational, std::vector<GenFactor>>> out;
    const int top = m + n - 1;
    if (b1 == a2) out.push_back({Rational(1), {GenFactor{a1, b2, top}}});
    if (a1 == b2) {
        int sgn = (ctx_.pair_parity(a1, b1) * ctx_.pair_parity(a2, b2)) % 2;
        out.push_back({Rational(sgn ? 1 : -1), {GenFactor{a2, b1, top}}});
    }
    Rational s(ctx_.eta(a1, b1, a2, b2) ? -1 : 1);
    for (int r = 1; r <= std::min(m, n) - 1; ++r) {
        out.push_back({s, {GenFactor{a2, b1, r}, GenFactor{a1, b2, top - r}}});
        out.push_back({-s, {GenFactor{a2, b1, top - r}, GenFactor{a1, b2, r}}});
    }
    return out;
}

AlgebraElement StraightenEngine::straighten_word(const std::vector<GenFactor>& word) {
    for (const auto& g : word) check_gen(ctx_, g);
    return straighten_impl(word);
}

AlgebraElement StraightenEngine::straighten_impl(const std::vector<GenFactor>& word) {
    auto it = memo_.find(word);
    if (it != memo_.end()) return it->second;

    AlgebraElement result(ctx_);
    bool rewritten = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        const GenFactor& f = word[i];
        const GenFactor& g = word[i + 1];
        const bool same = (f == g);
        const bool odd_square = same && ctx_.pair_parity(f.a, f.b) == 1;
        const bool out_of_order = !same && slot_less(ctx_, g.a, g.b, g.n, f.a, f.b, f.n);
        if (!odd_square && !out_of_order) continue;

        std::vector<GenFactor> prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
        std::vector<GenFactor> suffix(word.begin() + static_cast<std::ptrdiff_t>(i) + 2, word.end());
        auto splice = [&](const std::vector<GenFactor>& middle) {
            std::vector<GenFactor> w = prefix;
            w.insert(w.end(), middle.begin(), middle.end());
            w.insert(w.end(), suffix.begin(), suffix.end());
            return w;
        };

        if (odd_square) {
            // t^2 = (1/2) [t, t} for odd t; the bracket lowers the degree.
            for (const auto& [c, mid] : relation_rhs_words(f, f)) {
                AlgebraElement part = straighten_impl(splice(mid));
                result += part * (c * Rational(1, 2));
            }
        } else {
            // f g = (-1)^{[f][g]} g f + [f, g}
            int sgn = (ctx_.pair_parity(f.a, f.b) * ctx_.pair_parity(g.a, g.b)) % 2;
            result += straighten_impl(splice({g, f})) * Rational(sgn ? -1 : 1);
            for (const auto& [c, mid] : relation_rhs_words(f, g))
                result += straighten_impl(splice(mid)) * c;
        }
        rewritten = true;
        break; // leftmost violation only
    }

    if (!rewritten) result.add(group_word(word), Rational(1));
    memo_[word] = result;
    return result;
}

AlgebraElement StraightenEngine::straighten(
    const std::vector<std::pair<Rational, std::vector<GenFactor>>>& words) {
    AlgebraElement out(ctx_);
    for (const auto& [c, w] : words) out += straighten_word(w) * c;
    return out;
}

AlgebraElement StraightenEngine::commutator_rhs(const GenFactor& g1, const GenFactor& g2) {
    return straighten(relation_rhs_words(g1, g2));
}

AlgebraElement StraightenEngine::multiply(const AlgebraElement& x, const AlgebraElement& y) {
    if (!(x.ctx() == ctx_) || !(y.ctx() == ctx_))
        throw std::invalid_argument("multiply: grading context mismatch");
    AlgebraElement out(ctx_);
    for (const auto& [mx, cx] : x.terms()) {
        std::vector<GenFactor> wx = mx.expand();
        for (const auto& [my, cy] : y.terms()) {
            std::vector<GenFactor> w = wx;
            for (const auto& g : my.expand()) w.push_back(g);
            out += straighten_impl(w) * (cx * cy);
        }
    }
    return out;
}

AlgebraElement StraightenEngine::apply_automorphism(const std::vector<Rational>& f,
                                                    const AlgebraElement& x) {
    if (!(x.ctx() == ctx_)) throw std::invalid_argument("apply_automorphism: context mismatch");
    const int K = static_cast<int>(f.size());
    auto image = [&](const GenFactor& g) {
        // coefficient of x^{-n} in f(x) t^a_b(x), with t^a_b[0] = (-1)^{[b]} delta^a_b
        AlgebraElement img(ctx_);
        for (int k = 0; k <= std::min(g.n - 1, K); ++k) {
            Rational fk = k == 0 ? Rational(1) : f[static_cast<std::size_t>(k) - 1];
            if (!fk.is_zero()) img += AlgebraElement::generator(ctx_, g.a, g.b, g.n - k, fk);
        }
        if (g.a == g.b && g.n <= K) {
            Rational c = f[static_cast<std::size_t>(g.n) - 1];
            if (ctx_.grade(g.b) == 1) c = -c;
            img += AlgebraElement::unit(ctx_, c);
        }
        return img;
    };
    AlgebraElement out(ctx_);
    for (const auto& [m, c] : x.terms()) {
        AlgebraElement prod = AlgebraElement::unit(ctx_, c);
        for (const auto& g : m.expand()) prod = multiply(prod, image(g));
        out += prod;
    }
    return out;
}

} // namespace syang
