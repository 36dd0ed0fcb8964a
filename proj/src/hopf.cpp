#include "syang/hopf.hpp"

#include <functional>
#include <stdexcept>

namespace syang {

TruncSeries<AlgebraElement> generator_series(const GradingContext& ctx, int a, int b,
                                             const Rational& shift, int order) {
    ctx.check_index(a);
    ctx.check_index(b);
    TruncSeries<AlgebraElement> s;
    s.c.assign(static_cast<std::size_t>(order) + 1, AlgebraElement::zero(ctx));
    if (a == b) s.c[0] = AlgebraElement::unit(ctx, Rational(ctx.grade(b) ? -1 : 1));
    // (u+shift)^{-n} = sum_{j>=n} C(j-1, n-1) (-shift)^{j-n} u^{-j}
    for (int j = 1; j <= order; ++j) {
        AlgebraElement cj(ctx);
        for (int n = 1; n <= j; ++n) {
            Rational coeff = Rational(binomial(j - 1, n - 1)) * pow(-shift, j - n);
            if (!coeff.is_zero()) cj += AlgebraElement::generator(ctx, a, b, n, coeff);
        }
        s.c[static_cast<std::size_t>(j)] = std::move(cj);
    }
    return s;
}

std::string TensorElement::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [tuple, c] : t_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*[";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i) s += " (x) ";
            s += tuple[i].str();
        }
        s += "]";
    }
    return s;
}

TensorElement tensor_from_slots(const GradingContext& ctx,
                                const std::vector<AlgebraElement>& slots) {
    int k = static_cast<int>(slots.size());
    TensorElement out(ctx, k);
    std::vector<PBWMonomial> tuple(static_cast<std::size_t>(k));
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t i, Rational c) {
        if (i == slots.size()) {
            out.add(tuple, c);
            return;
        }
        for (const auto& [m, co] : slots[i].terms()) {
            tuple[i] = m;
            rec(i + 1, c * co);
        }
    };
    rec(0, Rational(1));
    return out;
}

TensorElement graded_tensor_multiply(StraightenEngine& eng, const TensorElement& x,
                                     const TensorElement& y) {
    if (x.slots() != y.slots()) throw std::invalid_argument("tensor multiply: slot mismatch");
    const GradingContext& ctx = eng.ctx();
    const int k = x.slots();
    TensorElement out(ctx, k);
    for (const auto& [xt, xc] : x.terms()) {
        std::vector<int> xpar(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) xpar[static_cast<std::size_t>(i)] = xt[static_cast<std::size_t>(i)].parity(ctx);
        for (const auto& [yt, yc] : y.terms()) {
            // sign: move y_j (j < i) past x_i
            int e = 0;
            for (int i = 1; i < k; ++i)
                for (int j = 0; j < i; ++j)
                    e += xpar[static_cast<std::size_t>(i)] * yt[static_cast<std::size_t>(j)].parity(ctx);
            Rational c = xc * yc * Rational(e % 2 ? -1 : 1);
            std::vector<AlgebraElement> prods;
            prods.reserve(static_cast<std::size_t>(k));
            bool zero = false;
            for (int i = 0; i < k && !zero; ++i) {
                std::vector<GenFactor> w = xt[static_cast<std::size_t>(i)].expand();
                for (const auto& g : yt[static_cast<std::size_t>(i)].expand()) w.push_back(g);
                AlgebraElement p = eng.straighten_word(w);
                if (p.is_zero()) zero = true;
                prods.push_back(std::move(p));
            }
            if (zero) continue;
            TensorElement piece = tensor_from_slots(ctx, prods);
            piece *= c;
            out += piece;
        }
    }
    return out;
}

TensorElement apply_counit_slot(const TensorElement& x, int slot) {
    if (slot < 0 || slot >= x.slots()) throw std::invalid_argument("apply_counit_slot: bad slot");
    TensorElement out(x.ctx(), x.slots() - 1);
    for (const auto& [tuple, c] : x.terms()) {
        if (!tuple[static_cast<std::size_t>(slot)].empty()) continue; // counit kills modes
        std::vector<PBWMonomial> rest;
        for (int i = 0; i < x.slots(); ++i)
            if (i != slot) rest.push_back(tuple[static_cast<std::size_t>(i)]);
        out.add(rest, c);
    }
    return out;
}

int coproduct_sign_exponent(const GradingContext& ctx, int a, int b, const std::vector<int>& mids) {
    std::vector<int> chain;
    chain.push_back(b);
    for (int m : mids) chain.push_back(m);
    chain.push_back(a);
    int e = 0;
    for (std::size_t i = 1; i + 1 <= chain.size() - 1; ++i) {
        int gi = ctx.grade(chain[i]);
        e += gi + (ctx.grade(chain[0]) + gi) * (gi + ctx.grade(chain[i + 1]));
    }
    return e % 2;
}

TruncSeries<TensorElement> coproduct_symbolic(StraightenEngine& eng, int a, int b, int order,
                                              int k, const std::vector<Rational>& alphas) {
    const GradingContext& ctx = eng.ctx();
    ctx.check_index(a);
    ctx.check_index(b);
    if (k < 1) throw std::invalid_argument("coproduct_symbolic: k must be >= 1");
    if (static_cast<int>(alphas.size()) != k || !alphas[0].is_zero())
        throw std::invalid_argument("coproduct_symbolic: alphas must have length k with alpha_1 = 0");

    TruncSeries<TensorElement> out;
    out.c.assign(static_cast<std::size_t>(order) + 1, TensorElement(ctx, k));

    std::vector<int> mids(static_cast<std::size_t>(k - 1), 1);
    std::function<void(int)> iterate = [&](int pos) {
        if (pos == k - 1) {
            // chain b = a_0, mids..., a_k = a; slot i holds t^{a_i}_{a_{i-1}}(u+alpha_i)
            int sgn = coproduct_sign_exponent(ctx, a, b, mids);
            std::vector<TruncSeries<AlgebraElement>> slot_series;
            for (int i = 1; i <= k; ++i) {
                int upper = (i == k) ? a : mids[static_cast<std::size_t>(i - 1)];
                int lower = (i == 1) ? b : mids[static_cast<std::size_t>(i - 2)];
                slot_series.push_back(
                    generator_series(ctx, upper, lower, alphas[static_cast<std::size_t>(i - 1)], order));
            }
            // Cauchy product over compositions of each total order j
            std::vector<int> parts(static_cast<std::size_t>(k), 0);
            std::function<void(int, int)> comp = [&](int slot, int used) {
                if (slot == k) {
                    std::vector<AlgebraElement> vals;
                    bool zero = false;
                    for (int i = 0; i < k; ++i) {
                        const AlgebraElement& v =
                            slot_series[static_cast<std::size_t>(i)].at(parts[static_cast<std::size_t>(i)]);
                        if (v.is_zero()) { zero = true; break; }
                        vals.push_back(v);
                    }
                    if (!zero) {
                        TensorElement piece = tensor_from_slots(ctx, vals);
                        piece *= Rational(sgn ? -1 : 1);
                        out.at(used) += piece;
                    }
                    return;
                }
                for (int j = 0; used + j <= order; ++j) {
                    parts[static_cast<std::size_t>(slot)] = j;
                    comp(slot + 1, used + j);
                }
                parts[static_cast<std::size_t>(slot)] = 0;
            };
            comp(0, 0);
            return;
        }
        for (int c = 1; c <= ctx.size(); ++c) {
            mids[static_cast<std::size_t>(pos)] = c;
            iterate(pos + 1);
        }
    };
    iterate(0);
    return out;
}

TensorElement coproduct_of_mode(StraightenEngine& eng, int a, int b, int n, const Rational& beta) {
    auto series = coproduct_symbolic(eng, a, b, n, 2, {Rational(0), beta});
    return series.at(n);
}

TensorElement apply_delta_to_slot(StraightenEngine& eng, const TensorElement& x, int slot,
                                  const Rational& beta) {
    const GradingContext& ctx = eng.ctx();
    if (slot < 0 || slot >= x.slots()) throw std::invalid_argument("apply_delta_to_slot: bad slot");
    TensorElement out(ctx, x.slots() + 1);
    for (const auto& [tuple, c] : x.terms()) {
        // Delta of the slot monomial: product of the mode coproducts
        TensorElement d = TensorElement::unit(ctx, 2);
        for (const auto& g : tuple[static_cast<std::size_t>(slot)].expand())
            d = graded_tensor_multiply(eng, d, coproduct_of_mode(eng, g.a, g.b, g.n, beta));
        for (const auto& [pair_tuple, dc] : d.terms()) {
            std::vector<PBWMonomial> nt;
            for (int i = 0; i < x.slots(); ++i) {
                if (i == slot) {
                    nt.push_back(pair_tuple[0]);
                    nt.push_back(pair_tuple[1]);
                } else {
                    nt.push_back(tuple[static_cast<std::size_t>(i)]);
                }
            }
            out.add(nt, c * dc);
        }
    }
    return out;
}

AntipodeTable antipode_images(StraightenEngine& eng, int order) {
    if (order < 1) throw std::invalid_argument("antipode_images: order must be >= 1");
    const GradingContext& ctx = eng.ctx();
    const int d = ctx.size();
    using Entry = TruncSeries<AlgebraElement>;
    auto zero_entry = [&]() {
        Entry e;
        e.c.assign(static_cast<std::size_t>(order) + 1, AlgebraElement::zero(ctx));
        return e;
    };
    using Mat = std::vector<std::vector<Entry>>;
    auto zero_mat = [&]() { return Mat(static_cast<std::size_t>(d), std::vector<Entry>(static_cast<std::size_t>(d), zero_entry())); };

    // T[i][j]: the e^i_j coefficient of L - I, namely (-1)^{[i]} (t^j_i(u) - const)
    Mat T = zero_mat();
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            auto s = generator_series(ctx, j, i, Rational(0), order);
            if (i == j) s.c[0] = AlgebraElement::zero(ctx); // strip the constant
            if (ctx.grade(i) == 1)
                for (auto& x : s.c) x *= Rational(-1);
            T[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = std::move(s);
        }

    // Graded product: (XY)[i][j] = sum_k (-1)^{([k]+[j])([i]+[k])} X[i][k] Y[k][j].
    auto mat_mul = [&](const Mat& X, const Mat& Y) {
        Mat Z = zero_mat();
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                for (int k = 1; k <= d; ++k) {
                    int e = (ctx.grade(k) + ctx.grade(j)) * (ctx.grade(i) + ctx.grade(k)) % 2;
                    Rational sg(e ? -1 : 1);
                    const Entry& xe = X[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)];
                    const Entry& ye = Y[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(j - 1)];
                    Entry& ze = Z[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
                    for (int p = 0; p <= order; ++p)
                        for (int q = 0; p + q <= order; ++q) {
                            if (xe.c[static_cast<std::size_t>(p)].is_zero() ||
                                ye.c[static_cast<std::size_t>(q)].is_zero())
                                continue;
                            AlgebraElement prod = eng.multiply(xe.c[static_cast<std::size_t>(p)],
                                                               ye.c[static_cast<std::size_t>(q)]);
                            ze.c[static_cast<std::size_t>(p + q)] += prod * sg;
                        }
                }
        return Z;
    };

    // X = sum_{p>=0} (-T)^p, truncated
    Mat X = zero_mat();
    for (int i = 0; i < d; ++i)
        X[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].c[0] = AlgebraElement::unit(ctx);
    Mat P = zero_mat();
    for (int i = 0; i < d; ++i)
        P[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].c[0] = AlgebraElement::unit(ctx);
    for (int p = 1; p <= order; ++p) {
        P = mat_mul(P, T);
        Rational sg(p % 2 ? -1 : 1);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int q = 0; q <= order; ++q)
                    X[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].c[static_cast<std::size_t>(q)] +=
                        P[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].c[static_cast<std::size_t>(q)] * sg;
    }

    // S(t^a_b(u)) = (-1)^{[b]} X[b][a]
    AntipodeTable table;
    table.order = order;
    for (int aa = 1; aa <= d; ++aa)
        for (int bb = 1; bb <= d; ++bb)
            for (int n = 1; n <= order; ++n) {
                AlgebraElement img =
                    X[static_cast<std::size_t>(bb - 1)][static_cast<std::size_t>(aa - 1)].c[static_cast<std::size_t>(n)];
                if (ctx.grade(bb) == 1) img *= Rational(-1);
                table.image[GenFactor{aa, bb, n}] = std::move(img);
            }
    return table;
}

bool check_coassociativity(StraightenEngine& eng, int a, int b, int order, const Rational& alpha2,
                           const Rational& alpha3) {
    auto direct = coproduct_symbolic(eng, a, b, order, 3, {Rational(0), alpha2, alpha3});
    auto left_in = coproduct_symbolic(eng, a, b, order, 2, {Rational(0), alpha3});
    auto right_in = coproduct_symbolic(eng, a, b, order, 2, {Rational(0), alpha2});
    for (int j = 0; j <= order; ++j) {
        TensorElement l = apply_delta_to_slot(eng, left_in.at(j), 0, alpha2);
        TensorElement r = apply_delta_to_slot(eng, right_in.at(j), 1, alpha3 - alpha2);
        if (!(l == direct.at(j)) || !(r == direct.at(j))) return false;
    }
    return true;
}

bool check_counit_laws(StraightenEngine& eng, int a, int b, int order, const Rational& alpha) {
    const GradingContext& ctx = eng.ctx();
    auto cop = coproduct_symbolic(eng, a, b, order, 2, {Rational(0), alpha});
    auto shifted = generator_series(ctx, a, b, alpha, order);
    auto plain = generator_series(ctx, a, b, Rational(0), order);
    for (int j = 0; j <= order; ++j) {
        TensorElement left = apply_counit_slot(cop.at(j), 0);   // should be t^a_b(u+alpha)
        TensorElement right = apply_counit_slot(cop.at(j), 1);  // should be t^a_b(u)
        TensorElement expl = tensor_from_slots(ctx, {shifted.at(j)});
        TensorElement expr = tensor_from_slots(ctx, {plain.at(j)});
        if (!(left == expl) || !(right == expr)) return false;
    }
    return true;
}

bool check_antipode_law(StraightenEngine& eng, int a, int b, int order) {
    const GradingContext& ctx = eng.ctx();
    AntipodeTable S = antipode_images(eng, order);
    auto s_series = [&](int aa, int bb) {
        TruncSeries<AlgebraElement> s;
        s.c.assign(static_cast<std::size_t>(order) + 1, AlgebraElement::zero(ctx));
        if (aa == bb) s.c[0] = AlgebraElement::unit(ctx, Rational(ctx.grade(bb) ? -1 : 1));
        for (int n = 1; n <= order; ++n) s.c[static_cast<std::size_t>(n)] = S.at(aa, bb, n);
        return s;
    };
    auto expected = [&](int j) {
        if (j == 0 && a == b) return AlgebraElement::unit(ctx, Rational(ctx.grade(b) ? -1 : 1));
        return AlgebraElement::zero(ctx);
    };
    for (int variant = 0; variant < 2; ++variant) {
        std::vector<AlgebraElement> acc(static_cast<std::size_t>(order) + 1, AlgebraElement::zero(ctx));
        for (int c = 1; c <= ctx.size(); ++c) {
            int sgn = coproduct_sign_exponent(ctx, a, b, {c});
            auto first = variant == 0 ? s_series(c, b) : generator_series(ctx, c, b, Rational(0), order);
            auto second = variant == 0 ? generator_series(ctx, a, c, Rational(0), order) : s_series(a, c);
            for (int p = 0; p <= order; ++p)
                for (int q = 0; p + q <= order; ++q) {
                    if (first.at(p).is_zero() || second.at(q).is_zero()) continue;
                    AlgebraElement prod = eng.multiply(first.at(p), second.at(q));
                    acc[static_cast<std::size_t>(p + q)] += prod * Rational(sgn ? -1 : 1);
                }
        }
        for (int j = 0; j <= order; ++j)
            if (!(acc[static_cast<std::size_t>(j)] == expected(j))) return false;
    }
    return true;
}

} // namespace syang
