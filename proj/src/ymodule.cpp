#include "syang/ymodule.hpp"

#include <algorithm>
#include <stdexcept>

namespace syang {

namespace {

const std::string kVarU = "u";

std::vector<std::pair<int, int>> all_pairs(const GradingContext& ctx) {
    std::vector<std::pair<int, int>> ps;
    for (int a = 1; a <= ctx.size(); ++a)
        for (int b = 1; b <= ctx.size(); ++b) ps.push_back({a, b});
    return ps;
}

std::vector<std::pair<int, int>> raising_pairs(const GradingContext& ctx) {
    std::vector<std::pair<int, int>> ps;
    for (int a = 1; a <= ctx.size(); ++a)
        for (int b = a + 1; b <= ctx.size(); ++b) ps.push_back({a, b});
    return ps;
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial g = Polynomial::gcd(a, b);
    return ((a * b) / g).monic();
}

void apply_ratfun_matrix(const SparseMatrix<RatFun>& m, const std::vector<Rational>& v,
                         std::vector<RatFun>& out) {
    out.assign(m.rows(), RatFun());
    for (const auto& [rc, f] : m.entries()) {
        const Rational& x = v[rc.second];
        if (!x.is_zero()) out[rc.first] += f * RatFun(x);
    }
}

/// parity-checked constant term
void check_constant_terms(const YModule& W) {
    for (const auto& [ab, m] : W.action) {
        auto [a, b] = ab;
        Rational want(W.ctx.grade(b) ? -1 : 1);
        for (int i = 0; i < W.dim; ++i)
            for (int j = 0; j < W.dim; ++j) {
                const RatFun f = m.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                Rational c = f.is_zero() ? Rational(0) : f.value_at_infinity();
                Rational expect = (a == b && i == j) ? want : Rational(0);
                if (c != expect)
                    throw std::logic_error("YModule: constant term invariant violated");
            }
    }
}

} // namespace

YModule evaluation_rep(const GlModule& gamma) {
    YModule W;
    W.ctx = gamma.ctx;
    W.dim = gamma.dim;
    W.parity = gamma.parity;
    W.weights = gamma.weights;
    const Polynomial u = Polynomial::monomial(1, Rational(1), kVarU);
    for (auto [a, b] : all_pairs(W.ctx)) {
        SparseMatrix<RatFun> m(static_cast<std::size_t>(W.dim), static_cast<std::size_t>(W.dim));
        for (const auto& [rc, v] : gamma.act(a, b).entries())
            m.add_to(rc.first, rc.second, RatFun(Polynomial::constant(v, kVarU), u));
        if (a == b) {
            Rational c(W.ctx.grade(b) ? -1 : 1);
            for (int i = 0; i < W.dim; ++i)
                m.add_to(static_cast<std::size_t>(i), static_cast<std::size_t>(i), RatFun(c));
        }
        W.action[{a, b}] = std::move(m);
    }
    W.provenance.kind = "evaluation";
    return W;
}

namespace {

/// Two-factor shifted tensor: slots at u and u + beta.
YModule two_factor_tensor(const YModule& A, const YModule& B, const Rational& beta) {
    if (!(A.ctx == B.ctx)) throw std::invalid_argument("shifted_tensor: context mismatch");
    const GradingContext& ctx = A.ctx;
    YModule W;
    W.ctx = ctx;
    W.dim = A.dim * B.dim;
    auto idx = [&](std::size_t i, std::size_t j) { return i * static_cast<std::size_t>(B.dim) + j; };
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j) {
            W.parity.push_back((A.parity[static_cast<std::size_t>(i)] +
                                B.parity[static_cast<std::size_t>(j)]) % 2);
            W.weights.push_back(A.weights[static_cast<std::size_t>(i)] +
                                B.weights[static_cast<std::size_t>(j)]);
        }
    for (auto [a, b] : all_pairs(ctx)) {
        SparseMatrix<RatFun> m(static_cast<std::size_t>(W.dim), static_cast<std::size_t>(W.dim));
        for (int c = 1; c <= ctx.size(); ++c) {
            int sgn = coproduct_sign_exponent(ctx, a, b, {c});
            Rational sfac(sgn ? -1 : 1);
            const auto& X = A.act(c, b);                // acts in the first slot at u
            SparseMatrix<RatFun> Y(static_cast<std::size_t>(B.dim), static_cast<std::size_t>(B.dim));
            for (const auto& [rc, f] : B.act(a, c).entries())
                Y.set(rc.first, rc.second, f.shift_arg(beta)); // second slot at u + beta
            int opp = ctx.pair_parity(a, c);           // parity of the second-slot operator
            for (const auto& [rcx, fx] : X.entries())
                for (const auto& [rcy, fy] : Y.entries()) {
                    Rational koszul(opp && A.parity[rcx.second] ? -1 : 1);
                    m.add_to(idx(rcx.first, rcy.first), idx(rcx.second, rcy.second),
                             fx * fy * RatFun(koszul * sfac));
                }
        }
        W.action[{a, b}] = std::move(m);
    }
    return W;
}

} // namespace

YModule shifted_tensor(const std::vector<YModule>& factors, const std::vector<Rational>& alphas) {
    if (factors.empty()) throw std::invalid_argument("shifted_tensor: no factors");
    if (alphas.size() != factors.size())
        throw std::invalid_argument("shifted_tensor: alphas must match the factor count");
    if (!alphas[0].is_zero()) throw std::invalid_argument("shifted_tensor: alpha_1 must be 0");
    YModule W = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i)
        W = two_factor_tensor(W, factors[i], alphas[i]);
    W.provenance.kind = factors.size() == 1 ? W.provenance.kind : "tensor";
    W.provenance.alphas = alphas;
    check_constant_terms(W);
    return W;
}

SparseMatrix<Rational> action_mode(const YModule& W, int a, int b, int n) {
    if (n < 1) throw std::invalid_argument("action_mode: level must be >= 1");
    SparseMatrix<Rational> m(static_cast<std::size_t>(W.dim), static_cast<std::size_t>(W.dim));
    for (const auto& [rc, f] : W.act(a, b).entries()) {
        Rational c = f.series_coeff(n);
        if (!c.is_zero()) m.set(rc.first, rc.second, c);
    }
    return m;
}

Polynomial common_denominator(const YModule& W) {
    Polynomial l = Polynomial::constant(Rational(1), kVarU);
    for (const auto& [ab, m] : W.action)
        for (const auto& [rc, f] : m.entries()) l = poly_lcm(l, f.den());
    return l;
}

int certificate_levels(const YModule& W) {
    return std::max(1, common_denominator(W).degree());
}

bool check_mode_recurrence(const YModule& W) {
    int k = certificate_levels(W);
    auto flatten = [&](const SparseMatrix<Rational>& m) {
        std::vector<Rational> v(static_cast<std::size_t>(W.dim) * static_cast<std::size_t>(W.dim));
        for (const auto& [rc, x] : m.entries())
            v[rc.first * static_cast<std::size_t>(W.dim) + rc.second] = x;
        return v;
    };
    for (auto [a, b] : all_pairs(W.ctx)) {
        std::vector<std::vector<Rational>> span_basis;
        span_basis.push_back(flatten(SparseMatrix<Rational>::identity(static_cast<std::size_t>(W.dim))));
        for (int l = 1; l <= k; ++l) span_basis.push_back(flatten(action_mode(W, a, b, l)));
        span_basis = echelon_basis(std::move(span_basis));
        for (int l = k + 1; l <= 2 * k; ++l)
            if (!in_span(span_basis, flatten(action_mode(W, a, b, l)))) return false;
    }
    return true;
}

RelationReport verify_defining_relations(const YModule& W, int level_max) {
    const GradingContext& ctx = W.ctx;
    const int top = 2 * level_max - 1;
    std::map<std::pair<int, int>, std::vector<SparseMatrix<Rational>>> modes;
    for (auto [a, b] : all_pairs(ctx)) {
        auto& v = modes[{a, b}];
        v.push_back(SparseMatrix<Rational>(static_cast<std::size_t>(W.dim),
                                           static_cast<std::size_t>(W.dim))); // unused slot 0
        for (int l = 1; l <= top; ++l) v.push_back(action_mode(W, a, b, l));
    }
    RelationReport rep;
    for (auto [a1, b1] : all_pairs(ctx))
        for (auto [a2, b2] : all_pairs(ctx)) {
            int p1 = ctx.pair_parity(a1, b1), p2 = ctx.pair_parity(a2, b2);
            Rational swap_sign((p1 * p2) % 2 ? -1 : 1);
            Rational eta_sign(ctx.eta(a1, b1, a2, b2) ? -1 : 1);
            for (int m = 1; m <= level_max; ++m)
                for (int n = 1; n <= level_max; ++n) {
                    const auto& A = modes[{a1, b1}][static_cast<std::size_t>(m)];
                    const auto& B = modes[{a2, b2}][static_cast<std::size_t>(n)];
                    SparseMatrix<Rational> lhs = A * B - B * A * swap_sign;
                    SparseMatrix<Rational> rhs(static_cast<std::size_t>(W.dim),
                                               static_cast<std::size_t>(W.dim));
                    if (b1 == a2) rhs = rhs + modes[{a1, b2}][static_cast<std::size_t>(m + n - 1)];
                    if (a1 == b2)
                        rhs = rhs - modes[{a2, b1}][static_cast<std::size_t>(m + n - 1)] * swap_sign;
                    for (int r = 1; r <= std::min(m, n) - 1; ++r) {
                        const auto& P = modes[{a2, b1}];
                        const auto& Q = modes[{a1, b2}];
                        rhs = rhs + (P[static_cast<std::size_t>(r)] *
                                     Q[static_cast<std::size_t>(m + n - 1 - r)]) * eta_sign;
                        rhs = rhs - (P[static_cast<std::size_t>(m + n - 1 - r)] *
                                     Q[static_cast<std::size_t>(r)]) * eta_sign;
                    }
                    if (!(lhs == rhs)) {
                        rep.pass = false;
                        rep.a1 = a1; rep.b1 = b1; rep.m = m;
                        rep.a2 = a2; rep.b2 = b2; rep.n = n;
                        rep.detail = "mode relation fails at [t(" + std::to_string(a1) + "," +
                                     std::to_string(b1) + ")[" + std::to_string(m) + "], t(" +
                                     std::to_string(a2) + "," + std::to_string(b2) + ")[" +
                                     std::to_string(n) + "]}";
                        return rep;
                    }
                }
        }
    return rep;
}

namespace {

/// Exact restriction of a RatFun matrix to a rational subspace basis;
/// returns false if the subspace is not invariant.
bool restrict_ratfun_matrix(const SparseMatrix<RatFun>& m,
                            const std::vector<std::vector<Rational>>& basis,
                            std::vector<std::vector<RatFun>>& out) {
    std::size_t k = basis.size();
    std::vector<std::vector<RatFun>> basis_rf;
    for (const auto& b : basis) {
        std::vector<RatFun> v;
        v.reserve(b.size());
        for (const auto& x : b) v.push_back(RatFun(x));
        basis_rf.push_back(std::move(v));
    }
    out.assign(k, std::vector<RatFun>(k, RatFun()));
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<RatFun> img;
        apply_ratfun_matrix(m, basis[j], img);
        auto y = coords_in_span(basis_rf, img);
        if (!y) return false;
        for (std::size_t i = 0; i < k; ++i) out[i][j] = (*y)[i];
    }
    return true;
}

bool is_scalar(const std::vector<std::vector<RatFun>>& m, RatFun& lambda) {
    std::size_t k = m.size();
    lambda = m[0][0];
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j && !(m[i][j] == lambda)) return false;
            if (i != j && !m[i][j].is_zero()) return false;
        }
    return true;
}

} // namespace

MaximalVectorsResult maximal_vectors(const YModule& W) {
    const GradingContext& ctx = W.ctx;
    MaximalVectorsResult res;

    // 1. joint kernel of the raising numerators, one polynomial row block per pair
    std::vector<std::vector<Rational>> rows;
    for (auto [a, b] : raising_pairs(ctx)) {
        const auto& m = W.act(a, b);
        Polynomial den = Polynomial::constant(Rational(1), kVarU);
        for (const auto& [rc, f] : m.entries()) den = poly_lcm(den, f.den());
        int maxdeg = 0;
        std::vector<std::vector<Polynomial>> cleared(
            static_cast<std::size_t>(W.dim), std::vector<Polynomial>(static_cast<std::size_t>(W.dim)));
        for (const auto& [rc, f] : m.entries()) {
            Polynomial p = f.num() * (den / f.den());
            maxdeg = std::max(maxdeg, p.degree());
            cleared[rc.first][rc.second] = std::move(p);
        }
        for (int i = 0; i < W.dim; ++i)
            for (int d = 0; d <= maxdeg; ++d) {
                std::vector<Rational> row(static_cast<std::size_t>(W.dim), Rational(0));
                bool nz = false;
                for (int j = 0; j < W.dim; ++j) {
                    row[static_cast<std::size_t>(j)] =
                        cleared[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].coeff(d);
                    nz = nz || !row[static_cast<std::size_t>(j)].is_zero();
                }
                if (nz) rows.push_back(std::move(row));
            }
    }
    SparseMatrix<Rational> sys(rows.size() ? rows.size() : 1, static_cast<std::size_t>(W.dim));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (int j = 0; j < W.dim; ++j)
            if (!rows[r][static_cast<std::size_t>(j)].is_zero())
                sys.set(r, static_cast<std::size_t>(j), rows[r][static_cast<std::size_t>(j)]);
    auto v0 = nullspace(sys);
    res.annihilator_dim = static_cast<int>(v0.size());
    if (v0.empty()) return res;

    // 2. refine into joint eigenspaces of the diagonal modes
    std::vector<std::vector<std::vector<Rational>>> pieces{v0};
    int levels = certificate_levels(W);
    for (int a = 1; a <= ctx.size(); ++a) {
        for (int n = 1; n <= levels; ++n) {
            SparseMatrix<Rational> D = action_mode(W, a, a, n);
            std::vector<std::vector<std::vector<Rational>>> next;
            for (auto& piece : pieces) {
                if (piece.size() <= 1) {
                    next.push_back(std::move(piece));
                    continue;
                }
                // restriction of D to the piece
                std::size_t k = piece.size();
                std::vector<std::vector<Rational>> R(k, std::vector<Rational>(k));
                bool ok = true;
                for (std::size_t j = 0; j < k && ok; ++j) {
                    auto img = D.apply(piece[j]);
                    auto y = coords_in_span(piece, img);
                    if (!y) ok = false;
                    else
                        for (std::size_t i = 0; i < k; ++i) R[i][j] = (*y)[i];
                }
                if (!ok) {
                    res.complete = false;
                    continue;
                }
                SparseMatrix<Rational> Rm = SparseMatrix<Rational>::from_dense(R);
                Polynomial cp = char_poly(Rm);
                auto roots = cp.rational_roots();
                if (roots.residual.degree() > 0) {
                    res.complete = false; // cannot split exactly over the rationals
                    next.push_back(std::move(piece));
                    continue;
                }
                for (const auto& [lam, mult] : roots.roots) {
                    SparseMatrix<Rational> shifted = Rm;
                    for (std::size_t i = 0; i < k; ++i) shifted.add_to(i, i, -lam);
                    auto ker = nullspace(shifted);
                    std::vector<std::vector<Rational>> sub;
                    for (const auto& x : ker) {
                        std::vector<Rational> lift(static_cast<std::size_t>(W.dim), Rational(0));
                        for (std::size_t j = 0; j < k; ++j)
                            for (int i = 0; i < W.dim; ++i)
                                lift[static_cast<std::size_t>(i)] +=
                                    x[j] * piece[j][static_cast<std::size_t>(i)];
                        sub.push_back(std::move(lift));
                    }
                    if (!sub.empty()) next.push_back(echelon_basis(std::move(sub)));
                }
            }
            pieces = std::move(next);
        }
    }

    // 3. on each piece the diagonal series must act by scalars
    for (const auto& piece : pieces) {
        std::vector<RatFun> lambdas;
        bool scalar = true;
        for (int a = 1; a <= ctx.size() && scalar; ++a) {
            std::vector<std::vector<RatFun>> restr;
            if (!restrict_ratfun_matrix(W.act(a, a), piece, restr)) {
                scalar = false;
                break;
            }
            RatFun lam;
            if (!is_scalar(restr, lam)) {
                scalar = false;
                break;
            }
            lambdas.push_back(lam);
        }
        if (!scalar) {
            res.complete = false;
            continue;
        }
        HighestWeight hw(ctx, lambdas);
        for (const auto& vec : piece) res.vectors.push_back({vec, hw});
    }
    return res;
}

std::vector<std::vector<Rational>> cyclic_span(const YModule& W, const std::vector<Rational>& v) {
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || !x.is_zero();
    if (!nonzero) throw std::invalid_argument("cyclic_span: zero vector");
    int levels = certificate_levels(W);
    std::vector<SparseMatrix<Rational>> ops;
    for (auto [a, b] : all_pairs(W.ctx))
        for (int n = 1; n <= levels; ++n) ops.push_back(action_mode(W, a, b, n));

    std::vector<std::vector<Rational>> basis;
    std::vector<std::vector<Rational>> queue{v};
    basis = echelon_basis(std::vector<std::vector<Rational>>{v});
    while (!queue.empty()) {
        auto w = queue.back();
        queue.pop_back();
        for (const auto& op : ops) {
            auto img = op.apply(w);
            if (!in_span(basis, img)) {
                basis.push_back(img);
                basis = echelon_basis(std::move(basis));
                queue.push_back(img);
            }
        }
    }
    return basis;
}

HighestWeight highest_weight_of(const YModule& W, const std::vector<Rational>& v) {
    const GradingContext& ctx = W.ctx;
    for (auto [a, b] : raising_pairs(ctx)) {
        std::vector<RatFun> img;
        apply_ratfun_matrix(W.act(a, b), v, img);
        for (const auto& f : img)
            if (!f.is_zero())
                throw std::invalid_argument("highest_weight_of: vector is not maximal");
    }
    std::size_t pivot = v.size();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) { pivot = i; break; }
    if (pivot == v.size()) throw std::invalid_argument("highest_weight_of: zero vector");
    std::vector<RatFun> comps;
    for (int a = 1; a <= ctx.size(); ++a) {
        std::vector<RatFun> img;
        apply_ratfun_matrix(W.act(a, a), v, img);
        RatFun lam = img[pivot] / RatFun(v[pivot]);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!(img[i] == lam * RatFun(v[i])))
                throw std::invalid_argument("highest_weight_of: vector is not a joint eigenvector");
        comps.push_back(lam);
    }
    return HighestWeight(ctx, comps);
}

YModule irreducible_quotient(const YModule& W, const YHighestVector& hv, int* submodule_dim) {
    const GradingContext& ctx = W.ctx;
    // sanity: hv really is maximal (throws otherwise)
    highest_weight_of(W, hv.v);

    auto C = cyclic_span(W, hv.v);

    // gl weight of the generator: the x^{-1} coefficients of the diagonal series
    GlWeight top;
    for (int a = 1; a <= ctx.size(); ++a) top.mu.push_back(hv.weight.at(a).series_coeff(1));

    // weight of a closure vector, read from its support
    auto weight_of = [&](const std::vector<Rational>& w) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (!w[i].is_zero()) return W.weights[i];
        return GlWeight{};
    };

    std::vector<std::vector<Rational>> ambient;
    int top_count = 0;
    for (const auto& bv : C) {
        if (weight_of(bv) == top) ++top_count;
        else ambient.push_back(bv);
    }
    if (top_count != 1)
        throw std::logic_error("irreducible_quotient: top weight space is not one-dimensional");

    int levels = certificate_levels(W);
    std::vector<SparseMatrix<Rational>> ops;
    for (auto [a, b] : all_pairs(ctx))
        for (int n = 1; n <= levels; ++n) ops.push_back(action_mode(W, a, b, n));
    auto maximal = largest_invariant_subspace(ambient, ops);
    if (submodule_dim) *submodule_dim = static_cast<int>(maximal.size());

    // representatives: normalized hv first, then independent closure vectors
    std::vector<std::vector<Rational>> reps;
    {
        auto vn = hv.v;
        for (const auto& x : vn)
            if (!x.is_zero()) {
                Rational inv = x.inverse();
                for (auto& y : vn) y *= inv;
                break;
            }
        reps.push_back(vn);
    }
    {
        std::vector<std::vector<Rational>> picked = maximal;
        picked.push_back(reps[0]);
        picked = echelon_basis(std::move(picked));
        for (const auto& bv : C) {
            if (in_span(picked, bv)) continue;
            picked.push_back(bv);
            picked = echelon_basis(std::move(picked));
            reps.push_back(bv);
        }
    }

    std::vector<std::vector<RatFun>> P; // columns: reps then maximal basis
    for (const auto& r : reps) {
        std::vector<RatFun> col;
        for (const auto& x : r) col.push_back(RatFun(x));
        P.push_back(std::move(col));
    }
    for (const auto& mvec : maximal) {
        std::vector<RatFun> col;
        for (const auto& x : mvec) col.push_back(RatFun(x));
        P.push_back(std::move(col));
    }

    YModule Q;
    Q.ctx = ctx;
    Q.dim = static_cast<int>(reps.size());
    for (const auto& r : reps) {
        for (std::size_t i = 0; i < r.size(); ++i)
            if (!r[i].is_zero()) {
                Q.parity.push_back(W.parity[i]);
                Q.weights.push_back(W.weights[i]);
                break;
            }
    }
    for (auto [a, b] : all_pairs(ctx)) {
        SparseMatrix<RatFun> m(static_cast<std::size_t>(Q.dim), static_cast<std::size_t>(Q.dim));
        for (std::size_t j = 0; j < reps.size(); ++j) {
            std::vector<RatFun> img;
            apply_ratfun_matrix(W.act(a, b), reps[j], img);
            auto y = coords_in_span(P, img);
            if (!y) throw std::logic_error("irreducible_quotient: span is not invariant");
            for (std::size_t i = 0; i < reps.size(); ++i)
                if (!(*y)[i].is_zero()) m.set(i, j, (*y)[i]);
        }
        Q.action[{a, b}] = std::move(m);
    }
    Q.provenance.kind = "quotient";
    Q.provenance.notes.push_back("maximal submodule dimension " + std::to_string(maximal.size()));
    check_constant_terms(Q);
    return Q;
}

} // namespace syang
