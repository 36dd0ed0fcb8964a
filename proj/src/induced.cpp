#include "syang/induced.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace syang {

namespace {

const std::string kVarU = "u";

std::vector<std::pair<int, int>> block_pairs(const GradingContext& ctx, bool even_block) {
    std::vector<std::pair<int, int>> ps;
    int lo = even_block ? 1 : ctx.M + 1;
    int hi = even_block ? ctx.M : ctx.size();
    for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi; ++b) ps.push_back({a, b});
    return ps;
}

SparseMatrix<Rational> mode_of(const SparseMatrix<RatFun>& m, int n) {
    SparseMatrix<Rational> out(m.rows(), m.cols());
    for (const auto& [rc, f] : m.entries()) {
        Rational c = f.series_coeff(n);
        if (!c.is_zero()) out.set(rc.first, rc.second, c);
    }
    return out;
}

} // namespace

InducedV0 one_dimensional_v0(const GradingContext& ctx, const Rational& even_eig,
                             const Rational& odd_eig) {
    InducedV0 v0;
    v0.ctx = ctx;
    v0.dim = 1;
    const Polynomial u = Polynomial::monomial(1, Rational(1), kVarU);
    for (auto [a, b] : block_pairs(ctx, true)) {
        SparseMatrix<RatFun> m(1, 1);
        if (a == b) m.set(0, 0, RatFun(Polynomial({even_eig, Rational(1)}, kVarU), u));
        v0.phi[{a, b}] = std::move(m);
    }
    for (auto [a, b] : block_pairs(ctx, false)) {
        SparseMatrix<RatFun> m(1, 1);
        if (a == b) m.set(0, 0, RatFun(Polynomial({odd_eig, Rational(-1)}, kVarU), u));
        v0.psi[{a, b}] = std::move(m);
    }
    return v0;
}

std::string validate_v0(const InducedV0& v0, int level_max) {
    const GradingContext& ctx = v0.ctx;
    // constant terms
    for (bool even_block : {true, false}) {
        Rational want(even_block ? 1 : -1);
        for (auto [a, b] : block_pairs(ctx, even_block)) {
            if (!v0.has_block(a, b))
                return "missing block (" + std::to_string(a) + "," + std::to_string(b) + ")";
            const auto& m = v0.block(a, b);
            if (m.rows() != static_cast<std::size_t>(v0.dim) ||
                m.cols() != static_cast<std::size_t>(v0.dim))
                return "block dimension mismatch";
            for (int i = 0; i < v0.dim; ++i)
                for (int j = 0; j < v0.dim; ++j) {
                    RatFun f = m.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                    Rational c = f.is_zero() ? Rational(0) : f.value_at_infinity();
                    Rational expect = (a == b && i == j) ? want : Rational(0);
                    if (c != expect) return "constant term of a V0 block is wrong";
                }
        }
    }
    // the two blocks commute mode by mode
    for (auto [i, j] : block_pairs(ctx, true))
        for (auto [mu, nu] : block_pairs(ctx, false))
            for (int m = 1; m <= level_max; ++m)
                for (int n = 1; n <= level_max; ++n) {
                    auto A = mode_of(v0.phi.at({i, j}), m);
                    auto B = mode_of(v0.psi.at({mu, nu}), n);
                    if (!(A * B == B * A)) return "phi and psi modes do not commute";
                }
    // each block satisfies the restricted mode relations
    auto check_block = [&](bool even_block) -> std::string {
        auto pairs = block_pairs(ctx, even_block);
        const int top = 2 * level_max - 1;
        std::map<std::pair<int, int>, std::vector<SparseMatrix<Rational>>> modes;
        for (auto [a, b] : pairs) {
            auto& v = modes[{a, b}];
            v.push_back(SparseMatrix<Rational>(static_cast<std::size_t>(v0.dim),
                                               static_cast<std::size_t>(v0.dim)));
            for (int l = 1; l <= top; ++l) v.push_back(mode_of(v0.block(a, b), l));
        }
        for (auto [a1, b1] : pairs)
            for (auto [a2, b2] : pairs) {
                Rational eta_sign(ctx.eta(a1, b1, a2, b2) ? -1 : 1);
                for (int m = 1; m <= level_max; ++m)
                    for (int n = 1; n <= level_max; ++n) {
                        const auto& A = modes[{a1, b1}][static_cast<std::size_t>(m)];
                        const auto& B = modes[{a2, b2}][static_cast<std::size_t>(n)];
                        SparseMatrix<Rational> lhs = A * B - B * A; // both blocks are even
                        SparseMatrix<Rational> rhs(static_cast<std::size_t>(v0.dim),
                                                   static_cast<std::size_t>(v0.dim));
                        if (b1 == a2) rhs = rhs + modes[{a1, b2}][static_cast<std::size_t>(m + n - 1)];
                        if (a1 == b2) rhs = rhs - modes[{a2, b1}][static_cast<std::size_t>(m + n - 1)];
                        for (int r = 1; r <= std::min(m, n) - 1; ++r) {
                            rhs = rhs + (modes[{a2, b1}][static_cast<std::size_t>(r)] *
                                         modes[{a1, b2}][static_cast<std::size_t>(m + n - 1 - r)]) *
                                            eta_sign;
                            rhs = rhs - (modes[{a2, b1}][static_cast<std::size_t>(m + n - 1 - r)] *
                                         modes[{a1, b2}][static_cast<std::size_t>(r)]) *
                                            eta_sign;
                        }
                        if (!(lhs == rhs)) return "a V0 block violates its defining relations";
                    }
            }
        return {};
    };
    if (auto e = check_block(true); !e.empty()) return e;
    if (auto e = check_block(false); !e.empty()) return e;
    return {};
}

InducedModule induced_module_truncated(StraightenEngine& eng, const InducedV0& v0, int cutoff,
                                       int levels) {
    const GradingContext& ctx = eng.ctx();
    if (!(v0.ctx == ctx)) throw std::invalid_argument("induced module: context mismatch");
    if (cutoff < 1) throw std::invalid_argument("induced module: cutoff must be >= 1");
    if (auto err = validate_v0(v0); !err.empty())
        throw std::invalid_argument("induced module: " + err);

    InducedModule W;
    W.ctx = ctx;
    W.cutoff = cutoff;
    W.levels = levels;
    W.v0dim = v0.dim;

    // odd lowering pairs (mu, i) with mu > M >= i, in slot order
    std::vector<std::pair<int, int>> odd_neg;
    for (int a = ctx.M + 1; a <= ctx.size(); ++a)
        for (int b = 1; b <= ctx.M; ++b) odd_neg.push_back({a, b});
    std::sort(odd_neg.begin(), odd_neg.end(), [&](auto p, auto q) {
        return slot_less(ctx, p.first, p.second, 1, q.first, q.second, 1);
    });

    // enumerate ordered monomials of total degree <= cutoff: per pair an
    // ascending set of levels, each exponent 1
    std::vector<PBWFactor> current;
    std::function<void(std::size_t, int, int)> enumerate = [&](std::size_t pi, int used,
                                                               int min_level) {
        if (pi == odd_neg.size()) {
            W.monos.push_back(PBWMonomial(current));
            return;
        }
        // either close this pair and move on...
        enumerate(pi + 1, used, 1);
        // ...or add one more level for this pair
        auto [a, b] = odd_neg[pi];
        for (int n = min_level; used + n <= cutoff; ++n) {
            current.push_back({a, b, n, 1});
            enumerate(pi, used + n, n + 1);
            current.pop_back();
        }
    };
    enumerate(0, 0, 1);
    std::sort(W.monos.begin(), W.monos.end());
    W.dim = static_cast<int>(W.monos.size()) * v0.dim;

    std::map<PBWMonomial, int> mono_index;
    for (std::size_t i = 0; i < W.monos.size(); ++i)
        mono_index[W.monos[i]] = static_cast<int>(i);
    auto flat = [&](int mono, int s) { return static_cast<std::size_t>(mono * v0.dim + s); };

    // V0 coordinate weights from the diagonal level-1 modes (must be diagonal)
    std::vector<GlWeight> v0w(static_cast<std::size_t>(v0.dim));
    for (int s = 0; s < v0.dim; ++s)
        v0w[static_cast<std::size_t>(s)].mu.assign(static_cast<std::size_t>(ctx.size()), Rational(0));
    for (int a = 1; a <= ctx.size(); ++a) {
        auto D = mode_of(v0.block(a, a), 1);
        for (const auto& [rc, c] : D.entries()) {
            if (rc.first != rc.second)
                throw std::invalid_argument("induced module: V0 diagonal modes must be diagonal");
            v0w[rc.first].mu[static_cast<std::size_t>(a - 1)] = c;
        }
    }
    for (const auto& mono : W.monos) {
        GlWeight shift;
        shift.mu.assign(static_cast<std::size_t>(ctx.size()), Rational(0));
        int par = mono.parity(ctx);
        for (const auto& f : mono.factors()) {
            shift.mu[static_cast<std::size_t>(f.a - 1)] += Rational(1);
            shift.mu[static_cast<std::size_t>(f.b - 1)] -= Rational(1);
        }
        for (int s = 0; s < v0.dim; ++s) {
            W.parity.push_back(par); // V0 vectors are even
            W.weights.push_back(v0w[static_cast<std::size_t>(s)] + shift);
        }
    }

    // act with a straightened monomial's non-lowering tail on a V0 vector
    auto act_tail = [&](const std::vector<PBWFactor>& tail, int s) -> std::vector<Rational> {
        std::vector<Rational> w(static_cast<std::size_t>(v0.dim), Rational(0));
        w[static_cast<std::size_t>(s)] = Rational(1);
        for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
            for (int rep = 0; rep < it->k; ++rep) {
                PairBlock blk = pair_block(ctx, it->a, it->b);
                if (blk == PairBlock::odd_pos) return std::vector<Rational>(w.size(), Rational(0));
                auto M = mode_of(v0.block(it->a, it->b), it->n);
                w = M.apply(w);
            }
            bool zero = true;
            for (const auto& x : w) zero = zero && x.is_zero();
            if (zero) break;
        }
        return w;
    };

    for (int a = 1; a <= ctx.size(); ++a)
        for (int b = 1; b <= ctx.size(); ++b) {
            auto& vec = W.modes[{a, b}];
            for (int n = 1; n <= levels; ++n)
                vec.push_back(SparseMatrix<Rational>(static_cast<std::size_t>(W.dim),
                                                     static_cast<std::size_t>(W.dim)));
            for (std::size_t mi = 0; mi < W.monos.size(); ++mi) {
                std::vector<GenFactor> base = W.monos[mi].expand();
                for (int n = 1; n <= levels; ++n) {
                    std::vector<GenFactor> word;
                    word.push_back({a, b, n});
                    word.insert(word.end(), base.begin(), base.end());
                    AlgebraElement nf = eng.straighten_word(word);
                    for (const auto& [mono, coeff] : nf.terms()) {
                        // split into the odd-lowering prefix and the tail
                        std::vector<PBWFactor> prefix, tail;
                        for (const auto& f : mono.factors()) {
                            if (pair_block(ctx, f.a, f.b) == PairBlock::odd_neg) prefix.push_back(f);
                            else tail.push_back(f);
                        }
                        PBWMonomial pm(prefix);
                        if (pm.degree() > cutoff) continue; // truncation
                        auto it = mono_index.find(pm);
                        if (it == mono_index.end()) continue;
                        for (int s = 0; s < v0.dim; ++s) {
                            auto w = act_tail(tail, s);
                            for (int t = 0; t < v0.dim; ++t) {
                                Rational c = coeff * w[static_cast<std::size_t>(t)];
                                if (!c.is_zero())
                                    W.modes[{a, b}][static_cast<std::size_t>(n - 1)].add_to(
                                        flat(it->second, t), flat(static_cast<int>(mi), s), c);
                            }
                        }
                    }
                }
            }
        }

    // top vector: (empty monomial) tensor (highest vector of V0)
    int empty_idx = mono_index.at(PBWMonomial{});
    std::vector<Rational> v0top(static_cast<std::size_t>(v0.dim), Rational(0));
    {
        // joint kernel of the raising numerators of the blocks
        std::vector<std::vector<Rational>> rows;
        for (bool even_block : {true, false})
            for (auto [a, b] : block_pairs(ctx, even_block)) {
                if (a >= b) continue;
                for (int n = 1; n <= levels; ++n) {
                    auto M = mode_of(v0.block(a, b), n);
                    for (std::size_t r = 0; r < M.rows(); ++r) {
                        std::vector<Rational> row(static_cast<std::size_t>(v0.dim), Rational(0));
                        bool nz = false;
                        for (std::size_t c = 0; c < M.cols(); ++c) {
                            row[c] = M.get(r, c);
                            nz = nz || !row[c].is_zero();
                        }
                        if (nz) rows.push_back(std::move(row));
                    }
                }
            }
        SparseMatrix<Rational> sys(rows.empty() ? 1 : rows.size(), static_cast<std::size_t>(v0.dim));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                if (!rows[r][c].is_zero()) sys.set(r, c, rows[r][c]);
        auto ns = nullspace(sys);
        if (ns.empty()) throw std::invalid_argument("induced module: V0 has no highest vector");
        v0top = ns.front();
    }
    W.top_vector.assign(static_cast<std::size_t>(W.dim), Rational(0));
    for (int s = 0; s < v0.dim; ++s) W.top_vector[flat(empty_idx, s)] = v0top[static_cast<std::size_t>(s)];

    // extracted weight: eigenvalue series of the diagonal blocks on v0top
    {
        std::size_t pivot = 0;
        while (v0top[pivot].is_zero()) ++pivot;
        std::vector<RatFun> comps;
        for (int a = 1; a <= ctx.size(); ++a) {
            const auto& m = v0.block(a, a);
            std::vector<RatFun> img(static_cast<std::size_t>(v0.dim), RatFun());
            for (const auto& [rc, f] : m.entries())
                if (!v0top[rc.second].is_zero()) img[rc.first] += f * RatFun(v0top[rc.second]);
            RatFun lam = img[pivot] / RatFun(v0top[pivot]);
            for (std::size_t i = 0; i < img.size(); ++i)
                if (!(img[i] == lam * RatFun(v0top[i])))
                    throw std::invalid_argument("induced module: V0 top vector is not an eigenvector");
            comps.push_back(lam);
        }
        W.hw = HighestWeight(ctx, comps);
    }

    // truncation honesty: raising modes must still annihilate the top vector
    for (int a = 1; a <= ctx.size() && W.truncation_clean; ++a)
        for (int b = a + 1; b <= ctx.size() && W.truncation_clean; ++b)
            for (int n = 1; n <= levels; ++n) {
                auto img = W.mode(a, b, n).apply(W.top_vector);
                for (const auto& x : img)
                    if (!x.is_zero()) { W.truncation_clean = false; break; }
            }

    // quotient dimension below the top weight line
    {
        std::vector<SparseMatrix<Rational>> ops;
        for (const auto& [ab, ms] : W.modes)
            for (const auto& m : ms) ops.push_back(m);
        // cyclic span of the top vector
        std::vector<std::vector<Rational>> basis = echelon_basis(std::vector<std::vector<Rational>>{W.top_vector});
        std::vector<std::vector<Rational>> queue{W.top_vector};
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
        GlWeight top;
        for (std::size_t i = 0; i < W.top_vector.size(); ++i)
            if (!W.top_vector[i].is_zero()) { top = W.weights[i]; break; }
        std::vector<std::vector<Rational>> ambient;
        for (const auto& bv : basis) {
            GlWeight wt;
            for (std::size_t i = 0; i < bv.size(); ++i)
                if (!bv[i].is_zero()) { wt = W.weights[i]; break; }
            if (!(wt == top)) ambient.push_back(bv);
        }
        auto maximal = largest_invariant_subspace(ambient, ops);
        W.quotient_dim = static_cast<int>(basis.size() - maximal.size());
    }
    return W;
}

InducedStabilization induced_stabilized(StraightenEngine& eng, const InducedV0& v0, int max_cutoff,
                                        int levels) {
    InducedStabilization out;
    InducedModule prev = induced_module_truncated(eng, v0, 1, levels);
    for (int d = 2; d <= max_cutoff + 1; ++d) {
        InducedModule cur = induced_module_truncated(eng, v0, d, levels);
        if (prev.hw == cur.hw && prev.quotient_dim == cur.quotient_dim && prev.truncation_clean &&
            cur.truncation_clean) {
            out.module = std::move(cur);
            out.stabilized = true;
            out.cutoff = d - 1;
            return out;
        }
        prev = std::move(cur);
    }
    out.module = std::move(prev);
    out.stabilized = false;
    out.cutoff = max_cutoff + 1;
    return out;
}

} // namespace syang
