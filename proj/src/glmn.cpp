#include "syang/glmn.hpp"

#include <algorithm>
#include <stdexcept>

namespace syang {

namespace {

void add_term(GlElement& e, int a, int b, const Rational& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = e.find(key);
    if (it == e.end()) e[key] = c;
    else {
        it->second += c;
        if (it->second.is_zero()) e.erase(it);
    }
}

std::vector<std::pair<int, int>> all_pairs(const GradingContext& ctx) {
    std::vector<std::pair<int, int>> ps;
    for (int a = 1; a <= ctx.size(); ++a)
        for (int b = 1; b <= ctx.size(); ++b) ps.push_back({a, b});
    return ps;
}

/// Incremental echelon structure for building closures deterministically.
class EchelonAccumulator {
public:
    /// Reduces v against the basis; if independent, inserts and returns true.
    bool insert(std::vector<Rational> v) {
        reduce(v);
        std::size_t p = pivot_of(v);
        if (p == v.size()) return false;
        Rational inv = v[p].inverse();
        for (auto& x : v) x *= inv;
        for (auto& row : rows_) {
            if (!row[p].is_zero()) {
                Rational f = row[p];
                for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * v[j];
            }
        }
        rows_.push_back(std::move(v));
        return true;
    }
    bool contains(std::vector<Rational> v) const {
        reduce(v);
        return pivot_of(v) == v.size();
    }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
    void reduce(std::vector<Rational>& v) const {
        for (const auto& row : rows_) {
            std::size_t p = pivot_of(row);
            if (p < v.size() && !v[p].is_zero()) {
                Rational f = v[p];
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * row[j];
            }
        }
    }
    static std::size_t pivot_of(const std::vector<Rational>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return i;
        return v.size();
    }
    std::vector<std::vector<Rational>> rows_;
};

} // namespace

GlElement gl_bracket(const GradingContext& ctx, const GlElement& x, const GlElement& y) {
    GlElement out;
    for (const auto& [pq, cx] : x) {
        auto [a, b] = pq;
        ctx.check_index(a);
        ctx.check_index(b);
        for (const auto& [rs, cy] : y) {
            auto [c, d] = rs;
            Rational f = cx * cy;
            if (b == c) add_term(out, a, d, f);
            if (d == a) {
                int e = ctx.pair_parity(a, b) * ctx.pair_parity(c, d);
                add_term(out, c, b, f * Rational(e % 2 ? 1 : -1));
            }
        }
    }
    return out;
}

GlModule vector_rep(const GradingContext& ctx) {
    GlModule W;
    W.ctx = ctx;
    W.dim = ctx.size();
    for (int c = 1; c <= ctx.size(); ++c) {
        W.parity.push_back(ctx.grade(c));
        GlWeight w;
        w.mu.assign(static_cast<std::size_t>(ctx.size()), Rational(0));
        w.mu[static_cast<std::size_t>(c - 1)] = Rational(1);
        W.weights.push_back(std::move(w));
    }
    for (auto [a, b] : all_pairs(ctx)) {
        SparseMatrix<Rational> m(static_cast<std::size_t>(W.dim), static_cast<std::size_t>(W.dim));
        m.set(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1), Rational(1));
        W.action[{a, b}] = std::move(m);
    }
    return W;
}

GlModule one_dim_rep(const GradingContext& ctx, const Rational& c) {
    GlModule W;
    W.ctx = ctx;
    W.dim = 1;
    W.parity = {0};
    GlWeight w;
    for (int a = 1; a <= ctx.size(); ++a)
        w.mu.push_back(ctx.grade(a) ? -c : c);
    W.weights = {w};
    for (auto [a, b] : all_pairs(ctx)) {
        SparseMatrix<Rational> m(1, 1);
        if (a == b) m.set(0, 0, w.mu[static_cast<std::size_t>(a - 1)]);
        W.action[{a, b}] = std::move(m);
    }
    return W;
}

GlModule tensor(const GlModule& A, const GlModule& B) {
    if (!(A.ctx == B.ctx)) throw std::invalid_argument("tensor: grading context mismatch");
    const GradingContext& ctx = A.ctx;
    GlModule W;
    W.ctx = ctx;
    W.dim = A.dim * B.dim;
    auto idx = [&](int i, int j) { return static_cast<std::size_t>(i * B.dim + j); };
    for (int i = 0; i < A.dim; ++i)
        for (int j = 0; j < B.dim; ++j) {
            W.parity.push_back((A.parity[static_cast<std::size_t>(i)] +
                                B.parity[static_cast<std::size_t>(j)]) % 2);
            W.weights.push_back(A.weights[static_cast<std::size_t>(i)] +
                                B.weights[static_cast<std::size_t>(j)]);
        }
    for (auto [a, b] : all_pairs(ctx)) {
        int opp = ctx.pair_parity(a, b);
        SparseMatrix<Rational> m(static_cast<std::size_t>(W.dim), static_cast<std::size_t>(W.dim));
        // x (x) 1
        for (const auto& [rc, v] : A.act(a, b).entries())
            for (int j = 0; j < B.dim; ++j)
                m.add_to(idx(static_cast<int>(rc.first), j), idx(static_cast<int>(rc.second), j), v);
        // 1 (x) x with the sign from the source parity of the first leg
        for (int i = 0; i < A.dim; ++i) {
            Rational sg(opp && A.parity[static_cast<std::size_t>(i)] ? -1 : 1);
            for (const auto& [rc, v] : B.act(a, b).entries())
                m.add_to(idx(i, static_cast<int>(rc.first)), idx(i, static_cast<int>(rc.second)),
                         v * sg);
        }
        W.action[{a, b}] = std::move(m);
    }
    return W;
}

std::string check_bracket_relations(const GlModule& W) {
    const GradingContext& ctx = W.ctx;
    for (auto [a, b] : all_pairs(ctx)) {
        for (auto [c, d] : all_pairs(ctx)) {
            int e = ctx.pair_parity(a, b) * ctx.pair_parity(c, d);
            SparseMatrix<Rational> lhs =
                W.act(a, b) * W.act(c, d) - W.act(c, d) * W.act(a, b) * Rational(e % 2 ? -1 : 1);
            GlElement br = gl_bracket(ctx, {{{a, b}, Rational(1)}}, {{{c, d}, Rational(1)}});
            SparseMatrix<Rational> rhs(static_cast<std::size_t>(W.dim),
                                       static_cast<std::size_t>(W.dim));
            for (const auto& [pq, co] : br) rhs = rhs + W.act(pq.first, pq.second) * co;
            if (!(lhs == rhs))
                return "bracket relation fails at [E(" + std::to_string(a) + "," + std::to_string(b) +
                       "), E(" + std::to_string(c) + "," + std::to_string(d) + ")}";
        }
    }
    // diagonal actions must match the recorded weights
    for (int a = 1; a <= ctx.size(); ++a) {
        const auto& m = W.act(a, a);
        for (int i = 0; i < W.dim; ++i)
            for (int j = 0; j < W.dim; ++j) {
                Rational want = (i == j) ? W.weights[static_cast<std::size_t>(i)]
                                               .mu[static_cast<std::size_t>(a - 1)]
                                         : Rational(0);
                if (m.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) != want)
                    return "diagonal action of E(" + std::to_string(a) + "," + std::to_string(a) +
                           ") disagrees with the stored weights";
            }
    }
    return {};
}

std::vector<std::pair<GlWeight, std::vector<Rational>>> gl_highest_weight_vectors(const GlModule& W) {
    const GradingContext& ctx = W.ctx;
    std::vector<std::pair<int, int>> raising;
    for (int a = 1; a <= ctx.size(); ++a)
        for (int b = a + 1; b <= ctx.size(); ++b) raising.push_back({a, b});

    // distinct weights, sorted for determinism
    std::vector<GlWeight> ws = W.weights;
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());

    std::vector<std::pair<GlWeight, std::vector<Rational>>> out;
    for (const auto& mu : ws) {
        std::vector<int> cols;
        for (int i = 0; i < W.dim; ++i)
            if (W.weights[static_cast<std::size_t>(i)] == mu) cols.push_back(i);
        // stacked raising matrices restricted to the weight-mu coordinates
        SparseMatrix<Rational> sys(raising.size() * static_cast<std::size_t>(W.dim), cols.size());
        for (std::size_t r = 0; r < raising.size(); ++r) {
            const auto& m = W.act(raising[r].first, raising[r].second);
            for (std::size_t cj = 0; cj < cols.size(); ++cj)
                for (int i = 0; i < W.dim; ++i) {
                    Rational v = m.get(static_cast<std::size_t>(i),
                                       static_cast<std::size_t>(cols[cj]));
                    if (!v.is_zero())
                        sys.set(r * static_cast<std::size_t>(W.dim) + static_cast<std::size_t>(i),
                                cj, v);
                }
        }
        for (const auto& small : nullspace(sys)) {
            std::vector<Rational> v(static_cast<std::size_t>(W.dim), Rational(0));
            for (std::size_t cj = 0; cj < cols.size(); ++cj)
                v[static_cast<std::size_t>(cols[cj])] = small[cj];
            out.push_back({mu, std::move(v)});
        }
    }
    return out;
}

bool is_dominant(const GradingContext& ctx, const GlWeight& mu) {
    if (static_cast<int>(mu.mu.size()) != ctx.size())
        throw std::invalid_argument("is_dominant: weight length mismatch");
    for (int a = 1; a < ctx.size(); ++a) {
        if (a == ctx.M) continue;
        Rational d = mu.mu[static_cast<std::size_t>(a - 1)] - mu.mu[static_cast<std::size_t>(a)];
        if (!d.is_integer() || d.sign() < 0) return false;
    }
    return true;
}

GlModule cyclic_subquotient(const GlModule& W, const std::vector<Rational>& v,
                            int* submodule_dim) {
    const GradingContext& ctx = W.ctx;
    if (static_cast<int>(v.size()) != W.dim)
        throw std::invalid_argument("cyclic_subquotient: vector dimension mismatch");
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || !x.is_zero();
    if (!nonzero) throw std::invalid_argument("cyclic_subquotient: zero vector");

    // the generating vector must be a raising-annihilated weight vector
    GlWeight top;
    {
        std::optional<GlWeight> found;
        for (int i = 0; i < W.dim; ++i)
            if (!v[static_cast<std::size_t>(i)].is_zero()) {
                if (!found) found = W.weights[static_cast<std::size_t>(i)];
                else if (!(*found == W.weights[static_cast<std::size_t>(i)]))
                    throw std::invalid_argument("cyclic_subquotient: v is not a weight vector");
            }
        top = *found;
    }
    for (int a = 1; a <= ctx.size(); ++a)
        for (int b = a + 1; b <= ctx.size(); ++b) {
            auto img = W.act(a, b).apply(v);
            for (const auto& x : img)
                if (!x.is_zero())
                    throw std::invalid_argument(
                        "cyclic_subquotient: v is not a highest weight vector");
        }

    // cyclic closure
    EchelonAccumulator closure;
    std::vector<std::vector<Rational>> queue{v};
    closure.insert(v);
    while (!queue.empty()) {
        auto w = queue.back();
        queue.pop_back();
        for (auto [a, b] : all_pairs(ctx)) {
            auto img = W.act(a, b).apply(w);
            if (closure.insert(img)) queue.push_back(img);
        }
    }
    std::vector<std::vector<Rational>> cbasis = echelon_basis(closure.rows());

    // ambient below the top weight line
    std::vector<std::vector<Rational>> ambient;
    int top_count = 0;
    for (const auto& bv : cbasis) {
        GlWeight wt;
        for (int i = 0; i < W.dim; ++i)
            if (!bv[static_cast<std::size_t>(i)].is_zero()) {
                wt = W.weights[static_cast<std::size_t>(i)];
                break;
            }
        if (wt == top) ++top_count;
        else ambient.push_back(bv);
    }
    if (top_count != 1)
        throw std::logic_error("cyclic_subquotient: top weight space is not one-dimensional");

    std::vector<SparseMatrix<Rational>> ops;
    for (auto [a, b] : all_pairs(ctx)) ops.push_back(W.act(a, b));
    auto maximal = largest_invariant_subspace(ambient, ops);
    if (submodule_dim) *submodule_dim = static_cast<int>(maximal.size());

    // representatives: v first, then independent closure vectors
    EchelonAccumulator picked;
    for (const auto& m : maximal) picked.insert(m);
    std::vector<std::vector<Rational>> reps;
    {
        auto vn = v;
        for (const auto& x : vn)
            if (!x.is_zero()) {
                Rational inv = x.inverse();
                for (auto& y : vn) y *= inv;
                break;
            }
        picked.insert(vn);
        reps.push_back(vn);
    }
    for (const auto& bv : cbasis)
        if (picked.insert(bv)) reps.push_back(bv);

    // columns of P: reps then the maximal submodule basis
    std::vector<std::vector<Rational>> P = reps;
    for (const auto& m : maximal) P.push_back(m);

    GlModule Q;
    Q.ctx = ctx;
    Q.dim = static_cast<int>(reps.size());
    for (const auto& r : reps) {
        int p = -1;
        GlWeight wt;
        for (int i = 0; i < W.dim; ++i)
            if (!r[static_cast<std::size_t>(i)].is_zero()) {
                p = W.parity[static_cast<std::size_t>(i)];
                wt = W.weights[static_cast<std::size_t>(i)];
                break;
            }
        Q.parity.push_back(p);
        Q.weights.push_back(wt);
    }
    for (auto [a, b] : all_pairs(ctx)) {
        SparseMatrix<Rational> m(static_cast<std::size_t>(Q.dim), static_cast<std::size_t>(Q.dim));
        for (std::size_t j = 0; j < reps.size(); ++j) {
            auto img = W.act(a, b).apply(reps[j]);
            auto y = coords_in_span(P, img);
            if (!y) throw std::logic_error("cyclic_subquotient: closure is not invariant");
            for (std::size_t i = 0; i < reps.size(); ++i)
                if (!(*y)[i].is_zero()) m.set(i, j, (*y)[i]);
        }
        Q.action[{a, b}] = std::move(m);
    }
    return Q;
}

GlModule build_irrep(const GradingContext& ctx, const std::vector<TensorWordItem>& word,
                     const GlWeight& target) {
    if (!is_dominant(ctx, target)) throw std::invalid_argument("build_irrep: target is not dominant");
    if (word.empty()) throw std::invalid_argument("build_irrep: empty tensor word");
    auto make = [&](const TensorWordItem& it) {
        return it.kind == TensorWordItem::Kind::vector_rep ? vector_rep(ctx)
                                                           : one_dim_rep(ctx, it.c);
    };
    GlModule W = make(word[0]);
    for (std::size_t i = 1; i < word.size(); ++i) W = tensor(W, make(word[i]));
    for (const auto& [mu, vec] : gl_highest_weight_vectors(W))
        if (mu == target) return cyclic_subquotient(W, vec);
    throw std::invalid_argument("build_irrep: target weight " + target.str() +
                                " not realized in the tensor word");
}

} // namespace syang
