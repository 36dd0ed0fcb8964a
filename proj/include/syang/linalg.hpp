#pragma once

#include "syang/polynomial.hpp"
#include "syang/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace syang {

/// Sparse matrix over an exact field F; only nonzero entries are stored.
template <class F>
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix identity(std::size_t n) {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, F(Rational(1)));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::map<std::pair<std::size_t, std::size_t>, F>& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }

    void set(std::size_t r, std::size_t c, F v) {
        check(r, c);
        if (v == F()) e_.erase({r, c});
        else e_[{r, c}] = std::move(v);
    }
    void add_to(std::size_t r, std::size_t c, const F& v) {
        check(r, c);
        auto it = e_.find({r, c});
        if (it == e_.end()) {
            if (!(v == F())) e_[{r, c}] = v;
        } else {
            it->second += v;
            if (it->second == F()) e_.erase(it);
        }
    }
    F get(std::size_t r, std::size_t c) const {
        check(r, c);
        auto it = e_.find({r, c});
        return it == e_.end() ? F() : it->second;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("SparseMatrix::apply: dimension mismatch");
        std::vector<F> out(rows_, F());
        for (const auto& [rc, val] : e_) out[rc.first] += val * v[rc.second];
        return out;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("SparseMatrix: dimension mismatch");
        SparseMatrix out(a.rows_, b.cols_);
        for (const auto& [rc, av] : a.e_) {
            for (std::size_t c = 0; c < b.cols_; ++c) {
                auto it = b.e_.find({rc.second, c});
                if (it != b.e_.end()) out.add_to(rc.first, c, av * it->second);
            }
        }
        return out;
    }
    friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("SparseMatrix: dimension mismatch");
        SparseMatrix out = a;
        for (const auto& [rc, v] : b.e_) out.add_to(rc.first, rc.second, v);
        return out;
    }
    friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
        return a + b * F(Rational(-1));
    }
    friend SparseMatrix operator*(const SparseMatrix& a, const F& s) {
        SparseMatrix out(a.rows_, a.cols_);
        if (s == F()) return out;
        for (const auto& [rc, v] : a.e_) out.set(rc.first, rc.second, v * s);
        return out;
    }
    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

    template <class G>
    SparseMatrix<G> cast() const {
        SparseMatrix<G> out(rows_, cols_);
        for (const auto& [rc, v] : e_) out.set(rc.first, rc.second, G(v));
        return out;
    }

    std::vector<std::vector<F>> dense() const {
        std::vector<std::vector<F>> d(rows_, std::vector<F>(cols_, F()));
        for (const auto& [rc, v] : e_) d[rc.first][rc.second] = v;
        return d;
    }
    static SparseMatrix from_dense(const std::vector<std::vector<F>>& d) {
        SparseMatrix m(d.size(), d.empty() ? 0 : d[0].size());
        for (std::size_t r = 0; r < d.size(); ++r)
            for (std::size_t c = 0; c < d[r].size(); ++c)
                if (!(d[r][c] == F())) m.set(r, c, d[r][c]);
        return m;
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseMatrix: index out of range");
    }

    std::size_t rows_, cols_;
    std::map<std::pair<std::size_t, std::size_t>, F> e_;
};

// ---- dense elimination helpers ------------------------------------------

/// In-place reduced row echelon form; returns pivot column indices.
template <class F>
std::vector<std::size_t> rref(std::vector<std::vector<F>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!(m[i][c] == F())) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        F inv = F(Rational(1)) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == F()) continue;
            F f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

/// Exact basis of the right nullspace of m.
template <class F>
std::vector<std::vector<F>> nullspace(const SparseMatrix<F>& m) {
    auto d = m.dense();
    if (d.empty()) d.assign(1, std::vector<F>(m.cols(), F()));
    auto pivots = rref(d);
    std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<F> v(cols, F());
        v[c] = F(Rational(1));
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -d[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Reduced echelon basis of the span of the given vectors (deterministic).
template <class F>
std::vector<std::vector<F>> echelon_basis(std::vector<std::vector<F>> vecs) {
    if (vecs.empty()) return vecs;
    auto pivots = rref(vecs);
    vecs.resize(pivots.size());
    return vecs;
}

/// Solve basis-matrix * y = v where the basis vectors are the columns.
/// Returns nullopt when v is outside the span.
template <class F>
std::optional<std::vector<F>> coords_in_span(const std::vector<std::vector<F>>& basis,
                                             const std::vector<F>& v) {
    std::size_t n = v.size(), k = basis.size();
    std::vector<std::vector<F>> aug(n, std::vector<F>(k + 1, F()));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) aug[i][j] = basis[j][i];
    for (std::size_t i = 0; i < n; ++i) aug[i][k] = v[i];
    auto pivots = rref(aug);
    std::vector<F> y(k, F());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == k) return std::nullopt; // inconsistent
        y[pivots[i]] = aug[i][k];
    }
    return y;
}

template <class F>
bool in_span(const std::vector<std::vector<F>>& basis, const std::vector<F>& v) {
    return coords_in_span(basis, v).has_value();
}

/// {w in F^n : op * w in span(S)}. op is n x n, S a list of n-vectors.
template <class F>
std::vector<std::vector<F>> preimage_subspace(const SparseMatrix<F>& op,
                                              const std::vector<std::vector<F>>& S) {
    std::size_t n = op.cols(), k = S.size();
    SparseMatrix<F> sys(op.rows(), n + k);
    for (const auto& [rc, v] : op.entries()) sys.set(rc.first, rc.second, v);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < S[j].size(); ++i)
            if (!(S[j][i] == F())) sys.set(i, n + j, -S[j][i]);
    auto ns = nullspace(sys);
    std::vector<std::vector<F>> out;
    for (auto& v : ns) out.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    return echelon_basis(std::move(out));
}

template <class F>
std::vector<std::vector<F>> subspace_intersection(const std::vector<std::vector<F>>& A,
                                                  const std::vector<std::vector<F>>& B) {
    if (A.empty() || B.empty()) return {};
    std::size_t n = A[0].size();
    // nullspace of [A | -B]: x with A a = B b; intersection vectors A a.
    SparseMatrix<F> sys(n, A.size() + B.size());
    for (std::size_t j = 0; j < A.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!(A[j][i] == F())) sys.set(i, j, A[j][i]);
    for (std::size_t j = 0; j < B.size(); ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (!(B[j][i] == F())) sys.set(i, A.size() + j, -B[j][i]);
    auto ns = nullspace(sys);
    std::vector<std::vector<F>> out;
    for (const auto& x : ns) {
        std::vector<F> v(n, F());
        for (std::size_t j = 0; j < A.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) v[i] += x[j] * A[j][i];
        out.push_back(std::move(v));
    }
    return echelon_basis(std::move(out));
}

/// Largest subspace S of span(ambient) with op(S) contained in S for every op.
/// Fixpoint of S_{i+1} = { w in S_i : op w in S_i for all op }; the dimension
/// strictly decreases until stable, so this terminates.
template <class F>
std::vector<std::vector<F>> largest_invariant_subspace(
    const std::vector<std::vector<F>>& ambient, const std::vector<SparseMatrix<F>>& ops) {
    auto S = echelon_basis(ambient);
    for (const auto& op : ops)
        if (!S.empty() && (op.rows() != S[0].size() || op.cols() != S[0].size()))
            throw std::invalid_argument("largest_invariant_subspace: dimension mismatch");
    while (!S.empty()) {
        std::vector<std::vector<F>> next = S;
        for (const auto& op : ops)
            next = subspace_intersection(next, preimage_subspace(op, S));
        if (next.size() == S.size()) break;
        S = std::move(next);
    }
    return S;
}

template <class F>
std::size_t rank(const SparseMatrix<F>& m) {
    auto d = m.dense();
    return rref(d).size();
}

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence (char 0).
inline Polynomial char_poly(const SparseMatrix<Rational>& a, const std::string& var = "x") {
    if (a.rows() != a.cols()) throw std::invalid_argument("char_poly: square matrix required");
    std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    SparseMatrix<Rational> m(n, n); // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m;
        for (std::size_t i = 0; i < n; ++i) m.add_to(i, i, c[n - k + 1]);
        SparseMatrix<Rational> am = a * m;
        Rational tr;
        for (std::size_t i = 0; i < n; ++i) tr += am.get(i, i);
        c[n - k] = -(tr / Rational(static_cast<long long>(k)));
    }
    return Polynomial(std::move(c), var);
}

} // namespace syang
