#pragma once

// Brute-force linear-algebra oracle used by the tests: dense matrices,
// explicit closure, explicit invariant-subspace filtering. Deliberately
// independent of the kernel's sparse elimination paths.

#include "syang/rational.hpp"

#include <vector>

namespace oracle {

using syang::Rational;
using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>; // row-major dense

inline Vec mat_apply(const Mat& m, const Vec& v) {
    Vec out(m.size(), Rational(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

/// Gauss-reduce v against rows (each row has a leading 1); returns the
/// reduced vector.
inline Vec reduce(const std::vector<Vec>& rows, Vec v) {
    for (const auto& r : rows) {
        std::size_t p = 0;
        while (p < r.size() && r[p].is_zero()) ++p;
        if (p < v.size() && !v[p].is_zero()) {
            Rational f = v[p];
            for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * r[j];
        }
    }
    return v;
}

inline bool insert_row(std::vector<Vec>& rows, Vec v) {
    v = reduce(rows, v);
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    Rational inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    for (auto& r : rows) {
        if (!r[p].is_zero()) {
            Rational f = r[p];
            for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * v[j];
        }
    }
    rows.push_back(v);
    return true;
}

inline bool member(const std::vector<Vec>& rows, const Vec& v) {
    Vec r = reduce(rows, v);
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

/// Span of the orbit of v under repeated application of the operators.
inline std::vector<Vec> closure(const std::vector<Mat>& ops, const Vec& v) {
    std::vector<Vec> rows;
    insert_row(rows, v);
    std::vector<Vec> work{v};
    while (!work.empty()) {
        Vec w = work.back();
        work.pop_back();
        for (const auto& op : ops) {
            Vec img = mat_apply(op, w);
            if (insert_row(rows, img)) work.push_back(img);
        }
    }
    return rows;
}

/// Largest subspace of span(ambient) stable under every operator: filter out
/// vectors whose image leaves the candidate space, iterate to a fixpoint.
inline std::vector<Vec> invariant_fixpoint(const std::vector<Mat>& ops,
                                           const std::vector<Vec>& ambient) {
    std::vector<Vec> current;
    for (const auto& v : ambient) insert_row(current, v);
    while (!current.empty()) {
        // solve: coefficients c with op(sum c_i b_i) in span(current), all ops.
        // Build the constraint matrix mapping coefficients to the reduced images.
        std::size_t k = current.size(), n = current[0].size();
        std::vector<Vec> constraints; // rows indexed by (op, coordinate)
        for (const auto& op : ops) {
            std::vector<Vec> images;
            for (const auto& b : current) images.push_back(reduce(current, mat_apply(op, b)));
            for (std::size_t coord = 0; coord < n; ++coord) {
                Vec row(k, Rational(0));
                bool nz = false;
                for (std::size_t i = 0; i < k; ++i) {
                    row[i] = images[i][coord];
                    nz = nz || !row[i].is_zero();
                }
                if (nz) constraints.push_back(row);
            }
        }
        if (constraints.empty()) break; // everything stays inside
        // kernel of the constraint matrix by direct elimination
        std::vector<Vec> rows;
        for (auto& r : constraints) insert_row(rows, r);
        // back-substitute a basis of the kernel
        std::vector<std::size_t> pivots;
        for (const auto& r : rows) {
            std::size_t p = 0;
            while (p < r.size() && r[p].is_zero()) ++p;
            pivots.push_back(p);
        }
        std::vector<Vec> kernel;
        for (std::size_t c = 0; c < k; ++c) {
            bool is_pivot = false;
            for (auto p : pivots) is_pivot = is_pivot || p == c;
            if (is_pivot) continue;
            Vec coeff(k, Rational(0));
            coeff[c] = Rational(1);
            for (std::size_t i = 0; i < rows.size(); ++i) coeff[pivots[i]] = -rows[i][c];
            kernel.push_back(coeff);
        }
        std::vector<Vec> next;
        for (const auto& coeff : kernel) {
            Vec v(n, Rational(0));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < n; ++j) v[j] += coeff[i] * current[i][j];
            insert_row(next, v);
        }
        if (next.size() == current.size()) break;
        current = std::move(next);
    }
    return current;
}

} // namespace oracle
