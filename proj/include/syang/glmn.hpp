#pragma once

#include "syang/grading.hpp"
#include "syang/linalg.hpp"
#include "syang/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace syang {

/// A linear combination of the standard generators E^a_b.
using GlElement = std::map<std::pair<int, int>, Rational>;

struct GlWeight {
    std::vector<Rational> mu;

    friend bool operator==(const GlWeight& x, const GlWeight& y) { return x.mu == y.mu; }
    friend bool operator!=(const GlWeight& x, const GlWeight& y) { return !(x == y); }
    friend bool operator<(const GlWeight& x, const GlWeight& y) { return x.mu < y.mu; }

    friend GlWeight operator+(const GlWeight& x, const GlWeight& y) {
        GlWeight s = x;
        for (std::size_t i = 0; i < s.mu.size(); ++i) s.mu[i] += y.mu[i];
        return s;
    }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < mu.size(); ++i) {
            if (i) s += ",";
            s += mu[i].str();
        }
        return s + ")";
    }
};

/// Finite-dimensional module: graded basis with exact action matrices for
/// every E^a_b; the diagonal actions are diagonal in the stored basis and
/// recorded as per-vector weights.
struct GlModule {
    GradingContext ctx;
    int dim = 0;
    std::vector<int> parity;
    std::vector<GlWeight> weights;
    std::map<std::pair<int, int>, SparseMatrix<Rational>> action;

    const SparseMatrix<Rational>& act(int a, int b) const { return action.at({a, b}); }
};

/// Bilinear extension of the graded bracket on the E^a_b.
GlElement gl_bracket(const GradingContext& ctx, const GlElement& x, const GlElement& y);

/// The vector module: dimension M+N, E^a_b v^c = delta^c_b v^a.
GlModule vector_rep(const GradingContext& ctx);

/// One-dimensional module E^a_a -> c (-1)^{[a]}, off-diagonal -> 0.
GlModule one_dim_rep(const GradingContext& ctx, const Rational& c);

/// Graded tensor product, x -> x (x) 1 + 1 (x) x with the Koszul sign.
GlModule tensor(const GlModule& A, const GlModule& B);

/// Exhaustive check that the action matrices satisfy the defining bracket
/// as graded commutators on every generator pair. Empty string when clean.
std::string check_bracket_relations(const GlModule& W);

/// Basis of the joint kernel of all raising operators, organized by weight.
std::vector<std::pair<GlWeight, std::vector<Rational>>> gl_highest_weight_vectors(const GlModule& W);

/// Closes v under the action, removes the largest invariant subspace avoiding
/// the top weight line, and returns the quotient with induced action. The
/// representative basis is echelonized with the top weight vector first.
GlModule cyclic_subquotient(const GlModule& W, const std::vector<Rational>& v,
                            int* submodule_dim = nullptr);

/// mu_a - mu_{a+1} a nonnegative integer for every a != M.
bool is_dominant(const GradingContext& ctx, const GlWeight& mu);

/// One entry of a tensor word: the vector module or a one-dimensional twist.
struct TensorWordItem {
    enum class Kind { vector_rep, one_dim } kind = Kind::vector_rep;
    Rational c; // for one_dim
};

/// Builds the tensor word, locates a highest weight vector of the target
/// weight and returns its cyclic subquotient. Throws when the target is not
/// dominant or not realized in the word.
GlModule build_irrep(const GradingContext& ctx, const std::vector<TensorWordItem>& word,
                     const GlWeight& target);

} // namespace syang
