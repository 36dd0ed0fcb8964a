#pragma once

#include "syang/glmn.hpp"
#include "syang/hopf.hpp"
#include "syang/linalg.hpp"
#include "syang/ratfun.hpp"
#include "syang/weights.hpp"

#include <map>
#include <string>
#include <vector>

namespace syang {

/// How a module was built; serialized alongside it.
struct Provenance {
    std::string kind;                 // evaluation | tensor | quotient | induced | loaded
    std::vector<std::string> notes;
    std::vector<Rational> alphas;
};

/// Finite-dimensional module: for each (a, b) a matrix of rational functions
/// of u giving the action of the generator series. Every entry is regular at
/// u = infinity with constant term (-1)^{[b]} delta^a_b I.
struct YModule {
    GradingContext ctx;
    int dim = 0;
    std::vector<int> parity;
    std::vector<GlWeight> weights; // per basis vector, from the level-1 diagonal modes
    std::map<std::pair<int, int>, SparseMatrix<RatFun>> action;
    Provenance provenance;

    const SparseMatrix<RatFun>& act(int a, int b) const { return action.at({a, b}); }
};

/// t^a_b(u) -> (-1)^{[b]} delta^a_b + gamma(E^a_b) u^{-1}.
YModule evaluation_rep(const GlModule& gamma);

/// k-fold shifted tensor product along the multi-coproduct; alphas has the
/// same length as factors with alphas[0] = 0.
YModule shifted_tensor(const std::vector<YModule>& factors, const std::vector<Rational>& alphas);

/// Coefficient of u^{-n} of the action matrix.
SparseMatrix<Rational> action_mode(const YModule& W, int a, int b, int n);

/// Monic lcm of all action-entry denominators.
Polynomial common_denominator(const YModule& W);

/// Number of modes that generate all of them through the denominator
/// recurrence (= deg of the common denominator, at least 1).
int certificate_levels(const YModule& W);

/// Modes at levels k+1..2k lie in the span of levels 1..k plus the identity.
bool check_mode_recurrence(const YModule& W);

struct RelationReport {
    bool pass = true;
    int a1 = 0, b1 = 0, m = 0, a2 = 0, b2 = 0, n = 0;
    std::string detail;
};

/// Exhaustive check of the defining mode relations on the action matrices for
/// all index quadruples and all levels m, n <= level_max.
RelationReport verify_defining_relations(const YModule& W, int level_max);

struct YHighestVector {
    std::vector<Rational> v;
    HighestWeight weight;
};

struct MaximalVectorsResult {
    std::vector<YHighestVector> vectors;
    int annihilator_dim = 0; // dimension of the joint kernel of the raising action
    bool complete = true;    // false if some piece resisted exact eigen-splitting
};

/// All maximal vectors: the joint kernel of the raising series, refined into
/// joint eigenvectors of the diagonal series, with extracted highest weights.
MaximalVectorsResult maximal_vectors(const YModule& W);

/// Closure of span{v} under the action (modes up to the certificate level).
std::vector<std::vector<Rational>> cyclic_span(const YModule& W, const std::vector<Rational>& v);

/// Restrict to the cyclic span of hv, remove the largest invariant subspace
/// avoiding the top weight line, return the quotient with induced action.
YModule irreducible_quotient(const YModule& W, const YHighestVector& hv,
                             int* submodule_dim = nullptr);

/// Eigenvalue tuple of the diagonal series on a maximal vector.
HighestWeight highest_weight_of(const YModule& W, const std::vector<Rational>& v);

} // namespace syang
