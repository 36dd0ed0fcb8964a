#pragma once

#include "syang/algebra.hpp"
#include "syang/ymodule.hpp"

#include <map>
#include <string>
#include <vector>

namespace syang {

/// A module over the auxiliary pair of even Yangians: commuting action
/// matrices phi^i_j(u) (indices <= M, constant term +I on the diagonal) and
/// psi^mu_nu(u) (indices > M, constant term -I on the diagonal).
struct InducedV0 {
    GradingContext ctx;
    int dim = 0;
    std::map<std::pair<int, int>, SparseMatrix<RatFun>> phi;
    std::map<std::pair<int, int>, SparseMatrix<RatFun>> psi;

    bool has_block(int a, int b) const {
        return a <= ctx.M ? phi.count({a, b}) > 0 : psi.count({a, b}) > 0;
    }
    const SparseMatrix<RatFun>& block(int a, int b) const {
        return a <= ctx.M ? phi.at({a, b}) : psi.at({a, b});
    }
};

/// One-dimensional V0 from two scalar evaluation characters:
/// phi^i_i(u) = 1 + even_eig u^{-1}, psi^mu_mu(u) = -1 + odd_eig u^{-1}.
InducedV0 one_dimensional_v0(const GradingContext& ctx, const Rational& even_eig,
                             const Rational& odd_eig);

/// Checks block relations, commutation between the blocks, and the constant
/// terms; returns an empty string when the data is consistent.
std::string validate_v0(const InducedV0& v0, int level_max = 3);

/// Degree-truncated module induced from V0: the basis is the set of ordered
/// odd-lowering monomials of degree <= cutoff tensored with V0, and the
/// generator modes act through normal ordering, discarding overflow terms.
struct InducedModule {
    GradingContext ctx;
    int cutoff = 1;
    int levels = 1; // modes 1..levels are materialized
    std::vector<PBWMonomial> monos;
    int v0dim = 0;
    int dim = 0;
    std::vector<int> parity;
    std::vector<GlWeight> weights;
    std::map<std::pair<int, int>, std::vector<SparseMatrix<Rational>>> modes; // [n-1] holds level n

    HighestWeight hw;        // eigenvalue series of the diagonal blocks on the top vector
    std::vector<Rational> top_vector;
    int quotient_dim = 0;    // after removing the largest invariant subspace below the top line
    bool truncation_clean = true; // no raising-mode leakage on the top vector

    const SparseMatrix<Rational>& mode(int a, int b, int n) const {
        return modes.at({a, b}).at(static_cast<std::size_t>(n - 1));
    }
};

InducedModule induced_module_truncated(StraightenEngine& eng, const InducedV0& v0, int cutoff,
                                       int levels);

/// Builds at cutoff and cutoff-1 (or cutoff and cutoff+1 sweeping upward) and
/// flags stabilization of the extracted weight and quotient dimension.
struct InducedStabilization {
    InducedModule module;      // at the final cutoff
    bool stabilized = false;
    int cutoff = 0;            // the cutoff at which agreement with cutoff+1 held
};
InducedStabilization induced_stabilized(StraightenEngine& eng, const InducedV0& v0, int max_cutoff,
                                        int levels);

} // namespace syang
