#pragma once

#include "syang/pbw.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace syang {

/// Normal-ordering engine for the mode algebra. Rewrites arbitrary words in
/// the generators t^a_b[n] into the ordered basis, using the defining mode
/// relations as rewrite rules. Results are memoized per word.
class StraightenEngine {
public:
    explicit StraightenEngine(GradingContext ctx) : ctx_(ctx) {}

    const GradingContext& ctx() const { return ctx_; }

    /// Normal form of a single word of generators.
    AlgebraElement straighten_word(const std::vector<GenFactor>& word);

    /// Normal form of a linear combination of words.
    AlgebraElement straighten(const std::vector<std::pair<Rational, std::vector<GenFactor>>>& words);

    /// The graded bracket [t^{a1}_{b1}[m], t^{a2}_{b2}[n]} in normal form.
    AlgebraElement commutator_rhs(const GenFactor& g1, const GenFactor& g2);

    /// Product in the algebra: concatenate then normal-order, bilinearly.
    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

    /// The automorphism attached to f(x) = 1 + f[0] x^{-1} + ... + f[K-1] x^{-K}.
    AlgebraElement apply_automorphism(const std::vector<Rational>& f, const AlgebraElement& x);

    /// Raw right-hand side of the mode relation for g1 g2, as words. The
    /// returned words are not yet normal-ordered.
    std::vector<std::pair<Rational, std::vector<GenFactor>>> relation_rhs_words(
        const GenFactor& g1, const GenFactor& g2) const;

private:
    AlgebraElement straighten_impl(const std::vector<GenFactor>& word);

    GradingContext ctx_;
    std::map<std::vector<GenFactor>, AlgebraElement> memo_;
};

} // namespace syang
