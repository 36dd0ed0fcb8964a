#pragma once

#include <stdexcept>
#include <string>

namespace syang {

/// The (M|N) grading: index gradation [a], generator parities and the eta
/// sign entering the quadratic part of the defining relations.
struct GradingContext {
    int M = 1;
    int N = 1;

    GradingContext() = default;
    GradingContext(int m, int n) : M(m), N(n) {
        if (m < 1 || n < 1) throw std::invalid_argument("GradingContext: need M >= 1 and N >= 1");
    }

    int size() const { return M + N; }

    void check_index(int a) const {
        if (a < 1 || a > M + N)
            throw std::out_of_range("index " + std::to_string(a) + " out of range 1.." +
                                    std::to_string(M + N));
    }

    /// Gradation index: 0 for a <= M, 1 for a > M.
    int grade(int a) const {
        check_index(a);
        return a <= M ? 0 : 1;
    }

    /// Parity of a generator or matrix unit with index pair (a, b).
    int pair_parity(int a, int b) const { return (grade(a) + grade(b)) % 2; }

    /// eta(a1,b1;a2,b2) = [a1][a2] + [b1]([a1]+[a2]) mod 2. The last index does
    /// not enter the value but is still range-checked.
    int eta(int a1, int b1, int a2, int b2) const {
        check_index(b2);
        int g1 = grade(a1), h1 = grade(b1), g2 = grade(a2);
        return (g1 * g2 + h1 * (g1 + g2)) % 2;
    }

    friend bool operator==(const GradingContext& x, const GradingContext& y) {
        return x.M == y.M && x.N == y.N;
    }
    friend bool operator!=(const GradingContext& x, const GradingContext& y) { return !(x == y); }
};

/// The five index-pair classes, listed in the left-to-right order their
/// factors occupy in a basis monomial.
enum class PairBlock : int {
    odd_neg = 0,  // a > b, odd
    even_neg = 1, // a > b, even
    diag = 2,     // a == b
    even_pos = 3, // a < b, even
    odd_pos = 4,  // a < b, odd
};

inline PairBlock pair_block(const GradingContext& ctx, int a, int b) {
    ctx.check_index(a);
    ctx.check_index(b);
    if (a == b) return PairBlock::diag;
    int theta = ctx.pair_parity(a, b);
    if (a > b) return theta ? PairBlock::odd_neg : PairBlock::even_neg;
    return theta ? PairBlock::odd_pos : PairBlock::even_pos;
}

/// The total pair order: any positive pair succeeds any diagonal pair, which
/// succeeds any negative pair; within the positive pairs (a,b) succeeds (c,d)
/// iff a < c, or a = c and b > d; negative pairs compare through their
/// transposes in reverse; diagonal pairs (a,a) succeed (b,b) iff a < b.
inline bool pair_succ(const GradingContext& ctx, int a, int b, int c, int d);

namespace detail {
inline int pair_region(int a, int b) { return a < b ? 2 : (a == b ? 1 : 0); } // -,0,+ -> 0,1,2
}

inline bool pair_succ(const GradingContext& ctx, int a, int b, int c, int d) {
    ctx.check_index(a); ctx.check_index(b); ctx.check_index(c); ctx.check_index(d);
    int r1 = detail::pair_region(a, b), r2 = detail::pair_region(c, d);
    if (r1 != r2) return r1 > r2;
    if (r1 == 2) return a < c || (a == c && b > d);
    if (r1 == 1) return a < c;
    // both negative: p1 succ p2 iff transpose(p1) prec transpose(p2)
    if (a == c && b == d) return false;
    return !pair_succ(ctx, b, a, d, c);
}

/// Slot comparator for basis monomials: factors are grouped by block in the
/// order odd_neg, even_neg, diag, even_pos, odd_pos; within a block the
/// factor for p sits right of the factor for p' iff p succeeds p'; within a
/// pair the levels ascend.
inline bool slot_less(const GradingContext& ctx, int a1, int b1, int n1, int a2, int b2, int n2) {
    PairBlock blk1 = pair_block(ctx, a1, b1), blk2 = pair_block(ctx, a2, b2);
    if (blk1 != blk2) return static_cast<int>(blk1) < static_cast<int>(blk2);
    if (a1 != a2 || b1 != b2) return pair_succ(ctx, a2, b2, a1, b1);
    return n1 < n2;
}

} // namespace syang
