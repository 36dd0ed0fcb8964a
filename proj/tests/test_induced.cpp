#include <doctest.h>

#include "syang/induced.hpp"

using namespace syang;

namespace {

GlWeight wt(std::initializer_list<long long> xs) {
    GlWeight w;
    for (auto x : xs) w.mu.push_back(Rational(x));
    return w;
}

} // namespace

TEST_CASE("one dimensional V0 validates") {
    GradingContext ctx(1, 1);
    InducedV0 v0 = one_dimensional_v0(ctx, Rational(1), Rational(0));
    CHECK(validate_v0(v0).empty());
}

TEST_CASE("noncommuting V0 data is rejected") {
    GradingContext ctx(1, 1);
    InducedV0 v0 = one_dimensional_v0(ctx, Rational(1), Rational(0));
    v0.dim = 2;
    // inflate to 2x2 with noncommuting level-1 blocks
    const Polynomial u = Polynomial::monomial(1, Rational(1), "u");
    SparseMatrix<RatFun> phi(2, 2), psi(2, 2);
    phi.set(0, 0, RatFun(Polynomial({Rational(0), Rational(1)}, "u"), u)); // 1 + 0/u ... identity
    phi.set(1, 1, RatFun(Rational(1)));
    phi.set(0, 1, RatFun(Polynomial::constant(Rational(1), "u"), u)); // nilpotent part / u
    phi.set(0, 0, RatFun(Rational(1)));
    psi.set(0, 0, RatFun(Rational(-1)));
    psi.set(1, 1, RatFun(Rational(-1)));
    psi.set(1, 0, RatFun(Polynomial::constant(Rational(1), "u"), u));
    v0.phi[{1, 1}] = phi;
    v0.psi[{2, 2}] = psi;
    CHECK(!validate_v0(v0).empty());
    StraightenEngine eng(ctx);
    CHECK_THROWS_AS(induced_module_truncated(eng, v0, 2, 3), std::invalid_argument);
}

TEST_CASE("cutoff 1 basis is {1, t^2_1[1]} (x) V0") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);
    InducedV0 v0 = one_dimensional_v0(ctx, Rational(1), Rational(0));
    InducedModule W = induced_module_truncated(eng, v0, 1, 3);
    CHECK(W.dim == 2);
    REQUIRE(W.monos.size() == 2);
    CHECK(W.monos[0] == PBWMonomial{});
    CHECK(W.monos[1] == PBWMonomial({{2, 1, 1, 1}}));
    CHECK(W.parity == std::vector<int>{0, 1});
}

TEST_CASE("cutoff bound is enforced") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);
    InducedV0 v0 = one_dimensional_v0(ctx, Rational(1), Rational(0));
    CHECK_THROWS_AS(induced_module_truncated(eng, v0, 0, 3), std::invalid_argument);
}

TEST_CASE("trivial V0 induces the trivial module") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);
    InducedV0 v0 = one_dimensional_v0(ctx, Rational(0), Rational(0));
    auto st = induced_stabilized(eng, v0, 6, 8);
    CHECK(st.stabilized);
    CHECK(st.module.quotient_dim == 1);
    CHECK(st.module.hw == epsilon_weight(ctx));
}

TEST_CASE("induced module from the vector character matches the tensor construction") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);
    // V0 with phi-eigenvalue 1 + u^{-1}, psi-eigenvalue -1: the weight of the
    // vector evaluation module
    InducedV0 v0 = one_dimensional_v0(ctx, Rational(1), Rational(0));
    auto st = induced_stabilized(eng, v0, 6, 8);
    CHECK(st.stabilized);
    CHECK(st.cutoff <= 6);

    GlWeight mu = wt({1, 0});
    YModule tensor_module = evaluation_rep(build_irrep(
        ctx, {{TensorWordItem::Kind::vector_rep, Rational(0)}}, mu));
    auto mv = maximal_vectors(tensor_module);
    REQUIRE(mv.vectors.size() == 1);
    CHECK(st.module.hw == mv.vectors[0].weight);
    CHECK(st.module.quotient_dim == tensor_module.dim);
}

TEST_CASE("induced module with a fractional twist matches the twisted tensor construction") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);
    // target weight (3/2, -1/2): vector rep twisted by the half character
    InducedV0 v0 = one_dimensional_v0(ctx, Rational(3, 2), Rational(-1, 2));
    auto st = induced_stabilized(eng, v0, 6, 8);
    CHECK(st.stabilized);

    GlWeight target;
    target.mu = {Rational(3, 2), Rational(-1, 2)};
    GlModule g = build_irrep(ctx,
                             {{TensorWordItem::Kind::vector_rep, Rational(0)},
                              {TensorWordItem::Kind::one_dim, Rational(1, 2)}},
                             target);
    YModule tensor_module = evaluation_rep(g);
    auto mv = maximal_vectors(tensor_module);
    REQUIRE(mv.vectors.size() == 1);
    CHECK(st.module.hw == mv.vectors[0].weight);
    CHECK(st.module.quotient_dim == tensor_module.dim);
}

TEST_CASE("atypical character induces a one dimensional quotient") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);
    // (c, -c) is the one-dimensional character; its irreducible quotient is a line
    InducedV0 v0 = one_dimensional_v0(ctx, Rational(2), Rational(-2));
    auto st = induced_stabilized(eng, v0, 6, 8);
    CHECK(st.stabilized);
    CHECK(st.module.quotient_dim == 1);
    YModule one = evaluation_rep(one_dim_rep(ctx, Rational(2)));
    auto mv = maximal_vectors(one);
    CHECK(st.module.hw == mv.vectors[0].weight);
}

TEST_CASE("induced mode matrices respect the defining relations away from the cutoff") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);
    InducedV0 v0 = one_dimensional_v0(ctx, Rational(1), Rational(0));
    int cutoff = 6, levels = 4;
    InducedModule W = induced_module_truncated(eng, v0, cutoff, levels);
    // check [t^{a1}_{b1}[m], t^{a2}_{b2}[n]} = rhs on basis vectors far enough
    // below the cutoff that truncation cannot interfere
    for (int a1 = 1; a1 <= 2; ++a1)
        for (int b1 = 1; b1 <= 2; ++b1)
            for (int a2 = 1; a2 <= 2; ++a2)
                for (int b2 = 1; b2 <= 2; ++b2)
                    for (int m = 1; m <= 2; ++m)
                        for (int n = 1; n <= 2; ++n) {
                            int p1 = ctx.pair_parity(a1, b1), p2 = ctx.pair_parity(a2, b2);
                            auto lhs = W.mode(a1, b1, m) * W.mode(a2, b2, n) -
                                       W.mode(a2, b2, n) * W.mode(a1, b1, m) *
                                           Rational(p1 * p2 % 2 ? -1 : 1);
                            SparseMatrix<Rational> rhs(static_cast<std::size_t>(W.dim),
                                                       static_cast<std::size_t>(W.dim));
                            if (b1 == a2) rhs = rhs + W.mode(a1, b2, m + n - 1);
                            if (a1 == b2)
                                rhs = rhs - W.mode(a2, b1, m + n - 1) *
                                                Rational(p1 * p2 % 2 ? -1 : 1);
                            Rational es(ctx.eta(a1, b1, a2, b2) ? -1 : 1);
                            for (int r = 1; r <= std::min(m, n) - 1; ++r) {
                                rhs = rhs + (W.mode(a2, b1, r) * W.mode(a1, b2, m + n - 1 - r)) * es;
                                rhs = rhs - (W.mode(a2, b1, m + n - 1 - r) * W.mode(a1, b2, r)) * es;
                            }
                            // compare only on columns with degree small enough
                            for (std::size_t col = 0; col < static_cast<std::size_t>(W.dim); ++col) {
                                int deg = W.monos[col / static_cast<std::size_t>(W.v0dim)].degree();
                                if (deg + m + n - 1 > cutoff) continue;
                                for (std::size_t row = 0; row < static_cast<std::size_t>(W.dim); ++row)
                                    CHECK(lhs.get(row, col) == rhs.get(row, col));
                            }
                        }
}

TEST_CASE("induced module at gl(2|1) from the determinant character") {
    GradingContext ctx(2, 1);
    StraightenEngine eng(ctx);
    // V0 character (g, g | -g) matches the one-dimensional gl(2|1) twist
    Rational g(1, 2);
    InducedV0 v0 = one_dimensional_v0(ctx, g, -g);
    auto st = induced_stabilized(eng, v0, 5, 6);
    CHECK(st.stabilized);
    YModule one = evaluation_rep(one_dim_rep(ctx, g));
    auto mv = maximal_vectors(one);
    REQUIRE(mv.vectors.size() == 1);
    CHECK(st.module.hw == mv.vectors[0].weight);
    CHECK(st.module.quotient_dim == 1);
}
