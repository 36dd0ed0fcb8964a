#include <doctest.h>

#include "syang/algebra.hpp"
#include "syang/verify.hpp"

using namespace syang;

namespace {

AlgebraElement gen(const GradingContext& ctx, int a, int b, int n) {
    return AlgebraElement::generator(ctx, a, b, n);
}

} // namespace

TEST_CASE("gradation and eta") {
    GradingContext g11(1, 1);
    CHECK(g11.grade(1) == 0);
    CHECK(g11.grade(2) == 1);
    CHECK_THROWS_AS(g11.grade(3), std::out_of_range);
    // eta(1,2;2,1) = [1][2] + [2]([1]+[2]) = 0 + 1*(0+1) = 1
    CHECK(g11.eta(1, 2, 2, 1) == 1);
    // eta(1,1;2,2) = 0 + 0*(0+1) = 0
    CHECK(g11.eta(1, 1, 2, 2) == 0);
    GradingContext g21(2, 1);
    for (int a1 = 1; a1 <= 2; ++a1)
        for (int b1 = 1; b1 <= 2; ++b1)
            for (int a2 = 1; a2 <= 2; ++a2)
                for (int b2 = 1; b2 <= 2; ++b2) CHECK(g21.eta(a1, b1, a2, b2) == 0);
}

TEST_CASE("pair order and blocks") {
    GradingContext ctx(2, 1);
    // positive block: (1,3) succ (1,2) succ (2,3)
    CHECK(pair_succ(ctx, 1, 3, 1, 2));
    CHECK(pair_succ(ctx, 1, 2, 2, 3));
    CHECK(pair_succ(ctx, 1, 3, 2, 3));
    // positives succeed diagonals succeed negatives
    CHECK(pair_succ(ctx, 2, 3, 1, 1));
    CHECK(pair_succ(ctx, 3, 3, 2, 1));
    // diagonal: (1,1) succ (2,2) succ (3,3)
    CHECK(pair_succ(ctx, 1, 1, 2, 2));
    CHECK(pair_succ(ctx, 2, 2, 3, 3));
    // negatives compare through transposes in reverse: (3,2) succ (2,1) succ (3,1)
    CHECK(pair_succ(ctx, 3, 2, 2, 1));
    CHECK(pair_succ(ctx, 2, 1, 3, 1));
    // block assignment
    CHECK(pair_block(ctx, 3, 1) == PairBlock::odd_neg);
    CHECK(pair_block(ctx, 2, 1) == PairBlock::even_neg);
    CHECK(pair_block(ctx, 2, 2) == PairBlock::diag);
    CHECK(pair_block(ctx, 1, 2) == PairBlock::even_pos);
    CHECK(pair_block(ctx, 2, 3) == PairBlock::odd_pos);
}

TEST_CASE("commutator rhs examples") {
    GradingContext g11(1, 1);
    StraightenEngine eng(g11);
    // [t^1_2[1], t^2_1[1]} = t^1_1[1] + t^2_2[1]
    AlgebraElement rhs = eng.commutator_rhs({1, 2, 1}, {2, 1, 1});
    AlgebraElement expect = gen(g11, 1, 1, 1) + gen(g11, 2, 2, 1);
    CHECK(rhs == expect);

    // diagonal modes commute: [t^a_a[m], t^a_a[n]} = 0
    for (int a = 1; a <= 2; ++a)
        for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n)
                CHECK(eng.commutator_rhs({a, a, m}, {a, a, n}).is_zero());

    GradingContext g21(2, 1);
    StraightenEngine eng21(g21);
    CHECK(eng21.commutator_rhs({1, 2, 1}, {2, 3, 1}) == gen(g21, 1, 3, 1));
}

TEST_CASE("straighten basics") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);

    // an ordered word is a fixpoint
    std::vector<GenFactor> ordered{{2, 1, 1}, {1, 1, 1}, {1, 2, 1}};
    AlgebraElement nf = eng.straighten_word(ordered);
    REQUIRE(nf.terms().size() == 1);
    CHECK(nf.terms().begin()->second.is_one());
    CHECK(nf.terms().begin()->first.expand() == ordered);

    // the odd swap: t^1_2[1] t^2_1[1] = -t^2_1[1] t^1_2[1] + t^1_1[1] + t^2_2[1]
    AlgebraElement swapped = eng.straighten_word({{1, 2, 1}, {2, 1, 1}});
    AlgebraElement expect(ctx);
    expect.add(PBWMonomial({{2, 1, 1, 1}, {1, 2, 1, 1}}), Rational(-1));
    expect += gen(ctx, 1, 1, 1) + gen(ctx, 2, 2, 1);
    CHECK(swapped == expect);

    // odd squares vanish here: (t^1_2[1])^2 = (1/2)[t,t} = 0
    CHECK(eng.straighten_word({{1, 2, 1}, {1, 2, 1}}).is_zero());

    // even diagonal product reorders without corrections
    AlgebraElement prod = eng.multiply(gen(ctx, 1, 1, 1), gen(ctx, 2, 2, 1));
    AlgebraElement want(ctx);
    want.add(PBWMonomial({{2, 2, 1, 1}, {1, 1, 1, 1}}), Rational(1));
    CHECK(prod == want);

    // unit is neutral
    CHECK(eng.multiply(AlgebraElement::unit(ctx), swapped) == swapped);
    CHECK(eng.multiply(swapped, AlgebraElement::unit(ctx)) == swapped);
}

TEST_CASE("even generators admit honest powers") {
    GradingContext ctx(2, 1);
    StraightenEngine eng(ctx);
    AlgebraElement sq = eng.straighten_word({{1, 2, 1}, {1, 2, 1}});
    REQUIRE(sq.terms().size() == 1);
    const auto& [mono, coeff] = *sq.terms().begin();
    CHECK(coeff.is_one());
    REQUIRE(mono.factors().size() == 1);
    CHECK(mono.factors()[0].k == 2);
    CHECK(mono.is_canonical(ctx));
}

TEST_CASE("relation closure sweep") {
    for (auto ctx : {GradingContext(1, 1), GradingContext(2, 1)}) {
        StraightenEngine eng(ctx);
        for (int a1 = 1; a1 <= ctx.size(); ++a1)
            for (int b1 = 1; b1 <= ctx.size(); ++b1)
                for (int a2 = 1; a2 <= ctx.size(); ++a2)
                    for (int b2 = 1; b2 <= ctx.size(); ++b2)
                        for (int m = 1; m <= 2; ++m)
                            for (int n = 1; n <= 2; ++n) {
                                GenFactor g1{a1, b1, m}, g2{a2, b2, n};
                                int e = ctx.pair_parity(a1, b1) * ctx.pair_parity(a2, b2);
                                AlgebraElement lhs = eng.straighten_word({g1, g2});
                                lhs -= eng.straighten_word({g2, g1}) * Rational(e % 2 ? -1 : 1);
                                CHECK(lhs == eng.commutator_rhs(g1, g2));
                            }
    }
}

TEST_CASE("straighten is idempotent on random words") {
    GradingContext ctx(2, 1);
    StraightenEngine eng(ctx);
    RationalStream rng(3);
    for (int s = 0; s < 60; ++s) {
        std::vector<GenFactor> w;
        int len = static_cast<int>(rng.next_int(0, 4));
        for (int i = 0; i < len; ++i)
            w.push_back({static_cast<int>(rng.next_int(1, 3)), static_cast<int>(rng.next_int(1, 3)),
                         static_cast<int>(rng.next_int(1, 3))});
        AlgebraElement once = eng.straighten_word(w);
        AlgebraElement twice(ctx);
        for (const auto& [m, c] : once.terms()) {
            CHECK(m.is_canonical(ctx));
            twice += eng.straighten_word(m.expand()) * c;
        }
        CHECK(once == twice);
    }
}

TEST_CASE("filtration degree never grows") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);
    std::vector<GenFactor> w{{1, 2, 2}, {2, 1, 3}, {1, 1, 1}};
    AlgebraElement nf = eng.straighten_word(w);
    for (const auto& [m, c] : nf.terms()) CHECK(m.degree() <= 6);
}

TEST_CASE("counit") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);
    CHECK(counit(AlgebraElement::unit(ctx)).is_one());
    CHECK(counit(gen(ctx, 1, 1, 2)).is_zero());
    AlgebraElement x = AlgebraElement::unit(ctx, Rational(3)) + gen(ctx, 1, 1, 2);
    CHECK(counit(x) == Rational(3));
    // homomorphism to scalars
    RationalStream rng(17);
    for (int s = 0; s < 20; ++s) {
        AlgebraElement u = AlgebraElement::unit(ctx, rng.next_rational(3, 2)) +
                           gen(ctx, static_cast<int>(rng.next_int(1, 2)),
                               static_cast<int>(rng.next_int(1, 2)),
                               static_cast<int>(rng.next_int(1, 3)));
        AlgebraElement v = AlgebraElement::unit(ctx, rng.next_rational(3, 2)) +
                           gen(ctx, static_cast<int>(rng.next_int(1, 2)),
                               static_cast<int>(rng.next_int(1, 2)),
                               static_cast<int>(rng.next_int(1, 3)));
        CHECK(counit(eng.multiply(u, v)) == counit(u) * counit(v));
    }
}

TEST_CASE("automorphism") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);
    AlgebraElement x = gen(ctx, 1, 2, 1) + gen(ctx, 2, 2, 2) * Rational(3);

    // f = 1: identity
    CHECK(eng.apply_automorphism({}, x) == x);

    // f = 1 + c/x on an off-diagonal level-1 generator: unchanged
    Rational c(5, 2);
    CHECK(eng.apply_automorphism({c}, gen(ctx, 1, 2, 1)) == gen(ctx, 1, 2, 1));

    // on diagonal generators: t^a_a[1] + c (-1)^{[a]}
    CHECK(eng.apply_automorphism({c}, gen(ctx, 1, 1, 1)) ==
          gen(ctx, 1, 1, 1) + AlgebraElement::unit(ctx, c));
    CHECK(eng.apply_automorphism({c}, gen(ctx, 2, 2, 1)) ==
          gen(ctx, 2, 2, 1) + AlgebraElement::unit(ctx, -c));

    // algebra homomorphism on random products
    RationalStream rng(23);
    std::vector<Rational> f{rng.next_rational(2, 2), rng.next_rational(2, 2)};
    for (int s = 0; s < 25; ++s) {
        AlgebraElement u = gen(ctx, static_cast<int>(rng.next_int(1, 2)),
                               static_cast<int>(rng.next_int(1, 2)),
                               static_cast<int>(rng.next_int(1, 2)));
        AlgebraElement v = gen(ctx, static_cast<int>(rng.next_int(1, 2)),
                               static_cast<int>(rng.next_int(1, 2)),
                               static_cast<int>(rng.next_int(1, 2)));
        AlgebraElement lhs = eng.apply_automorphism(f, eng.multiply(u, v));
        AlgebraElement rhs = eng.multiply(eng.apply_automorphism(f, u), eng.apply_automorphism(f, v));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("verify_pbw suite passes") {
    for (auto ctx : {GradingContext(1, 1), GradingContext(2, 1)}) {
        auto results = verify_pbw(ctx, 42, 2, 40, 40);
        for (const auto& r : results) {
            INFO(r.name);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("invalid generators are rejected") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);
    CHECK_THROWS_AS(eng.commutator_rhs({1, 2, 0}, {2, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(eng.straighten_word({{3, 1, 1}}), std::out_of_range);
    CHECK_THROWS_AS(AlgebraElement::generator(ctx, 1, 1, 0), std::invalid_argument);
    AlgebraElement other(GradingContext(2, 1));
    CHECK_THROWS_AS(eng.multiply(AlgebraElement::unit(ctx), other), std::invalid_argument);
}

TEST_CASE("exhaustive associativity diamond at small scale") {
    GradingContext ctx(1, 1);
    StraightenEngine eng(ctx);
    std::vector<GenFactor> gens;
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int n = 1; n <= 2; ++n) gens.push_back({a, b, n});
    for (const auto& g1 : gens)
        for (const auto& g2 : gens)
            for (const auto& g3 : gens) {
                AlgebraElement x = AlgebraElement::generator(ctx, g1.a, g1.b, g1.n);
                AlgebraElement y = AlgebraElement::generator(ctx, g2.a, g2.b, g2.n);
                AlgebraElement z = AlgebraElement::generator(ctx, g3.a, g3.b, g3.n);
                CHECK(eng.multiply(x, eng.multiply(y, z)) == eng.multiply(eng.multiply(x, y), z));
            }
}

TEST_CASE("eta range-checks every index") {
    GradingContext ctx(1, 1);
    CHECK_THROWS_AS(ctx.eta(1, 1, 1, 5), std::out_of_range);
    CHECK_THROWS_AS(ctx.eta(5, 1, 1, 1), std::out_of_range);
}

TEST_CASE("relation closure and rewriting hold at gl(2|2)") {
    GradingContext ctx(2, 2);
    StraightenEngine eng(ctx);
    for (int a1 = 1; a1 <= 4; ++a1)
        for (int b1 = 1; b1 <= 4; ++b1)
            for (int a2 = 1; a2 <= 4; ++a2)
                for (int b2 = 1; b2 <= 4; ++b2)
                    for (int m = 1; m <= 2; ++m)
                        for (int n = 1; n <= 2; ++n) {
                            GenFactor g1{a1, b1, m}, g2{a2, b2, n};
                            int e = ctx.pair_parity(a1, b1) * ctx.pair_parity(a2, b2);
                            AlgebraElement lhs = eng.straighten_word({g1, g2});
                            lhs -= eng.straighten_word({g2, g1}) * Rational(e % 2 ? -1 : 1);
                            CHECK(lhs == eng.commutator_rhs(g1, g2));
                        }
}
