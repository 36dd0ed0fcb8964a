#include "syang/verify.hpp"

#include "syang/induced.hpp"

#include <algorithm>

namespace syang {

namespace {

GenFactor random_generator(RationalStream& rng, const GradingContext& ctx, int level_max) {
    return GenFactor{static_cast<int>(rng.next_int(1, ctx.size())),
                     static_cast<int>(rng.next_int(1, ctx.size())),
                     static_cast<int>(rng.next_int(1, level_max))};
}

} // namespace

std::vector<PropertyResult> verify_pbw(const GradingContext& ctx, std::uint64_t seed, int level_max,
                                       int word_samples, int triple_samples) {
    std::vector<PropertyResult> out;
    StraightenEngine eng(ctx);
    RationalStream rng(seed);

    {
        PropertyResult r{"pbw/straighten-idempotent", true};
        for (int s = 0; s < word_samples && r.pass; ++s) {
            int len = static_cast<int>(rng.next_int(0, 4));
            std::vector<GenFactor> word;
            for (int i = 0; i < len; ++i) word.push_back(random_generator(rng, ctx, level_max));
            AlgebraElement once = eng.straighten_word(word);
            AlgebraElement twice(ctx);
            for (const auto& [m, c] : once.terms()) twice += eng.straighten_word(m.expand()) * c;
            if (!(once == twice)) {
                r.pass = false;
                r.detail["sample"] = s;
            }
        }
        out.push_back(std::move(r));
    }

    {
        PropertyResult r{"pbw/associativity-diamond", true};
        for (int s = 0; s < triple_samples && r.pass; ++s) {
            auto g1 = random_generator(rng, ctx, level_max);
            auto g2 = random_generator(rng, ctx, level_max);
            auto g3 = random_generator(rng, ctx, level_max);
            AlgebraElement x = AlgebraElement::generator(ctx, g1.a, g1.b, g1.n);
            AlgebraElement y = AlgebraElement::generator(ctx, g2.a, g2.b, g2.n);
            AlgebraElement z = AlgebraElement::generator(ctx, g3.a, g3.b, g3.n);
            AlgebraElement lhs = eng.multiply(x, eng.multiply(y, z));
            AlgebraElement rhs = eng.multiply(eng.multiply(x, y), z);
            if (!(lhs == rhs)) {
                r.pass = false;
                r.detail["sample"] = s;
            }
        }
        out.push_back(std::move(r));
    }

    {
        PropertyResult r{"pbw/relation-closure", true};
        for (int a1 = 1; a1 <= ctx.size() && r.pass; ++a1)
            for (int b1 = 1; b1 <= ctx.size() && r.pass; ++b1)
                for (int a2 = 1; a2 <= ctx.size() && r.pass; ++a2)
                    for (int b2 = 1; b2 <= ctx.size() && r.pass; ++b2)
                        for (int m = 1; m <= level_max && r.pass; ++m)
                            for (int n = 1; n <= level_max && r.pass; ++n) {
                                GenFactor g1{a1, b1, m}, g2{a2, b2, n};
                                int e = ctx.pair_parity(a1, b1) * ctx.pair_parity(a2, b2);
                                AlgebraElement lhs = eng.straighten_word({g1, g2});
                                lhs -= eng.straighten_word({g2, g1}) * Rational(e % 2 ? -1 : 1);
                                AlgebraElement rhs = eng.commutator_rhs(g1, g2);
                                if (!(lhs == rhs)) {
                                    r.pass = false;
                                    r.detail["quadruple"] = {a1, b1, m, a2, b2, n};
                                }
                            }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PropertyResult> verify_relations_module(const YModule& W, int level_max,
                                                    const std::string& label) {
    std::vector<PropertyResult> out;
    PropertyResult r{"relations/" + label, true};
    RelationReport rep = verify_defining_relations(W, level_max);
    r.pass = rep.pass;
    if (!rep.pass) {
        r.detail["quadruple"] = {rep.a1, rep.b1, rep.m, rep.a2, rep.b2, rep.n};
        r.detail["message"] = rep.detail;
    }
    out.push_back(std::move(r));

    PropertyResult c{"relations/" + label + "/constant-terms", true};
    for (const auto& [ab, m] : W.action) {
        auto [a, b] = ab;
        Rational want(W.ctx.grade(b) ? -1 : 1);
        for (int i = 0; i < W.dim && c.pass; ++i)
            for (int j = 0; j < W.dim && c.pass; ++j) {
                RatFun f = m.get(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                Rational cv = f.is_zero() ? Rational(0) : f.value_at_infinity();
                if (cv != ((a == b && i == j) ? want : Rational(0))) c.pass = false;
            }
    }
    out.push_back(std::move(c));

    PropertyResult mrec{"relations/" + label + "/mode-recurrence", check_mode_recurrence(W)};
    out.push_back(std::move(mrec));
    return out;
}

std::vector<PropertyResult> verify_relations(const GradingContext& ctx, int level_max) {
    std::vector<PropertyResult> out;
    GlModule V = vector_rep(ctx);
    YModule ev = evaluation_rep(V);
    for (auto& r : verify_relations_module(ev, level_max, "evaluation-vector")) out.push_back(r);

    GlModule VV = tensor(V, V);
    for (const auto& [mu, vec] : gl_highest_weight_vectors(VV)) {
        GlModule sub = cyclic_subquotient(VV, vec);
        YModule evs = evaluation_rep(sub);
        for (auto& r :
             verify_relations_module(evs, level_max, "evaluation-vv-" + mu.str()))
            out.push_back(r);
    }

    YModule tens = shifted_tensor({ev, ev}, {Rational(0), Rational(1, 2)});
    for (auto& r : verify_relations_module(tens, level_max, "tensor-alpha-1/2")) out.push_back(r);
    return out;
}

std::vector<PropertyResult> verify_hopf(const GradingContext& ctx, int coassoc_order,
                                        int antipode_order) {
    std::vector<PropertyResult> out;
    StraightenEngine eng(ctx);
    const Rational a2(1, 2), a3(-2, 3);

    {
        PropertyResult r{"hopf/coassociativity", true};
        for (int a = 1; a <= ctx.size() && r.pass; ++a)
            for (int b = 1; b <= ctx.size() && r.pass; ++b)
                if (!check_coassociativity(eng, a, b, coassoc_order, a2, a3)) {
                    r.pass = false;
                    r.detail["pair"] = {a, b};
                }
        out.push_back(std::move(r));
    }
    {
        PropertyResult r{"hopf/counit-laws", true};
        for (int a = 1; a <= ctx.size() && r.pass; ++a)
            for (int b = 1; b <= ctx.size() && r.pass; ++b)
                if (!check_counit_laws(eng, a, b, coassoc_order, a2) ||
                    !check_counit_laws(eng, a, b, coassoc_order, Rational(0))) {
                    r.pass = false;
                    r.detail["pair"] = {a, b};
                }
        out.push_back(std::move(r));
    }
    {
        PropertyResult r{"hopf/antipode-law", true};
        for (int a = 1; a <= ctx.size() && r.pass; ++a)
            for (int b = 1; b <= ctx.size() && r.pass; ++b)
                if (!check_antipode_law(eng, a, b, antipode_order)) {
                    r.pass = false;
                    r.detail["pair"] = {a, b};
                }
        out.push_back(std::move(r));
    }
    {
        PropertyResult r{"hopf/counit-homomorphism", true};
        RationalStream rng(7);
        for (int s = 0; s < 25 && r.pass; ++s) {
            auto g1 = random_generator(rng, ctx, 3);
            auto g2 = random_generator(rng, ctx, 3);
            AlgebraElement x = AlgebraElement::generator(ctx, g1.a, g1.b, g1.n) +
                               AlgebraElement::unit(ctx, rng.next_rational(3, 3));
            AlgebraElement y = AlgebraElement::generator(ctx, g2.a, g2.b, g2.n) +
                               AlgebraElement::unit(ctx, rng.next_rational(3, 3));
            if (counit(eng.multiply(x, y)) != counit(x) * counit(y)) r.pass = false;
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PropertyResult> verify_oracle(std::uint64_t seed, int generic_samples) {
    std::vector<PropertyResult> out;
    GradingContext ctx(1, 1);
    GlModule V = vector_rep(ctx);
    YModule ev = evaluation_rep(V);

    auto tensor_at = [&](const Rational& alpha) {
        return shifted_tensor({ev, ev}, {Rational(0), alpha});
    };

    // scan for degenerate shifts: nonzero invariant subspace below the top line
    std::vector<Rational> degenerate;
    {
        PropertyResult r{"oracle/degeneracy-scan", true};
        std::vector<Rational> candidates;
        for (long long p = -4; p <= 4; ++p)
            for (long long q = 1; q <= 4; ++q) {
                Rational alpha(p, q);
                if (std::find(candidates.begin(), candidates.end(), alpha) == candidates.end())
                    candidates.push_back(alpha);
            }
        for (const auto& alpha : candidates) {
            YModule W = tensor_at(alpha);
            int levels = certificate_levels(W);
            std::vector<SparseMatrix<Rational>> ops;
            for (int a = 1; a <= 2; ++a)
                for (int b = 1; b <= 2; ++b)
                    for (int n = 1; n <= levels; ++n) ops.push_back(action_mode(W, a, b, n));
            // ambient: complement of the top weight line (weight (2,0) is index 0)
            std::vector<std::vector<Rational>> ambient;
            for (int i = 1; i < W.dim; ++i) {
                std::vector<Rational> e(static_cast<std::size_t>(W.dim), Rational(0));
                e[static_cast<std::size_t>(i)] = Rational(1);
                ambient.push_back(std::move(e));
            }
            auto inv = largest_invariant_subspace(ambient, ops);
            if (!inv.empty()) degenerate.push_back(alpha);
        }
        r.pass = !degenerate.empty();
        Json ds = Json::array();
        for (const auto& d : degenerate) ds.push_back(to_json(d));
        r.detail["degenerate_alphas"] = ds;
        out.push_back(std::move(r));
    }

    {
        PropertyResult r{"oracle/degenerate-dimension-additivity", true};
        for (const auto& alpha : degenerate) {
            YModule W = tensor_at(alpha);
            auto mv = maximal_vectors(W);
            // quotient from the top-weight maximal vector
            bool found = false;
            for (const auto& hv : mv.vectors) {
                if (hv.weight.at(1).series_coeff(1) == Rational(2)) { // gl weight (2,0)
                    int sub = 0;
                    YModule Q = irreducible_quotient(W, hv, &sub);
                    if (Q.dim + sub != 4) {
                        r.pass = false;
                        r.detail["alpha"] = to_json(alpha);
                        r.detail["quotient_dim"] = Q.dim;
                        r.detail["submodule_dim"] = sub;
                    }
                    auto rel = verify_defining_relations(Q, 4);
                    if (!rel.pass) {
                        r.pass = false;
                        r.detail["alpha"] = to_json(alpha);
                        r.detail["quotient_relations"] = rel.detail;
                    }
                    found = true;
                    break;
                }
            }
            if (!found) {
                r.pass = false;
                r.detail["alpha"] = to_json(alpha);
                r.detail["message"] = "no top maximal vector located";
            }
        }
        out.push_back(std::move(r));
    }

    {
        PropertyResult r{"oracle/theorem2-generic", true};
        RationalStream rng(seed);
        int done = 0;
        while (done < generic_samples) {
            Rational alpha = rng.next_rational(20, 6);
            if (std::find(degenerate.begin(), degenerate.end(), alpha) != degenerate.end())
                continue;
            ++done;
            YModule W = tensor_at(alpha);
            auto mv = maximal_vectors(W);
            if (!mv.complete || mv.vectors.size() != 1) {
                r.pass = false;
                r.detail["alpha"] = to_json(alpha);
                r.detail["maximal_count"] = mv.vectors.size();
                break;
            }
            int sub = 0;
            YModule Q = irreducible_quotient(W, mv.vectors[0], &sub);
            if (Q.dim != 4 || sub != 0) {
                r.pass = false;
                r.detail["alpha"] = to_json(alpha);
                r.detail["quotient_dim"] = Q.dim;
                break;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace syang
