#pragma once

#include "syang/glmn.hpp"
#include "syang/grading.hpp"
#include "syang/ratfun.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace syang {

/// Tuple of rational functions lambda_a(x) with lambda_a(inf) = (-1)^{[a]}.
struct HighestWeight {
    GradingContext ctx;
    std::vector<RatFun> comps;

    HighestWeight() = default;
    HighestWeight(GradingContext c, std::vector<RatFun> v);

    const RatFun& at(int a) const { return comps.at(static_cast<std::size_t>(a - 1)); }
    void validate() const;

    friend bool operator==(const HighestWeight& x, const HighestWeight& y) {
        return x.ctx == y.ctx && x.comps == y.comps;
    }
    friend bool operator!=(const HighestWeight& x, const HighestWeight& y) { return !(x == y); }

    std::string str() const;
};

/// The counit weight ((-1)^{[a]})_a.
HighestWeight epsilon_weight(const GradingContext& ctx);

/// lambda_a(x) = (-1)^{[a]} + mu_a x^{-1}.
HighestWeight evaluation_weight(const GradingContext& ctx, const GlWeight& mu);

/// Componentwise (-1)^{[a]} mu_a(x) nu_a(x).
HighestWeight star_product(const HighestWeight& mu, const HighestWeight& nu);

/// Multiplies every component by f; requires f(inf) = 1.
HighestWeight twist(const RatFun& f, const HighestWeight& L);

/// x -> x + alpha on every component.
HighestWeight shift_weight(const HighestWeight& L, const Rational& alpha);

/// Solve P(x+shift)/P(x) = f for a monic P by rational-root telescoping.
struct ShiftSolve {
    enum class Status { solved, none, unsupported };
    Status status = Status::none;
    Polynomial P;
    std::string reason;
};
ShiftSolve solve_shift_polynomial(const RatFun& f, int shift);

/// The highest-weight polynomials: P_a for a != M, and the cleared pair
/// (Qtilde_M, Q_M) with its root data.
struct DrinfeldData {
    std::map<int, Polynomial> P;                  // monic, keyed by a != M
    std::map<int, std::vector<Rational>> p_roots; // P_a = prod_i (x + p_a^{(i)})
    Polynomial Qtilde;                            // prod_i (x + r1_i), monic of degree KM
    Polynomial Q;                                 // -prod_i (x + r2_i)
    std::vector<Rational> r1, r2;
    int KM = 0;
};

struct FdVerdict {
    enum class Status { finite, not_finite, unsupported };
    Status status = Status::not_finite;
    std::optional<DrinfeldData> data;
    int failed_component = 0; // the row a at which the check failed
    std::string reason;
};

/// The finite-dimensionality decision procedure.
FdVerdict check_finite_dim(const HighestWeight& L);

/// One factor of the fundamental factorization; weight components follow the
/// row-t case split.
struct FundamentalFactor {
    int t = 1;
    int i = 1;
    HighestWeight weight;
};

struct WeightFactorization {
    RatFun twist_fun; // f with f(inf) = 1
    std::vector<FundamentalFactor> factors;
};

/// Factor an accepted weight as twist(f, star-product of fundamental
/// factors); the round trip is verified exactly before returning.
WeightFactorization factor_into_fundamentals(const HighestWeight& L, const DrinfeldData& D);

/// The gl weight of the fundamental factor mu^{(t,i)}.
GlWeight fundamental_gl_weight(const GradingContext& ctx, int t, const Rational& p_or_r1,
                               const std::optional<Rational>& r2 = std::nullopt);

} // namespace syang
