#pragma once

#include "syang/json_io.hpp"
#include "syang/ymodule.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace syang {

struct PropertyResult {
    std::string name;
    bool pass = false;
    Json detail = Json::object();
};

/// Normal-ordering suite: idempotence on random words, the associativity
/// diamond on random triples, exhaustive relation closure.
std::vector<PropertyResult> verify_pbw(const GradingContext& ctx, std::uint64_t seed, int level_max,
                                       int word_samples, int triple_samples);

/// Defining relations on evaluation and tensor modules built from the vector
/// module and its square's subquotients.
std::vector<PropertyResult> verify_relations(const GradingContext& ctx, int level_max);

/// Defining relations on one given module.
std::vector<PropertyResult> verify_relations_module(const YModule& W, int level_max,
                                                    const std::string& label);

/// Coassociativity, counit laws and the antipode law at truncation order.
std::vector<PropertyResult> verify_hopf(const GradingContext& ctx, int coassoc_order,
                                        int antipode_order);

/// gl(1|1) two-factor degeneracy scan plus the uniqueness certificate at
/// seeded generic shifts.
std::vector<PropertyResult> verify_oracle(std::uint64_t seed, int generic_samples);

/// Deterministic small-rational stream for seeded sweeps.
class RationalStream {
public:
    explicit RationalStream(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next_u64() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long long next_int(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational next_rational(long long max_abs_num, long long max_den) {
        return Rational(next_int(-max_abs_num, max_abs_num), next_int(1, max_den));
    }

private:
    std::uint64_t state_;
};

} // namespace syang
