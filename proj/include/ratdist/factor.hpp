#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ratdist/numeric.hpp"

namespace ratdist {

// Effort budget for factorize(). Deterministic: the rho stage draws its
// parameters from a fixed-seed generator.
struct FactorConfig {
    std::uint64_t trial_limit = 1'000'000;
    std::uint64_t rho_max_iterations = 20'000'000;
    std::uint64_t seed = 0x5eed0123;
};

FactorConfig& factor_config();           // process-wide, mutable
void set_factor_budget_from_env();       // reads RATDIST_FACTOR_BUDGET if present

struct Factorization {
    int sign = 1;                                     // +1 or -1
    std::vector<std::pair<BigInt, unsigned>> factors; // primes strictly increasing

    BigInt value() const {
        BigInt v = sign;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) v *= p;
        return v;
    }
};

bool is_probable_prime(const BigInt& n);

// Exact prime factorization of n != 0. Throws FactorizationLimitExceeded
// when the rho stage runs out of budget.
Factorization factorize(const BigInt& n);

// q = s * c^2 with s a squarefree integer carrying the sign of q, c > 0.
std::pair<BigInt, Rational> squarefree_part(const Rational& q);

} // namespace ratdist
