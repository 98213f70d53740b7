#include "ratdist/factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>

namespace ratdist {

FactorConfig& factor_config() {
    static FactorConfig cfg;
    return cfg;
}

void set_factor_budget_from_env() {
    if (const char* env = std::getenv("RATDIST_FACTOR_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) factor_config().rho_max_iterations = v;
    }
}

namespace {

BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& m) { return a * b % m; }

BigInt powmod(BigInt base, BigInt exp, const BigInt& m) {
    BigInt r = 1;
    base %= m;
    while (exp > 0) {
        if (boost::multiprecision::bit_test(exp, 0)) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned r) {
    BigInt x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true; // composite witness found
}

} // namespace

bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned r = 0;
    while (!boost::multiprecision::bit_test(d, 0)) {
        d >>= 1;
        ++r;
    }
    // Deterministic for n < 3.3e24; a fixed strong test beyond that.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (miller_rabin_witness(n, a, d, r)) return false;
    return true;
}

namespace {

// Pollard-Brent rho; parameters drawn from a caller-owned generator so the
// whole factorization is a pure function of (n, config).
BigInt rho_factor(const BigInt& n, std::mt19937_64& rng, std::uint64_t& budget) {
    if (n % 2 == 0) return 2;
    while (true) {
        BigInt y = BigInt(rng() % 0xffffffffULL) % n;
        BigInt c = BigInt(1 + rng() % 0xffffffULL) % n;
        if (c == 0) c = 1;
        BigInt x = y, ys = y, q = 1, g = 1;
        const unsigned m = 128;
        unsigned long long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long long i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (unsigned long long k = 0; k < r && g == 1; k += m) {
                ys = y;
                unsigned long long lim = std::min<unsigned long long>(m, r - k);
                for (unsigned long long i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, abs_int(x - y), n);
                }
                g = gcd(q, n);
                if (budget < lim) throw FactorizationLimitExceeded();
                budget -= lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack
            g = 1;
            while (g == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = gcd(abs_int(x - ys), n);
                if (budget == 0) throw FactorizationLimitExceeded();
                --budget;
            }
        }
        if (g != n) return g;
        // retry with new parameters
    }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out, std::mt19937_64& rng,
                 std::uint64_t& budget) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    BigInt d = rho_factor(n, rng, budget);
    factor_into(d, out, rng, budget);
    factor_into(n / d, out, rng, budget);
}

} // namespace

Factorization factorize(const BigInt& n) {
    if (n == 0) throw Error("factorize: n must be nonzero");
    const FactorConfig& cfg = factor_config();
    Factorization f;
    f.sign = n < 0 ? -1 : 1;
    BigInt m = abs_int(n);

    std::map<BigInt, unsigned> primes;
    for (BigInt p : {BigInt(2), BigInt(3), BigInt(5)})
        while (m % p == 0) {
            primes[p] += 1;
            m /= p;
        }
    // wheel over 6k+-1
    BigInt p = 7;
    int step = 4; // 7, 11, 13, 17, 19, 23, ... alternating +4, +2
    while (p * p <= m && p <= cfg.trial_limit) {
        while (m % p == 0) {
            primes[p] += 1;
            m /= p;
        }
        p += step;
        step = 6 - step;
    }
    if (m > 1) {
        if (m <= BigInt(cfg.trial_limit) * BigInt(cfg.trial_limit) || is_probable_prime(m)) {
            primes[m] += 1;
        } else {
            std::mt19937_64 rng(cfg.seed);
            std::uint64_t budget = cfg.rho_max_iterations;
            factor_into(m, primes, rng, budget);
        }
    }
    f.factors.assign(primes.begin(), primes.end());
    return f;
}

std::pair<BigInt, Rational> squarefree_part(const Rational& q) {
    if (q == 0) throw Error("squarefree_part: q must be nonzero");
    // q = n/d reduced, so q = (n*d) / d^2 and the squarefree part of q equals
    // the squarefree part of the integer n*d.
    BigInt n = num(q), d = den(q);
    Factorization f = factorize(n * d);
    BigInt s = f.sign, k = 1;
    for (const auto& [prime, e] : f.factors) {
        if (e & 1u) s *= prime;
        for (unsigned i = 0; i < e / 2; ++i) k *= prime;
    }
    return {s, Rational(k, d)};
}

} // namespace ratdist
