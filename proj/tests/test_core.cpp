#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ratdist/factor.hpp"
#include "ratdist/quadext.hpp"

using namespace ratdist;

TEST_CASE("factorize: fixed values") {
    Factorization f1 = factorize(1);
    CHECK(f1.sign == 1);
    CHECK(f1.factors.empty());

    Factorization fm12 = factorize(-12);
    CHECK(fm12.sign == -1);
    REQUIRE(fm12.factors.size() == 2);
    CHECK(fm12.factors[0] == std::pair<BigInt, unsigned>{2, 2});
    CHECK(fm12.factors[1] == std::pair<BigInt, unsigned>{3, 1});

    // oracle: plain trial division
    auto trial = [](BigInt n) {
        std::vector<std::pair<BigInt, unsigned>> out;
        for (BigInt p = 2; p * p <= n; ++p) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            if (e) out.push_back({p, e});
        }
        if (n > 1) out.push_back({n, 1u});
        return out;
    };
    Factorization f = factorize(1854);
    CHECK(f.sign == 1);
    CHECK(f.factors == trial(1854));
    CHECK(f.value() == 1854);
}

TEST_CASE("factorize: random reconstruction and large semiprime") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        BigInt n = BigInt(rng() % 1000000) + 2;
        if (rng() & 1) n = -n;
        Factorization f = factorize(n);
        CHECK(f.value() == n);
        for (std::size_t j = 1; j < f.factors.size(); ++j)
            CHECK(f.factors[j - 1].first < f.factors[j].first);
        for (const auto& [p, e] : f.factors) CHECK(is_probable_prime(p));
    }
    // beyond the trial range: product of two 10-digit primes
    BigInt p("1000000007"), q("1000000009");
    Factorization f = factorize(p * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == p);
    CHECK(f.factors[1].first == q);
}

TEST_CASE("squarefree_part") {
    auto [s1, c1] = squarefree_part(Rational(4, 9));
    CHECK(s1 == 1);
    CHECK(c1 == Rational(2, 3));

    auto [s2, c2] = squarefree_part(Rational(18, 25));
    CHECK(s2 == 2);
    CHECK(c2 == Rational(3, 5));

    auto [s3, c3] = squarefree_part(Rational(-3));
    CHECK(s3 == -3);
    CHECK(c3 == 1);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational q(BigInt(rng() % 5000) + 1, BigInt(rng() % 5000) + 1);
        if (rng() & 1) q = -q;
        auto [s, c] = squarefree_part(q);
        CHECK(Rational(s) * c * c == q);
        CHECK(c > 0);
        for (const auto& [p, e] : factorize(abs_int(s)).factors) {
            (void)p;
            CHECK(e == 1);
        }
    }
}

TEST_CASE("rational_sqrt") {
    CHECK(rational_sqrt(Rational(361, 100)) == Rational(19, 10));
    CHECK(rational_sqrt(Rational(0)) == Rational(0));
    CHECK(!rational_sqrt(Rational(2)).has_value());
    CHECK(!rational_sqrt(Rational(-4)).has_value());

    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        Rational q(BigInt(rng() % 10000) + 1, BigInt(rng() % 10000) + 1);
        auto r = rational_sqrt(q * q);
        REQUIRE(r.has_value());
        CHECK(*r * *r == q * q);
    }
}

namespace {

Rational rand_rational(std::mt19937_64& rng) {
    long long n = static_cast<long long>(rng() % 41) - 20;
    long long d = static_cast<long long>(rng() % 20) + 1;
    return Rational(n, d);
}

QuadExt rand_quadext(std::mt19937_64& rng, long long d) {
    return QuadExt(rand_rational(rng), rand_rational(rng), d);
}

} // namespace

TEST_CASE("rational field axioms on random samples") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (a != 0) CHECK(a * (1 / a) == 1);
    }
}

TEST_CASE("QuadExt arithmetic, conjugation, norm") {
    std::mt19937_64 rng(19);
    for (long long d : {2LL, 3LL, 5LL}) {
        for (int i = 0; i < 100; ++i) {
            QuadExt x = rand_quadext(rng, d), y = rand_quadext(rng, d), z = rand_quadext(rng, d);
            CHECK((x + y) + z == x + (y + z));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) CHECK(x * x.inverse() == QuadExt(1));
            // conjugation is a ring homomorphism; norm multiplicative
            CHECK((x + y).conj() == x.conj() + y.conj());
            CHECK((x * y).conj() == x.conj() * y.conj());
            CHECK((x * y).norm() == x.norm() * y.norm());
        }
    }
    QuadExt r3(0, 1, 3);
    CHECK((r3 * r3) == QuadExt(3));
    CHECK_THROWS_AS(QuadExt(0, 1, 2) + QuadExt(0, 1, 3), MixedFieldError);
    // mixed arithmetic with rationals is allowed
    CHECK((QuadExt(2) + QuadExt(0, 1, 7)).d() == 7);
}

TEST_CASE("QuadExt sign under the real embedding") {
    CHECK(QuadExt(1, 1, 2).sign() > 0);
    CHECK(QuadExt(-1, 1, 2).sign() > 0);  // sqrt2 > 1
    CHECK(QuadExt(-3, 2, 2).sign() < 0);  // 2 sqrt2 < 3
    CHECK(QuadExt(3, -2, 2).sign() > 0);
    CHECK(QuadExt(0, 0, 0).sign() == 0);
}

TEST_CASE("factorization budget is enforced") {
    FactorConfig saved = factor_config();
    factor_config().trial_limit = 100;
    factor_config().rho_max_iterations = 3;
    // a 40-digit semiprime is out of reach in 3 iterations
    BigInt p("100000000000000000039"), q("100000000000000000129");
    CHECK_THROWS_AS(factorize(p * q), FactorizationLimitExceeded);
    factor_config() = saved;
}
