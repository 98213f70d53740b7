#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ratdist/quadforms.hpp"

using namespace ratdist;

namespace {

Rational rand_nonzero(std::mt19937_64& rng, long long lim = 60) {
    while (true) {
        long long n = static_cast<long long>(rng() % (2 * lim + 1)) - lim;
        long long d = static_cast<long long>(rng() % 20) + 1;
        if (n != 0) return Rational(n, d);
    }
}

// Brute-force primitive-solution search used as an independent oracle; the
// Holzer bound |x|,|y|,|z| <= sqrt(|ab|)+1 makes it complete for squarefree
// coefficients.
bool holzer_brute_force(long long a, long long b) {
    long long bound = static_cast<long long>(std::sqrt(std::abs(static_cast<double>(a) * b))) + 1;
    for (long long z = 0; z <= bound; ++z)
        for (long long x = -bound; x <= bound; ++x)
            for (long long y = -bound; y <= bound; ++y) {
                if (x == 0 && y == 0 && z == 0) continue;
                if (std::gcd(std::gcd(std::abs(x), std::abs(y)), z) != 1) continue;
                if (a * x * x + b * y * y == z * z) return true;
            }
    return false;
}

} // namespace

TEST_CASE("hilbert symbol: fixed values") {
    // (1, b)_v = +1 always
    for (const Rational& b : {Rational(7), Rational(-15), Rational(2, 3)}) {
        CHECK(hilbert_symbol(1, b, Place::infinity()) == 1);
        CHECK(hilbert_symbol(1, b, Place::at(2)) == 1);
        CHECK(hilbert_symbol(1, b, Place::at(3)) == 1);
    }
    CHECK(hilbert_symbol(-1, -1, Place::infinity()) == -1);
    CHECK(hilbert_symbol(3, 5, Place::at(3)) == -1);
    CHECK(hilbert_symbol(3, 5, Place::at(5)) == -1);
    CHECK(hilbert_symbol(3, 5, Place::at(2)) == 1);
    CHECK(hilbert_symbol(3, 5, Place::infinity()) == 1);
}

TEST_CASE("hilbert symbol at 3 agrees with the mod-27 primitive-solution oracle") {
    // (3,5)_3 = -1 iff 3x^2 + 5y^2 = z^2 has no primitive solution mod 27
    bool primitive_found = false;
    for (int x = 0; x < 27 && !primitive_found; ++x)
        for (int y = 0; y < 27 && !primitive_found; ++y)
            for (int z = 0; z < 27 && !primitive_found; ++z) {
                if (x % 3 == 0 && y % 3 == 0 && z % 3 == 0) continue;
                if ((3 * x * x + 5 * y * y - z * z) % 27 == 0) primitive_found = true;
            }
    CHECK(!primitive_found);
    CHECK(hilbert_symbol(3, 5, Place::at(3)) == -1);
}

TEST_CASE("product formula over all places") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        Rational a = rand_nonzero(rng), b = rand_nonzero(rng);
        int prod = 1;
        for (const auto& rep : hilbert_symbols(a, b)) prod *= rep.symbol;
        CHECK(prod == 1);
    }
}

TEST_CASE("symbol invariant under square scaling") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 200; ++i) {
        Rational a = rand_nonzero(rng), b = rand_nonzero(rng), c = rand_nonzero(rng);
        for (const Place& v : relevant_places(a, b)) {
            CHECK(hilbert_symbol(a * c * c, b, v) == hilbert_symbol(a, b, v));
            CHECK(hilbert_symbol(a, b * c * c, v) == hilbert_symbol(a, b, v));
        }
    }
}

TEST_CASE("is_isotropic: fixed values and the complete small oracle") {
    CHECK(is_isotropic(1, 3));
    CHECK(is_isotropic(1, 1));
    CHECK(!is_isotropic(3, 5));
    CHECK(failing_places(3, 5).size() == 2);

    // all squarefree |a|, |b| <= 50 against Holzer-bounded brute force
    std::vector<long long> sf;
    for (long long n = 1; n <= 50; ++n) {
        bool squarefree = true;
        for (long long p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) squarefree = false;
        if (squarefree) {
            sf.push_back(n);
            sf.push_back(-n);
        }
    }
    for (long long a : sf)
        for (long long b : sf) {
            bool iso = is_isotropic(a, b);
            bool oracle = holzer_brute_force(a, b);
            INFO("a=", a, " b=", b);
            CHECK(iso == oracle);
        }
}

TEST_CASE("conic_point returns primitive exact witnesses") {
    ConicPoint w = conic_point(1, 3);
    CHECK(w.A * w.x * w.x + w.B * w.y * w.y == w.z * w.z);
    CHECK(gcd(gcd(w.x, w.y), w.z) == 1);
    // the (1,1,2) point satisfies the form directly
    CHECK(BigInt(1) * 1 + 3 * 1 == 4);

    CHECK_THROWS_AS(conic_point(3, 5), NoSolution);

    std::mt19937_64 rng(31);
    int produced = 0;
    while (produced < 100) {
        Rational a = rand_nonzero(rng), b = rand_nonzero(rng);
        if (!is_isotropic(a, b)) continue;
        ConicPoint p = conic_point(a, b);
        CHECK(p.A * p.x * p.x + p.B * p.y * p.y == p.z * p.z);
        CHECK(gcd(gcd(abs_int(p.x), abs_int(p.y)), abs_int(p.z)) == 1);
        CHECK(!(p.x == 0 && p.y == 0 && p.z == 0));
        ++produced;
    }
}

TEST_CASE("conic_point is deterministic") {
    ConicPoint w1 = conic_point(Rational(5), Rational(-11));
    ConicPoint w2 = conic_point(Rational(5), Rational(-11));
    CHECK(w1.x == w2.x);
    CHECK(w1.y == w2.y);
    CHECK(w1.z == w2.z);
}

TEST_CASE("conic parametrization: circle, distance-line conic, fiber conic") {
    // circle x^2 + y^2 = 1 through (1, 0)
    Conic circle{1, 0, 1, 0, 0, -1};
    auto par = conic_parametrize(circle, 1, 0);
    for (int t = -5; t <= 5; ++t) {
        auto q = par.at(t);
        REQUIRE(q.has_value());
        CHECK(circle.eval(q->first, q->second) == 0);
    }
    // the classical points (1-t^2, 2t)/(1+t^2) appear at parameter -1/t
    auto q = par.at(Rational(-1, 2)); // expects the t=2 classical point
    REQUIRE(q.has_value());
    CHECK(q->first == Rational(1 - 4, 1 + 4));
    CHECK(q->second == Rational(-2 * 2, 5) * -1);

    // z^2 = (a^2+1) x^2 + 2ab x + b^2 through (0, b): x(t) = 2b(a-t)/(t^2-a^2-1)
    Rational a(3, 2), b(7, 5);
    Conic lc{-(a * a + 1), 0, 1, -2 * a * b, 0, -b * b}; // vars (x, z)
    auto lpar = conic_parametrize(lc, 0, b);
    for (int ti = -4; ti <= 4; ++ti) {
        Rational t(ti);
        Rational denom = t * t - a * a - 1;
        if (denom == 0) continue;
        auto p = lpar.at(t);
        REQUIRE(p.has_value());
        CHECK(p->first == 2 * b * (a - t) / denom);
    }

    // mu^2 = 9 + 16 lambda^2 through (0, 3) at t = 1 gives (2/5, 17/5)
    Conic fib{-16, 0, 1, 0, 0, -9};
    auto fpar = conic_parametrize(fib, 0, 3);
    auto fp = fpar.at(1);
    REQUIRE(fp.has_value());
    CHECK(fp->first == Rational(2, 5));
    CHECK(fp->second == Rational(17, 5));
    CHECK(Rational(9) + 16 * fp->first * fp->first == fp->second * fp->second);

    // soundness on 100 sampled parameters
    std::mt19937_64 rng(37);
    int checked = 0;
    while (checked < 100) {
        Rational t = rand_nonzero(rng);
        auto pt = fpar.at(t);
        if (!pt) continue;
        CHECK(fib.eval(pt->first, pt->second) == 0);
        ++checked;
    }

    // degenerate conic rejected
    Conic degen{1, 0, -1, 0, 0, 0}; // x^2 - y^2 = 0
    CHECK_THROWS_AS(conic_parametrize(degen, 1, 1), DegenerateConic);
}
