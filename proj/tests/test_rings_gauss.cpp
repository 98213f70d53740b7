#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ratdist/rings.hpp"

using namespace ratdist;

TEST_CASE("gaussian arithmetic: gcd, sqrt, squares in Q(i)") {
    GaussianInt a{3, 4}, b{1, 2};
    GaussianInt g = gaussian_gcd(a * b, b * GaussianInt{7, 0});
    CHECK(gaussian_divides(b, GaussianInt{b.re * 3, b.im * 3}));
    CHECK(gaussian_divides(g, a * b));

    CHECK(gaussian_sqrt(GaussianInt{3, 4}) == GaussianInt{2, 1});
    CHECK(gaussian_sqrt(GaussianInt{0, 2}) == GaussianInt{1, 1});
    CHECK(!gaussian_sqrt(GaussianInt{1, 1}).has_value());
    CHECK(gaussian_sqrt(GaussianInt{-4, 0}).has_value()); // (2i)^2

    CHECK(gaussian_is_square_in_field(GaussianInt{3, 4}, GaussianInt{1, 0}));
    CHECK(gaussian_is_square_in_field(GaussianInt{-1, 0}, GaussianInt{1, 0}));
    CHECK(!gaussian_is_square_in_field(GaussianInt{2, 0}, GaussianInt{3, 0}));
    CHECK(!gaussian_is_square_in_field(GaussianInt{0, 1}, GaussianInt{1, 0})); // i not a square
}

TEST_CASE("gaussian_decompose: alpha = 1+i (norm nonsquare)") {
    GaussianSystem sys = gaussian_decompose(GaussianInt{1, 1});
    CHECK(sys.d1 == GaussianInt{1, 1});
    CHECK(sys.d2 == GaussianInt{1, -1});
    CHECK(sys.r == GaussianInt{1, 0});
    CHECK(sys.s == GaussianInt{0, 0});
    CHECK(sys.u == GaussianInt{0, 0});
    CHECK(sys.v == GaussianInt{0, 1});
}

TEST_CASE("gaussian_decompose: alpha = 3+4i (square norm, rho real)") {
    GaussianSystem sys = gaussian_decompose(GaussianInt{3, 4});
    CHECK(sys.d1 == GaussianInt{3, 0});
    CHECK(sys.d2 == GaussianInt{2, 0});
    // r = s = xi with xi^2 = 3+4i
    CHECK(sys.r * sys.r == GaussianInt{3, 4});
    CHECK(sys.d1 * sys.r * sys.r - sys.d2 * sys.s * sys.s == GaussianInt{3, 4});
}

TEST_CASE("gaussian_decompose: alpha = 2i and random alphas satisfy both equations") {
    GaussianSystem s2i = gaussian_decompose(GaussianInt{0, 2});
    CHECK(s2i.d1 * s2i.r * s2i.r - s2i.d2 * s2i.s * s2i.s == GaussianInt{0, 2});
    CHECK(s2i.d1 * s2i.u * s2i.u - s2i.d2 * s2i.v * s2i.v == GaussianInt{0, -2});

    std::mt19937_64 rng(67);
    int done = 0;
    while (done < 200) {
        long long re = static_cast<long long>(rng() % 101) - 50;
        long long im = static_cast<long long>(rng() % 101) - 50;
        if (re == 0 && im == 0) continue;
        GaussianInt alpha{re, im};
        GaussianSystem sys = gaussian_decompose(alpha);
        CHECK(sys.d1 * sys.r * sys.r - sys.d2 * sys.s * sys.s == alpha);
        CHECK(sys.d1 * sys.u * sys.u - sys.d2 * sys.v * sys.v == alpha.conj());
        CHECK(!gaussian_is_square_in_field(sys.d2, sys.d1));
        ++done;
    }
}

TEST_CASE("gaussian_orbit: alpha = 3+4i base solution and plane point") {
    GaussianSystem sys = gaussian_decompose(GaussianInt{3, 4});
    GaussianOrbitReport rep = gaussian_orbit(sys, 12, 200);
    REQUIRE(!rep.solutions.empty());

    const GaussianOrbitSolution& base = rep.solutions[0];
    CHECK(base.w1 == GaussianInt{9, 12});
    CHECK(base.w2 == GaussianInt{9, -12});
    CHECK(base.z * base.z == GaussianInt{225, 0});
    REQUIRE(base.x.has_value());
    CHECK(*base.x == GaussianInt{9, 0});
    CHECK(*base.y == GaussianInt{12, 0});

    CHECK(rep.automorph_found);
    CHECK(rep.A * rep.A - sys.d1 * sys.d2 * rep.B * rep.B == GaussianInt{1, 0});
    CHECK(rep.solutions.size() >= 10);
    for (const auto& s : rep.solutions) {
        CHECK(sys.d1 * s.r * s.r - sys.d2 * s.s * s.s == sys.alpha);
        CHECK(sys.d1 * s.u * s.u - sys.d2 * s.v * s.v == sys.alpha.conj());
        CHECK(s.z * s.z == s.w1 * s.w2);
        if (s.x) {
            GaussianInt x = *s.x, y = *s.y;
            CHECK(x * x + y * y == s.z * s.z);
        }
    }
}

TEST_CASE("gaussian_orbit: alpha = 1+i w2 = 0 base fails the parity filter") {
    GaussianSystem sys = gaussian_decompose(GaussianInt{1, 1});
    GaussianOrbitReport rep = gaussian_orbit(sys, 12, 200);
    REQUIRE(!rep.solutions.empty());
    CHECK(rep.solutions[0].w2.is_zero());
    CHECK(!rep.solutions[0].x.has_value()); // (1+i)/2 is not integral
    CHECK(rep.solutions.size() >= 10);
    for (const auto& s : rep.solutions) {
        CHECK(sys.d1 * s.r * s.r - sys.d2 * s.s * s.s == sys.alpha);
        CHECK(sys.d1 * s.u * s.u - sys.d2 * s.v * s.v == sys.alpha.conj());
    }
}

TEST_CASE("gaussian_orbit: purely imaginary rho branch (alpha = 9i)") {
    GaussianSystem sys = gaussian_decompose(GaussianInt{0, 9}); // 9i = i * 3^2
    CHECK(sys.d1.re == 0);
    CHECK(sys.d2.re == 0);
    GaussianOrbitReport rep = gaussian_orbit(sys, 6, 200);
    CHECK(rep.automorph_found);
    CHECK(rep.solutions.size() >= 5);
    for (const auto& s : rep.solutions) {
        CHECK(sys.d1 * s.r * s.r - sys.d2 * s.s * s.s == sys.alpha);
        CHECK(sys.d1 * s.u * s.u - sys.d2 * s.v * s.v == sys.alpha.conj());
    }
}

TEST_CASE("gaussian_orbit truncates to the base solution when the bound is tiny") {
    GaussianSystem sys = gaussian_decompose(GaussianInt{3, 4}); // d1 d2 = 6
    GaussianOrbitReport rep = gaussian_orbit(sys, 10, 1);       // no automorph in the box
    CHECK(!rep.automorph_found);
    CHECK(rep.solutions.size() == 1);
}

TEST_CASE("identity automorph returns the base solution") {
    GaussianSystem sys = gaussian_decompose(GaussianInt{3, 4});
    // applying (A, B) = (1, 0) to the base pair changes nothing
    GaussianInt r = GaussianInt{1, 0} * sys.r + sys.d2 * GaussianInt{0, 0} * sys.s;
    CHECK(r == sys.r);
}
