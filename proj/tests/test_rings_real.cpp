#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ratdist/rings.hpp"

using namespace ratdist;

namespace {

// independent continued-fraction oracle: smallest (x, y), y >= 1, with
// x^2 - d y^2 = +-1, by direct ascending search
std::pair<BigInt, BigInt> pell_brute(long long d) {
    for (BigInt y = 1;; ++y) {
        BigInt t = BigInt(d) * y * y;
        for (const BigInt& x2 : {BigInt(t + 1), BigInt(t - 1)}) {
            if (x2 > 0 && is_perfect_square(x2)) return {isqrt(x2), y};
        }
    }
}

} // namespace

TEST_CASE("fundamental units match the brute-force Pell oracle") {
    RealQuadInt u2 = fundamental_unit(2);
    CHECK(u2.a == 1);
    CHECK(u2.b == 1);

    RealQuadInt u3 = fundamental_unit(3);
    CHECK(u3.a == 2);
    CHECK(u3.b == 1);

    RealQuadInt u5 = fundamental_unit(5);
    CHECK(u5.a == 2);
    CHECK(u5.b == 1);
    CHECK(u5.norm() == -1);

    for (long long d : {2, 3, 5, 6, 7, 10, 11, 13, 14, 19, 31, 46}) {
        RealQuadInt u = fundamental_unit(d);
        auto [x, y] = pell_brute(d);
        CHECK(u.a == x);
        CHECK(u.b == y);
        CHECK((u.norm() == 1 || u.norm() == -1));
    }

    CHECK_THROWS_AS(fundamental_unit(9), PerfectSquareDelta);
}

TEST_CASE("realquad_line_points: worked delta = 2 values and exactness") {
    auto pts = realquad_line_points(3, 4, 2, 8);
    REQUIRE(pts.size() == 8);

    // omega = 1 gives the degenerate point Q = P
    CHECK(pts[0].degenerate);
    CHECK(pts[0].dp.is_zero());

    // omega = (1+sqrt2)^2 = 3+2sqrt2 gives t = 4+6sqrt2, s = 9
    const RealQuadLinePoint& w = pts[1];
    CHECK(w.omega == RealQuadInt(3, 2, 2));
    CHECK(w.s == RealQuadInt(9, 0, 2));
    CHECK(w.qy == RealQuadInt(4, 6, 2));

    for (const auto& p : pts) {
        // unit condition and the defining identity
        BigInt n = p.omega.norm();
        CHECK((n == 1 || n == -1));
        CHECK((p.omega.a - 1) % 2 == 0);
        CHECK(p.omega.b % 2 == 0);
        RealQuadInt a2{9, 0, 2};
        CHECK(a2 + p.dp * p.dp == p.s * p.s);
    }

    // next orbit point is verified too
    CHECK(pts[2].omega == RealQuadInt(3, 2, 2) * RealQuadInt(3, 2, 2));

    // a = 0 swaps roles
    auto sw = realquad_line_points(0, 5, 3, 3);
    CHECK(sw.size() == 3);
    for (const auto& p : sw) {
        RealQuadInt a2{25, 0, 3};
        CHECK(a2 + p.dp * p.dp == p.s * p.s);
    }
}

TEST_CASE("realquad line points for delta in {2,3,5}: 50 verified each") {
    for (long long d : {2LL, 3LL, 5LL}) {
        auto pts = realquad_line_points(3, 4, d, 50);
        CHECK(pts.size() == 50);
        for (const auto& p : pts) {
            RealQuadInt a2{9, 0, d};
            CHECK(a2 + p.dp * p.dp == p.s * p.s);
        }
    }
}

TEST_CASE("realquad_confocal_extend: the worked delta = 2 seed extends") {
    auto pts = realquad_line_points(3, 4, 2, 3);
    const RealQuadLinePoint& seed = pts[1]; // t = 4+6sqrt2, s = 9
    auto ext = realquad_confocal_extend(3, 4, 2, seed, 2);
    REQUIRE(ext.size() >= 1);
    for (const auto& cp : ext) {
        // distances verified against the construction foci (0, b), (a, b)
        RealQuadInt fx1 = cp.x, fy1 = cp.y - RealQuadInt{4, 0, 2};
        CHECK(fx1 * fx1 + fy1 * fy1 == cp.d1 * cp.d1);
        RealQuadInt fx2 = cp.x - RealQuadInt{3, 0, 2};
        CHECK(fx2 * fx2 + fy1 * fy1 == cp.d2 * cp.d2);
    }

    // count = 0 is empty
    CHECK(realquad_confocal_extend(3, 4, 2, seed, 0).empty());

    // a degenerate seed (on the focal axis) is skipped with an empty result
    CHECK(realquad_confocal_extend(3, 4, 2, pts[0], 2).empty());
}

TEST_CASE("confocal extension on other deltas") {
    for (long long d : {3LL, 5LL}) {
        auto pts = realquad_line_points(3, 4, d, 3);
        try {
            auto ext = realquad_confocal_extend(3, 4, d, pts[1], 1);
            for (const auto& cp : ext) {
                RealQuadInt fy = cp.y - RealQuadInt{4, 0, d};
                CHECK(cp.x * cp.x + fy * fy == cp.d1 * cp.d1);
            }
        } catch (const AutomorphNotFound&) {
            // allowed: bounded search is explicit about failure
        }
    }
}
