#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ratdist/deciders.hpp"
#include "ratdist/threepoint.hpp"

using namespace ratdist;

namespace {

PlanePoint rp(long long x, long long y) { return {QuadExt(Rational(x)), QuadExt(Rational(y))}; }

Rational rand_rat(std::mt19937_64& rng) {
    long long n = static_cast<long long>(rng() % 19) - 9;
    long long d = static_cast<long long>(rng() % 4) + 1;
    return Rational(n, d);
}

// random triangle: mostly rational vertices, sometimes scaled by sqrt(d)
Triangle rand_triangle(std::mt19937_64& rng) {
    while (true) {
        Rational ax = rand_rat(rng), ay = rand_rat(rng);
        Rational bx = rand_rat(rng), by = rand_rat(rng);
        Rational cx = rand_rat(rng), cy = rand_rat(rng);
        int mode = static_cast<int>(rng() % 3);
        long long d = (rng() % 2) ? 2 : 5;
        auto lift = [&](const Rational& v) {
            if (mode == 1) return QuadExt(0, v, d); // multiply everything by sqrt(d)
            return QuadExt(v);
        };
        PlanePoint A(lift(ax), lift(ay)), B(lift(bx), lift(by)), C(lift(cx), lift(cy));
        if (mode == 2) C = PlanePoint(QuadExt(0, cx, d), QuadExt(cy)); // genuinely mixed
        if (A == B || A == C || B == C) continue;
        return Triangle::from_points(A, B, C);
    }
}

} // namespace

TEST_CASE("decide_square_density: named instances") {
    Verdict v1 = decide_square_density(Triangle::from_points(rp(0, 0), rp(3, 0), rp(0, 4)));
    CHECK(v1.dense);

    QuadExt diag_sq(Rational(3, 2), Rational(1, 2), 5);
    Verdict v2 =
        decide_square_density(Triangle::from_sides_sq(QuadExt(1), QuadExt(1), diag_sq));
    CHECK(!v2.dense);
    CHECK(v2.reason == Reason::GramIrrational);
    REQUIRE(v2.certificate.irrational_entry.has_value());
    CHECK(!v2.certificate.irrational_entry->is_rational());

    // (0,0), (sqrt3, 0), (0, sqrt5) via squared sides: Gram diag(3,5)
    Verdict v3 = decide_square_density(Triangle::from_sides_sq(QuadExt(3), QuadExt(5), QuadExt(8)));
    CHECK(v3.dense);
}

TEST_CASE("decide_rational_density: named instances") {
    // (0, (1,0), (0, sqrt3)): form x^2 + 3y^2 represents a square
    Verdict v1 = decide_rational_density(Triangle::from_sides_sq(QuadExt(1), QuadExt(3), QuadExt(4)));
    CHECK(v1.dense);
    REQUIRE(v1.certificate.witness.has_value());
    const ConicPoint& w = *v1.certificate.witness;
    CHECK(w.A * w.x * w.x + w.B * w.y * w.y == w.z * w.z);

    // (0,0), (sqrt3,0), (0,sqrt5): fails exactly at places {3, 5}
    Verdict v2 = decide_rational_density(Triangle::from_sides_sq(QuadExt(3), QuadExt(5), QuadExt(8)));
    CHECK(!v2.dense);
    CHECK(v2.reason == Reason::SquareNotRepresented);
    REQUIRE(v2.certificate.failing.size() == 2);
    CHECK(v2.certificate.failing[0].prime == 3);
    CHECK(v2.certificate.failing[1].prime == 5);

    Verdict v3 = decide_rational_density(Triangle::from_points(rp(0, 0), rp(3, 0), rp(0, 4)));
    CHECK(v3.dense);

    QuadExt diag_sq(Rational(3, 2), Rational(1, 2), 5);
    Verdict v4 =
        decide_rational_density(Triangle::from_sides_sq(QuadExt(1), QuadExt(1), diag_sq));
    CHECK(!v4.dense);
    CHECK(v4.reason == Reason::GramIrrational);
}

TEST_CASE("check_condition_iv: named instances and postcondition") {
    Verdict v1 = check_condition_iv(Triangle::from_sides_sq(QuadExt(1), QuadExt(3), QuadExt(4)));
    CHECK(v1.dense);

    Verdict v2 = check_condition_iv(Triangle::from_sides_sq(QuadExt(3), QuadExt(5), QuadExt(8)));
    CHECK(!v2.dense);

    Verdict v3 = check_condition_iv(Triangle::from_points(rp(0, 0), rp(1, 0), rp(1, 1)));
    CHECK(v3.dense);
    IwasawaData d = iwasawa_data(gram_frame(Triangle::from_points(rp(0, 0), rp(1, 0), rp(1, 1)), 0));
    CHECK(d.r == 1);
    CHECK(d.s == 1);
    CHECK(d.xi == 1);
}

TEST_CASE("conditions (ii) and (iv) agree on 500 random triangles") {
    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 500) {
        Triangle t = rand_triangle(rng);
        Verdict a, b;
        try {
            a = decide_rational_density(t);
            b = check_condition_iv(t);
        } catch (const CoincidentPoints&) {
            continue;
        }
        CHECK(a.dense == b.dense);
        ++done;
    }
}

TEST_CASE("rational density implies squared-distance density") {
    std::mt19937_64 rng(59);
    int done = 0;
    while (done < 300) {
        Triangle t = rand_triangle(rng);
        Verdict a, b;
        try {
            a = decide_rational_density(t);
            b = decide_square_density(t);
        } catch (const CoincidentPoints&) {
            continue;
        }
        if (a.dense) CHECK(b.dense);
        ++done;
    }
}

TEST_CASE("verdicts invariant under rational admissible transforms") {
    std::mt19937_64 rng(61);
    int done = 0;
    while (done < 60) {
        Triangle t = rand_triangle(rng);
        // random rational A in GL2, translation u
        Rational m00 = rand_rat(rng), m01 = rand_rat(rng), m10 = rand_rat(rng),
                 m11 = rand_rat(rng);
        if (m00 * m11 - m01 * m10 == 0) continue;
        Rational ux = rand_rat(rng), uy = rand_rat(rng);
        bool verdict_before;
        try {
            verdict_before = decide_rational_density(t).dense;
        } catch (const CoincidentPoints&) {
            continue;
        }
        if (!t.has_coordinates()) continue;
        std::array<PlanePoint, 3> vs;
        bool ok = true;
        for (int i = 0; i < 3; ++i) {
            const PlanePoint& p = t.vertices()[i];
            QuadExt nx = QuadExt(m00) * p.x + QuadExt(m01) * p.y + QuadExt(ux);
            QuadExt ny = QuadExt(m10) * p.x + QuadExt(m11) * p.y + QuadExt(uy);
            vs[i] = PlanePoint(nx, ny);
        }
        if (vs[0] == vs[1] || vs[0] == vs[2] || vs[1] == vs[2]) ok = false;
        if (!ok) continue;
        Triangle t2 = Triangle::from_points(vs[0], vs[1], vs[2]);
        CHECK(decide_rational_density(t2).dense == verdict_before);
        ++done;
    }
}

TEST_CASE("verdicts invariant under vertex permutation") {
    std::mt19937_64 rng(71);
    int done = 0;
    while (done < 60) {
        Triangle t = rand_triangle(rng);
        bool base;
        try {
            base = decide_rational_density(t).dense;
        } catch (const CoincidentPoints&) {
            continue;
        }
        const auto& v = t.vertices();
        int idx[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& pi : idx) {
            Triangle perm = Triangle::from_points(v[pi[0]], v[pi[1]], v[pi[2]]);
            CHECK(decide_rational_density(perm).dense == base);
            CHECK(decide_square_density(perm).dense == decide_square_density(t).dense);
        }
        ++done;
    }
}

TEST_CASE("dense witnesses feed the three-point generator") {
    // certificate re-verification: a dense verdict's data yields actual solutions
    Triangle t = Triangle::from_points(rp(0, 0), rp(3, 0), rp(0, 4));
    Verdict v = decide_rational_density(t);
    REQUIRE(v.dense);
    Generate3Report rep = generate3(t, 1, 2, 1);
    CHECK(!rep.solutions.empty());
}

TEST_CASE("is_admissible_transform") {
    PlanePoint zero = rp(0, 0);
    Matrix2 identity{QuadExt(1), QuadExt(0), QuadExt(0), QuadExt(1)};
    CHECK(is_admissible_transform(identity, zero));
    CHECK(is_admissible_transform(identity, rp(5, -7)));

    // sqrt2 * I: lambda^2 = 2 = 1 + 1
    Matrix2 s2{QuadExt(0, 1, 2), QuadExt(0), QuadExt(0), QuadExt(0, 1, 2)};
    CHECK(is_admissible_transform(s2, zero));

    // diag(1, sqrt3): fixes (0,0) and (1,0), sends (0,1) to (0, sqrt3); not admissible
    Matrix2 d3{QuadExt(1), QuadExt(0), QuadExt(0), QuadExt(0, 1, 3)};
    CHECK(!is_admissible_transform(d3, zero));

    // sqrt3 * I: lambda^2 = 3 has the prime 3 = 3 mod 4
    Matrix2 s3{QuadExt(0, 1, 3), QuadExt(0), QuadExt(0), QuadExt(0, 1, 3)};
    CHECK(!is_admissible_transform(s3, zero));

    // sqrt5 * rational matrix: 5 = 1 + 4
    Matrix2 s5{QuadExt(0, 2, 5), QuadExt(0, 1, 5), QuadExt(0, -1, 5), QuadExt(0, 3, 5)};
    CHECK(is_admissible_transform(s5, zero));

    Matrix2 singular{QuadExt(1), QuadExt(2), QuadExt(2), QuadExt(4)};
    CHECK_THROWS_AS(is_admissible_transform(singular, zero), SingularMatrix);

    // mixed entry (1 + sqrt2) cannot be lambda * rational
    Matrix2 mixed{QuadExt(Rational(1), Rational(1), 2), QuadExt(0), QuadExt(0), QuadExt(1)};
    CHECK(!is_admissible_transform(mixed, zero));
}
