#include "ratdist/search4.hpp"

#include <cmath>
#include <cstdint>
#include <numeric>

namespace ratdist {

namespace {

bool fits_int64(const Rational& q) {
    return num(q) >= INT64_MIN / 2 && num(q) <= INT64_MAX / 2 && den(q) <= INT64_MAX / 2;
}

// exact integer sqrt test on int64
bool is_square_i64(long long v, long long& root) {
    if (v < 0) return false;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    root = r;
    return r * r == v;
}

} // namespace

std::vector<Search4Hit> search4(const std::vector<PlanePoint>& pts, long long height) {
    // three points run the same harness as a consistency mode
    if (pts.size() != 3 && pts.size() != 4)
        throw Error("search4: three or four points expected");
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw CoincidentPoints("search4: repeated points");

    // pairwise rational Gram; else empty by the squared-distance criterion
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            QuadExt d2 = (pts[i] - pts[j]).norm_sq();
            if (!d2.is_rational()) return {};
        }

    Triangle t = Triangle::from_points(pts[0], pts[1], pts[2]);
    GramFrame g = gram_frame(t, 0);
    if (g.collinear()) throw Collinear("search4: first three points are aligned");
    JLattice lat = orthogonal_basis(g, t);

    // lattice coordinates of the four points
    std::vector<std::pair<Rational, Rational>> coords;
    for (const PlanePoint& p : pts) {
        auto tu = j_membership(p, lat);
        if (!tu) return {}; // outside the rational-squared-distance lattice
        coords.push_back(*tu);
    }

    const Rational P = lat.p, R = lat.r;
    bool fast = fits_int64(P) && fits_int64(R) && den(P) == 1 && den(R) == 1;
    long long pi = 0, ri = 0;
    std::vector<std::array<long long, 4>> ci; // t_num, t_den, u_num, u_den
    if (fast) {
        pi = static_cast<long long>(num(P));
        ri = static_cast<long long>(num(R));
        long long cmax = 0;
        for (auto& [ct, cu] : coords) {
            if (!fits_int64(ct) || !fits_int64(cu) || den(ct) != 1 || den(cu) != 1) {
                fast = false;
                break;
            }
            long long a = static_cast<long long>(num(ct)), b = static_cast<long long>(num(cu));
            cmax = std::max({cmax, std::abs(a), std::abs(b)});
            ci.push_back({a, 1, b, 1});
        }
        // no overflow in p*at^2 + r*au^2 with |at| <= H^2 (1 + cmax)
        long double amax = static_cast<long double>(height) * height * (1 + cmax);
        if (fast && (static_cast<long double>(pi) + ri) * amax * amax > 8e18L) fast = false;
    }

    // reduced rationals of height <= H
    std::vector<std::pair<long long, long long>> heights; // (num, den), den >= 1
    for (long long q = 1; q <= height; ++q)
        for (long long n = -height; n <= height; ++n)
            if (std::gcd(std::abs(n), q) == 1) heights.push_back({n, q});

    std::vector<Search4Hit> hits;

    auto check_exact = [&](const Rational& tq, const Rational& uq) {
        std::vector<Rational> dists;
        for (auto& [ct, cu] : coords) {
            Rational d2 = P * (tq - ct) * (tq - ct) + R * (uq - cu) * (uq - cu);
            auto d = rational_sqrt(d2);
            if (!d) return;
            dists.push_back(*d);
        }
        Search4Hit hit;
        hit.t = tq;
        hit.u = uq;
        hit.q = lat.base + QuadExt(tq) * lat.v1 + QuadExt(uq) * lat.v2;
        hit.dists = dists;
        hits.push_back(hit);
    };

    if (fast) {
        // d^2 = (p (t-ti)^2 + r (u-ui)^2); with t = n1/q1, u = n2/q2 the
        // numerator over (q1 q2)^2 must be a perfect square
        for (auto& [n1, q1] : heights) {
            for (auto& [n2, q2] : heights) {
                bool all = true;
                for (auto& c : ci) {
                    long long at = n1 * q2 - c[0] * q1 * q2; // (t - ti) * q1 q2
                    long long au = n2 * q1 - c[2] * q1 * q2;
                    long long val = pi * at * at + ri * au * au;
                    long long root;
                    if (!is_square_i64(val, root)) {
                        all = false;
                        break;
                    }
                }
                if (all) check_exact(Rational(n1, q1), Rational(n2, q2));
            }
        }
    } else {
        for (auto& [n1, q1] : heights)
            for (auto& [n2, q2] : heights) check_exact(Rational(n1, q1), Rational(n2, q2));
    }
    return hits;
}

} // namespace ratdist
