#include "ratdist/twopoint.hpp"

#include <set>

#include "ratdist/enumerate.hpp"

namespace ratdist {

PythTriple pythagorean_point(const Rational& lambda, const Rational& p) {
    return {2 * lambda * p, lambda * (p * p - 1), lambda * (p * p + 1)};
}

namespace {

// Shift O to the origin and, when a = 0, swap the coordinate roles so the
// section formula applies; records how to undo both.
struct Frame {
    Rational a, b;
    bool swapped;
    Rational ox, oy;

    Frame(const TwoPointConfig& cfg) {
        ox = cfg.ox;
        oy = cfg.oy;
        Rational da = cfg.px - cfg.ox, db = cfg.py - cfg.oy;
        swapped = (da == 0);
        if (swapped) std::swap(da, db);
        a = da;
        b = db;
    }

    std::pair<Rational, Rational> ambient(const Rational& x, const Rational& y) const {
        Rational u = x, v = y;
        if (swapped) std::swap(u, v);
        return {u + ox, v + oy};
    }
};

Solution2 make_solution(const Frame& fr, const Rational& x, const Rational& y, const Rational& z,
                        const Rational& k) {
    Solution2 s;
    auto [qx, qy] = fr.ambient(x, y);
    s.qx = qx;
    s.qy = qy;
    s.z = z;
    s.fiber_k = k;
    s.d0 = boost::multiprecision::abs(z);
    s.d1 = boost::multiprecision::abs(z - k);
    s.k = s.d0 - s.d1;
    // exact re-verification against both defining equations
    if (x * x + y * y != z * z) throw Error("two-point: z^2 mismatch (defect)");
    Rational lhs = (x - fr.a) * (x - fr.a) + (y - fr.b) * (y - fr.b);
    if (lhs != (z - k) * (z - k)) throw Error("two-point: (z-k)^2 mismatch (defect)");
    s.degenerate = (s.d0 == 0 || s.d1 == 0);
    return s;
}

} // namespace

Solution2 section_point(const TwoPointConfig& cfg, const Rational& k) {
    Frame fr(cfg);
    if (k == 0) throw DegenerateParameter("section_point: k = 0");
    if (k == fr.b) throw DegenerateParameter("section_point: k = b");
    // x = a forces 2 lambda = a/p and k - b = a/p, so p = a/(k-b), lambda = a/(2p).
    Rational p = fr.a / (k - fr.b);
    Rational lambda = fr.a / (2 * p);
    PythTriple pt = pythagorean_point(lambda, p);
    return make_solution(fr, pt.x, pt.y, pt.z, k);
}

ConfocalConic confocal_conic(const TwoPointConfig& cfg, const Rational& k) {
    Frame fr(cfg);
    if (k == 0) throw DegenerateParameter("confocal_conic: k = 0");
    const Rational &a = fr.a, &b = fr.b;
    Rational delta = a * a + b * b - k * k;
    ConfocalConic cc;
    cc.delta = delta;
    // (2ax + 2by - delta)^2 - 4k^2 (x^2 + y^2) = 0, expanded
    cc.conic.xx = 4 * a * a - 4 * k * k;
    cc.conic.xy = 8 * a * b;
    cc.conic.yy = 4 * b * b - 4 * k * k;
    cc.conic.x1 = -4 * a * delta;
    cc.conic.y1 = -4 * b * delta;
    cc.conic.c0 = delta * delta;
    cc.degenerate = cc.conic.is_singular();
    return cc;
}

std::vector<Solution2> generate2(const TwoPointConfig& cfg, std::size_t count,
                                 std::uint64_t seed) {
    std::vector<Solution2> out;
    if (count == 0) return out;
    Frame fr(cfg);

    // Fiber parameters: a fixed backbone of half/quarter-integer ellipses,
    // then the rational walk with a canonical prefix and seed-shuffled tail.
    SignedRationalStream kstream(seed, 64, 64);
    std::set<std::pair<Rational, Rational>> seen;

    // rotating slope samples, approximately uniform in direction angle so
    // closed fibers get even arc coverage
    const Rational tset[] = {Rational(1, 12),  Rational(-1, 12),  Rational(1, 7),
                             Rational(-1, 7),  Rational(1, 4),    Rational(-1, 4),
                             Rational(4, 11),  Rational(-4, 11),  Rational(5, 11),
                             Rational(-5, 11), Rational(3, 5),    Rational(-3, 5),
                             Rational(3, 4),   Rational(-3, 4),   Rational(10, 11),
                             Rational(-10, 11),Rational(11, 10),  Rational(-11, 10),
                             Rational(4, 3),   Rational(-4, 3),   Rational(5, 3),
                             Rational(-5, 3),  Rational(19, 9),   Rational(-19, 9),
                             Rational(14, 5),  Rational(-14, 5),  Rational(4),
                             Rational(-4),     Rational(61, 9),   Rational(-61, 9),
                             Rational(184, 9), Rational(-184, 9), Rational(1),
                             Rational(-1)};
    const std::size_t tset_n = sizeof(tset) / sizeof(tset[0]);
    std::size_t fiber_index = 0;

    // backbone of half- and quarter-integer fiber parameters first: the large
    // ellipses sweep the far annuli that the Stern-Brocot walk reaches late
    std::vector<Rational> backbone;
    for (int m = 3; m <= 16; ++m) {
        backbone.push_back(Rational(m, 2));
        backbone.push_back(Rational(-m, 2));
    }
    for (int m : {17, 19, 21, 23}) {
        backbone.push_back(Rational(m, 4));
        backbone.push_back(Rational(-m, 4));
    }
    std::size_t backbone_pos = 0;

    // Emission favours spatial spread: a point claiming an untouched cell of
    // the internal grid goes out first; each fiber always contributes a
    // couple of points so the fiber parameters stay diverse too.
    const double cell_w = 0.2, span = 6.0;
    const int cells = static_cast<int>(2 * span / cell_w);
    std::vector<bool> covered(static_cast<std::size_t>(cells) * cells, false);
    auto cell_index = [&](const Rational& qx, const Rational& qy) -> long {
        double x = static_cast<double>(num(qx)) / static_cast<double>(den(qx));
        double y = static_cast<double>(num(qy)) / static_cast<double>(den(qy));
        if (x < -span || x >= span || y < -span || y >= span) return -1;
        int i = static_cast<int>((x + span) / cell_w);
        int j = static_cast<int>((y + span) / cell_w);
        return static_cast<long>(i) * cells + j;
    };

    while (out.size() < count) {
        Rational k;
        if (backbone_pos < backbone.size()) {
            k = backbone[backbone_pos++];
        } else {
            k = kstream.next();
        }
        if (k == 0 || k == fr.b) continue;
        ConfocalConic cc = confocal_conic(cfg, k);
        if (cc.degenerate) continue;

        Solution2 anchor;
        try {
            anchor = section_point(cfg, k);
        } catch (const DegenerateParameter&) {
            continue;
        }
        ++fiber_index;
        // anchor in frame coordinates
        Rational ax = fr.swapped ? anchor.qy - fr.oy : anchor.qx - fr.ox;
        Rational ay = fr.swapped ? anchor.qx - fr.ox : anchor.qy - fr.oy;

        ConicParametrization par(cc.conic, ax, ay);

        std::vector<Solution2> candidates;
        candidates.push_back(anchor);
        for (std::size_t i = 0; i < tset_n; ++i) {
            auto xy = par.at(tset[(fiber_index + 3 * i) % tset_n]);
            if (!xy) continue;
            auto [x, y] = *xy;
            // points of C_k automatically satisfy both quadrics with
            // z = (2ax + 2by - delta) / (2k)
            Rational z = (2 * fr.a * x + 2 * fr.b * y - cc.delta) / (2 * k);
            candidates.push_back(make_solution(fr, x, y, z, k));
        }

        std::size_t emitted = 0;
        for (const Solution2& s : candidates) {
            if (out.size() == count) break;
            long cell = cell_index(s.qx, s.qy);
            bool fresh = cell >= 0 && !covered[cell];
            if (!fresh && emitted >= 2) continue; // spread over later fibers
            if (!seen.insert({s.qx, s.qy}).second) continue;
            if (cell >= 0) covered[cell] = true;
            out.push_back(s);
            ++emitted;
        }
    }
    return out;
}

std::vector<LinePoint> line_points(const Rational& ox, const Rational& oy, const Rational& a,
                                   const Rational& b, std::size_t count) {
    // shift O to the origin: y' = a x' + b' with b' = a ox + b - oy
    Rational bs = a * ox + b - oy;
    if (bs == 0) throw LineThroughOrigin();

    std::vector<LinePoint> out;
    std::set<Rational> seen;
    RationalEnumerator en;
    // t = 0 first (the foot point), then the positive enumeration with signs
    std::vector<Rational> params = {0};
    while (out.size() < count) {
        for (const Rational& t : params) {
            Rational denom = t * t - a * a - 1;
            if (denom == 0) continue;
            Rational x = 2 * bs * (a - t) / denom;
            Rational y = a * x + bs;
            Rational z = bs + t * x; // z = b' + t x on the section line
            if (x * x + y * y != z * z) throw Error("line_points: verification failed (defect)");
            if (!seen.insert(x).second) continue;
            out.push_back({x + ox, y + oy, boost::multiprecision::abs(z)});
            if (out.size() == count) break;
        }
        Rational q = en.next();
        params = {q, -q};
    }
    return out;
}

} // namespace ratdist
