#include "ratdist/threepoint.hpp"

#include <set>

#include "ratdist/enumerate.hpp"

namespace ratdist {

CubicPoint make_cubic_point(const Rational& K, const Rational& Kp, const Rational& H) {
    BigInt l = lcm(lcm(den(K), den(Kp)), den(H));
    BigInt a = num(K) * (l / den(K));
    BigInt b = num(Kp) * (l / den(Kp));
    BigInt c = num(H) * (l / den(H));
    BigInt g = gcd(gcd(abs_int(a), abs_int(b)), abs_int(c));
    if (g == 0) throw Error("make_cubic_point: zero vector");
    a /= g;
    b /= g;
    c /= g;
    BigInt lead = a != 0 ? a : (b != 0 ? b : c);
    if (lead < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    return CubicPoint{a, b, c};
}

ThreePointFrame frame(const Triangle& t, int origin_index) {
    GramFrame g = gram_frame(t, origin_index);
    if (g.collinear()) throw Collinear();
    Verdict v = decide_rational_density(t);
    if (!v.dense) throw NotAdmissible("triangle is not admissible");

    ThreePointFrame f;
    f.p = g.p.rational();
    f.pprime = g.pprime.rational();
    f.s = g.s.rational();
    f.r = (g.deltasq / g.p).rational();
    f.c = (g.s / g.p).rational();
    f.triangle = t;
    f.origin = origin_index;
    if (f.pprime != f.p * f.c * f.c + f.r) throw Error("frame: p' != p c^2 + r (defect)");
    if (t.has_coordinates()) f.lattice = orthogonal_basis(g, t);
    return f;
}

namespace {

bool good_fiber(const ThreePointFrame& f, const Rational& lambda, const Rational& mu) {
    if (mu == 0 || lambda == 0) return false;
    if (f.c * lambda == 1) return false;
    if (f.p == f.pprime && (f.c + 1) * lambda == 1) return false;
    return true;
}

FiberPoint make_fiber(const ThreePointFrame& f, const Rational& lambda, const Rational& mu) {
    FiberPoint fp;
    fp.lambda = lambda;
    fp.mu = mu;
    fp.eta = f.p * f.c + f.r * lambda;
    if (mu * mu != f.p + f.r * lambda * lambda) throw Error("fiber: not on the conic (defect)");
    return fp;
}

} // namespace

std::vector<FiberPoint> fiber_points(const ThreePointFrame& f, std::size_t count,
                                     std::uint64_t seed) {
    std::vector<FiberPoint> out;
    if (count == 0) return out;
    std::set<std::pair<Rational, Rational>> seen;

    auto push = [&](const Rational& lambda, const Rational& mu) {
        if (!good_fiber(f, lambda, mu)) return;
        if (!seen.insert({lambda, mu}).second) return;
        out.push_back(make_fiber(f, lambda, mu));
    };

    if (auto rsq = rational_sqrt(f.r)) {
        // r a perfect square: S splits, (mu - rho l)(mu + rho l) = p
        Rational rho = *rsq;
        SignedRationalStream ws(seed);
        while (out.size() < count) {
            Rational w = ws.next();
            if (w == 0) continue;
            Rational lambda = (f.p / w - w) / (2 * rho);
            Rational mu = (f.p / w + w) / 2;
            push(lambda, mu);
            push(lambda, -mu);
        }
        return out;
    }

    // base point from the admissibility witness p X^2 + r Y^2 = Z^2
    ConicPoint w = conic_point(f.p, f.r);
    Rational cp = squarefree_part(f.p).second, cr = squarefree_part(f.r).second;
    Rational X = Rational(w.x) / cp, Y = Rational(w.y) / cr, Z(w.z);
    if (X == 0) throw Error("fiber_points: witness has X=0 but r is not a square (defect)");
    Rational l0 = Y / X, m0 = Z / X;

    Conic S;
    S.xx = -f.r; // mu^2 - r lambda^2 - p = 0 with (x, y) = (lambda, mu)
    S.xy = 0;
    S.yy = 1;
    S.x1 = 0;
    S.y1 = 0;
    S.c0 = -f.p;
    ConicParametrization par(S, l0, m0);

    SignedRationalStream ts(seed);
    while (out.size() < count) {
        Rational t = ts.next();
        auto lm = par.at(t);
        if (!lm) continue;
        push(lm->first, lm->second);
        push(lm->first, -lm->second);
    }
    return out;
}

CubicFiber::CubicFiber(const ThreePointFrame& f, const FiberPoint& fp)
    : p_(f.p), pp_(f.pprime), c_(f.c), r_(f.r), fp_(fp) {
    if (fp.mu * fp.mu != p_ + r_ * fp.lambda * fp.lambda)
        throw Error("CubicFiber: fiber point not on S");
    if (fp.eta != p_ * c_ + r_ * fp.lambda) throw Error("CubicFiber: eta mismatch");
}

Rational CubicFiber::eval(const CubicPoint& pt) const {
    Rational K(pt.K), Kp(pt.Kp), H(pt.H);
    const Rational &mu = fp_.mu, &eta = fp_.eta;
    return (p_ * H * H - K * K) * (eta * H - mu * Kp) -
           (pp_ * H * H - Kp * Kp) * (p_ * H - mu * K);
}

std::array<Rational, 3> CubicFiber::grad(const CubicPoint& pt) const {
    Rational K(pt.K), Kp(pt.Kp), H(pt.H);
    const Rational &mu = fp_.mu, &eta = fp_.eta;
    Rational dK = -2 * K * (eta * H - mu * Kp) + mu * (pp_ * H * H - Kp * Kp);
    Rational dKp = -mu * (p_ * H * H - K * K) + 2 * Kp * (p_ * H - mu * K);
    Rational dH = 2 * p_ * H * (eta * H - mu * Kp) + eta * (p_ * H * H - K * K) -
                  2 * pp_ * H * (p_ * H - mu * K) - p_ * (pp_ * H * H - Kp * Kp);
    return {dK, dKp, dH};
}

CubicPoint CubicFiber::N() const { return make_cubic_point(p_, fp_.eta, fp_.mu); }

namespace {

Rational dot3(const std::array<Rational, 3>& g, const CubicPoint& q) {
    return g[0] * Rational(q.K) + g[1] * Rational(q.Kp) + g[2] * Rational(q.H);
}

CubicPoint combine(const Rational& u, const CubicPoint& P, const Rational& v,
                   const CubicPoint& Q) {
    return make_cubic_point(u * Rational(P.K) + v * Rational(Q.K),
                            u * Rational(P.Kp) + v * Rational(Q.Kp),
                            u * Rational(P.H) + v * Rational(Q.H));
}

} // namespace

CubicPoint CubicFiber::third(const CubicPoint& P1, const CubicPoint& P2) const {
    if (!on_curve(P1) || !on_curve(P2)) throw Error("third: input not on the cubic");

    if (!(P1 == P2)) {
        // F(u P1 + v P2) = u v (u * gradF(P1).P2 + v * gradF(P2).P1)
        Rational c1 = dot3(grad(P1), P2);
        Rational c2 = dot3(grad(P2), P1);
        if (c1 == 0 && c2 == 0) throw LineOnCurve("chord lies on the cubic (reducible fiber)");
        return combine(c2, P1, -c1, P2);
    }

    // tangent at P1
    auto g = grad(P1);
    if (g[0] == 0 && g[1] == 0 && g[2] == 0) throw SingularPoint();
    // a second point Q0 on the tangent line, not proportional to P1
    CubicPoint Q0{0, 0, 0};
    std::array<CubicPoint, 3> basis = {CubicPoint{1, 0, 0}, CubicPoint{0, 1, 0},
                                       CubicPoint{0, 0, 1}};
    // two independent null directions of g; pick combinations g x e_i
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i) {
        // cross product of g with basis vector i lies on the line g.X = 0
        Rational gk = g[0], gp = g[1], gh = g[2];
        Rational x, y, z;
        if (i == 0) { x = 0; y = gh; z = -gp; }
        if (i == 1) { x = -gh; y = 0; z = gk; }
        if (i == 2) { x = gp; y = -gk; z = 0; }
        if (x == 0 && y == 0 && z == 0) continue;
        CubicPoint cand = make_cubic_point(x, y, z);
        if (!(cand == P1)) {
            Q0 = cand;
            found = true;
        }
    }
    if (!found) throw Error("third: could not build tangent line point (defect)");

    // F(u P + v Q0) = v^2 (u * gradF(Q0).P + v * F(Q0))
    Rational c1 = dot3(grad(Q0), P1);
    Rational c0 = eval(Q0);
    if (c1 == 0 && c0 == 0) throw LineOnCurve("tangent lies on the cubic (reducible fiber)");
    return combine(-c0, P1, c1, Q0);
}

CubicPoint CubicFiber::add(const CubicPoint& P1, const CubicPoint& P2) const {
    return third(N(), third(P1, P2));
}

CubicPoint CubicFiber::neg(const CubicPoint& P1) const {
    CubicPoint n = N();
    return third(P1, third(n, n));
}

Rational cubic_eval(const ThreePointFrame& f, const FiberPoint& fp, const CubicPoint& pt) {
    return CubicFiber(f, fp).eval(pt);
}

CubicPoint cubic_third_intersection(const ThreePointFrame& f, const FiberPoint& fp,
                                    const CubicPoint& P1, const CubicPoint& P2) {
    return CubicFiber(f, fp).third(P1, P2);
}

CubicPoint cubic_add(const ThreePointFrame& f, const FiberPoint& fp, const CubicPoint& P1,
                     const CubicPoint& P2) {
    return CubicFiber(f, fp).add(P1, P2);
}

CubicPoint cubic_neg(const ThreePointFrame& f, const FiberPoint& fp, const CubicPoint& P1) {
    return CubicFiber(f, fp).neg(P1);
}

CubicPoint section_AplusB(const ThreePointFrame& f, const FiberPoint& fp) {
    const Rational &p = f.p, &r = f.r, &c = f.c;
    const Rational &lambda = fp.lambda, &mu = fp.mu, &eta = fp.eta;
    if (eta == p) throw EtaEqualsP();
    Rational t1 = p * r * (c * lambda - 1) * (c * lambda - 1) - p * r * lambda * lambda;
    Rational K = 2 * p * (eta - p) + t1;
    Rational Kp = 2 * eta * (eta - p) + t1;
    Rational H = 2 * mu * (eta - p);
    CubicPoint pt = make_cubic_point(K, Kp, H);
    if (cubic_eval(f, fp, pt) != 0) throw Error("section_AplusB: residual nonzero (defect)");
    return pt;
}

Solution3 solution_from_point(const ThreePointFrame& f, const FiberPoint& fp,
                              const CubicPoint& pt) {
    if (pt.H == 0) throw PointAtInfinity();
    Rational k = Rational(pt.K) / Rational(pt.H);
    Rational kp = Rational(pt.Kp) / Rational(pt.H);
    const Rational &p = f.p, &r = f.r, &c = f.c;
    const Rational &mu = fp.mu, &lambda = fp.lambda, &eta = fp.eta;
    if (p == mu * k || eta == mu * kp) throw ExcludedDenominator();

    Solution3 s;
    s.tcoord = (p - k * k) / (2 * (p - mu * k));
    s.ucoord = lambda * s.tcoord;
    s.z = mu * s.tcoord;
    s.k = k;
    s.kprime = kp;
    s.lambda = lambda;
    s.mu = mu;

    const Rational &x = s.tcoord, &y = s.ucoord, &z = s.z;
    if (p * x * x + r * y * y != z * z) throw Error("solution: eq (d0) fails (defect)");
    if (p * (x - 1) * (x - 1) + r * y * y != (z - k) * (z - k))
        throw Error("solution: eq (d) fails (defect)");
    if (p * (x - c) * (x - c) + r * (y - 1) * (y - 1) != (z - kp) * (z - kp))
        throw Error("solution: eq (d') fails (defect)");

    s.d0 = boost::multiprecision::abs(z);
    s.d = boost::multiprecision::abs(z - k);
    s.dprime = boost::multiprecision::abs(z - kp);

    if (f.lattice) {
        const JLattice& l = *f.lattice;
        PlanePoint q = l.base + QuadExt(x) * l.v1 + QuadExt(y) * l.v2;
        // ambient cross-check against the original vertices
        const auto& v = f.triangle.vertices();
        int o = f.origin, i = (o + 1) % 3, j = (o + 2) % 3;
        if ((q - v[o]).norm_sq() != QuadExt(s.d0 * s.d0) ||
            (q - v[i]).norm_sq() != QuadExt(s.d * s.d) ||
            (q - v[j]).norm_sq() != QuadExt(s.dprime * s.dprime))
            throw Error("solution: ambient distance mismatch (defect)");
        s.ambient = q;
    }
    return s;
}

Generate3Report generate3(const Triangle& t, std::size_t fibers, std::size_t multiples,
                          std::uint64_t seed) {
    ThreePointFrame f = frame(t, 0);
    Generate3Report rep;
    std::set<std::pair<Rational, Rational>> seen;

    // The (lambda, -mu) twin of a fiber back-substitutes to the same plane
    // points (the two cubics match under (K, K') -> (-K, -K')), so only the
    // mu > 0 representative is consumed here.
    std::size_t attempts = 0;
    const std::size_t max_attempts = 80 * (fibers + 1);
    std::size_t batch = fibers * 8 + 16;
    while (rep.fibers_used < fibers && attempts < max_attempts) {
        std::vector<FiberPoint> fps = fiber_points(f, batch, seed);
        for (std::size_t idx = attempts; idx < fps.size() && rep.fibers_used < fibers; ++idx) {
            ++attempts;
            const FiberPoint& fp = fps[idx];
            if (fp.mu < 0) continue;
            CubicFiber cubic(f, fp);
            CubicPoint A = cubic.A();

            std::vector<CubicPoint> mult;
            bool distinct = true;
            try {
                CubicPoint cur = A;
                mult.push_back(cur);
                for (std::size_t n = 2; n <= multiples; ++n) {
                    cur = cubic.add(cur, A);
                    for (const CubicPoint& prev : mult)
                        if (prev == cur) distinct = false;
                    mult.push_back(cur);
                    if (!distinct) break;
                }
            } catch (const LineOnCurve&) {
                continue; // reducible fiber slipped through: skip (defect guard)
            }
            rep.fiber_evidence.push_back({fp, distinct});
            if (!distinct) {
                ++rep.fibers_rejected_torsion;
                continue;
            }
            bool contributed = false;
            for (std::size_t n = 1; n <= mult.size(); ++n) {
                try {
                    Solution3 s = solution_from_point(f, fp, mult[n - 1]);
                    s.multiple = static_cast<int>(n);
                    if (seen.insert({s.tcoord, s.ucoord}).second) {
                        rep.solutions.push_back(s);
                        contributed = true;
                    }
                } catch (const PointAtInfinity&) {
                } catch (const ExcludedDenominator&) {
                }
            }
            if (contributed) ++rep.fibers_used;
        }
        batch *= 2;
    }
    return rep;
}

Solution3 alt_section(const ThreePointFrame& f, const Rational& uf, const Rational& ug) {
    const Rational &p = f.p, &r = f.r, &c = f.c, &pprime = f.pprime;
    if (p * uf * uf + r * ug * ug != 1) throw Error("alt_section: point not on the unit conic");
    Rational k = p * uf;
    if (k == 0) throw KZero();
    Rational phi1 = r * ug;
    Rational kp = phi1 + k * c;
    Rational delta = p - k * k;
    Rational deltap = pprime - kp * kp;
    Rational phi0 = kp * delta - k * deltap;

    // A vanishes identically on the unit conic; x is the root of B x + C = 0.
    Rational A = 4 * p * r * k * k + 4 * p * p * phi1 * phi1 - 4 * p * p * r;
    if (A != 0) throw Error("alt_section: A != 0 (defect)");
    Rational B = 4 * p * r * delta - 4 * p * phi0 * phi1;
    if (B == 0) throw BZero();
    Rational C = phi0 * phi0 - r * delta * delta;

    Solution3 s;
    s.tcoord = -C / B;
    // sign pinned by substituting C_k into C'_{k'}: 2 r k y = 2 p phi1 x - phi0
    s.ucoord = (2 * p * phi1 * s.tcoord - phi0) / (2 * r * k);
    s.z = (2 * p * s.tcoord - delta) / (2 * k);
    s.k = k;
    s.kprime = kp;
    s.lambda = 0; // not tied to a conic-S fiber
    s.mu = 0;

    const Rational &x = s.tcoord, &y = s.ucoord, &z = s.z;
    if (p * x * x + r * y * y != z * z) throw Error("alt_section: eq (d0) fails (defect)");
    if (p * (x - 1) * (x - 1) + r * y * y != (z - k) * (z - k))
        throw Error("alt_section: eq (d) fails (defect)");
    if (p * (x - c) * (x - c) + r * (y - 1) * (y - 1) != (z - kp) * (z - kp))
        throw Error("alt_section: eq (d') fails (defect)");
    s.d0 = boost::multiprecision::abs(z);
    s.d = boost::multiprecision::abs(z - k);
    s.dprime = boost::multiprecision::abs(z - kp);

    if (f.lattice) {
        const JLattice& l = *f.lattice;
        s.ambient = l.base + QuadExt(x) * l.v1 + QuadExt(y) * l.v2;
    }
    return s;
}

CollinearSolution collinear_solution(const Rational& p, const Rational& q, const Rational& k,
                                     const Rational& kprime) {
    if (q == 0 || q == 1) throw Error("collinear: q must not be 0 or 1");
    if (q * k == kprime) throw DegeneratePair();

    CollinearSolution s;
    s.k = k;
    s.kprime = kprime;
    s.z = (p * kprime * kprime - p * q * k * k - q * q + q) / (2 * p * (q * k - kprime));
    s.t = (1 - p * k * k - 2 * p * s.z * k) / 2;
    s.v = p * s.z * s.z - s.t * s.t;
    s.real = s.v >= 0;

    // u = sqrt(v): rational when v is a square, otherwise c*sqrt(d) with d
    // the squarefree part of v.
    if (s.real) {
        if (auto rt = rational_sqrt(s.v)) {
            s.u = QuadExt(*rt);
        } else {
            auto [d, cc] = squarefree_part(s.v);
            s.u = QuadExt(0, cc, static_cast<long long>(d));
        }
        // verify the three quadric equations of the frame exactly
        Rational t = s.t, v = s.v, z = s.z;
        if (t * t + v != p * z * z) throw Error("collinear: eq1 fails (defect)");
        if ((t - 1) * (t - 1) + v != p * (z + k) * (z + k))
            throw Error("collinear: eq2 fails (defect)");
        if ((t - q) * (t - q) + v != p * (z + kprime) * (z + kprime))
            throw Error("collinear: eq3 fails (defect)");
    }
    s.d0 = p * boost::multiprecision::abs(s.z);
    s.d = p * boost::multiprecision::abs(s.z + k);
    s.dprime = p * boost::multiprecision::abs(s.z + kprime);
    return s;
}

std::vector<CollinearSolution> generate3_collinear(
    const Rational& p, const Rational& q,
    const std::vector<std::pair<Rational, Rational>>& pairs, bool realonly) {
    std::vector<CollinearSolution> out;
    for (const auto& [k, kp] : pairs) {
        if (q * k == kp) continue; // degenerate pair, skipped in stream mode
        CollinearSolution s = collinear_solution(p, q, k, kp);
        if (realonly && !s.real) continue;
        out.push_back(s);
    }
    return out;
}

} // namespace ratdist
