#include "ratdist/rings.hpp"

#include "ratdist/factor.hpp"

namespace ratdist {

RealQuadInt RealQuadInt::divide_exact(const RealQuadInt& y) const {
    BigInt n = y.norm();
    if (n == 0) throw Error("RealQuadInt: division by zero");
    RealQuadInt num = *this * y.conj(); // (a+b s)(c-d s) ; value = num / n
    if (num.a % n != 0 || num.b % n != 0) throw Error("RealQuadInt: inexact division");
    return {num.a / n, num.b / n, delta};
}

std::string RealQuadInt::str() const {
    std::string s = a.str();
    if (b != 0) {
        s += (b > 0 ? "+" : "-") + abs_int(b).str() + "*sqrt" + std::to_string(delta);
    }
    return s;
}

RealQuadInt fundamental_unit(long long delta) {
    if (delta <= 1) throw Error("fundamental_unit: delta must be > 1");
    BigInt D(delta);
    BigInt a0 = isqrt(D);
    if (a0 * a0 == D) throw PerfectSquareDelta();

    // continued fraction of sqrt(D): m_{k+1} = d_k a_k - m_k,
    // d_{k+1} = (D - m^2)/d, a = floor((a0 + m)/d); convergents h/k give the
    // fundamental solution at the end of the first period.
    BigInt m = 0, d = 1, a = a0;
    BigInt h_prev = 1, h = a0, k_prev = 0, k = 1;
    while (true) {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        if (d == 1) break; // period ends; (h, k) solves x^2 - D y^2 = +-1
        BigInt h_next = a * h + h_prev;
        BigInt k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    RealQuadInt eps{h, k, delta};
    BigInt n = eps.norm();
    if (n != 1 && n != -1) throw Error("fundamental_unit: CF did not yield a unit (defect)");
    return eps;
}

namespace {

bool congruent_one_mod_two(const RealQuadInt& w) {
    return (w.a - 1) % 2 == 0 && w.b % 2 == 0;
}

// Smallest power of the fundamental unit that is = 1 mod 2 Z[sqrt(delta)].
RealQuadInt unit_mod_two_generator(long long delta) {
    RealQuadInt eps = fundamental_unit(delta);
    RealQuadInt w = eps;
    for (int e = 1; e <= 6; ++e) {
        if (congruent_one_mod_two(w)) return w;
        w = w * eps;
    }
    throw Error("unit orbit: no power of the fundamental unit is 1 mod 2 (defect)");
}

RealQuadInt unit_inverse(const RealQuadInt& w) {
    BigInt n = w.norm();
    RealQuadInt c = w.conj();
    if (n == 1) return c;
    if (n == -1) return -c;
    throw Error("unit_inverse: not a unit");
}

} // namespace

std::vector<RealQuadLinePoint> realquad_line_points(const BigInt& a_in, const BigInt& b_in,
                                                    long long delta, std::size_t count) {
    BigInt a = a_in, b = b_in;
    bool swapped = false;
    if (a == 0) { // role swap: use the other coordinate as the line offset
        std::swap(a, b);
        swapped = true;
    }
    if (a == 0) throw Error("realquad_line_points: P must not be the origin");

    RealQuadInt w0 = unit_mod_two_generator(delta);
    std::vector<RealQuadLinePoint> out;
    RealQuadInt omega{1, 0, delta};
    for (std::size_t n = 0; n < count; ++n) {
        RealQuadInt winv = unit_inverse(omega);
        // s - b + t = a w,  s + b - t = a w^{-1}
        RealQuadInt aw{a * omega.a, a * omega.b, delta};
        RealQuadInt awinv{a * winv.a, a * winv.b, delta};
        RealQuadInt two{2, 0, delta};
        RealQuadInt s = (aw + awinv).divide_exact(two);
        RealQuadInt tmb = (aw - awinv).divide_exact(two); // t - b
        RealQuadInt t = tmb + RealQuadInt{b, 0, delta};

        // exact check: a^2 + (t-b)^2 = s^2
        RealQuadInt lhs = RealQuadInt{a * a, 0, delta} + tmb * tmb;
        if (!(lhs == s * s)) throw Error("realquad_line_points: verification failed (defect)");

        RealQuadLinePoint pt;
        pt.omega = omega;
        pt.s = s;
        pt.dp = tmb;
        pt.degenerate = tmb.is_zero();
        pt.a_used = a;
        pt.b_used = b;
        pt.swapped = swapped;
        if (!swapped) {
            pt.qx = RealQuadInt{a, 0, delta};
            pt.qy = t;
        } else {
            pt.qx = t;
            pt.qy = RealQuadInt{a, 0, delta};
        }
        out.push_back(pt);
        omega = omega * w0;
    }
    return out;
}

namespace {

// Exact square root in Z[sqrt(delta)] via norm descent: X = x + y sqrt(d)
// with X^2 = A + B sqrt(d) requires x^2 + d y^2 = A, 2xy = B, so x^2 is a
// root of T^2 - A T + d (B/2)^2 = 0.
std::optional<RealQuadInt> realquad_sqrt(const RealQuadInt& W) {
    const BigInt &A = W.a, &B = W.b;
    BigInt d(W.delta);
    if (B % 2 != 0) return std::nullopt;
    BigInt halfB = B / 2;
    BigInt disc = A * A - 4 * d * halfB * halfB; // = (x^2 - d y^2)^2
    if (disc < 0 || !is_perfect_square(disc)) return std::nullopt;
    BigInt n = isqrt(disc);
    for (int sgn : {1, -1}) {
        BigInt twox2 = A + sgn * n;
        if (twox2 < 0 || twox2 % 2 != 0) continue;
        BigInt x2 = twox2 / 2;
        if (!is_perfect_square(x2)) continue;
        BigInt x = isqrt(x2);
        if (x == 0) {
            if (halfB == 0) {
                // W = A purely rational, A = d y^2?
                if (d != 0 && A % d == 0 && is_perfect_square(A / d))
                    return RealQuadInt{0, isqrt(A / d), W.delta};
                continue;
            }
            continue;
        }
        if (halfB % x != 0) continue;
        BigInt y = halfB / x;
        RealQuadInt X{x, y, W.delta};
        if (X * X == W) return X;
        X = RealQuadInt{x, -y, W.delta};
        if (X * X == W) return X;
    }
    return std::nullopt;
}

struct QuarticElt { // g0 + g1 sqrt(D0), g_i in Z[sqrt(delta)]
    RealQuadInt g0, g1;
};

QuarticElt qmul(const QuarticElt& x, const QuarticElt& y, const RealQuadInt& D0) {
    return {x.g0 * y.g0 + D0 * (x.g1 * y.g1), x.g0 * y.g1 + x.g1 * y.g0};
}

} // namespace

std::vector<ConfocalPoint> realquad_confocal_extend(const BigInt& a_in, const BigInt& b_in,
                                                    long long delta,
                                                    const RealQuadLinePoint& seed,
                                                    std::size_t count,
                                                    const ConfocalOptions& opt) {
    std::vector<ConfocalPoint> out;
    if (count == 0) return out;
    (void)a_in;
    (void)b_in;

    // The line construction verifies a^2 + (t-b)^2 = s^2: the seed has exact
    // ring distances s and |t-b| from the foci F1 = (0, b) and F2 = (a, b) of
    // its normalized frame. Work there: X along the focal axis, Y the offset.
    const BigInt &a = seed.a_used, &b = seed.b_used;
    RealQuadInt X0{a, 0, delta};
    RealQuadInt Y0 = seed.dp;
    if (Y0.is_zero()) return out; // seed on the focal axis: degenerate conic

    RealQuadInt d1 = seed.s;   // distance from F1
    RealQuadInt d2 = seed.dp;  // distance from F2 (signed)
    RealQuadInt k = d1 - d2;
    RealQuadInt w = d1 + d2;
    RealQuadInt e2{a * a, 0, delta};
    RealQuadInt Dp = e2 - k * k; // e^2 - k^2
    if (Dp.is_zero() || k.is_zero()) return out;

    // normalize D' = f^2 D0, f^2 the largest square integer dividing both parts
    BigInt f = 1;
    {
        BigInt g = gcd(abs_int(Dp.a), abs_int(Dp.b));
        if (g > 0) {
            Factorization fac = factorize(g);
            for (const auto& [prime, e] : fac.factors)
                for (unsigned i = 0; i < e / 2; ++i) f *= prime;
        }
    }
    RealQuadInt D0{Dp.a / (f * f), Dp.b / (f * f), delta};
    if (realquad_sqrt(D0)) return out; // split conic: not handled by the automorph route

    // psi = 2 a Y + f w sqrt(D0); psi * conj = 4a^2 Y^2 - D' w^2 = -a^2 D' (invariant)
    RealQuadInt twoa{2 * a, 0, delta};
    QuarticElt psi{twoa * Y0, RealQuadInt{f, 0, delta} * w};
    RealQuadInt invariant = psi.g0 * psi.g0 - D0 * (psi.g1 * psi.g1);
    {
        RealQuadInt expect = -(e2 * Dp);
        if (!(invariant == expect))
            throw Error("confocal: seed invariant mismatch (defect)");
    }

    // Automorph: gamma = g0 + g1 sqrt(D0) with g0^2 - D0 g1^2 a unit eta;
    // then Gamma = gamma^2 / eta has relative norm 1 and integral components.
    RealQuadInt eps = fundamental_unit(delta);
    std::vector<RealQuadInt> etas;
    {
        RealQuadInt one{1, 0, delta};
        etas.push_back(one);
        etas.push_back(-one);
        RealQuadInt up = eps, dn = unit_inverse(eps);
        for (int m = 1; m <= opt.unit_power_range; ++m) {
            etas.push_back(up);
            etas.push_back(-up);
            etas.push_back(dn);
            etas.push_back(-dn);
            up = up * eps;
            dn = dn * unit_inverse(eps);
        }
    }

    std::optional<QuarticElt> gamma;
    std::optional<RealQuadInt> gamma_eta;
    for (BigInt c1 = 0; c1 <= opt.search_bound && !gamma; ++c1) {
        for (BigInt c2 = -opt.search_bound; c2 <= opt.search_bound && !gamma; ++c2) {
            if (c1 == 0 && c2 <= 0) continue;
            RealQuadInt g1{c1, c2, delta};
            RealQuadInt base = D0 * (g1 * g1);
            for (const RealQuadInt& eta : etas) {
                RealQuadInt W = eta + base; // g0^2
                if (auto g0 = realquad_sqrt(W)) {
                    gamma = QuarticElt{*g0, g1};
                    gamma_eta = eta;
                    break;
                }
            }
        }
    }
    if (!gamma) throw AutomorphNotFound("confocal automorph not found within bound");

    QuarticElt step = qmul(*gamma, *gamma, D0);
    step.g0 = step.g0.divide_exact(*gamma_eta);
    step.g1 = step.g1.divide_exact(*gamma_eta);
    {
        RealQuadInt nrm = step.g0 * step.g0 - D0 * (step.g1 * step.g1);
        if (!(nrm == RealQuadInt{1, 0, delta}))
            throw Error("confocal: step norm != 1 (defect)");
    }

    // walk the orbit, in both directions, keeping aligned integral points
    auto emit = [&](const QuarticElt& q) -> bool {
        // q = 2 a Y + f w sqrt(D0)
        RealQuadInt A2Y = q.g0, FW = q.g1;
        BigInt twoa_i = 2 * a;
        if (A2Y.a % twoa_i != 0 || A2Y.b % twoa_i != 0) return false;
        if (FW.a % f != 0 || FW.b % f != 0) return false;
        RealQuadInt Y{A2Y.a / twoa_i, A2Y.b / twoa_i, delta};
        RealQuadInt W{FW.a / f, FW.b / f, delta};
        // distances and abscissa
        RealQuadInt dd1 = W + k, dd2 = W - k; // 2 d1, 2 d2
        if (dd1.a % 2 != 0 || dd1.b % 2 != 0 || dd2.a % 2 != 0 || dd2.b % 2 != 0) return false;
        RealQuadInt D1{dd1.a / 2, dd1.b / 2, delta}, D2{dd2.a / 2, dd2.b / 2, delta};
        // X from e^2 + k w = 2 a X
        RealQuadInt numX = e2 + k * W;
        if (numX.a % twoa_i != 0 || numX.b % twoa_i != 0) return false;
        RealQuadInt X{numX.a / twoa_i, numX.b / twoa_i, delta};
        // exact verification against both foci
        if (!(X * X + Y * Y == D1 * D1)) return false;
        RealQuadInt Xa = X - RealQuadInt{a, 0, delta};
        if (!(Xa * Xa + Y * Y == D2 * D2)) return false;
        if (X == X0 && Y == Y0) return false; // the seed itself
        ConfocalPoint cp;
        RealQuadInt ax = X, ay = Y + RealQuadInt{b, 0, delta};
        if (seed.swapped) std::swap(ax, ay);
        cp.x = ax;
        cp.y = ay;
        cp.d1 = D1;
        cp.d2 = D2;
        out.push_back(cp);
        return true;
    };

    QuarticElt fwd = psi, bwd = psi;
    QuarticElt stepinv{step.g0, -step.g1}; // norm 1: inverse = conjugate
    for (std::size_t it = 0; it < opt.align_iterations && out.size() < count; ++it) {
        fwd = qmul(fwd, step, D0);
        emit(fwd);
        if (out.size() >= count) break;
        bwd = qmul(bwd, stepinv, D0);
        emit(bwd);
    }
    return out;
}

} // namespace ratdist
