#include "ratdist/rings.hpp"

#include <map>

#include "ratdist/factor.hpp"

namespace ratdist {

std::string GaussianInt::str() const {
    if (im == 0) return re.str();
    std::string s = re == 0 ? "" : re.str();
    if (im > 0 && re != 0) s += "+";
    if (im == -1)
        s += "-";
    else if (im != 1)
        s += im.str() + "*";
    s += "i";
    return s;
}

GaussianInt gaussian_div(const GaussianInt& x, const GaussianInt& y, GaussianInt* rem) {
    BigInt n = y.norm();
    if (n == 0) throw Error("gaussian_div: division by zero");
    GaussianInt t = x * y.conj(); // x/y = t/n
    auto round_div = [](const BigInt& p, const BigInt& q) {
        // nearest integer to p/q, ties toward zero
        BigInt r = (2 * p + (p >= 0 ? q : -q)) / (2 * q);
        return r;
    };
    GaussianInt q{round_div(t.re, n), round_div(t.im, n)};
    if (rem) *rem = x - y * q;
    return q;
}

GaussianInt gaussian_gcd(GaussianInt x, GaussianInt y) {
    while (!y.is_zero()) {
        GaussianInt r;
        gaussian_div(x, y, &r);
        x = y;
        y = r;
    }
    // normalize to the first-quadrant associate (re > 0, im >= 0), except 0
    if (x.is_zero()) return x;
    for (int i = 0; i < 4; ++i) {
        if (x.re > 0 && x.im >= 0) break;
        x = x * GaussianInt{0, 1};
    }
    return x;
}

bool gaussian_divides(const GaussianInt& d, const GaussianInt& x) {
    if (d.is_zero()) return x.is_zero();
    GaussianInt t = x * d.conj();
    BigInt n = d.norm();
    return t.re % n == 0 && t.im % n == 0;
}

GaussianInt gaussian_divide_exact(const GaussianInt& x, const GaussianInt& d) {
    GaussianInt t = x * d.conj();
    BigInt n = d.norm();
    if (n == 0 || t.re % n != 0 || t.im % n != 0) throw Error("gaussian: inexact division");
    return {t.re / n, t.im / n};
}

std::optional<GaussianInt> gaussian_sqrt(const GaussianInt& x) {
    if (x.is_zero()) return GaussianInt{0, 0};
    // (a+bi)^2 = a^2-b^2 + 2ab i: a^2 and -b^2 are roots of
    // T^2 - re T - im^2/4; the norm of x must be a perfect square.
    BigInt n = x.norm();
    if (!is_perfect_square(n)) return std::nullopt;
    BigInt m = isqrt(n); // = a^2 + b^2
    // a^2 = (re + m) / 2
    for (int sgn : {1, -1}) {
        BigInt twoa2 = x.re + sgn * m;
        if (twoa2 < 0 || twoa2 % 2 != 0) continue;
        BigInt a2 = twoa2 / 2;
        if (!is_perfect_square(a2)) continue;
        BigInt a = isqrt(a2);
        BigInt b2v = m - a2;
        if (!is_perfect_square(b2v)) continue;
        BigInt b = isqrt(b2v);
        for (const GaussianInt& cand :
             {GaussianInt{a, b}, GaussianInt{a, -b}, GaussianInt{-a, b}, GaussianInt{-a, -b}}) {
            if (cand * cand == x) return cand;
        }
    }
    return std::nullopt;
}

bool gaussian_is_square_in_field(const GaussianInt& num, const GaussianInt& den) {
    if (den.is_zero()) throw Error("gaussian_is_square_in_field: zero denominator");
    if (num.is_zero()) return true;
    // num/den square in Q(i) iff num*den is a square in Q(i) iff
    // num*den*t^2 is a ring square for the denominator-clearing t; since
    // Z[i] is a UFD it suffices that num*den = g^2 * unit-square form;
    // test: num*den is a square in Z[i] up to a square unit (units: squares
    // are +-1... the squares among units are {1, -1}^2 = {1}; -1 = i^2 is a
    // square). So check num*den or -num*den... i^2 = -1, so -1 IS a square.
    GaussianInt w = num * den;
    if (gaussian_sqrt(w)) return true;
    if (gaussian_sqrt(GaussianInt{-w.re, -w.im})) return true;
    return false;
}

namespace {

// Gaussian prime above p (p = 2 or p % 4 == 1): pi with N(pi) = p (or 1+i).
GaussianInt gaussian_prime_above(const BigInt& p) {
    if (p == 2) return {1, 1};
    // find c with c^2 = -1 mod p, then gcd(p, c + i)
    BigInt c = 0;
    for (BigInt g = 2; g < p; ++g) {
        // c = g^((p-1)/4) mod p
        BigInt e = (p - 1) / 4, base = g % p, r = 1;
        while (e > 0) {
            if (boost::multiprecision::bit_test(e, 0)) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        if (r * r % p == p - 1) {
            c = r;
            break;
        }
    }
    if (c == 0) throw Error("gaussian_prime_above: no sqrt(-1) mod p (p = 3 mod 4?)");
    return gaussian_gcd(GaussianInt{p, 0}, GaussianInt{c, 1});
}

struct GaussianFactorization {
    GaussianInt unit;
    std::vector<std::pair<GaussianInt, unsigned>> factors; // first-quadrant primes
};

GaussianFactorization gaussian_factorize(const GaussianInt& x) {
    if (x.is_zero()) throw Error("gaussian_factorize: zero");
    GaussianFactorization out;
    GaussianInt rest = x;
    std::map<std::pair<std::string, std::string>, std::pair<GaussianInt, unsigned>> acc;

    Factorization nf = factorize(x.norm()); // norm > 0
    for (const auto& [p, e] : nf.factors) {
        (void)e;
        std::vector<GaussianInt> primes;
        if (p == 2) {
            primes.push_back(GaussianInt{1, 1});
        } else if (p % 4 == 1) {
            GaussianInt pi = gaussian_prime_above(p);
            primes.push_back(pi);
            primes.push_back(gaussian_gcd(pi.conj(), pi.conj())); // normalized associate
        } else {
            primes.push_back(GaussianInt{p, 0}); // inert
        }
        for (const GaussianInt& pi : primes) {
            while (gaussian_divides(pi, rest)) {
                rest = gaussian_divide_exact(rest, pi);
                auto key = std::make_pair(pi.re.str(), pi.im.str());
                if (acc.count(key))
                    acc[key].second += 1;
                else
                    acc[key] = {pi, 1};
            }
        }
    }
    if (!rest.is_unit()) throw Error("gaussian_factorize: residual not a unit (defect)");
    out.unit = rest;
    for (auto& [k, v] : acc) {
        (void)k;
        out.factors.push_back(v);
    }
    return out;
}

} // namespace

GaussianSystem gaussian_decompose(const GaussianInt& alpha) {
    if (alpha.is_zero()) throw Error("gaussian_decompose: alpha must be nonzero");
    GaussianSystem sys;
    sys.alpha = alpha;
    GaussianInt abar = alpha.conj();

    if (!is_perfect_square(alpha.norm())) {
        // d1 = alpha, d2 = conj(alpha), (r,s) = (1,0), (u,v) = (0,i)
        sys.d1 = alpha;
        sys.d2 = abar;
        sys.r = GaussianInt{1, 0};
        sys.s = GaussianInt{0, 0};
        sys.u = GaussianInt{0, 0};
        sys.v = GaussianInt{0, 1};
        return sys;
    }

    // alpha = rho xi^2 with rho squarefree; norm(alpha) square forces rho to
    // be a rational integer or purely imaginary (after unit normalization).
    GaussianFactorization f = gaussian_factorize(alpha);
    GaussianInt rho = f.unit, xi{1, 0};
    for (const auto& [pi, e] : f.factors) {
        if (e & 1u) rho = rho * pi;
        for (unsigned i = 0; i < e / 2; ++i) xi = xi * pi;
    }
    // absorb a unit square so that rho is real or purely imaginary:
    // multiplying rho by -1 = i^2 and xi by i keeps alpha fixed.
    if (rho.re != 0 && rho.im != 0) throw Error("gaussian_decompose: rho not axis-aligned (defect)");
    if (rho.re < 0 || (rho.re == 0 && rho.im < 0)) {
        rho = -rho;
        xi = xi * GaussianInt{0, 1};
    }
    if (!(rho * xi * xi == alpha)) {
        // remaining unit must be +-i ... fold i into xi^2 when possible
        for (const GaussianInt& u : {GaussianInt{0, 1}, GaussianInt{0, -1}, GaussianInt{-1, 0}}) {
            if (rho * u * xi * xi == alpha) {
                rho = rho * u;
                break;
            }
        }
        if (!(rho * xi * xi == alpha)) throw Error("gaussian_decompose: rho xi^2 != alpha (defect)");
    }

    GaussianInt xibar = xi.conj();
    if (rho.im == 0) {
        // rho real: d1 - d2 = rho with d1/d2 not a square in Q(i);
        // smallest integer d2 >= 2 works deterministically.
        BigInt rr = rho.re;
        for (BigInt j = 2;; ++j) {
            GaussianInt d1{rr + j, 0}, d2{j, 0};
            if (d1.is_zero()) continue;
            if (gaussian_is_square_in_field(d2, d1)) continue;
            sys.d1 = d1;
            sys.d2 = d2;
            break;
        }
        sys.r = xi;
        sys.s = xi;
        sys.u = xibar;
        sys.v = xibar;
    } else {
        // rho purely imaginary: purely imaginary d1, d2 with d1 - d2 = rho
        BigInt rr = rho.im;
        for (BigInt j = 2;; ++j) {
            GaussianInt d1{0, rr + j}, d2{0, j};
            if (d1.is_zero()) continue;
            if (gaussian_is_square_in_field(d2, d1)) continue;
            sys.d1 = d1;
            sys.d2 = d2;
            break;
        }
        sys.r = xi;
        sys.s = xi;
        sys.u = GaussianInt{0, 1} * xibar;
        sys.v = GaussianInt{0, 1} * xibar;
    }

    // exact post-conditions
    if (!(sys.d1 * sys.r * sys.r - sys.d2 * sys.s * sys.s == alpha))
        throw Error("gaussian_decompose: eq (8.3) fails (defect)");
    if (!(sys.d1 * sys.u * sys.u - sys.d2 * sys.v * sys.v == abar))
        throw Error("gaussian_decompose: eq (8.4) fails (defect)");
    return sys;
}

GaussianOrbitReport gaussian_orbit(const GaussianSystem& sys, std::size_t count, long long bound) {
    GaussianOrbitReport rep;
    GaussianInt D = sys.d1 * sys.d2;
    if (gaussian_is_square_in_field(D, GaussianInt{1, 0}))
        throw Error("gaussian_orbit: d1 d2 is a square in Q(i)");

    auto emit = [&](const GaussianInt& r, const GaussianInt& s, const GaussianInt& u,
                    const GaussianInt& v) {
        // re-verify the defining equations; no trust in the recurrence
        if (!(sys.d1 * r * r - sys.d2 * s * s == sys.alpha))
            throw Error("gaussian_orbit: eq (8.3) drifted (defect)");
        if (!(sys.d1 * u * u - sys.d2 * v * v == sys.alpha.conj()))
            throw Error("gaussian_orbit: eq (8.4) drifted (defect)");
        GaussianOrbitSolution sol;
        sol.r = r;
        sol.s = s;
        sol.u = u;
        sol.v = v;
        sol.w1 = sys.d1 * r * r;
        sol.w2 = sys.d1 * u * u;
        GaussianInt z = sys.d1 * r * u;
        if (!(z * z == sol.w1 * sol.w2)) throw Error("gaussian_orbit: z^2 != w1 w2 (defect)");
        sol.z = z;
        // (w1 - alpha)(w2 - abar) = (d2 s^2)(d2 v^2) = (d2 s v)^2 = (z-k)^2
        GaussianInt zk = sys.d2 * s * v;
        sol.k = z - zk;
        if (!((sol.w1 - sys.alpha) * (sol.w2 - sys.alpha.conj()) == zk * zk))
            throw Error("gaussian_orbit: (z-k)^2 identity fails (defect)");
        // parity filter: w1 = w2 mod 2 makes x, y Gaussian integers
        GaussianInt sum = sol.w1 + sol.w2, diff = sol.w1 - sol.w2;
        if (sum.re % 2 == 0 && sum.im % 2 == 0) {
            GaussianInt x{sum.re / 2, sum.im / 2};
            GaussianInt y = gaussian_divide_exact(diff, GaussianInt{0, 2}); // /(2i)
            // verify the plane-point equations with a = Re(alpha), b = Im(alpha)
            if (!(x * x + y * y == z * z)) throw Error("gaussian_orbit: x^2+y^2 != z^2 (defect)");
            GaussianInt xa = x - GaussianInt{sys.alpha.re, 0};
            GaussianInt yb = y - GaussianInt{sys.alpha.im, 0};
            if (!(xa * xa + yb * yb == zk * zk))
                throw Error("gaussian_orbit: (x-a)^2+(y-b)^2 != (z-k)^2 (defect)");
            sol.x = x;
            sol.y = y;
        }
        rep.solutions.push_back(sol);
    };

    emit(sys.r, sys.s, sys.u, sys.v);
    if (rep.solutions.size() >= count) return rep;

    // automorph: A^2 - d1 d2 B^2 = 1 by bounded box search over B
    std::optional<std::pair<GaussianInt, GaussianInt>> aut;
    for (BigInt b1 = 0; b1 <= bound && !aut; ++b1) {
        for (BigInt b2 = -bound; b2 <= bound && !aut; ++b2) {
            if (b1 == 0 && b2 <= 0) continue;
            GaussianInt B{b1, b2};
            GaussianInt w = GaussianInt{1, 0} + D * B * B;
            if (auto A = gaussian_sqrt(w)) aut = std::make_pair(*A, B);
        }
    }
    if (!aut) {
        rep.automorph_found = false;
        return rep; // truncated to the base solution
    }
    rep.automorph_found = true;
    rep.A = aut->first;
    rep.B = aut->second;

    GaussianInt r = sys.r, s = sys.s, u = sys.u, v = sys.v;
    const GaussianInt &A = rep.A, &B = rep.B;
    while (rep.solutions.size() < count) {
        GaussianInt nr = A * r + sys.d2 * B * s;
        GaussianInt ns = sys.d1 * B * r + A * s;
        GaussianInt nu = A * u + sys.d2 * B * v;
        GaussianInt nv = sys.d1 * B * u + A * v;
        r = nr;
        s = ns;
        u = nu;
        v = nv;
        emit(r, s, u, v);
    }
    return rep;
}

} // namespace ratdist
