#include "ratdist/kummer.hpp"

#include "ratdist/errors.hpp"

namespace ratdist {

Poly3 poly_add(const Poly3& f, const Poly3& g) {
    Poly3 h = f;
    for (const auto& [m, c] : g) {
        Rational& cc = h[m];
        cc += c;
        if (cc == 0) h.erase(m);
    }
    return h;
}

Poly3 poly_mul(const Poly3& f, const Poly3& g) {
    Poly3 h;
    for (const auto& [mf, cf] : f)
        for (const auto& [mg, cg] : g) {
            Monomial m = {mf[0] + mg[0], mf[1] + mg[1], mf[2] + mg[2]};
            Rational& cc = h[m];
            cc += cf * cg;
            if (cc == 0) h.erase(m);
        }
    return h;
}

Poly3 poly_scale(const Rational& c, const Poly3& f) {
    Poly3 h;
    if (c == 0) return h;
    for (const auto& [m, cf] : f) h[m] = c * cf;
    return h;
}

Rational poly_eval(const Poly3& f, const Rational& z, const Rational& u, const Rational& v) {
    Rational acc = 0;
    for (const auto& [m, c] : f) {
        Rational t = c;
        for (int i = 0; i < m[0]; ++i) t *= z;
        for (int i = 0; i < m[1]; ++i) t *= u;
        for (int i = 0; i < m[2]; ++i) t *= v;
        acc += t;
    }
    return acc;
}

KummerQuartic derive_quartic(const Rational& a, const Rational& b) {
    if (b == 0) throw BZeroDegenerate();

    // 2x = z^2 - u^2 + 1 and 2b y = a^2 + b^2 + (1-a) z^2 - v^2 + a u^2 - a;
    // substituting into x^2 + y^2 = z^2, cleared by 4 b^2:
    //   b^2 (z^2-u^2+1)^2 + (a^2+b^2+(1-a)z^2-v^2+au^2-a)^2 - 4 b^2 z^2 = 0
    const Monomial one = {0, 0, 0}, z2 = {2, 0, 0}, u2 = {0, 2, 0}, v2 = {0, 0, 2};

    Poly3 X; // 2x
    X[z2] = 1;
    X[u2] = -1;
    X[one] = 1;

    Poly3 Y; // 2b y
    Y[one] = a * a + b * b - a;
    Y[z2] = 1 - a;
    Y[v2] = -1;
    Y[u2] = a;

    Poly3 Z4; // 4 b^2 z^2
    Z4[z2] = 4 * b * b;

    Poly3 F = poly_add(poly_add(poly_scale(b * b, poly_mul(X, X)), poly_mul(Y, Y)),
                       poly_scale(-1, Z4));

    KummerQuartic kq;
    kq.a = a;
    kq.b = b;
    kq.coefficients = F;
    return kq;
}

Rational quartic_eval(const KummerQuartic& kq, const Rational& z, const Rational& u,
                      const Rational& v) {
    return poly_eval(kq.coefficients, z, u, v);
}

} // namespace ratdist
