#include "ratdist/quadforms.hpp"

#include <algorithm>

namespace ratdist {

namespace {

// Legendre symbol (a|p) for odd prime p, a not divisible by p.
int legendre(const BigInt& a_in, const BigInt& p) {
    BigInt a = a_in % p;
    if (a < 0) a += p;
    BigInt r = 1, base = a, e = (p - 1) / 2, m = p;
    // (a|p) = a^((p-1)/2) mod p
    base %= m;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    if (r == 1) return 1;
    if (r == m - 1) return -1;
    return 0; // p | a, not expected here
}

int epsilon2(const BigInt& u) { // (u-1)/2 mod 2, u odd
    BigInt t = ((u - 1) / 2) % 2;
    if (t < 0) t += 2;
    return static_cast<int>(t);
}

int omega2(const BigInt& u) { // (u^2-1)/8 mod 2, u odd
    BigInt t = ((u * u - 1) / 8) % 2;
    if (t < 0) t += 2;
    return static_cast<int>(t);
}

// Splits squarefree s as p^alpha * u at the prime p (alpha in {0,1}).
void split_at(const BigInt& s, const BigInt& p, int& alpha, BigInt& u) {
    if (s % p == 0) {
        alpha = 1;
        u = s / p;
    } else {
        alpha = 0;
        u = s;
    }
}

} // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw Error("hilbert_symbol: arguments must be nonzero");
    BigInt sa = squarefree_part(a).first;
    BigInt sb = squarefree_part(b).first;

    if (v.infinite) return (sa < 0 && sb < 0) ? -1 : 1;

    const BigInt& p = v.prime;
    if (p == 2) {
        int alpha, beta;
        BigInt u, w;
        split_at(sa, BigInt(2), alpha, u);
        split_at(sb, BigInt(2), beta, w);
        int e = epsilon2(u) * epsilon2(w) + alpha * omega2(w) + beta * omega2(u);
        return (e % 2 == 0) ? 1 : -1;
    }

    int alpha, beta;
    BigInt u, w;
    split_at(sa, p, alpha, u);
    split_at(sb, p, beta, w);
    int sym = 1;
    if (alpha & beta & 1) sym *= legendre(BigInt(-1), p);
    if (beta == 1) sym *= legendre(u, p);
    if (alpha == 1) sym *= legendre(w, p);
    return sym;
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
    std::vector<Place> places;
    places.push_back(Place::infinity());
    places.push_back(Place::at(2));
    std::vector<BigInt> odd;
    for (const Rational& q : {a, b}) {
        BigInt s = abs_int(squarefree_part(q).first);
        for (const auto& [prime, e] : factorize(s).factors) {
            (void)e;
            if (prime != 2) odd.push_back(prime);
        }
    }
    std::sort(odd.begin(), odd.end());
    odd.erase(std::unique(odd.begin(), odd.end()), odd.end());
    for (const BigInt& p : odd) places.push_back(Place::at(p));
    return places;
}

std::vector<PlaceSymbolReport> hilbert_symbols(const Rational& a, const Rational& b) {
    std::vector<PlaceSymbolReport> out;
    for (const Place& v : relevant_places(a, b))
        out.push_back({v, hilbert_symbol(a, b, v)});
    return out;
}

bool is_isotropic(const Rational& a, const Rational& b) {
    for (const auto& r : hilbert_symbols(a, b))
        if (r.symbol == -1) return false;
    return true;
}

std::vector<Place> failing_places(const Rational& a, const Rational& b) {
    std::vector<Place> out;
    for (const auto& r : hilbert_symbols(a, b))
        if (r.symbol == -1) out.push_back(r.place);
    return out;
}

namespace {

// Scans the Holzer box |x| <= bx, |y| <= by for solutions of
// A x^2 + B y^2 = z^2 and returns the lexicographically least (z, x, y).
std::optional<ConicPoint> box_search(const BigInt& A, const BigInt& B, const BigInt& bx,
                                     const BigInt& by, const BigInt& bz) {
    std::optional<ConicPoint> best;
    auto better = [&](const ConicPoint& c) {
        if (!best) return true;
        if (c.z != best->z) return c.z < best->z;
        if (c.x != best->x) return c.x < best->x;
        return c.y < best->y;
    };
    for (BigInt x = 0; x <= bx; ++x) {
        BigInt ax2 = A * x * x;
        for (BigInt y = 0; y <= by; ++y) {
            if (x == 0 && y == 0) continue;
            BigInt z2 = ax2 + B * y * y;
            if (z2 < 0 || !is_perfect_square(z2)) continue;
            BigInt z = isqrt(z2);
            if (z > bz) continue;
            if (gcd(gcd(x, y), z) != 1) continue;
            ConicPoint c{x, y, z, A, B};
            if (better(c)) best = c;
        }
    }
    return best;
}

} // namespace

ConicPoint conic_point(const Rational& a, const Rational& b, const ConicPointOptions& opt) {
    if (!is_isotropic(a, b)) throw NoSolution("conic_point: form is anisotropic");
    BigInt A = squarefree_part(a).first;
    BigInt B = squarefree_part(b).first;

    // Holzer-type box; complete for squarefree coefficients.
    BigInt bz = isqrt(abs_int(A * B)) + 1;
    BigInt bx = isqrt(abs_int(B)) + 1, by = isqrt(abs_int(A)) + 1;
    for (unsigned round = 0; round <= opt.extension_rounds; ++round) {
        if (auto hit = box_search(A, B, bx, by, bz)) return *hit;
        bz *= 4;
        bx *= 2;
        by *= 2;
    }
    throw SearchExhausted("conic_point: no solution within extended bounds (defect signal)");
}

bool Conic::is_singular() const {
    // matrix [[xx, xy/2, x1/2], [xy/2, yy, y1/2], [x1/2, y1/2, c0]]
    Rational a = xx, b = xy / 2, c = x1 / 2, d = yy, e = y1 / 2, f = c0;
    Rational det = a * (d * f - e * e) - b * (b * f - e * c) + c * (b * e - d * c);
    return det == 0;
}

ConicParametrization::ConicParametrization(const Conic& conic, const Rational& x0,
                                           const Rational& y0)
    : conic_(conic), x0_(x0), y0_(y0) {
    if (conic_.eval(x0, y0) != 0) throw Error("conic_parametrize: p0 not on the conic");
    if (conic_.is_singular()) throw DegenerateConic();
    auto [fx, fy] = conic_.grad(x0, y0);
    if (fx == 0 && fy == 0) throw DegenerateConic("conic_parametrize: singular at p0");
    fx_ = fx;
    fy_ = fy;
}

std::optional<std::pair<Rational, Rational>> ConicParametrization::at(const Rational& t) const {
    // Substitute (x, y) = (x0 + u, y0 + t u):
    //   F = u * (fx + t fy) + u^2 * (xx + xy t + yy t^2)
    Rational quad = conic_.xx + conic_.xy * t + conic_.yy * t * t;
    if (quad == 0) return std::nullopt; // asymptotic direction
    Rational u = -(fx_ + t * fy_) / quad;
    return std::make_pair(x0_ + u, y0_ + t * u);
}

std::vector<Rational> ConicParametrization::exceptional_t() const {
    // roots of yy t^2 + xy t + xx = 0, rational ones
    std::vector<Rational> out;
    const Rational &A = conic_.yy, &B = conic_.xy, &C = conic_.xx;
    if (A == 0) {
        if (B != 0) out.push_back(-C / B);
        return out;
    }
    Rational disc = B * B - 4 * A * C;
    if (auto r = rational_sqrt(disc)) {
        out.push_back((-B + *r) / (2 * A));
        if (*r != 0) out.push_back((-B - *r) / (2 * A));
    }
    return out;
}

ConicParametrization conic_parametrize(const Conic& conic, const Rational& x0,
                                       const Rational& y0) {
    return ConicParametrization(conic, x0, y0);
}

} // namespace ratdist
