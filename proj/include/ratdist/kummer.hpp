#pragma once

#include <array>
#include <map>

#include "ratdist/numeric.hpp"

namespace ratdist {

// Sparse polynomial in (z, u, v) with rational coefficients; exponents as
// (i, j, k) for z^i u^j v^k.
using Monomial = std::array<int, 3>;
using Poly3 = std::map<Monomial, Rational>;

Poly3 poly_add(const Poly3& f, const Poly3& g);
Poly3 poly_mul(const Poly3& f, const Poly3& g);
Poly3 poly_scale(const Rational& c, const Poly3& f);
Rational poly_eval(const Poly3& f, const Rational& z, const Rational& u, const Rational& v);

// Quartic model of the three-point surface in the distance coordinates
// (z, u, v) for the normalized triangle O = (0,0), P = (1,0), P' = (a,b).
struct KummerQuartic {
    Rational a, b;
    Poly3 coefficients; // vanishes exactly on verified distance triples
};

KummerQuartic derive_quartic(const Rational& a, const Rational& b);

Rational quartic_eval(const KummerQuartic& kq, const Rational& z, const Rational& u,
                      const Rational& v);

} // namespace ratdist
