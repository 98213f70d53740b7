#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ratdist/factor.hpp"
#include "ratdist/numeric.hpp"

namespace ratdist {

// A place of Q: the archimedean one or a finite prime.
struct Place {
    bool infinite = false;
    BigInt prime = 0; // valid when !infinite

    static Place infinity() { return Place{true, 0}; }
    static Place at(const BigInt& p) { return Place{false, p}; }

    friend bool operator==(const Place& x, const Place& y) {
        return x.infinite == y.infinite && x.prime == y.prime;
    }
    std::string str() const { return infinite ? "inf" : prime.str(); }
};

struct PlaceSymbolReport {
    Place place;
    int symbol; // +1 or -1
};

// Local Hilbert symbol (a, b)_v for nonzero rationals.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

// All places where (a,b)_v could be -1: infinity, 2, and the odd primes of
// the squarefree parts.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

// Symbols at every relevant place.
std::vector<PlaceSymbolReport> hilbert_symbols(const Rational& a, const Rational& b);

// Whether a x^2 + b y^2 = z^2 has a nontrivial rational solution.
bool is_isotropic(const Rational& a, const Rational& b);

// Places with symbol -1 (empty iff isotropic).
std::vector<Place> failing_places(const Rational& a, const Rational& b);

// Primitive integral solution of A x^2 + B y^2 = z^2, A, B the squarefree
// parts of a, b.
struct ConicPoint {
    BigInt x, y, z;
    BigInt A, B; // the squarefree parts the triple solves
};

struct ConicPointOptions {
    unsigned extension_rounds = 6; // bound doublings after the Holzer box
};

ConicPoint conic_point(const Rational& a, const Rational& b, const ConicPointOptions& opt = {});

// Affine conic  xx*x^2 + xy*x*y + yy*y^2 + x1*x + y1*y + c0 = 0.
struct Conic {
    Rational xx, xy, yy, x1, y1, c0;

    Rational eval(const Rational& x, const Rational& y) const {
        return xx * x * x + xy * x * y + yy * y * y + x1 * x + y1 * y + c0;
    }
    // Gradient at a point.
    std::pair<Rational, Rational> grad(const Rational& x, const Rational& y) const {
        return {2 * xx * x + xy * y + x1, xy * x + 2 * yy * y + y1};
    }
    bool is_singular() const; // det of the homogenized 3x3 matrix vanishes
};

// Line-pencil parametrization of a smooth conic through a rational point p0.
// For parameter t the line of slope t through p0 meets the conic in one more
// point; exceptional t values (quadratic coefficient vanishing) are reported.
class ConicParametrization {
public:
    ConicParametrization(const Conic& conic, const Rational& x0, const Rational& y0);

    // The second intersection; nullopt exactly at exceptional t.
    std::optional<std::pair<Rational, Rational>> at(const Rational& t) const;

    // t is exceptional iff quad_a + quad_b*t + quad_c*t^2 = 0.
    std::vector<Rational> exceptional_t() const;

    const Rational& x0() const { return x0_; }
    const Rational& y0() const { return y0_; }

private:
    Conic conic_;
    Rational x0_, y0_;
    Rational fx_, fy_; // gradient at p0
};

ConicParametrization conic_parametrize(const Conic& conic, const Rational& x0, const Rational& y0);

} // namespace ratdist
