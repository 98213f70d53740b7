#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ratdist/numeric.hpp"

namespace ratdist {

// ---------------------------------------------------------------------------
// Z[sqrt(delta)], delta > 1 nonsquare
// ---------------------------------------------------------------------------

struct RealQuadInt {
    BigInt a, b;       // a + b sqrt(delta)
    long long delta;

    RealQuadInt() : a(0), b(0), delta(0) {}
    RealQuadInt(BigInt a_, BigInt b_, long long d) : a(std::move(a_)), b(std::move(b_)), delta(d) {}

    RealQuadInt conj() const { return {a, -b, delta}; }
    BigInt norm() const { return a * a - BigInt(delta) * b * b; }
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_unit() const { BigInt n = norm(); return n == 1 || n == -1; }

    friend bool operator==(const RealQuadInt& x, const RealQuadInt& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend RealQuadInt operator+(const RealQuadInt& x, const RealQuadInt& y) {
        return {x.a + y.a, x.b + y.b, x.delta};
    }
    friend RealQuadInt operator-(const RealQuadInt& x, const RealQuadInt& y) {
        return {x.a - y.a, x.b - y.b, x.delta};
    }
    friend RealQuadInt operator-(const RealQuadInt& x) { return {-x.a, -x.b, x.delta}; }
    friend RealQuadInt operator*(const RealQuadInt& x, const RealQuadInt& y) {
        return {x.a * y.a + BigInt(x.delta) * x.b * y.b, x.a * y.b + x.b * y.a, x.delta};
    }
    // x / y when y is a unit (or divides exactly); throws otherwise.
    RealQuadInt divide_exact(const RealQuadInt& y) const;

    std::string str() const;
};

// Fundamental solution of x^2 - delta y^2 = +-1 with x, y > 0, minimal, via
// the continued fraction of sqrt(delta).
RealQuadInt fundamental_unit(long long delta);

// Points on the vertical line x = a with both construction distances in
// Z[sqrt(delta)], from the unit orbit omega = omega0^n, omega0 the smallest
// power of the fundamental unit congruent to 1 mod 2.
struct RealQuadLinePoint {
    RealQuadInt qx, qy;   // the point Q = (a, t)
    RealQuadInt s;        // with a^2 + (t-b)^2 = s^2 exactly
    RealQuadInt dp;       // t - b
    RealQuadInt omega;    // the unit used
    bool degenerate = false; // omega = 1 gives Q = P
    // construction frame (after any coordinate role swap)
    BigInt a_used, b_used;
    bool swapped = false;
};

std::vector<RealQuadLinePoint> realquad_line_points(const BigInt& a, const BigInt& b,
                                                    long long delta, std::size_t count);

// Further integral points on the confocal conic through a seed, generated by
// a relative-Pell automorph found within a bounded search.
struct ConfocalPoint {
    RealQuadInt x, y;   // ambient coordinates
    RealQuadInt d1, d2; // distances from the two foci, in the ring
};

struct ConfocalOptions {
    long long search_bound = 64;   // box for the automorph search components
    int unit_power_range = 10;     // eta = +-eps^m, |m| <= range
    std::size_t align_iterations = 512;
};

std::vector<ConfocalPoint> realquad_confocal_extend(const BigInt& a, const BigInt& b,
                                                    long long delta,
                                                    const RealQuadLinePoint& seed,
                                                    std::size_t count,
                                                    const ConfocalOptions& opt = {});

// ---------------------------------------------------------------------------
// Z[i]
// ---------------------------------------------------------------------------

struct GaussianInt {
    BigInt re, im;

    GaussianInt() : re(0), im(0) {}
    GaussianInt(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}

    GaussianInt conj() const { return {re, -im}; }
    BigInt norm() const { return re * re + im * im; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }

    friend bool operator==(const GaussianInt& x, const GaussianInt& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianInt operator-(const GaussianInt& x) { return {-x.re, -x.im}; }
    friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }

    std::string str() const;
};

// Euclidean division, quotient rounded to nearest.
GaussianInt gaussian_div(const GaussianInt& x, const GaussianInt& y, GaussianInt* rem = nullptr);
GaussianInt gaussian_gcd(GaussianInt x, GaussianInt y);
bool gaussian_divides(const GaussianInt& d, const GaussianInt& x);
GaussianInt gaussian_divide_exact(const GaussianInt& x, const GaussianInt& d);

// Exact square root in Z[i], if one exists.
std::optional<GaussianInt> gaussian_sqrt(const GaussianInt& x);

// Whether x is a square in Q(i) (equivalently x*y^2 a square in Z[i] for some
// rational y; for x in Z[i]: norm square and x = ratio of two ring squares).
bool gaussian_is_square_in_field(const GaussianInt& num, const GaussianInt& den);

struct GaussianSystem {
    GaussianInt alpha;
    GaussianInt d1, d2;
    GaussianInt r, s; // d1 r^2 - d2 s^2 = alpha
    GaussianInt u, v; // d1 u^2 - d2 v^2 = conj(alpha)
};

GaussianSystem gaussian_decompose(const GaussianInt& alpha);

struct GaussianOrbitSolution {
    GaussianInt r, s, u, v;  // base-pair orbit elements
    GaussianInt w1, w2, z;   // w1 = d1 r^2, w2 = d1 u^2, z^2 = w1 w2
    std::optional<GaussianInt> x, y; // plane point when the parity filter passes
    GaussianInt k;           // (z-k)^2 = (w1-alpha)(w2-conj alpha)
};

struct GaussianOrbitReport {
    std::vector<GaussianOrbitSolution> solutions;
    bool automorph_found = false;
    GaussianInt A, B; // A^2 - d1 d2 B^2 = 1, when found
};

GaussianOrbitReport gaussian_orbit(const GaussianSystem& sys, std::size_t count, long long bound);

} // namespace ratdist
