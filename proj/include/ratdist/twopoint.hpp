#pragma once

#include <cstdint>
#include <vector>

#include "ratdist/geometry.hpp"
#include "ratdist/quadforms.hpp"

namespace ratdist {

struct TwoPointConfig {
    Rational ox, oy; // O
    Rational px, py; // P = (a, b), distinct from O

    TwoPointConfig(Rational ox_, Rational oy_, Rational px_, Rational py_)
        : ox(std::move(ox_)), oy(std::move(oy_)), px(std::move(px_)), py(std::move(py_)) {
        if (ox == px && oy == py) throw CoincidentPoints("two-point: O = P");
    }
};

struct Solution2 {
    Rational qx, qy;   // the point
    Rational d0;       // d(O, Q) >= 0
    Rational d1;       // d(P, Q) >= 0
    Rational k;        // d0 - d1
    Rational z;        // signed distance from O along the fiber: z^2 = d0^2
    Rational fiber_k;  // the fiber parameter: (z - fiber_k)^2 = d1^2
    bool degenerate = false; // Q coincides with a focus
};

// Pythagorean parametrization x = 2 lambda p, y = lambda (p^2-1), z = lambda (p^2+1).
struct PythTriple {
    Rational x, y, z;
};
PythTriple pythagorean_point(const Rational& lambda, const Rational& p);

// The rational section of the confocal family: the point on the vertical
// line x = a with signed distance difference k.
Solution2 section_point(const TwoPointConfig& cfg, const Rational& k);

// Coefficients of the confocal conic (2ax + 2by - delta)^2 = 4k^2(x^2+y^2).
struct ConfocalConic {
    Conic conic;
    Rational delta; // a^2 + b^2 - k^2
    bool degenerate;
};
ConfocalConic confocal_conic(const TwoPointConfig& cfg, const Rational& k);

std::vector<Solution2> generate2(const TwoPointConfig& cfg, std::size_t count,
                                 std::uint64_t seed);

struct LinePoint {
    Rational qx, qy;
    Rational d0;
};

// Rational points with rational distance from O on the line y = a x + b
// (coefficients relative to ambient coordinates; the line must miss O).
std::vector<LinePoint> line_points(const Rational& ox, const Rational& oy, const Rational& a,
                                   const Rational& b, std::size_t count);

} // namespace ratdist
