#pragma once

#include <array>
#include <optional>
#include <utility>

#include "ratdist/quadext.hpp"

namespace ratdist {

struct PlanePoint {
    QuadExt x, y;

    PlanePoint() = default;
    PlanePoint(QuadExt px, QuadExt py) : x(std::move(px)), y(std::move(py)) {
        if (x.d() != 0 && y.d() != 0 && x.d() != y.d())
            throw MixedFieldError("PlanePoint: coordinates in different fields");
    }

    friend bool operator==(const PlanePoint& p, const PlanePoint& q) {
        return p.x == q.x && p.y == q.y;
    }
    friend PlanePoint operator+(const PlanePoint& p, const PlanePoint& q) {
        return {p.x + q.x, p.y + q.y};
    }
    friend PlanePoint operator-(const PlanePoint& p, const PlanePoint& q) {
        return {p.x - q.x, p.y - q.y};
    }
    friend PlanePoint operator*(const QuadExt& c, const PlanePoint& p) {
        return {c * p.x, c * p.y};
    }
    QuadExt dot(const PlanePoint& q) const { return x * q.x + y * q.y; }
    QuadExt norm_sq() const { return dot(*this); }
};

// Three-point configuration, either by vertices or by squared side lengths
// (d12^2, d13^2, d23^2). Squared-length form is the canonical input for the
// density criteria since they are isometry-invariant.
class Triangle {
public:
    Triangle() = default; // empty placeholder; fill via the named constructors

    static Triangle from_points(const PlanePoint& p1, const PlanePoint& p2, const PlanePoint& p3);
    static Triangle from_sides_sq(const QuadExt& d12, const QuadExt& d13, const QuadExt& d23);

    bool has_coordinates() const { return coords_.has_value(); }
    const std::array<PlanePoint, 3>& vertices() const;

    // Squared side length between vertices i and j (0-based).
    QuadExt side_sq(int i, int j) const;

private:
    std::optional<std::array<PlanePoint, 3>> coords_;
    QuadExt s01_, s02_, s12_;
};

struct GramFrame {
    QuadExt p;       // |P|^2
    QuadExt pprime;  // |P'|^2
    QuadExt s;       // (P.P')
    QuadExt r;       // Delta^2 / p
    QuadExt c;       // s / p
    QuadExt deltasq; // p p' - s^2
    int origin = 0;

    bool collinear() const { return deltasq.is_zero(); }
    bool rational() const { return p.is_rational() && pprime.is_rational() && s.is_rational(); }
};

struct IwasawaData {
    Rational r, s, xi;
};

struct JLattice {
    PlanePoint base; // the chosen origin vertex
    PlanePoint v1;   // P
    PlanePoint v2;   // R = P' - (s/p) P, orthogonal to v1
    Rational p;      // |v1|^2
    Rational r;      // |v2|^2
};

GramFrame gram_frame(const Triangle& t, int origin_index);

JLattice orthogonal_basis(const GramFrame& g, const Triangle& t);

// Coordinates of q in the lattice basis when both are rational.
std::optional<std::pair<Rational, Rational>> j_membership(const PlanePoint& q, const JLattice& l);

IwasawaData iwasawa_data(const GramFrame& g);

// For a collinear triangle (with the chosen origin): P' = q P, p = |P|^2.
std::pair<QuadExt, QuadExt> collinear_data(const Triangle& t, int origin_index = 0);

} // namespace ratdist
