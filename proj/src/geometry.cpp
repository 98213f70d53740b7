#include "ratdist/geometry.hpp"

namespace ratdist {

Triangle Triangle::from_points(const PlanePoint& p1, const PlanePoint& p2, const PlanePoint& p3) {
    Triangle t;
    t.coords_ = {p1, p2, p3};
    t.s01_ = (p1 - p2).norm_sq();
    t.s02_ = (p1 - p3).norm_sq();
    t.s12_ = (p2 - p3).norm_sq();
    return t;
}

Triangle Triangle::from_sides_sq(const QuadExt& d12, const QuadExt& d13, const QuadExt& d23) {
    Triangle t;
    t.s01_ = d12;
    t.s02_ = d13;
    t.s12_ = d23;
    for (const QuadExt* s : {&t.s01_, &t.s02_, &t.s12_})
        if (s->sign() < 0) throw Error("Triangle: squared side lengths must be nonnegative");
    // realizability in the plane: the Gram determinant must be nonnegative
    // (zero = collinear, which stays allowed and flagged downstream)
    QuadExt s = (d12 + d13 - d23) / QuadExt(2);
    if ((d12 * d13 - s * s).sign() < 0)
        throw Error("Triangle: squared side lengths violate the triangle inequality");
    return t;
}

const std::array<PlanePoint, 3>& Triangle::vertices() const {
    if (!coords_) throw Error("Triangle: no coordinates (squared-length form)");
    return *coords_;
}

QuadExt Triangle::side_sq(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i == 0 && j == 1) return s01_;
    if (i == 0 && j == 2) return s02_;
    if (i == 1 && j == 2) return s12_;
    throw Error("Triangle: bad vertex pair");
}

GramFrame gram_frame(const Triangle& t, int origin_index) {
    if (origin_index < 0 || origin_index > 2) throw Error("gram_frame: origin index out of range");
    int o = origin_index, i = (o + 1) % 3, j = (o + 2) % 3;

    GramFrame g;
    g.origin = o;
    if (t.has_coordinates()) {
        const auto& v = t.vertices();
        PlanePoint P = v[i] - v[o], Pp = v[j] - v[o];
        g.p = P.norm_sq();
        g.pprime = Pp.norm_sq();
        g.s = P.dot(Pp);
    } else {
        g.p = t.side_sq(o, i);
        g.pprime = t.side_sq(o, j);
        // polarization: 2 (P.P') = |P|^2 + |P'|^2 - |P - P'|^2
        g.s = (g.p + g.pprime - t.side_sq(i, j)) / QuadExt(2);
    }
    if (g.p.is_zero() || g.pprime.is_zero() || t.side_sq(i, j).is_zero())
        throw CoincidentPoints();
    g.deltasq = g.p * g.pprime - g.s * g.s;
    g.r = g.deltasq / g.p;
    g.c = g.s / g.p;
    return g;
}

JLattice orthogonal_basis(const GramFrame& g, const Triangle& t) {
    if (g.collinear()) throw Collinear();
    if (!g.rational()) throw NotRationalGram();
    const auto& v = t.vertices();
    int o = g.origin, i = (o + 1) % 3, j = (o + 2) % 3;
    PlanePoint P = v[i] - v[o], Pp = v[j] - v[o];
    QuadExt c = g.s / g.p;
    PlanePoint R = Pp - c * P;

    JLattice l;
    l.base = v[o];
    l.v1 = P;
    l.v2 = R;
    l.p = g.p.rational();
    l.r = g.r.rational();
    if (!P.dot(R).is_zero()) throw Error("orthogonal_basis: R not orthogonal (defect)");
    return l;
}

std::optional<std::pair<Rational, Rational>> j_membership(const PlanePoint& q, const JLattice& l) {
    PlanePoint w = q - l.base;
    QuadExt tq = l.v1.dot(w) / QuadExt(l.p);
    QuadExt uq = l.v2.dot(w) / QuadExt(l.r);
    if (!tq.is_rational() || !uq.is_rational()) return std::nullopt;
    // the coordinates are exact iff the decomposition reproduces q
    PlanePoint rec = l.base + tq.rational() * l.v1 + uq.rational() * l.v2;
    if (!(rec == q)) return std::nullopt;
    return std::make_pair(tq.rational(), uq.rational());
}

IwasawaData iwasawa_data(const GramFrame& g) {
    if (g.collinear()) throw Collinear();
    if (!g.rational()) throw NotRationalGram();
    IwasawaData d;
    d.r = g.p.rational();
    d.xi = (g.s / g.p).rational();
    d.s = (g.deltasq / g.p).rational();
    return d;
}

std::pair<QuadExt, QuadExt> collinear_data(const Triangle& t, int origin_index) {
    GramFrame g = gram_frame(t, origin_index); // throws CoincidentPoints for repeated vertices
    if (!g.collinear()) throw NotCollinear();
    // P' = q P with q = (P.P') / |P|^2
    return {g.p, g.s / g.p};
}

} // namespace ratdist
