#include "ratdist/deciders.hpp"

namespace ratdist {

std::string reason_name(Reason r) {
    switch (r) {
        case Reason::RationalGramAndRepresentsSquare: return "RationalGramAndRepresentsSquare";
        case Reason::GramIrrational: return "GramIrrational";
        case Reason::SquareNotRepresented: return "SquareNotRepresented";
        case Reason::CollinearRational: return "CollinearRational";
        case Reason::CollinearIrrational: return "CollinearIrrational";
    }
    return "?";
}

namespace {

// First irrational entry of the Gram data, if any.
std::optional<QuadExt> irrational_entry(const GramFrame& g) {
    for (const QuadExt* e : {&g.p, &g.pprime, &g.s})
        if (!e->is_rational()) return *e;
    return std::nullopt;
}

Verdict decide_collinear(const Triangle& t, bool /*need_square*/) {
    auto [p, q] = collinear_data(t);
    Verdict v;
    v.certificate.collinear_pq = std::make_pair(p, q);
    if (p.is_rational() && q.is_rational()) {
        v.dense = true;
        v.reason = Reason::CollinearRational;
    } else {
        v.dense = false;
        v.reason = Reason::CollinearIrrational;
        v.certificate.irrational_entry = p.is_rational() ? q : p;
    }
    return v;
}

} // namespace

Verdict decide_square_density(const Triangle& t) {
    GramFrame g = gram_frame(t, 0);
    if (g.collinear()) return decide_collinear(t, false);

    Verdict v;
    if (auto bad = irrational_entry(g)) {
        v.dense = false;
        v.reason = Reason::GramIrrational;
        v.certificate.irrational_entry = *bad;
        return v;
    }
    v.dense = true;
    v.reason = Reason::RationalGramAndRepresentsSquare; // certificate: the rational Gram itself
    v.certificate.gram = g;
    return v;
}

Verdict decide_rational_density(const Triangle& t) {
    GramFrame g = gram_frame(t, 0);
    if (g.collinear()) return decide_collinear(t, true);

    Verdict v;
    if (auto bad = irrational_entry(g)) {
        v.dense = false;
        v.reason = Reason::GramIrrational;
        v.certificate.irrational_entry = *bad;
        return v;
    }
    Rational p = g.p.rational();
    Rational r = (g.deltasq / g.p).rational();
    if (is_isotropic(p, r)) {
        v.dense = true;
        v.reason = Reason::RationalGramAndRepresentsSquare;
        // p, r > 0 makes any nontrivial zero of p x^2 + r y^2 - z^2 have z != 0,
        // so the witness always exhibits a nonzero square.
        v.certificate.witness = conic_point(p, r);
        v.certificate.gram = g;
    } else {
        v.dense = false;
        v.reason = Reason::SquareNotRepresented;
        v.certificate.failing = failing_places(p, r);
    }
    return v;
}

Verdict check_condition_iv(const Triangle& t) {
    GramFrame g = gram_frame(t, 0);
    if (g.collinear()) return decide_collinear(t, true);

    Verdict v;
    if (auto bad = irrational_entry(g)) {
        // D or U fails to be rational exactly when a Gram entry is irrational
        v.dense = false;
        v.reason = Reason::GramIrrational;
        v.certificate.irrational_entry = *bad;
        return v;
    }
    IwasawaData d = iwasawa_data(g);
    // r x^2 + s y^2 represents 1 iff the homogenized form represents a square
    // (positive definiteness forces z != 0); xi is rational by construction here.
    if (is_isotropic(d.r, d.s)) {
        v.dense = true;
        v.reason = Reason::RationalGramAndRepresentsSquare;
        v.certificate.witness = conic_point(d.r, d.s);
        v.certificate.gram = g;
    } else {
        v.dense = false;
        v.reason = Reason::SquareNotRepresented;
        v.certificate.failing = failing_places(d.r, d.s);
    }
    return v;
}

bool is_admissible_transform(const Matrix2& T, const PlanePoint& /*translation*/) {
    if (T.det().is_zero()) throw SingularMatrix();

    // A rational matrix A with T = lambda * A exists iff all ratios of nonzero
    // entries are rational; lambda^2 is then any nonzero entry squared, up to
    // a rational square.
    const QuadExt* entries[4] = {&T.a, &T.b, &T.c, &T.d};
    const QuadExt* first = nullptr;
    for (const QuadExt* e : entries) {
        if (e->is_zero()) continue;
        if (!first) {
            first = e;
            continue;
        }
        if (!(*e / *first).is_rational()) return false;
    }
    // lambda^2 = first^2 must be rational: a + b sqrt(d) squares to a rational
    // iff a = 0 or b = 0.
    if (first->a() != 0 && first->b() != 0) return false;
    Rational lambda_sq = (*first * *first).rational();

    // lambda^2 is a sum of two rational squares iff its squarefree part has no
    // prime factor congruent to 3 mod 4.
    BigInt s = squarefree_part(lambda_sq).first; // positive: lambda real, lambda^2 > 0
    for (const auto& [prime, e] : factorize(s).factors) {
        (void)e;
        if (prime % 4 == 3) return false;
    }
    return true;
}

} // namespace ratdist
