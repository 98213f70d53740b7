#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratdist/geometry.hpp"
#include "ratdist/quadforms.hpp"

namespace ratdist {

enum class Reason {
    RationalGramAndRepresentsSquare,
    GramIrrational,
    SquareNotRepresented,
    CollinearRational,
    CollinearIrrational,
};

std::string reason_name(Reason r);

// Certificate payload: exactly one member is meaningful, per reason.
struct Certificate {
    std::optional<ConicPoint> witness;          // dense, non-collinear
    std::optional<GramFrame> gram;              // dense (square distances) / collinear data
    std::optional<QuadExt> irrational_entry;    // Gram entry or collinear p/q that fails
    std::vector<Place> failing;                 // Hilbert places with symbol -1
    std::optional<std::pair<QuadExt, QuadExt>> collinear_pq;
};

struct Verdict {
    bool dense = false;
    Reason reason = Reason::GramIrrational;
    Certificate certificate;
};

// Rational squared distances: dense iff the Gram data is rational
// (collinear case: p and q rational).
Verdict decide_square_density(const Triangle& t);

// Main density criterion for rational distances: rational Gram and the form
// p x^2 + r y^2 represents a nonzero square (collinear case: p, q rational).
Verdict decide_rational_density(const Triangle& t);

// The Iwasawa-decomposition form of the criterion; must agree with
// decide_rational_density on every input.
Verdict check_condition_iv(const Triangle& t);

struct Matrix2 {
    QuadExt a, b, c, d; // row-major [[a, b], [c, d]]
    QuadExt det() const { return a * d - b * c; }
};

// T admissible iff T = lambda * A with A rational and lambda^2 a sum of two
// rational squares; the translation part is unconstrained.
bool is_admissible_transform(const Matrix2& T, const PlanePoint& translation);

} // namespace ratdist
