#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ratdist/deciders.hpp"
#include "ratdist/geometry.hpp"

namespace ratdist {

// Frame of an admissible non-collinear triangle: all Gram data rational,
// P at (1,0) and P' at (c,1) in the basis (P, R).
struct ThreePointFrame {
    Rational p, pprime, s, r, c;
    std::optional<JLattice> lattice; // present when the triangle has coordinates
    Triangle triangle;               // original configuration
    int origin = 0;
};

// A point (lambda, mu) on the conic S: mu^2 = p + r lambda^2, with
// eta = p c + r lambda.
struct FiberPoint {
    Rational lambda, mu, eta;
};

// Projective point (K : K' : H) on the cubic of a fiber, stored primitive
// integral with positive leading nonzero coordinate.
struct CubicPoint {
    BigInt K, Kp, H;

    friend bool operator==(const CubicPoint& a, const CubicPoint& b) {
        return a.K == b.K && a.Kp == b.Kp && a.H == b.H;
    }
    friend bool operator<(const CubicPoint& a, const CubicPoint& b) {
        if (a.K != b.K) return a.K < b.K;
        if (a.Kp != b.Kp) return a.Kp < b.Kp;
        return a.H < b.H;
    }
    std::string str() const { return "(" + K.str() + ":" + Kp.str() + ":" + H.str() + ")"; }
};

CubicPoint make_cubic_point(const Rational& K, const Rational& Kp, const Rational& H);

struct Solution3 {
    Rational tcoord, ucoord;           // frame coordinates (x, y) in basis (P, R)
    Rational z, k, kprime;             // signed values: z = mu x, distances up to sign
    Rational d0, d, dprime;            // |z|, |z-k|, |z-k'|
    std::optional<PlanePoint> ambient; // origin + x P + y R, when coordinates exist
    Rational lambda, mu;               // fiber
    int multiple = 0;                  // n for n*A points (0 = not from the multiple sweep)
};

ThreePointFrame frame(const Triangle& t, int origin_index);

// Good fiber points on S: skips mu=0, lambda=0, c*lambda=1 and, when p = p',
// (c+1)*lambda = 1; enumerates both signs of mu. Deterministic in seed.
std::vector<FiberPoint> fiber_points(const ThreePointFrame& f, std::size_t count,
                                     std::uint64_t seed);

// The cubic (p H^2 - K^2)(eta H - mu K') = (p' H^2 - K'^2)(p H - mu K).
class CubicFiber {
public:
    CubicFiber(const ThreePointFrame& f, const FiberPoint& fp);

    Rational eval(const CubicPoint& pt) const;
    std::array<Rational, 3> grad(const CubicPoint& pt) const;
    bool on_curve(const CubicPoint& pt) const { return eval(pt) == 0; }

    CubicPoint A() const { return CubicPoint{1, 0, 0}; }
    CubicPoint B() const { return CubicPoint{0, 1, 0}; }
    CubicPoint C() const { return CubicPoint{1, 1, 0}; }
    CubicPoint N() const; // (p : eta : mu)

    // Third intersection of the line P1 P2 (tangent when P1 = P2).
    CubicPoint third(const CubicPoint& P1, const CubicPoint& P2) const;

    // Group law with origin N.
    CubicPoint add(const CubicPoint& P1, const CubicPoint& P2) const;
    CubicPoint neg(const CubicPoint& P1) const;

    const FiberPoint& fiber() const { return fp_; }
    const Rational& p() const { return p_; }
    const Rational& pprime() const { return pp_; }

private:
    Rational p_, pp_, c_, r_;
    FiberPoint fp_;
};

Rational cubic_eval(const ThreePointFrame& f, const FiberPoint& fp, const CubicPoint& pt);
CubicPoint cubic_third_intersection(const ThreePointFrame& f, const FiberPoint& fp,
                                    const CubicPoint& P1, const CubicPoint& P2);
CubicPoint cubic_add(const ThreePointFrame& f, const FiberPoint& fp, const CubicPoint& P1,
                     const CubicPoint& P2);
CubicPoint cubic_neg(const ThreePointFrame& f, const FiberPoint& fp, const CubicPoint& P1);

// Closed form of A+B on the fiber (requires eta != p).
CubicPoint section_AplusB(const ThreePointFrame& f, const FiberPoint& fp);

Solution3 solution_from_point(const ThreePointFrame& f, const FiberPoint& fp,
                              const CubicPoint& pt);

struct Generate3Report {
    std::vector<Solution3> solutions;
    std::size_t fibers_used = 0;
    std::size_t fibers_rejected_torsion = 0; // failed the distinct-multiples screen
    std::vector<std::pair<FiberPoint, bool>> fiber_evidence; // pairwise-distinct flag
};

Generate3Report generate3(const Triangle& t, std::size_t fibers, std::size_t multiples,
                          std::uint64_t seed);

// Section from the A = 0 branch of the quadratic (5.17): the unit-conic point
// (f, g) with p f^2 + r g^2 = 1 gives k = p f, phi1 = r g.
Solution3 alt_section(const ThreePointFrame& f, const Rational& uf, const Rational& ug);

// Collinear generator: P' = q P, p = |P|^2; solves the linear system for z
// and emits Q = t P + u R with u = sqrt(v).
struct CollinearSolution {
    Rational z, t, v;
    QuadExt u;                // sqrt(v) as an exact quadratic value (or rational)
    Rational d0, d, dprime;   // p|z|, p|z+k|, p|z+k'|
    Rational k, kprime;
    bool real = true;         // v >= 0
};

CollinearSolution collinear_solution(const Rational& p, const Rational& q, const Rational& k,
                                     const Rational& kprime);

std::vector<CollinearSolution> generate3_collinear(
    const Rational& p, const Rational& q,
    const std::vector<std::pair<Rational, Rational>>& pairs, bool realonly = true);

} // namespace ratdist
