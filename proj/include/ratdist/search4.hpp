#pragma once

#include <vector>

#include "ratdist/geometry.hpp"

namespace ratdist {

struct Search4Hit {
    Rational t, u;                 // lattice coordinates over the first three points
    PlanePoint q;                  // ambient point
    std::vector<Rational> dists;   // the four rational distances
};

// Bounded search for a point at rational distance from four points: enumerate
// the J-lattice of the first three with coordinate height <= H. The points
// must have pairwise rational Gram data (otherwise the answer is empty
// immediately by the squared-distance criterion applied to sub-triples).
// Three points run the same enumeration as a consistency mode.
std::vector<Search4Hit> search4(const std::vector<PlanePoint>& pts, long long height);

} // namespace ratdist
