#pragma once

#include <json.hpp>

#include "ratdist/deciders.hpp"
#include "ratdist/rings.hpp"
#include "ratdist/threepoint.hpp"
#include "ratdist/twopoint.hpp"

namespace ratdist {

using json = nlohmann::json;

json to_json(const Rational& q);          // "p/q" or "p"
json to_json(const QuadExt& x);           // {a, b, d}
json to_json(const PlanePoint& p);        // {x, y}
json to_json(const ConicPoint& w);        // [x, y, z]
json to_json(const Place& v);             // "inf" or "p"
json to_json(const Verdict& v);
json to_json(const Solution2& s);
json to_json(const Solution3& s);
json to_json(const CollinearSolution& s);
json to_json(const RealQuadInt& x);       // {a, b, delta}
json to_json(const GaussianInt& x);       // {re, im}
json to_json(const RealQuadLinePoint& p);
json to_json(const ConfocalPoint& p);
json to_json(const GaussianOrbitSolution& s);

Rational rational_from_json(const json& j);
QuadExt quadext_from_json(const json& j);

} // namespace ratdist
