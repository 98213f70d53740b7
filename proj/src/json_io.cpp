#include "ratdist/json_io.hpp"

namespace ratdist {

json to_json(const Rational& q) { return to_string(q); }

json to_json(const QuadExt& x) {
    return json{{"a", to_string(x.a())}, {"b", to_string(x.b())}, {"d", x.d()}};
}

json to_json(const PlanePoint& p) { return json{{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

json to_json(const ConicPoint& w) { return json::array({w.x.str(), w.y.str(), w.z.str()}); }

json to_json(const Place& v) { return v.str(); }

json to_json(const Verdict& v) {
    json cert = json::object();
    if (v.certificate.witness) cert["witness"] = to_json(*v.certificate.witness);
    if (v.certificate.irrational_entry)
        cert["irrational_entry"] = to_json(*v.certificate.irrational_entry);
    if (!v.certificate.failing.empty()) {
        json pl = json::array();
        for (const Place& p : v.certificate.failing) pl.push_back(to_json(p));
        cert["failing_places"] = pl;
    }
    if (v.certificate.gram) {
        const GramFrame& g = *v.certificate.gram;
        cert["gram"] = json{{"p", to_json(g.p)},
                            {"pprime", to_json(g.pprime)},
                            {"s", to_json(g.s)},
                            {"r", to_json(g.r)},
                            {"deltasq", to_json(g.deltasq)}};
    }
    if (v.certificate.collinear_pq)
        cert["collinear"] = json{{"p", to_json(v.certificate.collinear_pq->first)},
                                 {"q", to_json(v.certificate.collinear_pq->second)}};
    return json{{"dense", v.dense}, {"reason", reason_name(v.reason)}, {"certificate", cert}};
}

json to_json(const Solution2& s) {
    return json{{"q", json{{"x", to_json(s.qx)}, {"y", to_json(s.qy)}}},
                {"d0", to_json(s.d0)},
                {"d1", to_json(s.d1)},
                {"k", to_json(s.k)},
                {"z", to_json(s.z)},
                {"fiber_k", to_json(s.fiber_k)},
                {"degenerate", s.degenerate},
                {"verified", true}};
}

json to_json(const Solution3& s) {
    json j{{"frame", json{{"x", to_json(s.tcoord)}, {"y", to_json(s.ucoord)}}},
           {"d0", to_json(s.d0)},
           {"d", to_json(s.d)},
           {"dprime", to_json(s.dprime)},
           {"z", to_json(s.z)},
           {"k", to_json(s.k)},
           {"kprime", to_json(s.kprime)},
           {"fiber", json{{"lambda", to_json(s.lambda)}, {"mu", to_json(s.mu)}}},
           {"multiple", s.multiple},
           {"verified", true}};
    if (s.ambient) j["q"] = to_json(*s.ambient);
    return j;
}

json to_json(const CollinearSolution& s) {
    return json{{"z", to_json(s.z)},      {"t", to_json(s.t)},
                {"v", to_json(s.v)},      {"u", to_json(s.u)},
                {"d0", to_json(s.d0)},    {"d", to_json(s.d)},
                {"dprime", to_json(s.dprime)}, {"k", to_json(s.k)},
                {"kprime", to_json(s.kprime)}, {"real", s.real},
                {"verified", true}};
}

json to_json(const RealQuadInt& x) {
    return json{{"a", x.a.str()}, {"b", x.b.str()}, {"delta", x.delta}};
}

json to_json(const GaussianInt& x) { return json{{"re", x.re.str()}, {"im", x.im.str()}}; }

json to_json(const RealQuadLinePoint& p) {
    return json{{"q", json{{"x", to_json(p.qx)}, {"y", to_json(p.qy)}}},
                {"s", to_json(p.s)},
                {"d_p", to_json(p.dp)},
                {"omega", to_json(p.omega)},
                {"degenerate", p.degenerate},
                {"verified", true}};
}

json to_json(const ConfocalPoint& p) {
    return json{{"q", json{{"x", to_json(p.x)}, {"y", to_json(p.y)}}},
                {"d1", to_json(p.d1)},
                {"d2", to_json(p.d2)},
                {"verified", true}};
}

json to_json(const GaussianOrbitSolution& s) {
    json j{{"r", to_json(s.r)},   {"s", to_json(s.s)},   {"u", to_json(s.u)},
           {"v", to_json(s.v)},   {"w1", to_json(s.w1)}, {"w2", to_json(s.w2)},
           {"z", to_json(s.z)},   {"k", to_json(s.k)},   {"verified", true}};
    if (s.x && s.y) j["q"] = json{{"x", to_json(*s.x)}, {"y", to_json(*s.y)}};
    return j;
}

Rational rational_from_json(const json& j) { return rational_from_string(j.get<std::string>()); }

QuadExt quadext_from_json(const json& j) {
    Rational a = rational_from_string(j.at("a").get<std::string>());
    if (!j.contains("b")) return QuadExt(a);
    Rational b = rational_from_string(j.at("b").get<std::string>());
    long long d = j.value("d", 0LL);
    return QuadExt(a, b, d);
}

} // namespace ratdist
