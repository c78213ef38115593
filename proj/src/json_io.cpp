#include "unitons/json_io.hpp"

#include <stdexcept>

namespace unitons {

json to_json(const LatticeElement& xi) {
    json j;
    j["n"] = xi.n;
    j["coeffs"] = xi.coeffs;
    return j;
}

LatticeElement lattice_from_json(const json& j) {
    LatticeElement xi;
    xi.n = j.at("n").get<int>();
    xi.coeffs = j.at("coeffs").get<std::vector<long>>();
    validate(xi);
    return xi;
}

json to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs())
        out.push_back(c.str());
    return out;
}

Poly poly_from_json(const json& j) {
    std::vector<ExactScalar> coeffs;
    for (const auto& item : j)
        coeffs.push_back(ExactScalar::parse(item.get<std::string>()));
    return Poly(std::move(coeffs));
}

json to_json(const PolyVec& v) {
    json out = json::array();
    for (const auto& p : v)
        out.push_back(to_json(p));
    return out;
}

PolyVec polyvec_from_json(const json& j) {
    PolyVec v;
    for (const auto& item : j)
        v.push_back(poly_from_json(item));
    return v;
}

json to_json(const FlagType& ft) {
    json j;
    j["n"] = ft.n;
    j["s"] = ft.s;
    j["r"] = ft.r;
    j["d"] = ft.d;
    return j;
}

FlagType flagtype_from_json(const json& j) {
    FlagType ft;
    ft.n = j.at("n").get<int>();
    ft.s = j.at("s").get<int>();
    ft.r = j.at("r").get<int>();
    ft.d = j.at("d").get<std::vector<int>>();
    return ft;
}

json to_json(const MeromorphicBundle& e) {
    json j;
    j["n"] = e.n;
    json cols = json::array();
    for (int c = 0; c < e.frame.cols; ++c)
        cols.push_back(to_json(e.frame.column(c)));
    j["frame"] = cols;
    return j;
}

MeromorphicBundle bundle_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<PolyVec> cols;
    for (const auto& item : j.at("frame"))
        cols.push_back(polyvec_from_json(item));
    return {n, PolyMatrix::from_columns(n, cols)};
}

json to_json(const HoloFlag& flag) {
    json j;
    j["n"] = flag.n;
    j["lo"] = flag.lo;
    json members = json::array();
    for (const auto& m : flag.members)
        members.push_back(to_json(m));
    j["members"] = members;
    return j;
}

HoloFlag flag_from_json(const json& j) {
    HoloFlag flag;
    flag.n = j.at("n").get<int>();
    flag.lo = j.at("lo").get<int>();
    for (const auto& item : j.at("members"))
        flag.members.push_back(bundle_from_json(item));
    return flag;
}

json to_json(const LaurentVec& v) {
    json terms = json::array();
    for (const auto& [p, vec] : v.terms) {
        json t;
        t["lambda_power"] = p;
        t["vector"] = to_json(vec);
        terms.push_back(t);
    }
    json j;
    j["terms"] = terms;
    return j;
}

LaurentVec laurent_from_json(int n, const json& j) {
    LaurentVec v;
    v.n = n;
    for (const auto& t : j.at("terms")) {
        PolyVec vec = polyvec_from_json(t.at("vector"));
        if (static_cast<int>(vec.size()) != n)
            throw std::invalid_argument("laurent term has wrong length");
        v.terms.emplace_back(t.at("lambda_power").get<int>(), std::move(vec));
    }
    v.normalize();
    return v;
}

json to_json(const GradedModel& w) {
    json j;
    j["n"] = w.n;
    j["s"] = w.s;
    j["k"] = w.k;
    json gens = json::array();
    for (const auto& g : w.gens)
        gens.push_back(to_json(g));
    j["generators"] = gens;
    return j;
}

GradedModel model_from_json(const json& j) {
    GradedModel w;
    w.n = j.at("n").get<int>();
    w.s = j.at("s").get<int>();
    w.k = j.at("k").get<int>();
    for (const auto& g : j.at("generators"))
        w.gens.push_back(laurent_from_json(w.n, g));
    return w;
}

namespace {

json check_json(const CheckResult& c) {
    json j;
    j["ok"] = c.ok;
    if (c.witness) {
        json w;
        w["generator"] = c.witness->generator;
        w["residual"] = to_json(c.witness->residual);
        j["witness"] = w;
    }
    return j;
}

} // namespace

json to_json(const VerificationReport& report) {
    json j;
    j["lambda_module"] = check_json(report.lambda_module);
    j["pseudo_horizontal"] = check_json(report.pseudo_horizontal);
    j["su_condition"] = check_json(report.su_condition);
    if (report.involution)
        j["involution"] = check_json(*report.involution);
    j["holomorphic"] = "structural";
    j["graded_type"] = to_json(report.graded_type);
    j["passed"] = report.passed();
    return j;
}

json orbit_set_json(const CanonicalSet& set) {
    json j;
    j["n"] = set.n;
    j["mode"] = set.mode == CanonicalMode::plain ? "plain" : "symmetric";
    json orbits = json::array();
    for (const auto& orbit : set.orbits) {
        const LatticeElement& rep = orbit.front();
        json o;
        o["representative"] = rep.coeffs;
        json members = json::array();
        for (const auto& e : orbit)
            members.push_back(e.coeffs);
        o["members"] = members;
        o["support"] = support(rep);
        o["flag_type"] = to_json(flag_type(rep));
        if (set.mode == CanonicalMode::symmetric)
            o["target"] = grassmannian_target(rep).str();
        orbits.push_back(o);
    }
    j["orbits"] = orbits;
    return j;
}

} // namespace unitons
