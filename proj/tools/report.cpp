#include "report.hpp"

namespace symlie::report {

Json header(const std::string& command, const Json& input, const SampleDomain& dom) {
    Json j;
    j["schema"] = kSchema;
    j["tool"] = {{"name", "symlie"}, {"version", kVersion}};
    j["command"] = command;
    j["input"] = input;
    j["seed"] = dom.seed;
    j["tolerance"] = {{"atol", dom.atol}, {"rtol", dom.rtol}, {"samples", dom.samples}};
    return j;
}

Json number(const Number& n) {
    Json j;
    j["exact"] = n.exact();
    j["text"] = n.str();
    j["value"] = n.value();
    return j;
}

Json constants(const std::map<std::string, Number>& k) {
    Json j = Json::object();
    for (const auto& [name, v] : k) j[name] = number(v);
    return j;
}

Json vector(const PointVectorField& X) {
    Json j;
    j["text"] = X.str();
    j["xi"] = to_string(X.xi);
    j["eta"] = {to_string(X.eta[0]), to_string(X.eta[1])};
    return j;
}

Json lie_check(const LieCheck& c) {
    return {{"pass", c.pass},
            {"direct_pass", c.direct_pass},
            {"split_pass", c.split_pass},
            {"direct_max", c.direct_max},
            {"split_max", c.split_max}};
}

Json symmetry(const SymmetryReport& r) {
    Json j;
    j["vector"] = vector(r.vector);
    j["case"] = lie_case_name(r.kind);
    j["source"] = r.source;
    j["constants"] = constants(r.constants);
    Json p = Json::object();
    for (const auto& [k, e] : r.profiles) p[k] = to_string(e);
    j["profiles"] = p;
    j["check"] = lie_check(r.check);
    return j;
}

Json noether(const NoetherResult& r) {
    Json j;
    j["vector"] = vector(r.vector);
    j["case"] = noether_case_name(r.kind);
    j["source"] = r.source;
    j["gauge"] = to_string(r.gauge);
    j["integral"] = to_string(r.integral);
    j["constants"] = constants(r.constants);
    j["T"] = r.T ? Json(to_string(*r.T)) : Json(nullptr);
    j["verified"] = r.verified;
    return j;
}

Json noether_check(const NoetherCheck& c) {
    Json j;
    j["pass"] = c.pass;
    j["gauge"] = c.gauge ? Json(to_string(*c.gauge)) : Json(nullptr);
    j["diagnostic"] = c.diagnostic;
    j["killing_max"] = c.killing_max;
    j["gauge_max"] = c.gauge_max;
    return j;
}

Json match(const RowMatch& m) {
    Json j;
    j["row"] = m.row.id();
    j["table"] = m.row.table;
    j["line"] = m.row.line;
    j["kind"] = row_kind_name(m.row.kind);
    j["listed_vector"] = m.row.vector;
    j["listed_family"] = m.row.family;
    j["column"] = m.column();
    j["constants"] = constants(m.constants);
    Json vs = Json::array();
    for (const auto& X : m.vectors) vs.push_back(vector(X));
    j["vectors"] = vs;
    Json ns = Json::array();
    for (const auto& n : m.noether) ns.push_back(noether(n));
    j["noether"] = ns;
    return j;
}

Json drift(const DriftReport& d) {
    return {{"integral", to_string(d.phi)}, {"initial", d.initial}, {"max_drift", d.max_drift}};
}

Json scalar(const ScalarCheck& c) {
    return {{"linearizable", c.pass},
            {"residual_1", to_string(c.r1)},
            {"residual_2", to_string(c.r2)},
            {"max_1", c.max1},
            {"max_2", c.max2}};
}

Json weyl(const WeylCheck& c) {
    Json nz = Json::array();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int cc = 0; cc < 3; ++cc)
                for (int d = cc + 1; d < 3; ++d) {
                    const Expr& w = c.W[idx4(a, b, cc, d)];
                    if (w.is_zero_literal()) continue;
                    nz.push_back({{"index", {a, b, cc, d}}, {"value", to_string(w)}});
                }
    return {{"linearizable", c.pass}, {"max_abs", c.max_abs}, {"nonzero_components", nz}};
}

}  // namespace symlie::report
