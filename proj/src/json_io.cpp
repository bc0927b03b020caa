#include "fenceq/json_io.hpp"

namespace fenceq {

using nlohmann::json;

json to_json(const IntPoly& p) {
    json arr = json::array();
    for (const BigInt& c : p.coeffs()) {
        if (c >= std::numeric_limits<long long>::min() &&
            c <= std::numeric_limits<long long>::max())
            arr.push_back(static_cast<long long>(c));
        else
            arr.push_back(c.str());
    }
    return arr;
}

json to_json(const SeqReport& r) {
    json j;
    j["unimodal"] = r.unimodal;
    j["symmetric"] = r.symmetric;
    j["top_interlacing"] = r.top_interlacing;
    j["bottom_interlacing"] = r.bottom_interlacing;
    j["ineq_a"] = r.ineq_a;
    j["ineq_b"] = r.ineq_b;
    j["almost_interlacing"] = r.almost_interlacing;
    j["log_concave"] = r.log_concave;
    if (r.two_peak) j["two_peak"] = {r.two_peak->first, r.two_peak->second};
    else j["two_peak"] = nullptr;
    return j;
}

json to_json(const PolygonTriangulation& t) {
    json j;
    j["n"] = t.vertex_count();
    json diags = json::array();
    for (const Diagonal& d : t.diagonals()) diags.push_back({d.a, d.b});
    j["diagonals"] = diags;
    return j;
}

json to_json(const LamCurve& c) {
    json j;
    j["from"] = {{"edge", c.from.edge}, {"slot", c.from.slot}};
    j["to"] = {{"edge", c.to.edge}, {"slot", c.to.slot}};
    return j;
}

json to_json(const FinitePoset& p) {
    json j;
    j["elements"] = p.labels();
    json covers = json::array();
    for (auto [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
    j["covers"] = covers;
    return j;
}

json to_json(const ScanReport& r) {
    json j;
    j["instances_checked"] = r.instances_checked;
    j["violation_count"] = r.violations.size();
    json viols = json::array();
    for (const auto& v : r.violations) {
        json e;
        e["n"] = v.n;
        e["instance"] = json::parse(v.instance);
        e["poly"] = to_json(v.poly);
        e["failed"] = v.failed;
        viols.push_back(e);
    }
    j["violations"] = viols;
    json sizes = json::array();
    for (const auto& s : r.per_size)
        sizes.push_back({{"n", s.n}, {"instances", s.instances}, {"violations", s.violations}});
    j["per_size"] = sizes;
    j["findings_only"] = r.findings_only;
    return j;
}

namespace {

int get_int(const json& j, const char* what) {
    if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
    return j.get<int>();
}

}  // namespace

PolygonTriangulation triangulation_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("diagonals"))
        throw InputError("triangulation needs fields n and diagonals");
    int n = get_int(j["n"], "n");
    std::vector<Diagonal> diags;
    for (const auto& d : j["diagonals"]) {
        if (!d.is_array() || d.size() != 2) throw InputError("diagonal must be a pair");
        diags.emplace_back(get_int(d[0], "diagonal endpoint"), get_int(d[1], "diagonal endpoint"));
    }
    try {
        return PolygonTriangulation(n, std::move(diags));
    } catch (const ConstructionError& e) {
        throw InputError(e.what());
    }
}

LamCurve curve_from_json(const json& j) {
    if (!j.is_object() || !j.contains("from") || !j.contains("to"))
        throw InputError("curve needs fields from and to");
    auto end_from_json = [](const json& e) {
        CurveEnd end;
        end.edge = get_int(e.at("edge"), "edge");
        end.slot = e.contains("slot") ? get_int(e["slot"], "slot") : 0;
        return end;
    };
    LamCurve c;
    c.from = end_from_json(j["from"]);
    c.to = end_from_json(j["to"]);
    return c;
}

MultiLamination multilamination_from_json(const json& j) {
    if (!j.is_array()) throw InputError("laminations must be an array of laminations");
    MultiLamination ml;
    for (const auto& lam : j) {
        if (!lam.is_array()) throw InputError("each lamination is an array of curves");
        Lamination curves;
        for (const auto& c : lam) curves.push_back(curve_from_json(c));
        ml.push_back(std::move(curves));
    }
    return ml;
}

Arc arc_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("arc must be a vertex pair [a,b]");
    return Arc(get_int(j[0], "arc endpoint"), get_int(j[1], "arc endpoint"));
}

Composition composition_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("composition must be a nonempty array");
    std::vector<int> parts;
    for (const auto& p : j) parts.push_back(get_int(p, "composition part"));
    try {
        return Composition(parts);
    } catch (const InvalidComposition& e) {
        throw InputError(e.what());
    }
}

}  // namespace fenceq
