#include "icplane/report.hpp"

#include <json.hpp>

#include "icplane/analysis.hpp"
#include "icplane/maximality.hpp"

namespace icplane {

namespace {

using nlohmann::json;

json rational(const Rational& r) { return json{{"num", r.numerator()}, {"den", r.denominator()}}; }

json checks_json(const CheckReport& rep) {
    json out = json::array();
    for (const auto& c : rep.checks)
        out.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}, {"offenders", c.offenders}});
    return out;
}

}  // namespace

AnalysisOutcome analyze(const Drawing& d) {
    AnalysisOutcome out;
    json j;
    j["report_version"] = 1;
    j["n"] = d.n();
    j["e"] = d.e();
    j["c"] = d.c();

    const ValidationReport v = validate(d);
    json viol = json::array();
    for (const auto& x : v.violations) viol.push_back({{"rule", x.rule}, {"detail", x.detail}, {"ids", x.ids}});
    j["validation"] = {{"ok", v.ok()}, {"violations", viol}};
    out.valid = v.ok();
    if (!v.ok() || d.n() < 2) {
        out.checks_ok = v.ok();
        j["analysis"] = nullptr;
        out.json = j.dump(2) + "\n";
        return out;
    }

    Hypotheses h;
    h.maximal = is_maximal(d);
    const ConnectivityReport conn = vertex_connectivity(d);
    h.kappa = conn.kappa;

    json faces = json::array();
    for (const auto& f : classify_faces(d))
        faces.push_back({{"face", f.face}, {"size", f.size}, {"class", f.label},
                         {"lb", f.lb}, {"lw", f.lw}, {"lt", f.lt}, {"lf", f.lf}});
    json census = json::object();
    for (const auto& [k, cnt] : face_census(d)) census[k] = cnt;

    json ties = json::array();
    for (CrossingId x = 0; x < d.c(); ++x) {
        const TieInfo t = classify_tie(d, x);
        ties.push_back({{"crossing", x}, {"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d},
                        {"class", to_string(t.cls)}, {"r", t.r}, {"sides_clean", t.sides_clean},
                        {"patches_are_faces", {t.r1_face, t.r2_face, t.r3_face}}, {"reason", t.reason}});
    }

    const BoundReport bounds = check_bounds(d, h);
    json bj = json::array();
    bool bounds_ok = true;
    for (const auto& b : bounds.entries) {
        bj.push_back({{"id", b.id}, {"applicable", b.applicable}, {"satisfied", b.satisfied},
                      {"informational", b.informational}, {"e", b.lhs}, {"rhs", rational(b.rhs)}});
        if (b.applicable && !b.informational && !b.satisfied) bounds_ok = false;
    }

    const CheckReport lemmas = check_structural_lemmas(d, h);
    const CheckReport incidence = tie_face_incidence_check(d, h);
    const CheckReport three = check_3conn_properties(d, h);

    json a;
    a["maximal"] = h.maximal;
    a["addable_edges"] = addable_edges(d).size();
    a["connectivity"] = {{"kappa", conn.kappa}, {"delta", conn.delta}, {"witness_cut", conn.witness_cut},
                         {"cut_sides", conn.cut_sides}};
    a["faces"] = faces;
    a["face_census"] = census;
    a["tie_classes"] = ties;
    a["bounds"] = bj;
    a["lemma_checks"] = checks_json(lemmas);
    a["tie_face_incidence"] = checks_json(incidence);
    a["three_connected"] = checks_json(three);

    out.checks_ok = bounds_ok && lemmas.ok() && incidence.ok() && three.ok();
    a["checks_ok"] = out.checks_ok;
    j["analysis"] = a;
    out.json = j.dump(2) + "\n";
    return out;
}

}  // namespace icplane
