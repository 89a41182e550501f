#include "icplane/analysis.hpp"

#include <algorithm>
#include <set>

#include "icplane/maximality.hpp"

namespace icplane {

const char* to_string(FaceClass fc) {
    switch (fc) {
        case FaceClass::F3: return "F3";
        case FaceClass::A4: return "A4";
        case FaceClass::B4: return "B4";
        case FaceClass::D4: return "D4";
        case FaceClass::F5: return "F5";
        case FaceClass::A6: return "A6";
        case FaceClass::B6: return "B6";
        case FaceClass::D6: return "D6";
        case FaceClass::E6: return "E6";
        case FaceClass::Other: return "Other";
    }
    return "Other";
}

const char* to_string(TieClass tc) {
    switch (tc) {
        case TieClass::Clean: return "Clean";
        case TieClass::Bad: return "Bad";
        case TieClass::Other: return "Other";
    }
    return "Other";
}

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Inapplicable: return "inapplicable";
    }
    return "inapplicable";
}

namespace {

FaceClass match_template(const Drawing& d, const FaceWalk& f, const FaceInfo& info) {
    const std::set<VertexId> distinct(f.true_vertices.begin(), f.true_vertices.end());
    if (static_cast<int>(distinct.size()) != info.lt) return FaceClass::Other;

    // True vertices on either side of each crossing occurrence.
    std::vector<std::pair<VertexId, VertexId>> ends;
    for (size_t i = 0; i < f.darts.size(); ++i) {
        const NodeId o = d.origin(f.darts[i]);
        if (!d.is_crossing_node(o)) continue;
        const DartId before = f.darts[(i + f.darts.size() - 1) % f.darts.size()];
        ends.emplace_back(d.origin(before), d.head(f.darts[i]));
    }
    auto ends_color = [&](size_t k, Color col) {
        return d.color(ends[k].first) == col && d.color(ends[k].second) == col;
    };
    auto ends_mixed = [&](size_t k) { return d.color(ends[k].first) != d.color(ends[k].second); };

    const int s = info.size, lb = info.lb, lw = info.lw, lf = info.lf;
    if (s == 3 && lf == 1 && lb == 1 && lw == 1) return FaceClass::F3;
    if (s == 4 && lf == 1 && lw == 2 && lb == 1 && ends_color(0, Color::White)) return FaceClass::A4;
    if (s == 4 && lf == 1 && lb == 2 && lw == 1 && ends_color(0, Color::Black)) return FaceClass::B4;
    if (s == 4 && lf == 0 && lb == 2 && lw == 2) return FaceClass::D4;
    if (s == 5 && lf == 1 && lb == 2 && lw == 2) return FaceClass::F5;
    if (s == 6 && lf == 2 && lb == 2 && lw == 2) {
        if (f.crossings[0] == f.crossings[1]) return FaceClass::B6;
        if (ends_mixed(0) && ends_mixed(1)) return FaceClass::A6;
    }
    if (s == 6 && lf == 1 && lw == 3 && lb == 2) return FaceClass::D6;
    if (s == 6 && lf == 1 && lb == 3 && lw == 2) return FaceClass::E6;
    return FaceClass::Other;
}

CheckResult make_check(std::string id) { return CheckResult{std::move(id), CheckStatus::Pass, {}, {}}; }

void fail(CheckResult& r, int offender, const std::string& why) {
    r.status = CheckStatus::Fail;
    r.offenders.push_back(offender);
    if (r.detail.empty()) r.detail = why;
}

CheckResult inapplicable(std::string id, std::string why) {
    return CheckResult{std::move(id), CheckStatus::Inapplicable, std::move(why), {}};
}

bool has_clean_edge(const Drawing& d, VertexId u, VertexId v) {
    for (const DartRef& r : d.parts().vertex_rot[u]) {
        if (d.edge(r.edge).other(u) == v && d.is_clean(r.edge)) return true;
    }
    return false;
}

// Distinct faces through crossing x.
std::vector<int> faces_at_crossing(const Drawing& d, CrossingId x) {
    std::vector<int> out;
    for (DartId dd : d.rotation(d.crossing_node(x))) out.push_back(d.face_of(dd));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

FaceInfo classify_face(const Drawing& d, const FaceWalk& f) {
    FaceInfo info;
    info.face = f.id;
    info.size = f.size();
    for (VertexId v : f.true_vertices) (d.color(v) == Color::Black ? info.lb : info.lw)++;
    info.lt = info.lb + info.lw;
    info.lf = static_cast<int>(f.crossings.size());
    info.cls = match_template(d, f, info);
    if (info.cls == FaceClass::Other)
        info.label = "Other[s" + std::to_string(info.size) + ":b" + std::to_string(info.lb) + "w" +
                     std::to_string(info.lw) + "f" + std::to_string(info.lf) + "]";
    else
        info.label = to_string(info.cls);
    return info;
}

std::vector<FaceInfo> classify_faces(const Drawing& d) {
    std::vector<FaceInfo> out;
    out.reserve(d.faces().size());
    for (const FaceWalk& f : d.faces()) out.push_back(classify_face(d, f));
    return out;
}

FaceCensus face_census(const Drawing& d) {
    FaceCensus census;
    for (const FaceInfo& fi : classify_faces(d)) ++census[fi.label];
    return census;
}

int census_count(const FaceCensus& census, FaceClass fc) {
    const auto it = census.find(to_string(fc));
    return it == census.end() ? 0 : it->second;
}

TieInfo classify_tie(const Drawing& d, CrossingId x) {
    TieInfo t;
    t.crossing = x;
    const Edge& e1 = d.edge(d.crossing(x).first);
    const Edge& e2 = d.edge(d.crossing(x).second);
    if (d.color(e1.u) == d.color(e1.v) || d.color(e2.u) == d.color(e2.v)) {
        t.reason = "crossing edge is not bichromatic";
        return t;
    }
    t.a = d.color(e1.u) == Color::Black ? e1.u : e1.v;
    t.b = e1.other(t.a);
    t.c = d.color(e2.u) == Color::Black ? e2.u : e2.v;
    t.d = e2.other(t.c);
    t.sides_clean = has_clean_edge(d, t.a, t.d) && has_clean_edge(d, t.c, t.b);
    if (!t.sides_clean) {
        t.reason = "side edge ad or cb missing or crossed";
        return t;
    }

    const auto& rot = d.rotation(d.crossing_node(x));
    std::vector<int> mono_faces;
    for (int i = 0; i < 4; ++i) {
        const DartId lo = rot[i], hi = rot[(i + 1) % 4];
        const VertexId p = d.head(lo), q = d.head(hi);
        const int face = d.face_of(hi);
        if (d.color(p) == d.color(q)) {
            mono_faces.push_back(face);
            continue;
        }
        const bool triangle = d.faces()[face].size() == 3;
        if ((p == t.a && q == t.d) || (p == t.d && q == t.a))
            t.r1_face = triangle;
        else
            t.r2_face = triangle;
    }
    t.r3_face = mono_faces.size() == 2 && mono_faces[0] == mono_faces[1] && d.faces()[mono_faces[0]].size() == 6;
    const int patch_faces = int(t.r1_face) + int(t.r2_face) + int(t.r3_face);
    t.r = 3 - patch_faces;
    if (t.r1_face && t.r2_face)
        t.cls = TieClass::Clean;
    else if (t.r3_face && (t.r1_face != t.r2_face))
        t.cls = TieClass::Bad;
    else
        t.reason = "patch faces do not match a clean or bad tie";
    return t;
}

bool CheckReport::ok() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

const CheckResult* CheckReport::find(const std::string& id) const {
    for (const auto& r : checks)
        if (r.id == id) return &r;
    return nullptr;
}

const BoundEntry* BoundReport::find(const std::string& id) const {
    for (const auto& b : entries)
        if (b.id == id) return &b;
    return nullptr;
}

Hypotheses hypotheses_of(const Drawing& d) {
    Hypotheses h;
    h.maximal = is_maximal(d);
    h.kappa = d.n() >= 2 ? vertex_connectivity(d).kappa : 0;
    return h;
}

CheckReport tie_face_incidence_check(const Drawing& d, const std::optional<Hypotheses>& given) {
    const Hypotheses h = given ? *given : hypotheses_of(d);
    const char* ids[] = {"bad-tie-incidence", "clean-tie-incidence", "faces-with-bad-ties", "faces-with-clean-tie"};
    CheckReport rep;
    if (!h.maximal || h.kappa < 2 || d.n() < 5) {
        for (const char* id : ids) rep.checks.push_back(inapplicable(id, "needs a maximal 2-connected drawing with n >= 5"));
        return rep;
    }
    const auto infos = classify_faces(d);
    std::vector<TieInfo> ties;
    for (CrossingId x = 0; x < d.c(); ++x) ties.push_back(classify_tie(d, x));

    CheckResult bad = make_check(ids[0]), clean = make_check(ids[1]);
    for (const TieInfo& t : ties) {
        if (t.cls == TieClass::Other) continue;
        std::map<FaceClass, int> around;
        for (int f : faces_at_crossing(d, t.crossing)) ++around[infos[f].cls];
        if (t.cls == TieClass::Bad) {
            if (around[FaceClass::F3] != 1 || around[FaceClass::B6] != 1 ||
                around[FaceClass::F5] + around[FaceClass::A6] != 1)
                fail(bad, t.crossing, "bad tie " + std::to_string(t.crossing) + " has the wrong incident faces");
        } else {
            if (around[FaceClass::F3] != 2 || around[FaceClass::D6] + around[FaceClass::E6] > 1)
                fail(clean, t.crossing, "clean tie " + std::to_string(t.crossing) + " has the wrong incident faces");
        }
    }

    CheckResult with_bad = make_check(ids[2]), with_clean = make_check(ids[3]);
    for (const FaceInfo& fi : infos) {
        std::set<CrossingId> bad_ties, clean_ties;
        for (CrossingId x : d.faces()[fi.face].crossings) {
            if (ties[x].cls == TieClass::Bad) bad_ties.insert(x);
            if (ties[x].cls == TieClass::Clean) clean_ties.insert(x);
        }
        const int nb = static_cast<int>(bad_ties.size());
        if ((fi.cls == FaceClass::F5 || fi.cls == FaceClass::B6) && nb != 1)
            fail(with_bad, fi.face, "face " + std::to_string(fi.face) + " (" + fi.label + ") meets " +
                                        std::to_string(nb) + " bad ties, expected 1");
        if (fi.cls == FaceClass::A6 && nb != 2)
            fail(with_bad, fi.face, "face " + std::to_string(fi.face) + " (A6) meets " + std::to_string(nb) +
                                        " bad ties, expected 2");
        if ((fi.cls == FaceClass::A4 || fi.cls == FaceClass::B4 || fi.cls == FaceClass::D6 ||
             fi.cls == FaceClass::E6) &&
            clean_ties.size() != 1)
            fail(with_clean, fi.face, "face " + std::to_string(fi.face) + " (" + fi.label + ") meets " +
                                          std::to_string(clean_ties.size()) + " clean ties, expected 1");
    }
    rep.checks = {bad, clean, with_bad, with_clean};
    return rep;
}

CheckReport check_structural_lemmas(const Drawing& d, const std::optional<Hypotheses>& given) {
    const Hypotheses h = given ? *given : hypotheses_of(d);
    const bool two_conn = h.kappa >= 2;
    const auto infos = classify_faces(d);
    CheckReport rep;

    // cr <= n/4
    {
        CheckResult r = make_check("crossing-bound");
        if (4 * d.c() > d.n()) fail(r, d.c(), std::to_string(d.c()) + " crossings exceed n/4");
        rep.checks.push_back(r);
    }

    // Each true vertex occurs once on every face walk of a 2-connected drawing.
    if (!two_conn) {
        rep.checks.push_back(inapplicable("true-vertex-once", "needs a 2-connected drawing"));
    } else {
        CheckResult r = make_check("true-vertex-once");
        for (const FaceWalk& f : d.faces()) {
            std::set<VertexId> s(f.true_vertices.begin(), f.true_vertices.end());
            if (s.size() != f.true_vertices.size())
                fail(r, f.id, "face " + std::to_string(f.id) + " repeats a true vertex");
        }
        rep.checks.push_back(r);
    }

    // Two vertices of different colours on a common face are adjacent.
    if (!h.maximal) {
        rep.checks.push_back(inapplicable("bichromatic-face-adjacent", "needs a maximal drawing"));
    } else {
        CheckResult r = make_check("bichromatic-face-adjacent");
        for (const FaceWalk& f : d.faces()) {
            bool bad_face = false;
            for (VertexId u : f.true_vertices)
                for (VertexId v : f.true_vertices)
                    if (u != v && d.color(u) != d.color(v) && !d.adjacent(u, v)) bad_face = true;
            if (bad_face) fail(r, f.id, "face " + std::to_string(f.id) + " has a non-adjacent bichromatic pair");
        }
        rep.checks.push_back(r);
    }

    // The endpoints of every crossing induce a tie with clean sides.
    if (!h.maximal) {
        rep.checks.push_back(inapplicable("crossing-induces-tie", "needs a maximal drawing"));
    } else {
        CheckResult r = make_check("crossing-induces-tie");
        for (CrossingId x = 0; x < d.c(); ++x)
            if (!classify_tie(d, x).sides_clean)
                fail(r, x, "crossing " + std::to_string(x) + " lacks a clean side edge");
        rep.checks.push_back(r);
    }

    const bool guarded = h.maximal && two_conn;
    const std::string guard_why = "needs a maximal 2-connected drawing";

    // No three consecutive true vertices on a face walk share a colour.
    if (!guarded) {
        rep.checks.push_back(inapplicable("no-monochromatic-triple", guard_why));
    } else {
        CheckResult r = make_check("no-monochromatic-triple");
        for (const FaceWalk& f : d.faces()) {
            const auto& tv = f.true_vertices;
            const size_t m = tv.size();
            if (m < 3) continue;
            for (size_t i = 0; i < m; ++i) {
                const Color c0 = d.color(tv[i]);
                if (d.color(tv[(i + 1) % m]) == c0 && d.color(tv[(i + 2) % m]) == c0) {
                    fail(r, f.id, "face " + std::to_string(f.id) + " has three consecutive vertices of one colour");
                    break;
                }
            }
        }
        rep.checks.push_back(r);
    }

    // 2 <= lt <= 5, lf <= 2, lf <= lt / 2.
    if (!guarded) {
        rep.checks.push_back(inapplicable("face-vertex-counts", guard_why));
    } else {
        CheckResult r = make_check("face-vertex-counts");
        for (const FaceInfo& fi : infos)
            if (fi.lt < 2 || fi.lt > 5 || fi.lf > 2 || 2 * fi.lf > fi.lt)
                fail(r, fi.face, "face " + std::to_string(fi.face) + " has lt=" + std::to_string(fi.lt) +
                                     " lf=" + std::to_string(fi.lf));
        rep.checks.push_back(r);
    }

    // The true vertices of a face induce a complete bipartite graph.
    if (!guarded) {
        rep.checks.push_back(inapplicable("face-complete-bipartite", guard_why));
    } else {
        CheckResult r = make_check("face-complete-bipartite");
        for (const FaceWalk& f : d.faces()) {
            auto missing = [&]() -> std::optional<std::pair<VertexId, VertexId>> {
                for (VertexId u : f.true_vertices)
                    for (VertexId v : f.true_vertices)
                        if (d.color(u) == Color::Black && d.color(v) == Color::White && !d.adjacent(u, v))
                            return std::make_pair(u, v);
                return std::nullopt;
            }();
            if (missing)
                fail(r, f.id, "face " + std::to_string(f.id) + " misses edge " + std::to_string(missing->first) +
                                  "-" + std::to_string(missing->second));
        }
        rep.checks.push_back(r);
    }

    // Every face matches one of the nine configurations.
    if (!guarded) {
        rep.checks.push_back(inapplicable("face-taxonomy", guard_why));
    } else {
        CheckResult r = make_check("face-taxonomy");
        for (const FaceInfo& fi : infos)
            if (fi.cls == FaceClass::Other) fail(r, fi.face, "face " + std::to_string(fi.face) + " is " + fi.label);
        rep.checks.push_back(r);
    }
    return rep;
}

namespace {

bool skeleton_ok(const Drawing& d, const RemovalRule& rule) {
    const Drawing g = planar_skeleton(d, rule);
    return is_quadrangulation(g) && g.e() == 2 * g.n() - 4;
}

// The true edges on the four faces around a clean tie form a clean 6-cycle.
bool six_cycle_around(const Drawing& d, CrossingId x, const std::vector<FaceInfo>& infos) {
    const auto faces = faces_at_crossing(d, x);
    int f3 = 0, a4 = 0, b4 = 0;
    for (int f : faces) {
        f3 += infos[f].cls == FaceClass::F3;
        a4 += infos[f].cls == FaceClass::A4;
        b4 += infos[f].cls == FaceClass::B4;
    }
    if (faces.size() != 4 || f3 != 2 || a4 != 1 || b4 != 1) return false;
    std::set<EdgeId> edges;
    for (int f : faces)
        for (DartId dd : d.faces()[f].darts)
            if (!d.is_crossing_node(d.origin(dd)) && !d.is_crossing_node(d.head(dd))) edges.insert(d.dart_edge(dd));
    if (edges.size() != 6) return false;
    std::map<VertexId, std::vector<VertexId>> adj;
    for (EdgeId id : edges) {
        if (!d.is_clean(id)) return false;
        adj[d.edge(id).u].push_back(d.edge(id).v);
        adj[d.edge(id).v].push_back(d.edge(id).u);
    }
    if (adj.size() != 6) return false;
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2) return false;
    // Walk the cycle from one vertex; it must visit all six.
    VertexId prev = adj.begin()->first, cur = adj.begin()->second[0];
    int steps = 1;
    while (cur != adj.begin()->first && steps <= 6) {
        const auto& nb = adj[cur];
        const VertexId nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
        ++steps;
    }
    return steps == 6 && cur == adj.begin()->first;
}

}  // namespace

CheckReport check_3conn_properties(const Drawing& d, const std::optional<Hypotheses>& given) {
    const Hypotheses h = given ? *given : hypotheses_of(d);
    const char* ids[] = {"ties-clean", "faces-restricted", "clean-6-cycle", "skeleton-quadrangulation"};
    CheckReport rep;
    if (!h.maximal || h.kappa < 3) {
        for (const char* id : ids) rep.checks.push_back(inapplicable(id, "needs a maximal 3-connected drawing"));
        return rep;
    }
    const auto infos = classify_faces(d);
    CheckResult ties = make_check(ids[0]), faces = make_check(ids[1]), cycles = make_check(ids[2]),
                skel = make_check(ids[3]);
    for (CrossingId x = 0; x < d.c(); ++x)
        if (classify_tie(d, x).cls != TieClass::Clean) fail(ties, x, "tie " + std::to_string(x) + " is not clean");
    for (const FaceInfo& fi : infos)
        if (fi.cls != FaceClass::F3 && fi.cls != FaceClass::A4 && fi.cls != FaceClass::B4 && fi.cls != FaceClass::D4)
            fail(faces, fi.face, "face " + std::to_string(fi.face) + " is " + fi.label);
    for (CrossingId x = 0; x < d.c(); ++x)
        if (!six_cycle_around(d, x, infos))
            fail(cycles, x, "crossing " + std::to_string(x) + " is not enclosed by a clean 6-cycle");

    // Every removal choice when there are few crossings, otherwise each
    // single flip away from both uniform choices.
    if (d.c() <= 12) {
        for (unsigned mask = 0; mask < (1u << d.c()); ++mask) {
            std::vector<std::uint8_t> ch(d.c());
            for (int x = 0; x < d.c(); ++x) ch[x] = (mask >> x) & 1u;
            if (!skeleton_ok(d, RemovalRule::per_crossing(ch))) {
                fail(skel, static_cast<int>(mask), "removal mask " + std::to_string(mask) + " is not a quadrangulation");
                break;
            }
        }
    } else {
        for (std::uint8_t base : {0, 1}) {
            for (int x = -1; x < d.c(); ++x) {
                std::vector<std::uint8_t> ch(d.c(), base);
                if (x >= 0) ch[x] ^= 1u;
                if (!skeleton_ok(d, RemovalRule::per_crossing(ch))) fail(skel, x, "a skeleton is not a quadrangulation");
            }
        }
    }
    rep.checks = {ties, faces, cycles, skel};
    return rep;
}

BoundReport check_bounds(const Drawing& d, const std::optional<Hypotheses>& given) {
    const Hypotheses h = given ? *given : hypotheses_of(d);
    const long long n = d.n(), e = d.e();
    BoundReport rep;
    auto add = [&](const char* id, bool applicable, Rational rhs, bool upper, bool info) {
        BoundEntry b;
        b.id = id;
        b.applicable = applicable;
        b.informational = info;
        b.lhs = e;
        b.rhs = rhs;
        b.satisfied = upper ? Rational(e) <= rhs : Rational(e) >= rhs;
        rep.entries.push_back(b);
    };
    add("upper", n >= 3, Rational(9 * n, 4) - 4, true, false);
    add("lower2", h.maximal && h.kappa >= 2, Rational(3 * n, 2) - 2, false, false);
    add("lower3", h.maximal && h.kappa >= 3, Rational(2 * n - 3), false, false);
    add("conj4", h.maximal && h.kappa >= 4, Rational(13 * n, 6) - Rational(14, 3), false, true);
    return rep;
}

bool is_quadrangulation(const Drawing& d) {
    if (d.c() != 0) throw DrawingError("is_quadrangulation needs a crossing-free drawing");
    if (d.faces().empty()) return false;
    for (const FaceWalk& f : d.faces())
        if (f.size() != 4) return false;
    if (d.connected() && d.n() >= 4 && d.e() != 2 * d.n() - 4)
        throw std::logic_error("quadrangulation with e != 2n - 4");
    return true;
}

}  // namespace icplane
