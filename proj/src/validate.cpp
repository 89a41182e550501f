#include "icplane/validate.hpp"

#include <algorithm>
#include <set>

namespace icplane {

bool ValidationReport::has(const std::string& rule) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.rule == rule; });
}

ValidationReport validate(const Drawing& d) {
    ValidationReport rep;
    auto add = [&](std::string rule, std::string detail, std::vector<int> ids) {
        rep.violations.push_back({std::move(rule), std::move(detail), std::move(ids)});
    };
    const auto& p = d.parts();

    for (const Violation& v : d.structural_defects())
        if (v.rule == "rotation") rep.violations.push_back(v);

    if (!d.connected()) add("connected", "the underlying graph is disconnected", {});

    std::set<std::pair<VertexId, VertexId>> seen;
    for (EdgeId id = 0; id < d.e(); ++id) {
        const Edge& ed = d.edge(id);
        if (ed.u == ed.v) {
            add("simple", "edge " + std::to_string(id) + " is a loop at vertex " + std::to_string(ed.u), {id});
            continue;
        }
        if (!seen.insert(std::minmax(ed.u, ed.v)).second)
            add("simple", "edge " + std::to_string(id) + " is parallel to an earlier edge", {id});
    }

    for (EdgeId id = 0; id < d.e(); ++id) {
        const Edge& ed = d.edge(id);
        if (ed.u != ed.v && d.color(ed.u) == d.color(ed.v))
            add("bipartite",
                "edge " + std::to_string(id) + " joins two vertices coloured " + color_char(d.color(ed.u)), {id});
    }

    for (CrossingId x = 0; x < d.c(); ++x) {
        const auto& rot = p.crossing_rot[x];
        const bool alternates = rot.size() == 4 && rot[0].edge == rot[2].edge && rot[1].edge == rot[3].edge &&
                                rot[0].edge != rot[1].edge && rot[0].kind != rot[2].kind && rot[1].kind != rot[3].kind;
        if (!alternates)
            add("crossing-alternation",
                "crossing " + std::to_string(x) + " does not alternate between segments of its two edges", {x});
    }

    for (const Violation& v : d.structural_defects())
        if (v.rule == "one-crossing-per-edge") rep.violations.push_back(v);

    for (CrossingId x = 0; x < d.c(); ++x) {
        const Edge& a = d.edge(d.crossing(x).first);
        const Edge& b = d.edge(d.crossing(x).second);
        for (VertexId w : {a.u, a.v}) {
            if (b.has(w)) {
                add("good-crossing", "the edges of crossing " + std::to_string(x) + " share vertex " + std::to_string(w),
                    {x, w});
                break;
            }
        }
    }

    for (CrossingId x = 0; x < d.c(); ++x) {
        for (CrossingId y = x + 1; y < d.c(); ++y) {
            for (VertexId v = 0; v < d.n(); ++v) {
                const auto& at = d.crossings_at(v);
                if (std::count(at.begin(), at.end(), x) && std::count(at.begin(), at.end(), y))
                    add("independent-crossings",
                        "crossings " + std::to_string(x) + " and " + std::to_string(y) + " share vertex " +
                            std::to_string(v),
                        {v, x, y});
            }
        }
    }

    for (VertexId v = 0; v < d.n(); ++v) {
        std::set<CrossingId> distinct(d.crossings_at(v).begin(), d.crossings_at(v).end());
        if (distinct.size() > 1)
            add("vertex-crossing-degree",
                "vertex " + std::to_string(v) + " is an endpoint of " + std::to_string(distinct.size()) + " crossings",
                {v});
    }

    if (d.structurally_sound() && d.connected() && d.num_darts() > 0) {
        const int vstar = d.n() + d.c();
        const int estar = d.num_darts() / 2;
        const int f = static_cast<int>(d.faces().size());
        if (vstar - estar + f != 2)
            add("euler",
                "V*-E*+F = " + std::to_string(vstar) + "-" + std::to_string(estar) + "+" + std::to_string(f) + " != 2",
                {});
    }

    if (4 * d.c() > d.n())
        add("crossing-bound", std::to_string(d.c()) + " crossings exceed n/4 for n = " + std::to_string(d.n()), {});
    return rep;
}

EdgeId RemovalRule::edge_to_remove(const Drawing& d, CrossingId x) const {
    const Crossing& cr = d.crossing(x);
    switch (kind_) {
        case Kind::Min:
            return std::min(cr.first, cr.second);
        case Kind::Max:
            return std::max(cr.first, cr.second);
        case Kind::Explicit:
            break;
    }
    return static_cast<size_t>(x) < choices_.size() && choices_[x] ? cr.second : cr.first;
}

Drawing planar_skeleton(const Drawing& d, const RemovalRule& rule) {
    std::vector<bool> removed(d.e(), false);
    for (CrossingId x = 0; x < d.c(); ++x) removed[rule.edge_to_remove(d, x)] = true;
    std::vector<EdgeId> renum(d.e(), kNone);
    DrawingParts p;
    p.colors = d.parts().colors;
    for (EdgeId id = 0; id < d.e(); ++id) {
        if (removed[id]) continue;
        renum[id] = static_cast<EdgeId>(p.edges.size());
        p.edges.push_back(d.edge(id));
    }
    p.vertex_rot.assign(d.n(), {});
    for (VertexId v = 0; v < d.n(); ++v)
        for (const DartRef& r : d.parts().vertex_rot[v])
            if (!removed[r.edge]) p.vertex_rot[v].push_back({renum[r.edge], r.kind});
    return Drawing::from_parts(std::move(p));
}

}  // namespace icplane
