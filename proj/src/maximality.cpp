#include "icplane/maximality.hpp"

#include <algorithm>
#include <random>

#include "icplane/validate.hpp"

namespace icplane {

std::vector<Corner> face_corners(const Drawing& d, int face) {
    std::vector<Corner> out;
    for (DartId dd : d.faces()[face].darts) {
        const NodeId h = d.head(dd);
        if (!d.is_crossing_node(h)) out.push_back({h, d.twin(dd)});
    }
    return out;
}

Drawing apply_addition_unchecked(const Drawing& d, const EdgeAddition& a);

namespace {

bool touches_crossing(const Drawing& d, VertexId v) { return !d.crossings_at(v).empty(); }

bool joinable(const Drawing& d, VertexId u, VertexId v) {
    return u != v && d.color(u) != d.color(v) && !d.adjacent(u, v);
}

// Calls emit(addition) for every certificate; stops early when emit returns false.
template <class Emit>
void for_each_addition(const Drawing& d, Emit&& emit) {
    const int nf = static_cast<int>(d.faces().size());
    std::vector<std::vector<Corner>> corners(nf);
    for (int f = 0; f < nf; ++f) corners[f] = face_corners(d, f);

    for (int f = 0; f < nf; ++f) {
        const auto& cs = corners[f];
        for (size_t i = 0; i < cs.size(); ++i) {
            for (size_t j = 0; j < cs.size(); ++j) {
                const Corner &cu = cs[i], &cv = cs[j];
                if (cu.vertex >= cv.vertex || !joinable(d, cu.vertex, cv.vertex)) continue;
                EdgeAddition a;
                a.kind = EdgeAddition::Kind::CleanInFace;
                a.u = cu.vertex;
                a.v = cv.vertex;
                a.after_u = cu.after;
                a.after_v = cv.after;
                a.face_u = a.face_v = f;
                if (!emit(a)) return;
            }
        }
    }

    for (EdgeId id = 0; id < d.e(); ++id) {
        if (!d.is_clean(id)) continue;
        const Edge& ed = d.edge(id);
        if (touches_crossing(d, ed.u) || touches_crossing(d, ed.v)) continue;
        for (DartKind k : {DartKind::FromEnd0, DartKind::FromEnd1}) {
            const DartId g = d.dart(id, k);
            const int fu = d.face_of(g), fv = d.face_of(d.twin(g));
            for (const Corner& cu : corners[fu]) {
                if (ed.has(cu.vertex) || touches_crossing(d, cu.vertex)) continue;
                for (const Corner& cv : corners[fv]) {
                    if (cu.vertex >= cv.vertex || ed.has(cv.vertex) || touches_crossing(d, cv.vertex)) continue;
                    if (!joinable(d, cu.vertex, cv.vertex)) continue;
                    EdgeAddition a;
                    a.kind = EdgeAddition::Kind::CrossingThrough;
                    a.u = cu.vertex;
                    a.v = cv.vertex;
                    a.after_u = cu.after;
                    a.after_v = cv.after;
                    a.face_u = fu;
                    a.face_v = fv;
                    a.crossed = id;
                    a.crossed_dart = g;
                    // A bridge has one face on both sides; only some corner
                    // orders around it give a spherical result.
                    if (fu == fv && !validate(apply_addition_unchecked(d, a)).ok()) continue;
                    if (!emit(a)) return;
                }
            }
        }
    }
}

void insert_after(std::vector<DartRef>& rot, const DartRef& after, const DartRef& fresh) {
    const auto it = std::find(rot.begin(), rot.end(), after);
    if (it == rot.end()) throw StaleCertificate("insertion dart not found in rotation");
    rot.insert(it + 1, fresh);
}

}  // namespace

std::vector<EdgeAddition> addable_edges(const Drawing& d) {
    std::vector<EdgeAddition> out;
    for_each_addition(d, [&](const EdgeAddition& a) {
        out.push_back(a);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_maximal(const Drawing& d) {
    bool found = false;
    for_each_addition(d, [&](const EdgeAddition&) {
        found = true;
        return false;
    });
    return !found;
}

Drawing apply_addition(const Drawing& d, const EdgeAddition& a) {
    const auto all = addable_edges(d);
    if (!std::binary_search(all.begin(), all.end(), a))
        throw StaleCertificate("edge addition " + std::to_string(a.u) + "-" + std::to_string(a.v) +
                               " is not a certificate of this drawing");
    return apply_addition_unchecked(d, a);
}

Drawing apply_addition_unchecked(const Drawing& d, const EdgeAddition& a) {
    DrawingParts p = d.parts();
    const EdgeId fresh = static_cast<EdgeId>(p.edges.size());
    p.edges.push_back({a.u, a.v});
    insert_after(p.vertex_rot[a.u], d.ref(a.after_u), {fresh, DartKind::FromEnd0});
    insert_after(p.vertex_rot[a.v], d.ref(a.after_v), {fresh, DartKind::FromEnd1});
    if (a.kind == EdgeAddition::Kind::CrossingThrough) {
        const DartRef g = d.ref(a.crossed_dart);
        const int from = g.kind == DartKind::FromEnd0 ? 0 : 1;
        p.crossings.push_back({g.edge, fresh});
        p.crossing_rot.push_back({{g.edge, cross_to_end(1 - from)},
                                  {fresh, DartKind::CrossToEnd1},
                                  {g.edge, cross_to_end(from)},
                                  {fresh, DartKind::CrossToEnd0}});
    }
    p.outer_face.reset();
    return Drawing::from_parts(std::move(p));
}

Drawing add_pendant(const Drawing& d, const Corner& at, DartId crossed_dart) {
    DrawingParts p = d.parts();
    const VertexId w = static_cast<VertexId>(p.colors.size());
    p.colors.push_back(opposite(d.color(at.vertex)));
    const EdgeId fresh = static_cast<EdgeId>(p.edges.size());
    p.edges.push_back({at.vertex, w});
    insert_after(p.vertex_rot[at.vertex], d.ref(at.after), {fresh, DartKind::FromEnd0});
    p.vertex_rot.push_back({{fresh, DartKind::FromEnd1}});
    if (crossed_dart != kNone) {
        const DartRef g = d.ref(crossed_dart);
        const int from = g.kind == DartKind::FromEnd0 ? 0 : 1;
        p.crossings.push_back({g.edge, fresh});
        p.crossing_rot.push_back({{g.edge, cross_to_end(1 - from)},
                                  {fresh, DartKind::CrossToEnd1},
                                  {g.edge, cross_to_end(from)},
                                  {fresh, DartKind::CrossToEnd0}});
    }
    p.outer_face.reset();
    return Drawing::from_parts(std::move(p));
}

Drawing saturate(const Drawing& d, ChoicePolicy policy, std::uint64_t seed) {
    Drawing cur = d;
    std::mt19937_64 rng(seed);
    for (;;) {
        const auto options = addable_edges(cur);
        if (options.empty()) return cur;
        size_t pick = 0;
        if (policy == ChoicePolicy::LastCertificate) pick = options.size() - 1;
        if (policy == ChoicePolicy::Random) pick = std::uniform_int_distribution<size_t>(0, options.size() - 1)(rng);
        cur = apply_addition_unchecked(cur, options[pick]);
    }
}

}  // namespace icplane
