#include "icplane/drawing.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace icplane {

namespace {

std::string dart_name(const DartRef& r) {
    std::ostringstream os;
    os << "edge " << r.edge << " kind " << static_cast<int>(r.kind);
    return os.str();
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int size) : parent(size) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Drawing Drawing::from_parts(DrawingParts parts) {
    Drawing d;
    d.parts_ = std::move(parts);
    DrawingParts& p = d.parts_;
    const int n = d.n(), e = d.e(), c = d.c();

    if (static_cast<int>(p.vertex_rot.size()) > n)
        throw DrawingError("rotation given for unknown vertex " + std::to_string(p.vertex_rot.size() - 1));
    if (static_cast<int>(p.crossing_rot.size()) > c)
        throw DrawingError("rotation given for unknown crossing " + std::to_string(p.crossing_rot.size() - 1));
    p.vertex_rot.resize(n);
    p.crossing_rot.resize(c);

    for (EdgeId id = 0; id < e; ++id) {
        const Edge& ed = p.edges[id];
        if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n)
            throw DrawingError("edge " + std::to_string(id) + " has an endpoint outside 0.." + std::to_string(n - 1));
    }
    d.edge_crossing_.assign(e, kNone);
    d.vertex_crossings_.assign(n, {});
    std::vector<int> times_crossed(e, 0);
    for (CrossingId x = 0; x < c; ++x) {
        const Crossing& cr = p.crossings[x];
        for (EdgeId id : {cr.first, cr.second}) {
            if (id < 0 || id >= e)
                throw DrawingError("crossing " + std::to_string(x) + " references unknown edge " + std::to_string(id));
        }
        if (cr.first == cr.second)
            throw DrawingError("crossing " + std::to_string(x) + " pairs edge " + std::to_string(cr.first) + " with itself");
        for (EdgeId id : {cr.first, cr.second}) {
            if (times_crossed[id]++ == 0) d.edge_crossing_[id] = x;
            d.vertex_crossings_[p.edges[id].u].push_back(x);
            if (p.edges[id].v != p.edges[id].u) d.vertex_crossings_[p.edges[id].v].push_back(x);
        }
    }
    for (EdgeId id = 0; id < e; ++id) {
        if (times_crossed[id] > 1)
            d.defects_.push_back({"one-crossing-per-edge",
                                  "edge " + std::to_string(id) + " is listed in " + std::to_string(times_crossed[id]) +
                                      " crossings",
                                  {id}});
    }

    // Darts may only sit at the node they leave.
    for (VertexId v = 0; v < n; ++v) {
        for (const DartRef& r : p.vertex_rot[v]) {
            if (r.edge < 0 || r.edge >= e)
                throw DrawingError("rotation of vertex " + std::to_string(v) + " references unknown edge " +
                                   std::to_string(r.edge));
            if (!leaves_vertex(r.kind))
                throw DrawingError("rotation of vertex " + std::to_string(v) + " holds a crossing dart of edge " +
                                   std::to_string(r.edge));
            const Edge& ed = p.edges[r.edge];
            if (ed.end(static_cast<int>(r.kind)) != v)
                throw DrawingError("rotation of vertex " + std::to_string(v) + " holds a dart of edge " +
                                   std::to_string(r.edge) + " which does not leave vertex " + std::to_string(v));
        }
    }
    for (CrossingId x = 0; x < c; ++x) {
        const Crossing& cr = p.crossings[x];
        for (const DartRef& r : p.crossing_rot[x]) {
            if (r.edge < 0 || r.edge >= e)
                throw DrawingError("rotation of crossing " + std::to_string(x) + " references unknown edge " +
                                   std::to_string(r.edge));
            if (leaves_vertex(r.kind) || (r.edge != cr.first && r.edge != cr.second))
                throw DrawingError("rotation of crossing " + std::to_string(x) + " holds a dart of edge " +
                                   std::to_string(r.edge) + " which does not pass through it");
        }
    }

    // Each expected dart must occur exactly once.
    std::vector<int> seen(4 * static_cast<size_t>(e), 0);
    for (const auto& rot : p.vertex_rot)
        for (const DartRef& r : rot) ++seen[4 * r.edge + static_cast<int>(r.kind)];
    for (const auto& rot : p.crossing_rot)
        for (const DartRef& r : rot) ++seen[4 * r.edge + static_cast<int>(r.kind)];
    for (EdgeId id = 0; id < e; ++id) {
        const bool crossed = times_crossed[id] > 0;
        for (int k = 0; k < 4; ++k) {
            const bool expected = k < 2 || crossed;
            const int count = seen[4 * id + k];
            DartRef r{id, static_cast<DartKind>(k)};
            if (expected && count == 0)
                d.defects_.push_back({"rotation", "missing dart " + dart_name(r), {id}});
            else if (count > 1)
                d.defects_.push_back({"rotation", "dart " + dart_name(r) + " listed " + std::to_string(count) + " times",
                                      {id}});
        }
    }

    d.adjacency_.assign(n, {});
    UnionFind uf(std::max(n, 1));
    for (const Edge& ed : p.edges) {
        d.adjacency_[ed.u].push_back(ed.v);
        if (ed.u != ed.v) d.adjacency_[ed.v].push_back(ed.u);
        uf.unite(ed.u, ed.v);
    }
    for (auto& adj : d.adjacency_) std::sort(adj.begin(), adj.end());
    for (VertexId v = 1; v < n; ++v)
        if (uf.find(v) != uf.find(0)) d.connected_ = false;

    if (d.structurally_sound()) {
        d.build_topology();
        d.build_faces();
    }
    return d;
}

void Drawing::build_topology() {
    const int e = this->e();
    slot_.assign(4 * static_cast<size_t>(e), kNone);
    for (EdgeId id = 0; id < e; ++id) {
        const int kinds = is_clean(id) ? 2 : 4;
        for (int k = 0; k < kinds; ++k) {
            slot_[4 * id + k] = static_cast<DartId>(dart_edge_.size());
            dart_edge_.push_back(id);
            dart_kind_.push_back(static_cast<DartKind>(k));
        }
    }
    const int darts = num_darts();
    twin_.assign(darts, kNone);
    for (EdgeId id = 0; id < e; ++id) {
        const DartId a0 = dart(id, DartKind::FromEnd0), a1 = dart(id, DartKind::FromEnd1);
        if (is_clean(id)) {
            twin_[a0] = a1;
            twin_[a1] = a0;
        } else {
            const DartId x0 = dart(id, DartKind::CrossToEnd0), x1 = dart(id, DartKind::CrossToEnd1);
            twin_[a0] = x0;
            twin_[x0] = a0;
            twin_[a1] = x1;
            twin_[x1] = a1;
        }
    }
    origin_.assign(darts, kNone);
    rot_pos_.assign(darts, 0);
    rotation_.assign(num_nodes(), {});
    auto place = [&](NodeId node, const std::vector<DartRef>& rot) {
        for (const DartRef& r : rot) {
            const DartId dd = dart(r);
            origin_[dd] = node;
            rot_pos_[dd] = static_cast<int>(rotation_[node].size());
            rotation_[node].push_back(dd);
        }
    };
    for (VertexId v = 0; v < n(); ++v) place(v, parts_.vertex_rot[v]);
    for (CrossingId x = 0; x < c(); ++x) place(crossing_node(x), parts_.crossing_rot[x]);
}

void Drawing::build_faces() {
    const int darts = num_darts();
    face_of_.assign(darts, kNone);
    for (DartId start = 0; start < darts; ++start) {
        if (face_of_[start] != kNone) continue;
        FaceWalk f;
        f.id = static_cast<int>(faces_.size());
        DartId cur = start;
        do {
            face_of_[cur] = f.id;
            f.darts.push_back(cur);
            const NodeId o = origin_[cur];
            if (is_crossing_node(o))
                f.crossings.push_back(crossing_id(o));
            else
                f.true_vertices.push_back(o);
            cur = face_next(cur);
        } while (cur != start);
        faces_.push_back(std::move(f));
    }
}

DartId Drawing::rot_next(DartId d) const {
    const auto& rot = rotation_[origin_[d]];
    const int pos = rot_pos_[d] + 1;
    return rot[pos == static_cast<int>(rot.size()) ? 0 : pos];
}

DartId Drawing::rot_prev(DartId d) const {
    const auto& rot = rotation_[origin_[d]];
    const int pos = rot_pos_[d];
    return rot[pos == 0 ? rot.size() - 1 : pos - 1];
}

bool Drawing::adjacent(VertexId a, VertexId b) const {
    const auto& adj = adjacency_[a];
    return std::binary_search(adj.begin(), adj.end(), b);
}

Drawing from_rotation_system(const RotationSystem& rs) {
    const int n = static_cast<int>(rs.colors.size());
    const int nodes = n + rs.crossings;
    if (static_cast<int>(rs.rot.size()) != nodes) throw DrawingError("rotation system has the wrong number of nodes");
    for (NodeId x = 0; x < nodes; ++x) {
        for (NodeId y : rs.rot[x]) {
            if (y < 0 || y >= nodes) throw DrawingError("rotation system references unknown node " + std::to_string(y));
            if (std::count(rs.rot[y].begin(), rs.rot[y].end(), x) != std::count(rs.rot[x].begin(), rs.rot[x].end(), y))
                throw DrawingError("rotation system is not symmetric at nodes " + std::to_string(x) + ", " +
                                   std::to_string(y));
        }
    }
    for (NodeId x = n; x < nodes; ++x) {
        if (rs.rot[x].size() != 4) throw DrawingError("crossing node " + std::to_string(x) + " does not have degree 4");
        for (NodeId y : rs.rot[x])
            if (y >= n) throw DrawingError("crossing node " + std::to_string(x) + " is adjacent to another crossing");
    }

    DrawingParts p;
    p.colors = rs.colors;
    p.crossings.assign(rs.crossings, {});
    p.vertex_rot.assign(n, {});
    p.crossing_rot.assign(rs.crossings, {});
    // (vertex, crossing node) -> edge through that crossing starting at vertex
    auto far_end = [&](NodeId x, VertexId u) {
        const auto& r = rs.rot[x];
        const auto it = std::find(r.begin(), r.end(), u);
        return r[(it - r.begin() + 2) % 4];
    };
    std::vector<std::vector<EdgeId>> slot_edge(nodes);
    for (NodeId x = 0; x < nodes; ++x) slot_edge[x].assign(rs.rot[x].size(), kNone);

    for (VertexId u = 0; u < n; ++u) {
        for (size_t i = 0; i < rs.rot[u].size(); ++i) {
            const NodeId y = rs.rot[u][i];
            const VertexId w = y < n ? y : far_end(y, u);
            if (w <= u) continue;
            const EdgeId id = static_cast<EdgeId>(p.edges.size());
            p.edges.push_back({u, w});
            if (y >= n) {
                Crossing& cr = p.crossings[y - n];
                (cr.first == kNone ? cr.first : cr.second) = id;
            }
        }
    }
    auto find_edge = [&](VertexId u, NodeId y) -> EdgeId {
        const VertexId w = y < n ? y : far_end(y, u);
        for (EdgeId id = 0; id < static_cast<EdgeId>(p.edges.size()); ++id) {
            const Edge& ed = p.edges[id];
            if (!((ed.u == u && ed.v == w) || (ed.u == w && ed.v == u))) continue;
            const bool through = y >= n && (p.crossings[y - n].first == id || p.crossings[y - n].second == id);
            if ((y >= n) == through) return id;
        }
        throw DrawingError("rotation system edge lookup failed");
    };
    for (VertexId u = 0; u < n; ++u) {
        for (NodeId y : rs.rot[u]) {
            const EdgeId id = find_edge(u, y);
            p.vertex_rot[u].push_back({id, from_end(p.edges[id].u == u ? 0 : 1)});
        }
    }
    for (CrossingId x = 0; x < rs.crossings; ++x) {
        for (NodeId t : rs.rot[n + x]) {
            const EdgeId id = find_edge(t, n + x);
            p.crossing_rot[x].push_back({id, cross_to_end(p.edges[id].u == t ? 0 : 1)});
        }
    }
    return Drawing::from_parts(std::move(p));
}

RotationSystem to_rotation_system(const Drawing& d) {
    RotationSystem rs;
    rs.colors = d.parts().colors;
    rs.crossings = d.c();
    rs.rot.assign(d.num_nodes(), {});
    for (NodeId x = 0; x < d.num_nodes(); ++x)
        for (DartId dd : d.rotation(x)) rs.rot[x].push_back(d.head(dd));
    return rs;
}

}  // namespace icplane
