#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icplane/types.hpp"

namespace icplane {

struct Edge {
    VertexId u = kNone;  // endpoint 0
    VertexId v = kNone;  // endpoint 1

    VertexId end(int i) const { return i == 0 ? u : v; }
    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool has(VertexId w) const { return u == w || v == w; }
};

struct Crossing {
    EdgeId first = kNone;
    EdgeId second = kNone;
};

struct Violation {
    std::string rule;
    std::string detail;
    std::vector<int> ids;
};

struct FaceWalk {
    int id = 0;
    std::vector<DartId> darts;
    std::vector<VertexId> true_vertices;  // origins of the darts that are true vertices, walk order
    std::vector<CrossingId> crossings;    // origins of the darts that are crossings, walk order

    int size() const { return static_cast<int>(darts.size()); }
};

// Raw description of a drawing, as read from ICPD or produced by a builder.
struct DrawingParts {
    std::vector<Color> colors;
    std::vector<Edge> edges;
    std::vector<Crossing> crossings;
    std::vector<std::vector<DartRef>> vertex_rot;    // counterclockwise
    std::vector<std::vector<DartRef>> crossing_rot;  // counterclockwise, four entries
    std::optional<int> outer_face;
};

// Planarized combinatorial map of a bipartite 1-plane drawing on the sphere.
// Immutable once built. The dart structure and the faces are only available
// when structurally_sound(); otherwise structural_defects() says why.
class Drawing {
public:
    Drawing() = default;

    // Throws DrawingError on dangling ids or darts attached to the wrong node.
    static Drawing from_parts(DrawingParts parts);

    const DrawingParts& parts() const { return parts_; }
    int n() const { return static_cast<int>(parts_.colors.size()); }
    int e() const { return static_cast<int>(parts_.edges.size()); }
    int c() const { return static_cast<int>(parts_.crossings.size()); }

    Color color(VertexId v) const { return parts_.colors[v]; }
    const Edge& edge(EdgeId id) const { return parts_.edges[id]; }
    const Crossing& crossing(CrossingId id) const { return parts_.crossings[id]; }
    std::optional<int> outer_face() const { return parts_.outer_face; }

    // First crossing listing the edge, kNone when clean.
    CrossingId crossing_of(EdgeId id) const { return edge_crossing_[id]; }
    bool is_clean(EdgeId id) const { return edge_crossing_[id] == kNone; }
    // Crossings having v as an endpoint of one of their edges, with repeats.
    const std::vector<CrossingId>& crossings_at(VertexId v) const { return vertex_crossings_[v]; }

    bool adjacent(VertexId a, VertexId b) const;
    const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adjacency_[v].size()); }
    bool connected() const { return connected_; }

    bool structurally_sound() const { return defects_.empty(); }
    const std::vector<Violation>& structural_defects() const { return defects_; }

    // Map structure. Valid only for sound drawings.
    int num_nodes() const { return n() + c(); }
    int num_darts() const { return static_cast<int>(dart_edge_.size()); }
    bool is_crossing_node(NodeId x) const { return x >= n(); }
    CrossingId crossing_id(NodeId x) const { return x - n(); }
    NodeId crossing_node(CrossingId x) const { return n() + x; }

    DartId dart(EdgeId id, DartKind kind) const { return slot_[4 * id + static_cast<int>(kind)]; }
    DartId dart(const DartRef& ref) const { return dart(ref.edge, ref.kind); }
    DartRef ref(DartId d) const { return {dart_edge_[d], dart_kind_[d]}; }
    EdgeId dart_edge(DartId d) const { return dart_edge_[d]; }
    DartKind dart_kind(DartId d) const { return dart_kind_[d]; }
    NodeId origin(DartId d) const { return origin_[d]; }
    NodeId head(DartId d) const { return origin_[twin_[d]]; }
    DartId twin(DartId d) const { return twin_[d]; }
    DartId rot_next(DartId d) const;
    DartId rot_prev(DartId d) const;
    DartId face_next(DartId d) const { return rot_next(twin_[d]); }
    const std::vector<DartId>& rotation(NodeId x) const { return rotation_[x]; }

    const std::vector<FaceWalk>& faces() const { return faces_; }
    int face_of(DartId d) const { return face_of_[d]; }

private:
    void build_topology();
    void build_faces();

    DrawingParts parts_;
    std::vector<CrossingId> edge_crossing_;
    std::vector<std::vector<CrossingId>> vertex_crossings_;
    std::vector<std::vector<VertexId>> adjacency_;  // sorted, with repeats for parallel edges
    bool connected_ = true;
    std::vector<Violation> defects_;

    std::vector<DartId> slot_;
    std::vector<EdgeId> dart_edge_;
    std::vector<DartKind> dart_kind_;
    std::vector<NodeId> origin_;
    std::vector<DartId> twin_;
    std::vector<int> rot_pos_;
    std::vector<std::vector<DartId>> rotation_;
    std::vector<FaceWalk> faces_;
    std::vector<int> face_of_;
};

// Planarization given as neighbour lists. Nodes 0..n-1 are true vertices,
// nodes n..n+crossings-1 are crossings; rot[x] is the counterclockwise list
// of neighbouring nodes. A crossing with neighbours (t0, t1, t2, t3) joins
// the edges t0-t2 and t1-t3.
struct RotationSystem {
    std::vector<Color> colors;
    int crossings = 0;
    std::vector<std::vector<NodeId>> rot;
};

// Edge ids follow the scan order (true vertices ascending, rotation order),
// crossing ids follow node order. Throws DrawingError for asymmetric or
// malformed input.
Drawing from_rotation_system(const RotationSystem& rs);
RotationSystem to_rotation_system(const Drawing& d);

}  // namespace icplane
