#include "icplane/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "icplane/analysis.hpp"

namespace icplane {

namespace {

double cross(Point o, Point a, Point b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

int sign(double v) {
    constexpr double eps = 1e-12;
    return v > eps ? 1 : (v < -eps ? -1 : 0);
}

double angle(Point from, Point to) { return std::atan2(to.y - from.y, to.x - from.x); }

Point intersection(Point p1, Point p2, Point p3, Point p4) {
    const double d = (p1.x - p2.x) * (p3.y - p4.y) - (p1.y - p2.y) * (p3.x - p4.x);
    const double t = ((p1.x - p3.x) * (p3.y - p4.y) - (p1.y - p3.y) * (p3.x - p4.x)) / d;
    return {p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y)};
}

Point polar(double r, double degrees) {
    const double rad = degrees * std::acos(-1.0) / 180.0;
    return {r * std::cos(rad), r * std::sin(rad)};
}

void require(bool ok, const char* what) {
    if (!ok) throw DrawingError(what);
}

}  // namespace

Drawing from_straight_line(const std::vector<Color>& colors, const std::vector<Point>& at,
                           const std::vector<Edge>& edges) {
    const int n = static_cast<int>(colors.size());
    const int e = static_cast<int>(edges.size());
    DrawingParts p;
    p.colors = colors;
    p.edges = edges;
    std::vector<Point> xs;
    std::vector<CrossingId> crossed_at(e, kNone);
    for (EdgeId i = 0; i < e; ++i) {
        for (EdgeId j = i + 1; j < e; ++j) {
            const Edge &a = edges[i], &b = edges[j];
            if (a.has(b.u) || a.has(b.v)) continue;
            const int o1 = sign(cross(at[a.u], at[a.v], at[b.u])), o2 = sign(cross(at[a.u], at[a.v], at[b.v]));
            const int o3 = sign(cross(at[b.u], at[b.v], at[a.u])), o4 = sign(cross(at[b.u], at[b.v], at[a.v]));
            if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
                // Touching or collinear: only harmless when the segments are disjoint.
                auto within = [&](Point s, Point t, Point q) {
                    return std::min(s.x, t.x) - 1e-12 <= q.x && q.x <= std::max(s.x, t.x) + 1e-12 &&
                           std::min(s.y, t.y) - 1e-12 <= q.y && q.y <= std::max(s.y, t.y) + 1e-12;
                };
                if ((o1 == 0 && within(at[a.u], at[a.v], at[b.u])) || (o2 == 0 && within(at[a.u], at[a.v], at[b.v])) ||
                    (o3 == 0 && within(at[b.u], at[b.v], at[a.u])) || (o4 == 0 && within(at[b.u], at[b.v], at[a.v])))
                    throw DrawingError("straight-line drawing has touching segments");
                continue;
            }
            if (o1 == o2 || o3 == o4) continue;
            if (crossed_at[i] != kNone || crossed_at[j] != kNone)
                throw DrawingError("straight-line drawing crosses an edge twice");
            crossed_at[i] = crossed_at[j] = static_cast<CrossingId>(p.crossings.size());
            p.crossings.push_back({i, j});
            xs.push_back(intersection(at[a.u], at[a.v], at[b.u], at[b.v]));
        }
    }

    p.vertex_rot.assign(n, {});
    for (VertexId v = 0; v < n; ++v) {
        std::vector<std::pair<double, DartRef>> around;
        for (EdgeId id = 0; id < e; ++id) {
            const Edge& ed = edges[id];
            if (!ed.has(v)) continue;
            around.push_back({angle(at[v], at[ed.other(v)]), {id, from_end(ed.u == v ? 0 : 1)}});
        }
        std::sort(around.begin(), around.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        for (size_t i = 0; i + 1 < around.size(); ++i)
            if (std::abs(around[i].first - around[i + 1].first) < 1e-12)
                throw DrawingError("straight-line drawing has overlapping edges at a vertex");
        for (const auto& [ang, ref] : around) p.vertex_rot[v].push_back(ref);
    }
    p.crossing_rot.assign(p.crossings.size(), {});
    for (size_t x = 0; x < p.crossings.size(); ++x) {
        std::vector<std::pair<double, DartRef>> around;
        for (EdgeId id : {p.crossings[x].first, p.crossings[x].second}) {
            around.push_back({angle(xs[x], at[edges[id].u]), {id, DartKind::CrossToEnd0}});
            around.push_back({angle(xs[x], at[edges[id].v]), {id, DartKind::CrossToEnd1}});
        }
        std::sort(around.begin(), around.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        for (const auto& [ang, ref] : around) p.crossing_rot[x].push_back(ref);
    }
    return Drawing::from_parts(std::move(p));
}

Drawing gen_star(int n) {
    require(n >= 2, "gen_star needs n >= 2");
    RotationSystem rs;
    rs.colors.assign(n, Color::White);
    rs.colors[0] = Color::Black;
    rs.rot.assign(n, {});
    for (VertexId v = 1; v < n; ++v) {
        rs.rot[0].push_back(v);
        rs.rot[v] = {0};
    }
    return from_rotation_system(rs);
}

Drawing gen_k2m(int m) {
    require(m >= 2, "gen_k2m needs m >= 2");
    // Poles 0 and 1 (white), spokes 2..m+1 (black) in counterclockwise order
    // around pole 0.
    RotationSystem rs;
    rs.colors.assign(m + 2, Color::Black);
    rs.colors[0] = rs.colors[1] = Color::White;
    rs.rot.assign(m + 2, {});
    for (int i = 0; i < m; ++i) {
        rs.rot[0].push_back(2 + i);
        rs.rot[1].push_back(2 + m - 1 - i);
        rs.rot[2 + i] = {0, 1};
    }
    return from_rotation_system(rs);
}

namespace {

// Cycle v_0..v_{m-1} on a circle (even index black), inner black hub m joined
// to the white cycle vertices, outer white hub m+1 joined to the black ones.
// With `hub_edge`, the hubs are also joined through the cycle edge
// v_{m-2} v_{m-1}, which becomes crossing node m+2.
RotationSystem double_wheel(int n, bool hub_edge) {
    require(n >= 6 && n % 2 == 0, "double wheel needs even n >= 6");
    const int m = n - 2;
    const NodeId in = m, out = m + 1, x = m + 2;
    RotationSystem rs;
    rs.colors.resize(n);
    for (int i = 0; i < m; ++i) rs.colors[i] = i % 2 == 0 ? Color::Black : Color::White;
    rs.colors[in] = Color::Black;
    rs.colors[out] = Color::White;
    rs.crossings = hub_edge ? 1 : 0;
    rs.rot.assign(n + rs.crossings, {});
    for (int i = 0; i < m; ++i) {
        NodeId next = (i + 1) % m, prev = (i + m - 1) % m;
        if (hub_edge && i == m - 2) next = x;
        if (hub_edge && i == m - 1) prev = x;
        auto& r = rs.rot[i];
        if (i % 2 == 0) r.push_back(out);
        r.push_back(next);
        if (i % 2 == 1) r.push_back(in);
        r.push_back(prev);
    }
    for (int i = 1; i < m; i += 2) {
        if (hub_edge && i == m - 1) rs.rot[in].push_back(x);
        rs.rot[in].push_back(i);
    }
    if (hub_edge) rs.rot[out].push_back(x);
    for (int i = m - 2; i >= 0; i -= 2) rs.rot[out].push_back(i);
    if (hub_edge) rs.rot[x] = {out, m - 1, in, m - 2};
    return rs;
}

}  // namespace

Drawing gen_pdw(int n) { return from_rotation_system(double_wheel(n, false)); }

Drawing gen_G3(int n) { return from_rotation_system(double_wheel(n, true)); }

Drawing tie_drawing() {
    // Crossing edges 0-1 and 2-3, sides 0-3 and 2-1; all three patches are faces.
    RotationSystem rs;
    rs.colors = {Color::Black, Color::White, Color::Black, Color::White};
    rs.crossings = 1;
    rs.rot = {{3, 4}, {2, 4}, {1, 4}, {4, 0}, {1, 2, 0, 3}};
    return from_rotation_system(rs);
}

Drawing insert_gadget(const Drawing& d, int face, GadgetKind* kind_out) {
    const FaceWalk& f = d.faces().at(face);
    require(f.size() == 3 && f.crossings.size() == 1, "gadget host must be a false 3-face");
    size_t i0 = 0;
    while (!d.is_crossing_node(d.origin(f.darts[i0]))) ++i0;
    const DartId d1 = f.darts[i0], d2 = f.darts[(i0 + 1) % 3];
    const VertexId x = d.head(d1), y = d.head(d2);
    if (kind_out) *kind_out = d.color(x) == Color::Black ? GadgetKind::W1 : GadgetKind::W2;

    DrawingParts p = d.parts();
    const VertexId pv = d.n(), qv = d.n() + 1, sv = d.n() + 2, rv = d.n() + 3;
    p.colors.push_back(opposite(d.color(x)));  // p
    p.colors.push_back(opposite(d.color(y)));  // q
    p.colors.push_back(d.color(x));            // s
    p.colors.push_back(d.color(y));            // r
    const EdgeId exp = d.e(), eyq = exp + 1, epq = exp + 2, eps = exp + 3, eqr = exp + 4, ers = exp + 5;
    p.edges.push_back({x, pv});
    p.edges.push_back({y, qv});
    p.edges.push_back({pv, qv});
    p.edges.push_back({pv, sv});
    p.edges.push_back({qv, rv});
    p.edges.push_back({rv, sv});
    p.crossings.push_back({eps, eqr});

    auto insert_after = [&](VertexId v, DartId after, DartRef fresh) {
        auto& rot = p.vertex_rot[v];
        rot.insert(std::find(rot.begin(), rot.end(), d.ref(after)) + 1, fresh);
    };
    insert_after(x, d.twin(d1), {exp, DartKind::FromEnd0});
    insert_after(y, d.twin(d2), {eyq, DartKind::FromEnd0});
    using K = DartKind;
    p.vertex_rot.push_back({{eps, K::FromEnd0}, {epq, K::FromEnd0}, {exp, K::FromEnd1}});  // p
    p.vertex_rot.push_back({{eyq, K::FromEnd1}, {epq, K::FromEnd1}, {eqr, K::FromEnd0}});  // q
    p.vertex_rot.push_back({{ers, K::FromEnd1}, {eps, K::FromEnd1}});                      // s
    p.vertex_rot.push_back({{eqr, K::FromEnd1}, {ers, K::FromEnd0}});                      // r
    p.crossing_rot.push_back({{eps, K::CrossToEnd0}, {eqr, K::CrossToEnd0}, {eps, K::CrossToEnd1}, {eqr, K::CrossToEnd1}});
    p.outer_face.reset();
    return Drawing::from_parts(std::move(p));
}

Drawing gen_H(int k) {
    require(k >= 1, "gen_H needs k >= 1");
    Drawing d = tie_drawing();
    for (int step = 2; step <= k; ++step) {
        // Lowest false 3-face whose walk leaves its crossing toward a black
        // vertex; otherwise the lowest false 3-face.
        int host = kNone, fallback = kNone;
        for (const FaceInfo& fi : classify_faces(d)) {
            if (fi.cls != FaceClass::F3) continue;
            if (fallback == kNone) fallback = fi.face;
            const auto& darts = d.faces()[fi.face].darts;
            for (DartId dd : darts)
                if (d.is_crossing_node(d.origin(dd)) && d.color(d.head(dd)) == Color::Black && host == kNone)
                    host = fi.face;
        }
        require(fallback != kNone, "gen_H lost its false 3-faces");
        d = insert_gadget(d, host != kNone ? host : fallback);
    }
    return d;
}

G4Labels g4_labels(int k) {
    G4Labels lab;
    lab.a.push_back({0, 1, 2, 3});
    for (int s = 0; s < k; ++s) {
        const int base = 4 + 24 * s;
        std::vector<VertexId> b(12), c(12);
        for (int j = 0; j < 12; ++j) {
            b[j] = base + j;
            c[j] = base + 12 + j;
        }
        lab.b.push_back(b);
        lab.c.push_back(c);
        if (s + 1 < k) lab.a.push_back({c[0], c[3], c[6], c[9]});
    }
    return lab;
}

Drawing gen_G4(int k) {
    require(k >= 1, "gen_G4 needs k >= 1");
    const int n = 24 * k + 4;
    const G4Labels lab = g4_labels(k);
    std::vector<Color> colors(n);
    std::vector<Point> at(n);
    // Label index i (1-based) is white when odd.
    auto colour = [](int i) { return i % 2 == 1 ? Color::White : Color::Black; };
    for (int i = 1; i <= 4; ++i) {
        colors[lab.a[0][i - 1]] = colour(i);
        at[lab.a[0][i - 1]] = polar(1.0, 90.0 * (i - 1));
    }
    std::vector<Edge> edges;
    auto edge = [&](VertexId u, VertexId v) { edges.push_back({u, v}); };
    for (int i = 0; i < 4; ++i) edge(lab.a[0][i], lab.a[0][(i + 1) % 4]);

    // E(C1,C2), E(C2,C3) as label pairs.
    const int c1c2[][2] = {{1, 2}, {1, 12}, {2, 3}, {2, 5}, {3, 6}, {3, 8}, {4, 9}, {4, 11}};
    const int c2c3[][2] = {{1, 2},  {1, 12}, {2, 3},  {3, 2},  {4, 3},  {4, 5},  {5, 6},   {6, 5},
                           {7, 6},  {7, 8},  {8, 9},  {9, 8},  {10, 9}, {10, 11}, {11, 12}, {12, 11}};
    std::set<std::pair<EdgeId, EdgeId>> expected;
    for (int s = 0; s < k; ++s) {
        const double r = std::pow(4.5, s);
        const auto &a = lab.a[s], &b = lab.b[s], &c = lab.c[s];
        for (int j = 1; j <= 12; ++j) {
            const bool corner = (j - 1) % 3 == 0;
            colors[b[j - 1]] = colour(j);
            colors[c[j - 1]] = colour(j);
            at[b[j - 1]] = polar(2.0 * r, 30.0 * (j - 1));
            at[c[j - 1]] = polar((corner ? 4.5 : 3.0) * r, 30.0 * (j - 1));
        }
        for (int j = 0; j < 12; ++j) edge(b[j], b[(j + 1) % 12]);
        for (int j = 0; j < 12; ++j) edge(c[j], c[(j + 1) % 12]);
        for (int j = 0; j < 12; j += 3) edge(c[j], c[(j + 3) % 12]);
        for (const auto& pr : c1c2) edge(a[pr[0] - 1], b[pr[1] - 1]);
        const EdgeId first = static_cast<EdgeId>(edges.size());
        for (const auto& pr : c2c3) edge(b[pr[0] - 1], c[pr[1] - 1]);
        // b2c3 x b3c2, b5c6 x b6c5, b8c9 x b9c8, b11c12 x b12c11
        for (int q = 0; q < 4; ++q) expected.insert({first + 4 * q + 2, first + 4 * q + 3});
    }
    Drawing d = from_straight_line(colors, at, edges);
    std::set<std::pair<EdgeId, EdgeId>> got;
    for (CrossingId x = 0; x < d.c(); ++x) got.insert(std::minmax(d.crossing(x).first, d.crossing(x).second));
    require(got == expected, "gen_G4 layout produced unexpected crossings");
    return d;
}

}  // namespace icplane
