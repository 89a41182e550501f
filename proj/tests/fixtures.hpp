#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "icplane/drawing.hpp"
#include "icplane/generators.hpp"
#include "icplane/maximality.hpp"

namespace fixtures {

using namespace icplane;

// Plane cycle on m (even) vertices on a circle, vertex 0 black.
inline Drawing plane_cycle(int m) {
    std::vector<Color> colors;
    std::vector<Point> at;
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        colors.push_back(i % 2 ? Color::White : Color::Black);
        const double t = 2 * std::numbers::pi * i / m;
        at.push_back({std::cos(t), std::sin(t)});
        edges.push_back({i, (i + 1) % m});
    }
    return from_straight_line(colors, at, edges);
}

// Three ties: a large one whose two 3-patches each hold a small tie. The
// lower small tie has its side edge looped around so that its inner 3-patch
// faces the rest of the drawing.
inline Drawing three_ties() {
    const Color B = Color::Black, W = Color::White;
    // 0..3 outer tie, 4..7 lower tie, 8..11 upper tie.
    const std::vector<Color> colors = {B, W, W, B, W, B, W, B, W, B, W, B};
    const std::vector<Point> at = {{5.025, 3.5},  {9.875, 3.5}, {9.875, -1}, {5.025, -1},
                                   {7.025, 0.325}, {7.875, 0.325}, {7.025, -0.3}, {7.875, -0.3},
                                   {7, 3},         {7.9, 3},     {7, 2.125},  {7.9, 2.125}};
    const std::vector<Edge> edges = {{1, 3}, {3, 2}, {0, 2}, {0, 1}, {4, 7}, {5, 6}, {6, 7}, {4, 3}, {5, 2},
                                     {4, 5}, {8, 9}, {9, 10}, {10, 11}, {8, 11}, {8, 0}, {10, 0}, {9, 1}, {11, 1}};
    DrawingParts p = from_straight_line(colors, at, edges).parts();
    // Edge 4-5 leaves both ends below the square instead of across its top.
    for (VertexId v : {4, 5}) std::reverse(p.vertex_rot[v].begin(), p.vertex_rot[v].end());
    return Drawing::from_parts(p);
}

// Two 4-faces u0u1u2u3 and u1u4u5u2 sharing u1u2, with u3u4 drawn around the
// outside and u0u5 missing. Vertex i is u_i.
inline Drawing two_quads() {
    const Color B = Color::Black, W = Color::White;
    const std::vector<Color> colors = {W, B, W, B, W, B};
    const std::vector<Point> at = {{-3, 3}, {0, 3}, {0, 0}, {-3, 0}, {3, 3}, {3, 0}};
    const std::vector<Edge> edges = {{0, 1}, {1, 4}, {4, 5}, {1, 2}, {2, 5}, {0, 3}, {3, 2}};
    const Drawing base = from_straight_line(colors, at, edges);
    for (const EdgeAddition& a : addable_edges(base))
        if (a.kind == EdgeAddition::Kind::CleanInFace && a.u == 3 && a.v == 4) return apply_addition(base, a);
    throw DrawingError("two_quads: outer u3u4 slot not found");
}

// Two ties sharing the black vertex 0.
inline Drawing ties_sharing_vertex() {
    const Color B = Color::Black, W = Color::White;
    const std::vector<Color> colors = {B, B, W, W, B, W, W};
    const std::vector<Point> at = {{0, 0}, {2, 0}, {2, 2}, {0, 2}, {-2, 0}, {-2, -2}, {0, -2}};
    const std::vector<Edge> edges = {{0, 2}, {1, 3}, {0, 3}, {1, 2}, {0, 5}, {4, 6}, {0, 6}, {4, 5}};
    return from_straight_line(colors, at, edges);
}

// Four vertices, two crossings: ab x cd and ad x cb. Not realisable on the
// sphere, so it also breaks the Euler count.
inline Drawing four_vertices_two_crossings() {
    DrawingParts p;
    p.colors = {Color::Black, Color::White, Color::Black, Color::White};  // a b c d
    p.edges = {{0, 1}, {2, 3}, {0, 3}, {2, 1}};
    p.crossings = {{0, 1}, {2, 3}};
    using K = DartKind;
    p.vertex_rot = {{{0, K::FromEnd0}, {2, K::FromEnd0}},
                    {{0, K::FromEnd1}, {3, K::FromEnd1}},
                    {{1, K::FromEnd0}, {3, K::FromEnd0}},
                    {{1, K::FromEnd1}, {2, K::FromEnd1}}};
    p.crossing_rot = {{{0, K::CrossToEnd0}, {1, K::CrossToEnd0}, {0, K::CrossToEnd1}, {1, K::CrossToEnd1}},
                      {{2, K::CrossToEnd0}, {3, K::CrossToEnd0}, {2, K::CrossToEnd1}, {3, K::CrossToEnd1}}};
    return Drawing::from_parts(p);
}

}  // namespace fixtures
