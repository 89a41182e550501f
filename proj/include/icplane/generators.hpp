#pragma once

#include <utility>
#include <vector>

#include "icplane/drawing.hpp"

namespace icplane {

enum class GadgetKind { W1, W2 };

struct Point {
    double x = 0, y = 0;
};

// Straight-line drawing: rotations from angles, crossings from proper segment
// intersections (numbered in edge order). Throws DrawingError if an edge is
// crossed more than once or segments overlap.
Drawing from_straight_line(const std::vector<Color>& colors, const std::vector<Point>& at,
                           const std::vector<Edge>& edges);

Drawing gen_star(int n);
Drawing gen_k2m(int m);
Drawing gen_H(int k);
Drawing gen_pdw(int n);
Drawing gen_G3(int n);
Drawing gen_G4(int k);

// The tie with all three patches as faces (gen_H(1)).
Drawing tie_drawing();

// Inserts a tie gadget into the F3 face `face` of d, attached to the two true
// vertices of that face. The new 3-patch facing the host is not a face.
Drawing insert_gadget(const Drawing& d, int face, GadgetKind* kind_out = nullptr);

// Vertices of gen_G4(k) by shell: a-square, b-ring, c-ring in label order.
struct G4Labels {
    std::vector<std::vector<VertexId>> a, b, c;  // indexed [shell][label - 1]
};
G4Labels g4_labels(int k);

}  // namespace icplane
