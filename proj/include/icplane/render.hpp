#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icplane/drawing.hpp"
#include "icplane/generators.hpp"

namespace icplane {

struct RenderOptions {
    std::optional<int> outer_face;  // default: the drawing's outer face, else the largest face
    double size = 600;
    int iterations = 4000;
};

// Barycentric placement of every planarization node; the outer face is
// pinned to a circle.
std::vector<Point> tutte_layout(const Drawing& d, const RenderOptions& opt = {});

// SVG of the planarization: one segment per edge piece, crossings unmarked,
// black vertices filled, white vertices hollow.
std::string render_svg(const Drawing& d, const RenderOptions& opt = {});

}  // namespace icplane
