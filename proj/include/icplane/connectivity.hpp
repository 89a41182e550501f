#pragma once

#include <vector>

#include "icplane/drawing.hpp"

namespace icplane {

// Vertex connectivity of the underlying abstract graph (crossings are not
// vertices here).
struct ConnectivityReport {
    int kappa = 0;
    int delta = 0;
    std::vector<VertexId> witness_cut;  // empty when kappa == n - 1
    std::vector<int> cut_sides;         // component sizes of G - witness_cut, descending
};

// Throws DrawingError when n < 2.
ConnectivityReport vertex_connectivity(const Drawing& d);

// Component sizes of G - removed, descending.
std::vector<int> components_without(const Drawing& d, const std::vector<VertexId>& removed);

}  // namespace icplane
