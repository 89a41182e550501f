#pragma once

#include <string>

#include "icplane/drawing.hpp"

namespace icplane {

// Canonical byte string of a connected drawing up to map isomorphism,
// reflection and (optionally) a global colour swap. The code is a BFS
// listing of the planarization: per node its symbol (1 black, 2 white,
// 3 crossing), degree and neighbour labels in rotation order, minimised over
// all start darts and both orientations.
struct CanonicalForm {
    std::string code;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) { return a.code <=> b.code; }
};

CanonicalForm canonical_form(const Drawing& d, bool allow_color_swap = true);

// Rebuilds the drawing a code describes, with vertices and crossings
// numbered in code order.
Drawing decode_canonical(const CanonicalForm& form);

std::string to_hex(const CanonicalForm& form);
CanonicalForm from_hex(const std::string& hex);

}  // namespace icplane
