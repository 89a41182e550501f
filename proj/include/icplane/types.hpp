#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace icplane {

// Dense 0-based ids. Nodes of the planarization number true vertices first,
// then crossings (node n + x for crossing x).
using VertexId = int;
using EdgeId = int;
using CrossingId = int;
using DartId = int;
using NodeId = int;

inline constexpr int kNone = -1;

enum class Color : std::uint8_t { Black, White };

inline Color opposite(Color c) { return c == Color::Black ? Color::White : Color::Black; }
inline char color_char(Color c) { return c == Color::Black ? 'B' : 'W'; }

// Which half of an edge a dart runs along.
//   FromEnd0 / FromEnd1: dart leaving endpoint 0 / 1. On a crossed edge it
//   stops at the crossing.
//   CrossToEnd0 / CrossToEnd1: dart leaving the crossing toward endpoint 0 / 1.
enum class DartKind : std::uint8_t { FromEnd0 = 0, FromEnd1 = 1, CrossToEnd0 = 2, CrossToEnd1 = 3 };

struct DartRef {
    EdgeId edge = kNone;
    DartKind kind = DartKind::FromEnd0;

    friend bool operator==(const DartRef&, const DartRef&) = default;
};

inline bool leaves_vertex(DartKind k) { return k == DartKind::FromEnd0 || k == DartKind::FromEnd1; }
inline DartKind from_end(int end) { return end == 0 ? DartKind::FromEnd0 : DartKind::FromEnd1; }
inline DartKind cross_to_end(int end) { return end == 0 ? DartKind::CrossToEnd0 : DartKind::CrossToEnd1; }

// Malformed construction input: dangling ids, darts attached to the wrong
// node, invalid parameters to generators.
class DrawingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace icplane
