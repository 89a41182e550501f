#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "icplane/drawing.hpp"

namespace icplane {

// Where a new dart goes: immediately after `after` in the counterclockwise
// rotation of `vertex`. The corner lies in face_of(rot_next(after)).
struct Corner {
    VertexId vertex = kNone;
    DartId after = kNone;
};

// Corners of the true vertices on a face walk, in walk order.
std::vector<Corner> face_corners(const Drawing& d, int face);

// A certificate that edge uv can be drawn in the existing drawing.
//   CleanInFace: u and v share face_u == face_v; u < v.
//   CrossingThrough: the new edge leaves u inside face_u, crosses the clean
//   edge `crossed` through its dart `crossed_dart` (face_u lies on the right
//   of that dart), and reaches v inside face_v. u < v; the mirror placement
//   is a certificate through the twin dart.
struct EdgeAddition {
    enum class Kind : std::uint8_t { CleanInFace = 0, CrossingThrough = 1 };

    Kind kind = Kind::CleanInFace;
    VertexId u = kNone, v = kNone;
    DartId after_u = kNone, after_v = kNone;
    int face_u = kNone, face_v = kNone;
    EdgeId crossed = kNone;
    DartId crossed_dart = kNone;

    auto key() const { return std::tie(kind, u, v, crossed, crossed_dart, after_u, after_v); }
    friend bool operator==(const EdgeAddition& a, const EdgeAddition& b) { return a.key() == b.key(); }
    friend bool operator<(const EdgeAddition& a, const EdgeAddition& b) { return a.key() < b.key(); }
};

class StaleCertificate : public DrawingError {
public:
    using DrawingError::DrawingError;
};

// All certificates, sorted by key(). Expects a valid drawing.
std::vector<EdgeAddition> addable_edges(const Drawing& d);
bool is_maximal(const Drawing& d);

// Throws StaleCertificate when `a` is not a certificate of `d`.
Drawing apply_addition(const Drawing& d, const EdgeAddition& a);
// Skips the certificate check; `a` must come from addable_edges(d).
Drawing apply_addition_unchecked(const Drawing& d, const EdgeAddition& a);

// New pendant vertex w of colour opposite to u, attached in u's corner. With
// crossed_dart set, the pendant edge crosses that clean edge and w lands on
// the left of the dart, the corner being on its right.
Drawing add_pendant(const Drawing& d, const Corner& at, DartId crossed_dart = kNone);

enum class ChoicePolicy { FirstCertificate, LastCertificate, Random };

Drawing saturate(const Drawing& d, ChoicePolicy policy = ChoicePolicy::FirstCertificate, std::uint64_t seed = 0);

}  // namespace icplane
