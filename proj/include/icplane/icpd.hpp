#pragma once

#include <string>
#include <string_view>

#include "icplane/drawing.hpp"

namespace icplane {

// ICPD v1, a line-oriented text format:
//
//   icpd 1
//   vertex <id> <B|W>
//   edge <id> <vid> <vid>
//   crossing <id> <eid> <eid>
//   rot v <vid> <dart> ...
//   rot x <cid> <dart> <dart> <dart> <dart>
//   outer <face-index>
//
// A dart names the direction it heads in: `<eid>.<0|1>` heads toward that
// endpoint (0 = first listed), `<eid>.x` heads from a vertex toward the
// crossing of a crossed edge. Rotations are counterclockwise. `#` starts a
// comment.
class ParseError : public DrawingError {
public:
    ParseError(const std::string& what, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

Drawing parse_icpd(std::string_view text);
std::string serialize_icpd(const Drawing& d);

Drawing read_icpd_file(const std::string& path);
void write_icpd_file(const Drawing& d, const std::string& path);

}  // namespace icplane
