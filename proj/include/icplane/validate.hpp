#pragma once

#include <cstdint>
#include <vector>

#include "icplane/drawing.hpp"

namespace icplane {

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(const std::string& rule) const;
};

// Full structural validation. Rule ids, in check order:
//   rotation, connected, simple, bipartite, crossing-alternation,
//   one-crossing-per-edge, good-crossing, independent-crossings,
//   vertex-crossing-degree, euler, crossing-bound
ValidationReport validate(const Drawing& d);

// Chooses which edge of each crossing planar_skeleton removes.
class RemovalRule {
public:
    static RemovalRule min_edge_id() { return RemovalRule(Kind::Min, {}); }
    static RemovalRule max_edge_id() { return RemovalRule(Kind::Max, {}); }
    // choices[x] == 0 removes crossing(x).first, otherwise .second.
    static RemovalRule per_crossing(std::vector<std::uint8_t> choices) {
        return RemovalRule(Kind::Explicit, std::move(choices));
    }

    EdgeId edge_to_remove(const Drawing& d, CrossingId x) const;

private:
    enum class Kind { Min, Max, Explicit };
    RemovalRule(Kind k, std::vector<std::uint8_t> choices) : kind_(k), choices_(std::move(choices)) {}
    Kind kind_;
    std::vector<std::uint8_t> choices_;
};

// Deletes one edge per crossing. Surviving edges keep their relative order
// and are renumbered densely.
Drawing planar_skeleton(const Drawing& d, const RemovalRule& rule);

}  // namespace icplane
