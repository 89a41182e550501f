#pragma once

#include <boost/rational.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "icplane/connectivity.hpp"
#include "icplane/drawing.hpp"
#include "icplane/validate.hpp"

namespace icplane {

// The nine face configurations of a maximal 2-connected drawing, plus an
// escape class.
enum class FaceClass { F3, A4, B4, D4, F5, A6, B6, D6, E6, Other };

const char* to_string(FaceClass fc);

struct FaceInfo {
    int face = 0;
    int size = 0;
    int lb = 0, lw = 0, lt = 0, lf = 0;  // with multiplicity
    FaceClass cls = FaceClass::Other;
    std::string label;  // class name; Other carries its signature, e.g. Other[s7:b3w3f1]
};

FaceInfo classify_face(const Drawing& d, const FaceWalk& f);
std::vector<FaceInfo> classify_faces(const Drawing& d);

// Keys are FaceInfo::label; only classes that occur are present.
using FaceCensus = std::map<std::string, int>;
FaceCensus face_census(const Drawing& d);
int census_count(const FaceCensus& census, FaceClass fc);

enum class TieClass { Clean, Bad, Other };
const char* to_string(TieClass tc);

struct TieInfo {
    CrossingId crossing = kNone;
    VertexId a = kNone, b = kNone, c = kNone, d = kNone;  // ab, cd cross; a, c black
    bool sides_clean = false;  // ad and cb present and uncrossed
    bool r1_face = false;      // 3-patch at side ad
    bool r2_face = false;      // 3-patch at side cb
    bool r3_face = false;      // 6-patch
    TieClass cls = TieClass::Other;
    int r = 3;
    std::string reason;
};

TieInfo classify_tie(const Drawing& d, CrossingId x);

enum class CheckStatus { Pass, Fail, Inapplicable };
const char* to_string(CheckStatus s);

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
    std::vector<int> offenders;
};

struct CheckReport {
    std::vector<CheckResult> checks;

    bool ok() const;  // no applicable check failed
    const CheckResult* find(const std::string& id) const;
};

// Facts that decide which checks apply. Computed on demand when absent.
struct Hypotheses {
    bool maximal = false;
    int kappa = 0;
};
Hypotheses hypotheses_of(const Drawing& d);

CheckReport tie_face_incidence_check(const Drawing& d, const std::optional<Hypotheses>& h = std::nullopt);
CheckReport check_structural_lemmas(const Drawing& d, const std::optional<Hypotheses>& h = std::nullopt);
CheckReport check_3conn_properties(const Drawing& d, const std::optional<Hypotheses>& h = std::nullopt);

using Rational = boost::rational<long long>;

struct BoundEntry {
    std::string id;  // upper, lower2, lower3, conj4
    bool applicable = false;
    bool satisfied = false;
    bool informational = false;
    long long lhs = 0;  // e
    Rational rhs;
};

struct BoundReport {
    std::vector<BoundEntry> entries;
    const BoundEntry* find(const std::string& id) const;
};

BoundReport check_bounds(const Drawing& d, const std::optional<Hypotheses>& h = std::nullopt);

// Requires c == 0 (throws DrawingError otherwise).
bool is_quadrangulation(const Drawing& d);

}  // namespace icplane
