#pragma once

#include <string>

#include "icplane/drawing.hpp"

namespace icplane {

struct AnalysisOutcome {
    std::string json;        // report_version 1
    bool valid = false;      // validate() found nothing
    bool checks_ok = false;  // no applicable check or bound failed
};

AnalysisOutcome analyze(const Drawing& d);

}  // namespace icplane
