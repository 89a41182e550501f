#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "icplane/icpd.hpp"
#include "icplane/report.hpp"

using namespace icplane;
using nlohmann::json;

TEST(Report, Keys) {
    const AnalysisOutcome out = analyze(gen_H(2));
    EXPECT_TRUE(out.valid);
    EXPECT_TRUE(out.checks_ok);
    const json j = json::parse(out.json);
    EXPECT_EQ(j["report_version"], 1);
    EXPECT_EQ(j["n"], 8);
    EXPECT_EQ(j["e"], 10);
    EXPECT_EQ(j["c"], 2);
    EXPECT_TRUE(j["validation"]["ok"].get<bool>());
    const json& a = j["analysis"];
    for (const char* key : {"maximal", "addable_edges", "connectivity", "faces", "face_census", "tie_classes", "bounds",
                            "lemma_checks", "tie_face_incidence", "three_connected", "checks_ok"})
        EXPECT_TRUE(a.contains(key)) << key;
    EXPECT_TRUE(a["maximal"].get<bool>());
    EXPECT_EQ(a["connectivity"]["kappa"], 2);
    EXPECT_EQ(a["face_census"], json::parse(R"({"A6":1,"B6":2,"D4":1,"F3":2})"));
}

TEST(Report, InvalidDrawingHasNoAnalysis) {
    const AnalysisOutcome out = analyze(fixtures::four_vertices_two_crossings());
    EXPECT_FALSE(out.valid);
    const json j = json::parse(out.json);
    EXPECT_FALSE(j["validation"]["ok"].get<bool>());
    EXPECT_FALSE(j["validation"]["violations"].empty());
    EXPECT_TRUE(j["analysis"].is_null());
}

TEST(Report, BoundsAreExactRationals) {
    const json j = json::parse(analyze(gen_G4(1)).json);
    EXPECT_EQ(j["analysis"]["connectivity"]["kappa"], 4);
    bool seen = false;
    for (const auto& b : j["analysis"]["bounds"]) {
        ASSERT_TRUE(b["rhs"].contains("num"));
        ASSERT_TRUE(b["rhs"].contains("den"));
        EXPECT_GT(b["rhs"]["den"].get<long long>(), 0);
        seen = true;
    }
    EXPECT_TRUE(seen);
}

TEST(Report, Deterministic) { EXPECT_EQ(analyze(gen_H(3)).json, analyze(gen_H(3)).json); }
