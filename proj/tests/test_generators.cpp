#include <gtest/gtest.h>

#include <set>

#include "icplane/analysis.hpp"
#include "icplane/connectivity.hpp"
#include "icplane/generators.hpp"
#include "icplane/icpd.hpp"
#include "icplane/maximality.hpp"
#include "oracles.hpp"

using namespace icplane;

TEST(Star, Shape) {
    EXPECT_EQ(gen_star(2).e(), 1);
    const Drawing d = gen_star(6);
    EXPECT_EQ(d.e(), 5);
    EXPECT_EQ(vertex_connectivity(d).kappa, 1);
    for (int n = 2; n <= 12; ++n) EXPECT_TRUE(validate(gen_star(n)).ok());
    EXPECT_THROW(gen_star(1), DrawingError);
}

TEST(K2m, Shape) {
    for (int m = 2; m <= 8; ++m) {
        const Drawing d = gen_k2m(m);
        EXPECT_TRUE(validate(d).ok());
        EXPECT_EQ(d.e(), 2 * m);
        EXPECT_EQ(vertex_connectivity(d).kappa, 2);
    }
}

TEST(H, CountsAndMaximality) {
    for (int k = 1; k <= 10; ++k) {
        const Drawing d = gen_H(k);
        EXPECT_TRUE(validate(d).ok()) << k;
        EXPECT_EQ(d.n(), 4 * k);
        EXPECT_EQ(d.e(), 6 * k - 2);
        EXPECT_EQ(d.c(), k);
        EXPECT_EQ(vertex_connectivity(d).kappa, 2);
        EXPECT_TRUE(is_maximal(d));
    }
    EXPECT_THROW(gen_H(0), DrawingError);
}

TEST(H, GadgetAtEveryTriangle) {
    const Drawing d = gen_H(2);
    std::set<GadgetKind> seen;
    for (const auto& f : classify_faces(d)) {
        if (f.cls != FaceClass::F3) continue;
        GadgetKind kind;
        const Drawing g = insert_gadget(d, f.face, &kind);
        seen.insert(kind);
        EXPECT_TRUE(validate(g).ok());
        EXPECT_EQ(g.n(), d.n() + 4);
        EXPECT_EQ(g.e(), d.e() + 6);
        EXPECT_EQ(g.c(), d.c() + 1);
    }
    EXPECT_FALSE(seen.empty());
}

TEST(H, OracleMaximalityAtSmallK) {
    for (int k = 1; k <= 2; ++k) EXPECT_TRUE(oracle::brute_maximal(gen_H(k)));
}

TEST(PseudoDoubleWheel, IsQuadrangulation) {
    for (int n = 6; n <= 16; n += 2) {
        const Drawing d = gen_pdw(n);
        EXPECT_TRUE(validate(d).ok());
        EXPECT_EQ(d.e(), 2 * n - 4);
        EXPECT_TRUE(is_quadrangulation(d));
    }
    EXPECT_THROW(gen_pdw(7), DrawingError);
}

TEST(G3, Counts) {
    for (int n = 6; n <= 20; n += 2) {
        const Drawing d = gen_G3(n);
        EXPECT_TRUE(validate(d).ok()) << n;
        EXPECT_EQ(d.e(), 2 * n - 3);
        EXPECT_EQ(d.c(), 1);
        EXPECT_EQ(vertex_connectivity(d).kappa, 3);
    }
}

TEST(G3, MaximalOnlyAtSix) {
    // From n = 8 the cycle has four consecutive vertices away from the hub
    // crossing, and an edge joining the outer two can cross the middle edge.
    EXPECT_TRUE(is_maximal(gen_G3(6)));
    EXPECT_TRUE(oracle::brute_maximal(gen_G3(6)));
    for (int n = 8; n <= 20; n += 2) {
        const Drawing d = gen_G3(n);
        const auto adds = addable_edges(d);
        ASSERT_FALSE(adds.empty()) << n;
        for (const auto& a : adds) EXPECT_EQ(a.kind, EdgeAddition::Kind::CrossingThrough);
        EXPECT_TRUE(validate(apply_addition(d, adds.front())).ok());
    }
    EXPECT_FALSE(oracle::brute_maximal(gen_G3(8)));
}

TEST(G4, CountsAndConnectivity) {
    for (int k = 1; k <= 2; ++k) {
        const Drawing d = gen_G4(k);
        EXPECT_TRUE(validate(d).ok());
        EXPECT_EQ(d.n(), 24 * k + 4);
        EXPECT_EQ(d.e(), 52 * k + 4);
        EXPECT_EQ(d.c(), 4 * k);
        EXPECT_TRUE(is_maximal(d));
        EXPECT_EQ(vertex_connectivity(d).kappa, 4);
    }
}

TEST(G4, LabelsCoverEveryVertexOnce) {
    const G4Labels l = g4_labels(2);
    std::set<VertexId> all;
    size_t count = 0;
    for (const auto* ring : {&l.a, &l.b, &l.c})
        for (const auto& shell : *ring) {
            count += shell.size();
            all.insert(shell.begin(), shell.end());
        }
    // The a-square of a shell is shared with the c-ring of the previous one.
    EXPECT_EQ(all.size(), static_cast<size_t>(gen_G4(2).n()));
    EXPECT_GT(count, all.size());
}

TEST(Generate, ByteDeterministic) {
    EXPECT_EQ(serialize_icpd(gen_H(4)), serialize_icpd(gen_H(4)));
    EXPECT_EQ(serialize_icpd(gen_G4(2)), serialize_icpd(gen_G4(2)));
}

TEST(StraightLine, RejectsDoubleCrossing) {
    const Color B = Color::Black, W = Color::White;
    // One long edge crossed by two short ones.
    EXPECT_THROW(from_straight_line({B, W, W, B, W, B}, {{0, 0}, {10, 0}, {3, -1}, {3, 1}, {6, -1}, {6, 1}},
                                    {{0, 1}, {3, 2}, {5, 4}}),
                 DrawingError);
}
