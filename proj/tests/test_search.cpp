#include <gtest/gtest.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "icplane/analysis.hpp"
#include "icplane/connectivity.hpp"
#include "icplane/generators.hpp"
#include "icplane/icpd.hpp"
#include "icplane/maximality.hpp"
#include "icplane/search.hpp"
#include "oracles.hpp"

using namespace icplane;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("icplane_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST(Filter, Parse) {
    const Filter f = Filter::parse("maximal, kappa>=2,crossings=0");
    EXPECT_TRUE(f.maximal);
    EXPECT_EQ(f.min_kappa, 2);
    ASSERT_TRUE(f.crossings);
    EXPECT_EQ(*f.crossings, 0);
    EXPECT_EQ(f.to_string(), "maximal,kappa>=2,crossings=0");
    EXPECT_EQ(Filter::parse("").to_string(), "");
}

TEST(Filter, Errors) {
    EXPECT_THROW(Filter::parse("kappa>2"), std::invalid_argument);
    EXPECT_THROW(Filter::parse("kappa>=x"), std::invalid_argument);
    EXPECT_THROW(Filter::parse("crossings="), std::invalid_argument);
    EXPECT_THROW(Filter::parse("planar"), std::invalid_argument);
}

TEST(Enumerate, Refusals) {
    SearchOptions opt;
    EXPECT_THROW(enumerate_all(1, opt, {}), SearchRefused);
    EXPECT_THROW(enumerate_all(7, opt, {}), SearchRefused);
    opt.max_crossings = 0;
    EXPECT_NO_THROW(enumerate_all(7, opt, Filter::parse("maximal")));
    EXPECT_THROW(enumerate_all(9, opt, {}), SearchRefused);
}

// Frozen after agreement with the labelled brute force below (n <= 5).
TEST(Enumerate, FrozenCounts) {
    const int total[] = {0, 0, 1, 1, 5, 13, 91};
    const int maximal[] = {0, 0, 1, 1, 3, 4, 11};
    for (int n = 2; n <= 6; ++n) {
        const auto all = enumerate_all(n, {}, {});
        EXPECT_EQ(static_cast<int>(all.size()), total[n]) << n;
        int m = 0;
        for (const auto& r : all) m += r.stats.maximal;
        EXPECT_EQ(m, maximal[n]) << n;
    }
}

TEST(Enumerate, AgreesWithBruteForce) {
    for (int n = 2; n <= 5; ++n) {
        const auto brute = oracle::brute_enumerate(n, n / 4);
        std::set<std::vector<std::vector<int>>> ours;
        for (const auto& r : enumerate_all(n, {}, {})) ours.insert(oracle::brute_canonical(oracle::map_of(r.drawing)));
        EXPECT_EQ(ours.size(), brute.size()) << n;
        EXPECT_EQ(ours, brute) << n;
    }
}

TEST(Enumerate, NoDuplicatesAndValid) {
    const auto all = enumerate_all(6, {}, {});
    std::set<CanonicalForm> codes;
    int last_e = 0;
    for (const auto& r : all) {
        EXPECT_TRUE(codes.insert(r.form).second);
        EXPECT_TRUE(validate(r.drawing).ok());
        EXPECT_EQ(canonical_form(r.drawing), r.form);
        EXPECT_LE(r.drawing.c(), 1);
        EXPECT_GE(r.drawing.e(), last_e);
        last_e = r.drawing.e();
    }
}

TEST(Enumerate, StatsMatchDirectComputation) {
    for (const auto& r : enumerate_all(5, {}, {})) {
        EXPECT_EQ(r.stats.maximal, oracle::brute_maximal(r.drawing));
        EXPECT_EQ(r.stats.kappa, oracle::brute_kappa(r.drawing));
    }
}

TEST(Enumerate, FilterSubset) {
    const auto all = enumerate_all(6, {}, {});
    const auto some = enumerate_all(6, {}, Filter::parse("maximal,kappa>=2,crossings=1"));
    size_t expect = 0;
    for (const auto& r : all) expect += r.stats.maximal && r.stats.kappa >= 2 && r.drawing.c() == 1;
    EXPECT_EQ(some.size(), expect);
    EXPECT_GT(expect, 0u);
}

TEST(Enumerate, WithoutColourSwap) {
    SearchOptions opt;
    opt.color_swap = false;
    const auto with = enumerate_all(5, {}, {});
    const auto without = enumerate_all(5, opt, {});
    EXPECT_GE(without.size(), with.size());
    EXPECT_LE(without.size(), 2 * with.size());
}

TEST(Search, TableValues) {
    const MinSizeTable t = min_size_table(6, {});
    ASSERT_EQ(t.rows.size(), 20u);
    auto min_e = [&](int n, int k) { return t.find(n, k)->min_e; };
    EXPECT_EQ(min_e(2, 1), 1);
    EXPECT_FALSE(min_e(2, 2));
    EXPECT_EQ(min_e(4, 1), 3);
    EXPECT_EQ(min_e(4, 2), 4);
    EXPECT_EQ(t.find(4, 2)->witness_count, 2);
    EXPECT_EQ(min_e(5, 2), 6);
    EXPECT_EQ(t.find(5, 2)->witness_count, 2);
    EXPECT_EQ(min_e(6, 2), 7);
    EXPECT_EQ(t.find(6, 2)->witness_count, 1);
    EXPECT_EQ(min_e(6, 3), 9);
    EXPECT_EQ(t.find(6, 3)->witness_count, 1);
    EXPECT_FALSE(min_e(6, 4));
    for (const auto& row : t.rows) {
        if (!row.witness) continue;
        const Drawing w = decode_canonical(*row.witness);
        EXPECT_TRUE(is_maximal(w));
        EXPECT_GE(vertex_connectivity(w).kappa, row.kappa_class);
        EXPECT_EQ(w.e(), *row.min_e);
    }
}

TEST(Search, CsvAndWitnessFiles) {
    const fs::path dir = scratch("csv");
    const std::string csv = table_to_csv(search_table(4, {}, {}), dir.string());
    EXPECT_EQ(csv,
              "n,kappa_class,min_e,witness_count,witness_file\n"
              "4,1,3,1,witness_n4_k1.icpd\n"
              "4,2,4,2,witness_n4_k2.icpd\n"
              "4,3,NA,0,NA\n"
              "4,4,NA,0,NA\n");
    const Drawing w = read_icpd_file((dir / "witness_n4_k2.icpd").string());
    EXPECT_EQ(w.e(), 4);
    fs::remove_all(dir);
}

TEST(Search, ParallelIsByteIdentical) {
    SearchOptions one, four;
    four.jobs = 4;
    const fs::path a = scratch("par_a"), b = scratch("par_b");
    EXPECT_EQ(table_to_csv(search_table(6, one, {}), a.string()), table_to_csv(search_table(6, four, {}), b.string()));
    for (const auto& f : fs::directory_iterator(a)) EXPECT_EQ(slurp(f.path()), slurp(b / f.path().filename()));
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST(Search, CheckpointResume) {
    const fs::path dir = scratch("ckpt");
    SearchOptions opt;
    opt.checkpoint_dir = dir.string();
    const std::string fresh = table_to_csv(search_table(6, {}, {}), "");
    EXPECT_EQ(table_to_csv(search_table(6, opt, {}), ""), fresh);
    EXPECT_TRUE(fs::exists(dir / "run.txt"));
    EXPECT_TRUE(fs::exists(dir / "tree6.codes"));
    // Drop one stage and truncate another: both are recomputed.
    fs::remove(dir / "edges7.codes");
    {
        std::ofstream cut(dir / "edges8.codes", std::ios::trunc);
        cut << "00\n";
    }
    opt.jobs = 3;
    EXPECT_EQ(table_to_csv(search_table(6, opt, {}), ""), fresh);
    EXPECT_EQ(table_to_csv(search_table(6, opt, {}), ""), fresh);
    fs::remove_all(dir);
}

TEST(Search, CheckpointFromOtherRunRefused) {
    const fs::path dir = scratch("ckpt_other");
    SearchOptions opt;
    opt.checkpoint_dir = dir.string();
    search_table(4, opt, {});
    EXPECT_THROW(search_table(5, opt, {}), SearchRefused);
    fs::remove_all(dir);
}

TEST(CrossingFree, MaximalAreStarsAndK2) {
    SearchOptions opt;
    const CrossingFreeReport rep = verify_crossing_free(8, opt);
    EXPECT_TRUE(rep.report.ok());
    EXPECT_EQ(rep.graphs.at(2), (std::set<std::string>{"K1,1"}));
    EXPECT_EQ(rep.graphs.at(3), (std::set<std::string>{"K1,2"}));
    EXPECT_EQ(rep.graphs.at(4), (std::set<std::string>{"K1,3", "K2,2"}));
    for (int n = 5; n <= 8; ++n)
        EXPECT_EQ(rep.graphs.at(n), (std::set<std::string>{"K1," + std::to_string(n - 1), "K2," + std::to_string(n - 2)}))
            << n;
}

TEST(CrossingFree, Labels) {
    EXPECT_EQ(complete_bipartite_label(gen_star(5)), "K1,4");
    EXPECT_EQ(complete_bipartite_label(gen_k2m(3)), "K2,3");
    EXPECT_EQ(complete_bipartite_label(gen_H(1)), "K2,2");
    EXPECT_EQ(complete_bipartite_label(gen_H(2)), "");
}

TEST(Bounds, HoldOnEveryEnumeratedMaximalDrawing) {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& r : enumerate_all(n, {}, Filter::parse("maximal"))) {
            const BoundReport b = check_bounds(r.drawing);
            for (const auto& entry : b.entries)
                if (entry.applicable && !entry.informational)
                    EXPECT_TRUE(entry.satisfied) << entry.id << " n=" << n << " e=" << r.drawing.e();
        }
    }
}
