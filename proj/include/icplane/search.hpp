#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "icplane/canonical.hpp"
#include "icplane/drawing.hpp"
#include "icplane/validate.hpp"

namespace icplane {

class SearchRefused : public DrawingError {
public:
    using DrawingError::DrawingError;
};

// Conjunction of predicates, written e.g. "maximal,kappa>=2,crossings=0".
struct Filter {
    bool maximal = false;
    int min_kappa = 0;
    std::optional<int> crossings;

    static Filter parse(const std::string& text);  // throws std::invalid_argument
    std::string to_string() const;
};

struct SearchOptions {
    int max_crossings = -1;  // -1: floor(n/4); always clamped to floor(n/4)
    bool color_swap = true;
    int jobs = 1;
    std::string checkpoint_dir;  // empty: no checkpointing
    int n_limit = 6;             // when crossings are allowed
    int crossing_free_limit = 8;
};

struct DrawingStats {
    bool maximal = false;
    int kappa = 0;
};

struct Enumerated {
    CanonicalForm form;
    Drawing drawing;
    DrawingStats stats;
};

// Every connected bipartite IC-plane drawing with n true vertices and at most
// the allowed crossings, once per isomorphism class, in canonical-code order
// within each edge count (edge counts ascending). Throws SearchRefused when n
// is outside the configured limits.
void enumerate_drawings(int n, const SearchOptions& opt, const Filter& filter,
                        const std::function<void(const Enumerated&)>& sink);
std::vector<Enumerated> enumerate_all(int n, const SearchOptions& opt, const Filter& filter);

struct MinSizeRow {
    int n = 0;
    int kappa_class = 1;  // rows cover kappa >= kappa_class
    std::optional<int> min_e;
    int witness_count = 0;
    std::optional<CanonicalForm> witness;  // smallest code among the extremal witnesses
};

struct MinSizeTable {
    std::vector<MinSizeRow> rows;
    const MinSizeRow* find(int n, int kappa_class) const;
};

// Rows (n, t) for t = max(1, filter.min_kappa) .. 4 over drawings passing
// `filter` (maximality is always required).
MinSizeTable search_table(int n, const SearchOptions& opt, const Filter& filter);
// With a checkpoint directory, each n uses its own subdirectory n<k>.
MinSizeTable min_size_table(int n_max, const SearchOptions& opt);

// CSV with columns n,kappa_class,min_e,witness_count,witness_file; writes one
// ICPD file per non-empty row into `witness_dir` when it is non-empty.
std::string table_to_csv(const MinSizeTable& table, const std::string& witness_dir);

std::string witness_file_name(const MinSizeRow& row);

struct CrossingFreeReport {
    ValidationReport report;
    std::map<int, std::set<std::string>> graphs;  // n -> abstract graphs of maximal drawings, e.g. K1,3
};

// Checks that every maximal crossing-free drawing on n <= n_max vertices is a
// star or K2,n-2.
CrossingFreeReport verify_crossing_free(int n_max, const SearchOptions& opt);

// Label of a complete bipartite graph "Ks,t" (s <= t), or empty when the
// drawing's graph is not complete bipartite.
std::string complete_bipartite_label(const Drawing& d);

}  // namespace icplane
