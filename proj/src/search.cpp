#include "icplane/search.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "icplane/connectivity.hpp"
#include "icplane/icpd.hpp"
#include "icplane/maximality.hpp"

namespace icplane {

namespace fs = std::filesystem;

Filter Filter::parse(const std::string& text) {
    Filter f;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        auto number = [&](size_t at) {
            const std::string rest = item.substr(at);
            if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
                throw std::invalid_argument("bad number in filter term '" + item + "'");
            return std::stoi(rest);
        };
        if (item == "maximal") {
            f.maximal = true;
        } else if (item.rfind("kappa>=", 0) == 0) {
            f.min_kappa = number(7);
        } else if (item.rfind("crossings=", 0) == 0) {
            f.crossings = number(10);
        } else {
            throw std::invalid_argument("unknown filter term '" + item + "'");
        }
    }
    return f;
}

std::string Filter::to_string() const {
    std::vector<std::string> terms;
    if (maximal) terms.push_back("maximal");
    if (min_kappa > 0) terms.push_back("kappa>=" + std::to_string(min_kappa));
    if (crossings) terms.push_back("crossings=" + std::to_string(*crossings));
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) out += (i ? "," : "") + terms[i];
    return out;
}

namespace {

int effective_max_c(int n, const SearchOptions& opt) {
    const int cap = n / 4;
    return opt.max_crossings < 0 ? cap : std::min(opt.max_crossings, cap);
}

void check_limits(int n, int max_c, const SearchOptions& opt) {
    if (n < 2) throw SearchRefused("enumeration needs n >= 2");
    if (n > opt.crossing_free_limit)
        throw SearchRefused("n = " + std::to_string(n) + " exceeds the crossing-free limit " +
                            std::to_string(opt.crossing_free_limit));
    if (max_c > 0 && n > opt.n_limit)
        throw SearchRefused("n = " + std::to_string(n) + " exceeds the limit " + std::to_string(opt.n_limit) +
                            " for enumeration with crossings; use --max-crossings 0");
}

// Splits [0, count) into `jobs` contiguous chunks and runs fn(begin, end, slot)
// on each; results are indexed by slot so the merge order is fixed.
template <class Fn>
void run_chunks(size_t count, int jobs, Fn&& fn) {
    const size_t workers = std::max<size_t>(1, std::min<size_t>(static_cast<size_t>(std::max(jobs, 1)), count));
    if (workers == 1) {
        fn(0, count, 0);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (size_t w = 0; w < workers; ++w) {
        const size_t begin = count * w / workers, end = count * (w + 1) / workers;
        pool.emplace_back([&, begin, end, w] {
            try {
                fn(begin, end, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::vector<CanonicalForm> sorted_unique(std::vector<std::vector<CanonicalForm>> parts) {
    std::vector<CanonicalForm> all;
    for (auto& p : parts) all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

// Trees grow by one pendant vertex, either clean or crossing one clean edge.
void pendant_children(const Drawing& d, int max_c, bool swap, std::vector<CanonicalForm>& out) {
    const bool may_cross = d.c() < max_c;
    for (VertexId u = 0; u < d.n(); ++u) {
        const bool u_free = d.crossings_at(u).empty();
        for (DartId after : d.rotation(u)) {
            out.push_back(canonical_form(add_pendant(d, {u, after}), swap));
            if (!may_cross || !u_free) continue;
            const int face = d.face_of(d.rot_next(after));
            for (EdgeId id = 0; id < d.e(); ++id) {
                const Edge& ed = d.edge(id);
                if (!d.is_clean(id) || ed.has(u) || !d.crossings_at(ed.u).empty() || !d.crossings_at(ed.v).empty())
                    continue;
                for (DartKind k : {DartKind::FromEnd0, DartKind::FromEnd1}) {
                    const DartId g = d.dart(id, k);
                    if (d.face_of(g) == face) out.push_back(canonical_form(add_pendant(d, {u, after}, g), swap));
                }
            }
        }
    }
}

void addition_children(const Drawing& d, int max_c, bool swap, std::vector<CanonicalForm>& out) {
    for (const EdgeAddition& a : addable_edges(d)) {
        if (a.kind == EdgeAddition::Kind::CrossingThrough && d.c() >= max_c) continue;
        out.push_back(canonical_form(apply_addition_unchecked(d, a), swap));
    }
}

class Checkpoint {
public:
    Checkpoint(std::string dir, const std::string& signature) : dir_(std::move(dir)) {
        if (dir_.empty()) return;
        fs::create_directories(dir_);
        const fs::path sig = fs::path(dir_) / "run.txt";
        if (fs::exists(sig)) {
            std::ifstream in(sig);
            std::string have;
            std::getline(in, have);
            if (have != signature)
                throw SearchRefused("checkpoint directory " + dir_ + " belongs to a different run (" + have + ")");
        } else {
            write_atomic(sig, signature + "\n");
        }
    }

    bool enabled() const { return !dir_.empty(); }

    std::optional<std::vector<CanonicalForm>> load(const std::string& stage) const {
        if (!enabled()) return std::nullopt;
        const fs::path p = path(stage);
        if (!fs::exists(p)) return std::nullopt;
        std::ifstream in(p);
        std::string line;
        std::vector<CanonicalForm> codes;
        bool complete = false;
        while (std::getline(in, line)) {
            if (line == "end") {
                complete = true;
                break;
            }
            codes.push_back(from_hex(line));
        }
        if (!complete) return std::nullopt;
        return codes;
    }

    void store(const std::string& stage, const std::vector<CanonicalForm>& codes) const {
        if (!enabled()) return;
        std::string text;
        for (const auto& c : codes) text += to_hex(c) + "\n";
        text += "end\n";
        write_atomic(path(stage), text);
    }

private:
    fs::path path(const std::string& stage) const { return fs::path(dir_) / (stage + ".codes"); }

    static void write_atomic(const fs::path& target, const std::string& text) {
        const fs::path tmp = target.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << text;
            if (!out) throw std::runtime_error("cannot write checkpoint file " + tmp.string());
        }
        fs::rename(tmp, target);
    }

    std::string dir_;
};

bool passes(const Drawing& d, const DrawingStats& s, const Filter& f) {
    if (f.maximal && !s.maximal) return false;
    if (s.kappa < f.min_kappa) return false;
    if (f.crossings && d.c() != *f.crossings) return false;
    return true;
}

}  // namespace

void enumerate_drawings(int n, const SearchOptions& opt, const Filter& filter,
                        const std::function<void(const Enumerated&)>& sink) {
    const int max_c = effective_max_c(n, opt);
    check_limits(n, max_c, opt);
    const bool swap = opt.color_swap;
    Checkpoint store(opt.checkpoint_dir, "icplane-search 1 n=" + std::to_string(n) + " max_c=" +
                                             std::to_string(max_c) + " swap=" + std::to_string(swap));

    auto expand = [&](const std::vector<CanonicalForm>& codes, bool pendants) {
        std::vector<std::vector<CanonicalForm>> parts(std::max(opt.jobs, 1));
        run_chunks(codes.size(), opt.jobs, [&](size_t b, size_t e, size_t slot) {
            for (size_t i = b; i < e; ++i) {
                const Drawing d = decode_canonical(codes[i]);
                if (pendants)
                    pendant_children(d, max_c, swap, parts[slot]);
                else
                    addition_children(d, max_c, swap, parts[slot]);
            }
        });
        return sorted_unique(std::move(parts));
    };

    // Trees on k vertices, k = 2..n.
    std::vector<CanonicalForm> layer;
    if (auto got = store.load("tree2")) {
        layer = std::move(*got);
    } else {
        DrawingParts p;
        p.colors = {Color::Black, Color::White};
        p.edges = {{0, 1}};
        p.vertex_rot = {{{0, DartKind::FromEnd0}}, {{0, DartKind::FromEnd1}}};
        layer = {canonical_form(Drawing::from_parts(p), swap)};
        store.store("tree2", layer);
    }
    for (int k = 3; k <= n; ++k) {
        const std::string stage = "tree" + std::to_string(k);
        if (auto got = store.load(stage)) {
            layer = std::move(*got);
        } else {
            layer = expand(layer, true);
            store.store(stage, layer);
        }
    }

    // Edge layers from e = n - 1 upward.
    for (int e = n - 1; !layer.empty(); ++e) {
        std::vector<std::vector<Enumerated>> found(std::max(opt.jobs, 1));
        run_chunks(layer.size(), opt.jobs, [&](size_t b, size_t end, size_t slot) {
            for (size_t i = b; i < end; ++i) {
                Enumerated rec{layer[i], decode_canonical(layer[i]), {}};
                rec.stats.maximal = is_maximal(rec.drawing);
                rec.stats.kappa = vertex_connectivity(rec.drawing).kappa;
                if (passes(rec.drawing, rec.stats, filter)) found[slot].push_back(std::move(rec));
            }
        });
        for (const auto& part : found)
            for (const auto& rec : part) sink(rec);

        const std::string stage = "edges" + std::to_string(e + 1);
        if (auto got = store.load(stage)) {
            layer = std::move(*got);
        } else {
            layer = expand(layer, false);
            store.store(stage, layer);
        }
    }
}

std::vector<Enumerated> enumerate_all(int n, const SearchOptions& opt, const Filter& filter) {
    std::vector<Enumerated> out;
    enumerate_drawings(n, opt, filter, [&](const Enumerated& r) { out.push_back(r); });
    return out;
}

const MinSizeRow* MinSizeTable::find(int n, int kappa_class) const {
    for (const auto& r : rows)
        if (r.n == n && r.kappa_class == kappa_class) return &r;
    return nullptr;
}

MinSizeTable search_table(int n, const SearchOptions& opt, const Filter& filter) {
    Filter f = filter;
    f.maximal = true;
    const int t0 = std::max(1, f.min_kappa);
    MinSizeTable table;
    for (int t = t0; t <= 4; ++t) table.rows.push_back({n, t, std::nullopt, 0, std::nullopt});
    enumerate_drawings(n, opt, f, [&](const Enumerated& rec) {
        for (auto& row : table.rows) {
            if (rec.stats.kappa < row.kappa_class) continue;
            const int e = rec.drawing.e();
            if (!row.min_e || e < *row.min_e) {
                row.min_e = e;
                row.witness_count = 0;
                row.witness.reset();
            }
            if (e == *row.min_e) {
                ++row.witness_count;
                if (!row.witness || rec.form < *row.witness) row.witness = rec.form;
            }
        }
    });
    return table;
}

MinSizeTable min_size_table(int n_max, const SearchOptions& opt) {
    MinSizeTable table;
    for (int n = 2; n <= n_max; ++n) {
        SearchOptions o = opt;
        if (!opt.checkpoint_dir.empty()) o.checkpoint_dir = (fs::path(opt.checkpoint_dir) / ("n" + std::to_string(n))).string();
        auto part = search_table(n, o, Filter{});
        table.rows.insert(table.rows.end(), part.rows.begin(), part.rows.end());
    }
    return table;
}

std::string witness_file_name(const MinSizeRow& row) {
    return "witness_n" + std::to_string(row.n) + "_k" + std::to_string(row.kappa_class) + ".icpd";
}

std::string table_to_csv(const MinSizeTable& table, const std::string& witness_dir) {
    std::string out = "n,kappa_class,min_e,witness_count,witness_file\n";
    if (!witness_dir.empty()) fs::create_directories(witness_dir);
    for (const auto& row : table.rows) {
        out += std::to_string(row.n) + "," + std::to_string(row.kappa_class) + ",";
        if (!row.min_e) {
            out += "NA,0,NA\n";
            continue;
        }
        const std::string name = witness_file_name(row);
        out += std::to_string(*row.min_e) + "," + std::to_string(row.witness_count) + "," + name + "\n";
        if (!witness_dir.empty()) write_icpd_file(decode_canonical(*row.witness), (fs::path(witness_dir) / name).string());
    }
    return out;
}

std::string complete_bipartite_label(const Drawing& d) {
    int s = 0;
    for (VertexId v = 0; v < d.n(); ++v) s += d.color(v) == Color::Black;
    int t = d.n() - s;
    if (s > t) std::swap(s, t);
    if (s == 0 || d.e() != s * t) return {};
    return "K" + std::to_string(s) + "," + std::to_string(t);
}

CrossingFreeReport verify_crossing_free(int n_max, const SearchOptions& opt) {
    CrossingFreeReport rep;
    SearchOptions o = opt;
    o.max_crossings = 0;
    Filter f;
    f.maximal = true;
    for (int n = 2; n <= n_max; ++n) {
        auto& seen = rep.graphs[n];
        enumerate_drawings(n, o, f, [&](const Enumerated& rec) {
            const std::string label = complete_bipartite_label(rec.drawing);
            const bool star = label == "K1," + std::to_string(n - 1);
            const bool k2 = label == "K2," + std::to_string(n - 2);
            if (star || k2) {
                seen.insert(label);
                return;
            }
            seen.insert(label.empty() ? "other" : label);
            rep.report.violations.push_back({"crossing-free-maximal",
                                             "maximal crossing-free drawing with n=" + std::to_string(n) + ", e=" +
                                                 std::to_string(rec.drawing.e()) +
                                                 " is neither a star nor K2,n-2; code " + to_hex(rec.form),
                                             {n}});
        });
    }
    return rep;
}

}  // namespace icplane
