#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "icplane/generators.hpp"
#include "icplane/icpd.hpp"
#include "icplane/maximality.hpp"
#include "icplane/render.hpp"
#include "icplane/report.hpp"
#include "icplane/search.hpp"

namespace fs = std::filesystem;
using namespace icplane;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw UsageError("cannot write " + path);
}

Drawing generate(std::string family, int param) {
    for (auto& ch : family) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (family == "star") return gen_star(param);
    if (family == "k2m") return gen_k2m(param);
    if (family == "h") return gen_H(param);
    if (family == "pdw") return gen_pdw(param);
    if (family == "g3") return gen_G3(param);
    if (family == "g4") return gen_G4(param);
    if (family == "tie") return tie_drawing();
    throw UsageError("unknown family '" + family + "' (star, k2m, H, pdw, G3, G4, tie)");
}

int default_jobs() {
    if (const char* env = std::getenv("ICPLANE_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            throw UsageError("ICPLANE_JOBS must be a positive integer");
        }
    }
    return 1;
}

ChoicePolicy parse_policy(const std::string& s) {
    if (s == "first") return ChoicePolicy::FirstCertificate;
    if (s == "last") return ChoicePolicy::LastCertificate;
    if (s == "random") return ChoicePolicy::Random;
    throw UsageError("unknown policy '" + s + "' (first, last, random)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bipartite IC-plane drawings: analysis, generation, saturation, search"};
    app.require_subcommand(1);

    std::string in_path, out_path, svg_path, family, policy = "first", filter_text, checkpoint, witness_dir;
    bool strict = false, list = false, crossing_free_report = false, no_swap = false;
    int param = 0, jobs = 0, n = 0, n_max = 0, max_c = -1, outer = -1;
    std::uint64_t seed = 0;

    auto* analyze_cmd = app.add_subcommand("analyze", "JSON report: validation, faces, ties, connectivity, bounds, checks");
    analyze_cmd->add_option("input", in_path, "ICPD file")->required();
    analyze_cmd->add_option("-o,--out", out_path, "report path (default stdout)");
    analyze_cmd->add_flag("--strict", strict, "exit 1 when validation or any applicable check fails");

    auto* gen_cmd = app.add_subcommand("generate", "write a family member as ICPD");
    gen_cmd->add_option("family", family, "star | k2m | H | pdw | G3 | G4 | tie")->required();
    gen_cmd->add_option("param", param, "family parameter");
    gen_cmd->add_option("-o,--out", out_path, "ICPD path (default stdout)");
    gen_cmd->add_option("--svg", svg_path, "also render to this SVG file");

    auto* max_cmd = app.add_subcommand("maximal?", "exit 0 when no edge can be added, 1 otherwise");
    max_cmd->alias("maximal");
    max_cmd->add_option("input", in_path, "ICPD file")->required();
    max_cmd->add_flag("--list", list, "print every certificate");

    auto* sat_cmd = app.add_subcommand("saturate", "add edges until maximal");
    sat_cmd->add_option("input", in_path, "ICPD file")->required();
    sat_cmd->add_option("-o,--out", out_path, "ICPD path (default stdout)");
    sat_cmd->add_option("--policy", policy, "first | last | random");
    sat_cmd->add_option("--seed", seed, "seed for --policy random");

    auto* search_cmd = app.add_subcommand("search", "exhaustive minimum-size table as CSV");
    auto* n_opt = search_cmd->add_option("--n", n, "number of true vertices");
    auto* nmax_opt = search_cmd->add_option("--n-max", n_max, "all n from 2 to this value");
    n_opt->excludes(nmax_opt);
    search_cmd->add_option("--max-crossings", max_c, "crossing cap (default and ceiling floor(n/4))");
    search_cmd->add_option("--filter", filter_text, "e.g. maximal,kappa>=2,crossings=0");
    search_cmd->add_option("--jobs", jobs, "worker threads (default ICPLANE_JOBS or 1)");
    search_cmd->add_option("--checkpoint", checkpoint, "checkpoint directory (resumes when present)");
    search_cmd->add_option("--out", out_path, "CSV path (default stdout)");
    search_cmd->add_option("--witness-dir", witness_dir, "ICPD witness directory (default: next to --out)");
    search_cmd->add_flag("--no-color-swap", no_swap, "do not identify drawings under a global colour swap");
    search_cmd->add_flag("--crossing-free-report", crossing_free_report,
                         "list the graphs of all maximal crossing-free drawings instead");

    auto* render_cmd = app.add_subcommand("render", "SVG of the planarization");
    render_cmd->add_option("input", in_path, "ICPD file")->required();
    render_cmd->add_option("-o,--out", out_path, "SVG path (default stdout)");
    render_cmd->add_option("--outer", outer, "face index to draw outside");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze_cmd) {
            const AnalysisOutcome rep = analyze(read_icpd_file(in_path));
            write_text(out_path, rep.json);
            return strict && !(rep.valid && rep.checks_ok) ? kViolated : kOk;
        }
        if (*gen_cmd) {
            const Drawing d = generate(family, param);
            write_text(out_path, serialize_icpd(d));
            if (!svg_path.empty()) write_text(svg_path, render_svg(d));
            return kOk;
        }
        if (*max_cmd) {
            const Drawing d = read_icpd_file(in_path);
            const ValidationReport v = validate(d);
            if (!v.ok()) {
                std::cerr << "invalid drawing: " << v.violations.front().rule << ": " << v.violations.front().detail << "\n";
                return kViolated;
            }
            const auto adds = addable_edges(d);
            std::cout << (adds.empty() ? "maximal" : "not maximal") << " (" << adds.size() << " certificates)\n";
            if (list)
                for (const auto& a : adds)
                    std::cout << (a.kind == EdgeAddition::Kind::CleanInFace ? "clean " : "crossing ") << a.u << " "
                              << a.v << " face " << a.face_u << (a.crossed == kNone ? "" : " crosses edge " + std::to_string(a.crossed))
                              << "\n";
            return adds.empty() ? kOk : kViolated;
        }
        if (*sat_cmd) {
            const Drawing d = read_icpd_file(in_path);
            const ValidationReport v = validate(d);
            if (!v.ok()) {
                std::cerr << "invalid drawing: " << v.violations.front().rule << ": " << v.violations.front().detail << "\n";
                return kViolated;
            }
            write_text(out_path, serialize_icpd(saturate(d, parse_policy(policy), seed)));
            return kOk;
        }
        if (*search_cmd) {
            if (n == 0 && n_max == 0) throw UsageError("search needs --n or --n-max");
            SearchOptions opt;
            opt.max_crossings = max_c;
            opt.jobs = jobs > 0 ? jobs : default_jobs();
            opt.checkpoint_dir = checkpoint;
            opt.color_swap = !no_swap;
            const int lo = n > 0 ? n : 2, hi = n > 0 ? n : n_max;
            if (crossing_free_report) {
                const CrossingFreeReport rep = verify_crossing_free(hi, opt);
                std::string text = "n,graphs\n";
                for (const auto& [k, graphs] : rep.graphs) {
                    if (k < lo) continue;
                    text += std::to_string(k) + ",";
                    bool first = true;
                    for (const auto& g : graphs) text += (first ? "" : " ") + g, first = false;
                    text += "\n";
                }
                write_text(out_path, text);
                for (const auto& v : rep.report.violations) std::cerr << v.detail << "\n";
                return rep.report.ok() ? kOk : kViolated;
            }
            const Filter filter = Filter::parse(filter_text);
            MinSizeTable table;
            for (int k = lo; k <= hi; ++k) {
                SearchOptions o = opt;
                if (!checkpoint.empty() && lo != hi) o.checkpoint_dir = (fs::path(checkpoint) / ("n" + std::to_string(k))).string();
                const MinSizeTable part = search_table(k, o, filter);
                table.rows.insert(table.rows.end(), part.rows.begin(), part.rows.end());
            }
            if (witness_dir.empty() && !out_path.empty() && out_path != "-")
                witness_dir = fs::absolute(out_path).parent_path().string();
            write_text(out_path, table_to_csv(table, witness_dir));
            return kOk;
        }
        if (*render_cmd) {
            const Drawing d = read_icpd_file(in_path);
            if (!d.structurally_sound()) {
                std::cerr << "cannot render: " << d.structural_defects().front().detail << "\n";
                return kViolated;
            }
            RenderOptions ro;
            if (outer >= 0) ro.outer_face = outer;
            write_text(out_path, render_svg(d, ro));
            return kOk;
        }
    } catch (const SearchRefused& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
