#include "icplane/render.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace icplane {

namespace {

int pick_outer(const Drawing& d, const RenderOptions& opt) {
    const int nf = static_cast<int>(d.faces().size());
    auto ok = [&](std::optional<int> f) { return f && *f >= 0 && *f < nf; };
    if (ok(opt.outer_face)) return *opt.outer_face;
    if (ok(d.outer_face())) return *d.outer_face();
    int best = 0;
    for (int f = 1; f < nf; ++f)
        if (d.faces()[f].size() > d.faces()[best].size()) best = f;
    return best;
}

}  // namespace

std::vector<Point> tutte_layout(const Drawing& d, const RenderOptions& opt) {
    if (!d.structurally_sound()) throw DrawingError("cannot lay out an unsound drawing");
    const int nodes = d.num_nodes();
    std::vector<Point> at(nodes);
    if (d.faces().empty()) return at;

    std::vector<char> pinned(nodes, 0);
    std::vector<NodeId> ring;
    for (DartId x : d.faces()[pick_outer(d, opt)].darts) {
        const NodeId o = d.origin(x);
        if (!pinned[o]) {
            pinned[o] = 1;
            ring.push_back(o);
        }
    }
    const double r = opt.size * 0.45, mid = opt.size / 2;
    for (size_t i = 0; i < ring.size(); ++i) {
        const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(ring.size());
        at[ring[i]] = {mid + r * std::cos(t), mid - r * std::sin(t)};
    }
    for (NodeId x = 0; x < nodes; ++x)
        if (!pinned[x]) at[x] = {mid, mid};

    // Gauss-Seidel sweeps toward the neighbour barycentre.
    for (int it = 0; it < opt.iterations; ++it) {
        double moved = 0;
        for (NodeId x = 0; x < nodes; ++x) {
            if (pinned[x] || d.rotation(x).empty()) continue;
            Point s;
            for (DartId y : d.rotation(x)) {
                s.x += at[d.head(y)].x;
                s.y += at[d.head(y)].y;
            }
            const double k = static_cast<double>(d.rotation(x).size());
            const Point next{s.x / k, s.y / k};
            moved = std::max(moved, std::abs(next.x - at[x].x) + std::abs(next.y - at[x].y));
            at[x] = next;
        }
        if (moved < 1e-9) break;
    }
    return at;
}

std::string render_svg(const Drawing& d, const RenderOptions& opt) {
    const std::vector<Point> at = tutte_layout(d, opt);
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.size << "\" height=\"" << opt.size
        << "\" viewBox=\"0 0 " << opt.size << " " << opt.size << "\">\n";
    out << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
    for (DartId x = 0; x < d.num_darts(); ++x) {
        const NodeId a = d.origin(x), b = d.head(x);
        if (x > d.twin(x)) continue;
        out << "<line x1=\"" << at[a].x << "\" y1=\"" << at[a].y << "\" x2=\"" << at[b].x << "\" y2=\"" << at[b].y
            << "\"/>\n";
    }
    out << "</g>\n";
    for (VertexId v = 0; v < d.n(); ++v) {
        const bool black = d.color(v) == Color::Black;
        out << "<circle cx=\"" << at[v].x << "\" cy=\"" << at[v].y << "\" r=\"6\" stroke=\"black\" stroke-width=\"1.5\" fill=\""
            << (black ? "black" : "white") << "\"><title>" << v << "</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace icplane
