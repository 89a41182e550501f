#include "icplane/icpd.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace icplane {

ParseError::ParseError(const std::string& what, int line, int column)
    : DrawingError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    int column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

struct Located {
    int line;
    int column;
};

int parse_int(const Token& t, int line) {
    int value = 0;
    const auto* first = t.text.data();
    const auto* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || value < 0)
        throw ParseError("expected a non-negative integer, got '" + std::string(t.text) + "'", line, t.column);
    return value;
}

struct RawDart {
    int edge;
    char end;  // '0', '1' or 'x'
    Located at;
};

RawDart parse_dart(const Token& t, int line) {
    const auto dot = t.text.find('.');
    if (dot == std::string_view::npos || dot + 2 != t.text.size())
        throw ParseError("malformed dart '" + std::string(t.text) + "'", line, t.column);
    const char end = t.text[dot + 1];
    if (end != '0' && end != '1' && end != 'x')
        throw ParseError("dart end must be 0, 1 or x in '" + std::string(t.text) + "'", line, t.column);
    Token id{t.text.substr(0, dot), t.column};
    return {parse_int(id, line), end, {line, t.column}};
}

struct RawRotation {
    Located at;
    std::vector<RawDart> darts;
};

// Collects objects keyed by id, then checks the ids are dense.
template <class T>
std::vector<T> dense(const std::map<int, std::pair<T, Located>>& items, const char* what) {
    std::vector<T> out;
    int expect = 0;
    for (const auto& [id, item] : items) {
        if (id != expect)
            throw ParseError(std::string(what) + " ids are not dense: missing " + std::to_string(expect),
                             item.second.line, item.second.column);
        out.push_back(item.first);
        ++expect;
    }
    return out;
}

}  // namespace

Drawing parse_icpd(std::string_view text) {
    std::map<int, std::pair<Color, Located>> vertices;
    std::map<int, std::pair<Edge, Located>> edges;
    std::map<int, std::pair<Crossing, Located>> crossings;
    std::map<int, RawRotation> vrot, xrot;
    std::optional<int> outer;
    bool header = false;

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string_view kw = toks[0].text;
        auto need = [&](size_t count) {
            if (toks.size() != count)
                throw ParseError("'" + std::string(kw) + "' expects " + std::to_string(count - 1) + " fields", line_no,
                                 toks[0].column);
        };
        if (!header) {
            if (kw != "icpd" || toks.size() != 2 || toks[1].text != "1")
                throw ParseError("document must start with 'icpd 1'", line_no, toks[0].column);
            header = true;
            continue;
        }
        const Located at{line_no, toks[0].column};
        if (kw == "vertex") {
            need(3);
            const int id = parse_int(toks[1], line_no);
            Color col;
            if (toks[2].text == "B")
                col = Color::Black;
            else if (toks[2].text == "W")
                col = Color::White;
            else
                throw ParseError("vertex colour must be B or W", line_no, toks[2].column);
            if (!vertices.emplace(id, std::make_pair(col, at)).second)
                throw ParseError("duplicate vertex id " + std::to_string(id), line_no, toks[1].column);
        } else if (kw == "edge") {
            need(4);
            const int id = parse_int(toks[1], line_no);
            const Edge ed{parse_int(toks[2], line_no), parse_int(toks[3], line_no)};
            if (!edges.emplace(id, std::make_pair(ed, at)).second)
                throw ParseError("duplicate edge id " + std::to_string(id), line_no, toks[1].column);
        } else if (kw == "crossing") {
            need(4);
            const int id = parse_int(toks[1], line_no);
            const Crossing cr{parse_int(toks[2], line_no), parse_int(toks[3], line_no)};
            if (!crossings.emplace(id, std::make_pair(cr, at)).second)
                throw ParseError("duplicate crossing id " + std::to_string(id), line_no, toks[1].column);
        } else if (kw == "rot") {
            if (toks.size() < 3) throw ParseError("'rot' expects a kind and an id", line_no, toks[0].column);
            const bool at_vertex = toks[1].text == "v";
            if (!at_vertex && toks[1].text != "x")
                throw ParseError("rotation kind must be v or x", line_no, toks[1].column);
            const int id = parse_int(toks[2], line_no);
            RawRotation rr{at, {}};
            for (size_t i = 3; i < toks.size(); ++i) rr.darts.push_back(parse_dart(toks[i], line_no));
            if (!at_vertex && rr.darts.size() != 4)
                throw ParseError("crossing rotation must list four darts", line_no, toks[0].column);
            auto& target = at_vertex ? vrot : xrot;
            if (!target.emplace(id, std::move(rr)).second)
                throw ParseError(std::string("duplicate rotation for ") + (at_vertex ? "vertex " : "crossing ") +
                                     std::to_string(id),
                                 line_no, toks[2].column);
        } else if (kw == "outer") {
            need(2);
            if (outer) throw ParseError("duplicate 'outer' line", line_no, toks[0].column);
            outer = parse_int(toks[1], line_no);
        } else {
            throw ParseError("unknown keyword '" + std::string(kw) + "'", line_no, toks[0].column);
        }
    }
    if (!header) throw ParseError("empty document", line_no, 1);

    DrawingParts p;
    p.colors = dense(vertices, "vertex");
    p.edges = dense(edges, "edge");
    p.crossings = dense(crossings, "crossing");
    p.outer_face = outer;
    const int n = static_cast<int>(p.colors.size());
    const int e = static_cast<int>(p.edges.size());
    const int c = static_cast<int>(p.crossings.size());

    for (const auto& [id, item] : edges) {
        for (VertexId w : {item.first.u, item.first.v})
            if (w >= n) throw ParseError("edge " + std::to_string(id) + " references unknown vertex " + std::to_string(w),
                                         item.second.line, item.second.column);
    }
    std::vector<bool> crossed(e, false);
    for (const auto& [id, item] : crossings) {
        for (EdgeId f : {item.first.first, item.first.second}) {
            if (f >= e)
                throw ParseError("crossing " + std::to_string(id) + " references unknown edge " + std::to_string(f),
                                 item.second.line, item.second.column);
            crossed[f] = true;
        }
    }

    p.vertex_rot.assign(n, {});
    p.crossing_rot.assign(c, {});
    for (const auto& [v, rr] : vrot) {
        if (v >= n) throw ParseError("rotation for unknown vertex " + std::to_string(v), rr.at.line, rr.at.column);
        for (const RawDart& rd : rr.darts) {
            if (rd.edge >= e)
                throw ParseError("dart references unknown edge " + std::to_string(rd.edge), rd.at.line, rd.at.column);
            const Edge& ed = p.edges[rd.edge];
            if (!ed.has(v))
                throw ParseError("edge " + std::to_string(rd.edge) + " is not incident to vertex " + std::to_string(v),
                                 rd.at.line, rd.at.column);
            int own_end;
            if (rd.end == 'x') {
                if (!crossed[rd.edge])
                    throw ParseError("edge " + std::to_string(rd.edge) + " is not crossed", rd.at.line, rd.at.column);
                own_end = ed.u == v ? 0 : 1;
            } else {
                if (crossed[rd.edge])
                    throw ParseError("edge " + std::to_string(rd.edge) + " is crossed; its dart is written " +
                                         std::to_string(rd.edge) + ".x",
                                     rd.at.line, rd.at.column);
                const int toward = rd.end - '0';
                if (ed.end(toward) == v && ed.u != ed.v)
                    throw ParseError("dart " + std::to_string(rd.edge) + "." + rd.end + " at vertex " +
                                         std::to_string(v) + " heads back to its own vertex",
                                     rd.at.line, rd.at.column);
                own_end = 1 - toward;
            }
            p.vertex_rot[v].push_back({rd.edge, from_end(own_end)});
        }
    }
    for (const auto& [x, rr] : xrot) {
        if (x >= c) throw ParseError("rotation for unknown crossing " + std::to_string(x), rr.at.line, rr.at.column);
        const Crossing& cr = p.crossings[x];
        for (const RawDart& rd : rr.darts) {
            if (rd.edge != cr.first && rd.edge != cr.second)
                throw ParseError("edge " + std::to_string(rd.edge) + " does not pass through crossing " +
                                     std::to_string(x),
                                 rd.at.line, rd.at.column);
            if (rd.end == 'x')
                throw ParseError("darts at a crossing head toward an endpoint (0 or 1)", rd.at.line, rd.at.column);
            p.crossing_rot[x].push_back({rd.edge, cross_to_end(rd.end - '0')});
        }
    }
    try {
        return Drawing::from_parts(std::move(p));
    } catch (const ParseError&) {
        throw;
    } catch (const DrawingError& err) {
        throw ParseError(err.what(), line_no, 1);
    }
}

std::string serialize_icpd(const Drawing& d) {
    const DrawingParts& p = d.parts();
    std::vector<bool> crossed(p.edges.size(), false);
    for (const Crossing& cr : p.crossings) crossed[cr.first] = crossed[cr.second] = true;

    std::ostringstream os;
    os << "icpd 1\n";
    for (size_t v = 0; v < p.colors.size(); ++v) os << "vertex " << v << ' ' << color_char(p.colors[v]) << '\n';
    for (size_t id = 0; id < p.edges.size(); ++id) os << "edge " << id << ' ' << p.edges[id].u << ' ' << p.edges[id].v << '\n';
    for (size_t x = 0; x < p.crossings.size(); ++x)
        os << "crossing " << x << ' ' << p.crossings[x].first << ' ' << p.crossings[x].second << '\n';
    for (size_t v = 0; v < p.vertex_rot.size(); ++v) {
        os << "rot v " << v;
        for (const DartRef& r : p.vertex_rot[v]) {
            os << ' ' << r.edge << '.';
            if (crossed[r.edge])
                os << 'x';
            else
                os << (r.kind == DartKind::FromEnd0 ? '1' : '0');
        }
        os << '\n';
    }
    for (size_t x = 0; x < p.crossing_rot.size(); ++x) {
        os << "rot x " << x;
        for (const DartRef& r : p.crossing_rot[x]) os << ' ' << r.edge << '.' << (r.kind == DartKind::CrossToEnd0 ? '0' : '1');
        os << '\n';
    }
    if (p.outer_face) os << "outer " << *p.outer_face << '\n';
    return os.str();
}

Drawing read_icpd_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_icpd(ss.str());
}

void write_icpd_file(const Drawing& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize_icpd(d);
}

}  // namespace icplane
