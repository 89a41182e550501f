#include "icplane/canonical.hpp"

#include <limits>
#include <stdexcept>

namespace icplane {

namespace {

class Coder {
public:
    explicit Coder(const Drawing& d) : d_(d), label_(d.num_nodes(), -1), first_(d.num_nodes(), kNone) {}

    int symbol(NodeId x, bool swap) const {
        if (d_.is_crossing_node(x)) return 3;
        const bool black = (d_.color(x) == Color::Black) != swap;
        return black ? 1 : 2;
    }

    // Writes the code from `start` into buf_. Returns false as soon as the
    // prefix exceeds `best` (when best is non-empty).
    bool run(DartId start, bool reverse, bool swap, const std::string& best) {
        std::fill(label_.begin(), label_.end(), -1);
        buf_.clear();
        order_.clear();
        int cmp = best.empty() ? -1 : 0;
        auto put = [&](int byte) {
            const char ch = static_cast<char>(byte);
            if (cmp == 0) {
                const size_t pos = buf_.size();
                if (pos >= best.size() || static_cast<unsigned char>(ch) > static_cast<unsigned char>(best[pos])) return false;
                if (static_cast<unsigned char>(ch) < static_cast<unsigned char>(best[pos])) cmp = -1;
            }
            buf_.push_back(ch);
            return true;
        };
        const NodeId root = d_.origin(start);
        label_[root] = 0;
        first_[root] = start;
        order_.push_back(root);
        for (size_t i = 0; i < order_.size(); ++i) {
            const NodeId x = order_[i];
            const auto& rot = d_.rotation(x);
            if (!put(symbol(x, swap)) || !put(static_cast<int>(rot.size()))) return false;
            DartId cur = first_[x];
            for (size_t k = 0; k < rot.size(); ++k) {
                const NodeId w = d_.head(cur);
                if (label_[w] < 0) {
                    label_[w] = static_cast<int>(order_.size());
                    first_[w] = d_.twin(cur);
                    order_.push_back(w);
                }
                if (!put(label_[w])) return false;
                cur = reverse ? d_.rot_prev(cur) : d_.rot_next(cur);
            }
        }
        return cmp < 0;
    }

    const std::string& code() const { return buf_; }

private:
    const Drawing& d_;
    std::vector<int> label_;
    std::vector<DartId> first_;
    std::vector<NodeId> order_;
    std::string buf_;
};

}  // namespace

CanonicalForm canonical_form(const Drawing& d, bool allow_color_swap) {
    if (!d.structurally_sound() || !d.connected()) throw DrawingError("canonical form needs a sound connected drawing");
    if (d.num_nodes() > 250) throw DrawingError("canonical form supports at most 250 nodes");
    Coder coder(d);
    if (d.num_darts() == 0) {
        std::string code;
        code.push_back(static_cast<char>(allow_color_swap ? 1 : coder.symbol(0, false)));
        code.push_back(0);
        return {code};
    }
    // The code starts with the root's symbol and degree, so only roots
    // minimising that pair can win.
    std::pair<int, int> lowest{std::numeric_limits<int>::max(), 0};
    const int swaps = allow_color_swap ? 2 : 1;
    for (int s = 0; s < swaps; ++s)
        for (NodeId x = 0; x < d.num_nodes(); ++x)
            lowest = std::min(lowest, {coder.symbol(x, s == 1), static_cast<int>(d.rotation(x).size())});

    std::string best;
    for (int s = 0; s < swaps; ++s) {
        for (NodeId x = 0; x < d.num_nodes(); ++x) {
            if (std::make_pair(coder.symbol(x, s == 1), static_cast<int>(d.rotation(x).size())) != lowest) continue;
            for (DartId start : d.rotation(x)) {
                for (bool reverse : {false, true}) {
                    if (coder.run(start, reverse, s == 1, best)) best = coder.code();
                }
            }
        }
    }
    return {best};
}

Drawing decode_canonical(const CanonicalForm& form) {
    const std::string& code = form.code;
    struct Node {
        int symbol;
        std::vector<int> nbrs;
    };
    std::vector<Node> nodes;
    size_t pos = 0;
    auto next = [&]() {
        if (pos >= code.size()) throw DrawingError("truncated canonical code");
        return static_cast<int>(static_cast<unsigned char>(code[pos++]));
    };
    while (pos < code.size()) {
        Node nd;
        nd.symbol = next();
        const int deg = next();
        for (int k = 0; k < deg; ++k) nd.nbrs.push_back(next());
        nodes.push_back(std::move(nd));
    }
    std::vector<int> remap(nodes.size());
    RotationSystem rs;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].symbol == 3) continue;
        remap[i] = static_cast<int>(rs.colors.size());
        rs.colors.push_back(nodes[i].symbol == 1 ? Color::Black : Color::White);
    }
    const int n = static_cast<int>(rs.colors.size());
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].symbol == 3) remap[i] = n + rs.crossings++;
    rs.rot.assign(nodes.size(), {});
    for (size_t i = 0; i < nodes.size(); ++i)
        for (int w : nodes[i].nbrs) {
            if (w < 0 || static_cast<size_t>(w) >= nodes.size()) throw DrawingError("bad label in canonical code");
            rs.rot[remap[i]].push_back(remap[w]);
        }
    return from_rotation_system(rs);
}

std::string to_hex(const CanonicalForm& form) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char ch : form.code) {
        out.push_back(digits[ch >> 4]);
        out.push_back(digits[ch & 15]);
    }
    return out;
}

CanonicalForm from_hex(const std::string& hex) {
    if (hex.size() % 2) throw std::invalid_argument("odd-length hex code");
    auto val = [](char ch) {
        if (ch >= '0' && ch <= '9') return ch - '0';
        if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    CanonicalForm f;
    for (size_t i = 0; i < hex.size(); i += 2) f.code.push_back(static_cast<char>(val(hex[i]) * 16 + val(hex[i + 1])));
    return f;
}

}  // namespace icplane
