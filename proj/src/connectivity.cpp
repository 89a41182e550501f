#include "icplane/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace icplane {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Unit vertex capacities via in/out splitting; node 2v is v_in, 2v+1 is v_out.
class SplitFlow {
public:
    explicit SplitFlow(const Drawing& d) : d_(d), head_(2 * d.n(), -1) {
        for (VertexId v = 0; v < d.n(); ++v) add_arc(2 * v, 2 * v + 1, 1);
        for (EdgeId id = 0; id < d.e(); ++id) {
            const Edge& ed = d.edge(id);
            if (ed.u == ed.v) continue;
            add_arc(2 * ed.u + 1, 2 * ed.v, kInf);
            add_arc(2 * ed.v + 1, 2 * ed.u, kInf);
        }
        base_cap_ = cap_;
    }

    // Number of internally disjoint s-t paths, stopping once `limit` is reached.
    int max_flow(VertexId s, VertexId t, int limit) {
        cap_ = base_cap_;
        cap_[2 * s] = cap_[2 * t] = kInf;  // in->out arcs of s and t are the first arcs added
        const int src = 2 * s + 1, dst = 2 * t;
        int flow = 0;
        std::vector<int> via(head_.size());
        while (flow < limit) {
            std::fill(via.begin(), via.end(), -1);
            std::queue<int> q;
            q.push(src);
            via[src] = -2;
            while (!q.empty() && via[dst] == -1) {
                const int x = q.front();
                q.pop();
                for (int a = head_[x]; a != -1; a = next_[a]) {
                    if (cap_[a] > 0 && via[to_[a]] == -1) {
                        via[to_[a]] = a;
                        q.push(to_[a]);
                    }
                }
            }
            if (via[dst] == -1) break;
            for (int x = dst; x != src; x = to_[via[x] ^ 1]) {
                cap_[via[x]] -= 1;
                cap_[via[x] ^ 1] += 1;
            }
            ++flow;
        }
        return flow;
    }

    // After max_flow: vertices whose in-node is reachable but out-node is not.
    std::vector<VertexId> min_cut(VertexId s) const {
        std::vector<bool> seen(head_.size(), false);
        std::queue<int> q;
        q.push(2 * s + 1);
        seen[2 * s + 1] = true;
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (int a = head_[x]; a != -1; a = next_[a]) {
                if (cap_[a] > 0 && !seen[to_[a]]) {
                    seen[to_[a]] = true;
                    q.push(to_[a]);
                }
            }
        }
        std::vector<VertexId> cut;
        for (VertexId v = 0; v < d_.n(); ++v)
            if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
        return cut;
    }

private:
    void add_arc(int a, int b, int cap) {
        to_.push_back(b);
        cap_.push_back(cap);
        next_.push_back(head_[a]);
        head_[a] = static_cast<int>(to_.size()) - 1;
        to_.push_back(a);
        cap_.push_back(0);
        next_.push_back(head_[b]);
        head_[b] = static_cast<int>(to_.size()) - 1;
    }

    const Drawing& d_;
    std::vector<int> head_, to_, cap_, next_, base_cap_;
};

}  // namespace

std::vector<int> components_without(const Drawing& d, const std::vector<VertexId>& removed) {
    std::vector<bool> gone(d.n(), false);
    for (VertexId v : removed) gone[v] = true;
    std::vector<int> comp(d.n(), -1), sizes;
    for (VertexId s = 0; s < d.n(); ++s) {
        if (gone[s] || comp[s] != -1) continue;
        const int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        std::vector<VertexId> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            ++sizes[id];
            for (VertexId w : d.neighbors(v)) {
                if (!gone[w] && comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

ConnectivityReport vertex_connectivity(const Drawing& d) {
    const int n = d.n();
    if (n < 2) throw DrawingError("vertex connectivity needs at least two vertices");
    ConnectivityReport rep;
    rep.delta = n;
    VertexId low = 0;
    for (VertexId v = 0; v < n; ++v) {
        std::vector<VertexId> nb = d.neighbors(v);
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        nb.erase(std::remove(nb.begin(), nb.end(), v), nb.end());
        if (static_cast<int>(nb.size()) < rep.delta) {
            rep.delta = static_cast<int>(nb.size());
            low = v;
        }
    }
    if (!d.connected()) {
        rep.kappa = 0;
        rep.cut_sides = components_without(d, {});
        return rep;
    }

    // Start from the neighbourhood of a minimum-degree vertex when it separates.
    int best = n - 1;
    std::vector<VertexId> best_cut;
    if (rep.delta < n - 1) {
        best = rep.delta;
        best_cut = d.neighbors(low);
        best_cut.erase(std::unique(best_cut.begin(), best_cut.end()), best_cut.end());
    }
    SplitFlow flow(d);
    for (VertexId i = 0; i <= best && i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            if (d.adjacent(i, j)) continue;
            const int f = flow.max_flow(i, j, best);
            if (f < best) {
                best = f;
                best_cut = flow.min_cut(i);
            }
        }
    }
    rep.kappa = best;
    std::sort(best_cut.begin(), best_cut.end());
    rep.witness_cut = best_cut;
    rep.cut_sides = components_without(d, best_cut);
    return rep;
}

}  // namespace icplane
