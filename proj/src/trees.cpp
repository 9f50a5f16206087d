#include "cf/trees.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cf {

namespace {
std::vector<std::vector<int>> adjacency(const MarkedTree& t) {
    std::vector<std::vector<int>> adj(t.num_vertices);
    for (auto [a, b] : t.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}
}  // namespace

int MarkedTree::valence(int v) const {
    int c = leg_count(v);
    for (auto [a, b] : edges) c += (a == v) + (b == v);
    return c;
}

int MarkedTree::leg_count(int v) const {
    int c = 0;
    for (int l : legs) c += (l == v);
    return c;
}

void MarkedTree::validate() const {
    if (static_cast<int>(edges.size()) != num_vertices - 1)
        throw Error("NotATree", "|E| != |V| - 1");
    for (auto [a, b] : edges)
        if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices || a == b)
            throw Error("NotATree", "bad edge endpoints");
    for (int l : legs)
        if (l < 0 || l >= num_vertices) throw Error("NotATree", "bad leg vertex");
    // connectivity
    std::vector<bool> seen(num_vertices, false);
    std::vector<int> stack{0};
    seen[0] = true;
    auto adj = adjacency(*this);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) seen[w] = true, stack.push_back(w);
    }
    for (int v = 0; v < num_vertices; ++v)
        if (!seen[v]) throw Error("NotATree", "disconnected");
}

unsigned MarkedTree::marks_behind(int from, int to) const {
    // marks in the component of `from` after removing edge {from,to}
    std::vector<bool> seen(num_vertices, false);
    std::vector<int> stack{from};
    seen[from] = true;
    auto adj = adjacency(*this);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if ((v == from && w == to) || (v == to && w == from)) continue;
            if (!seen[w]) seen[w] = true, stack.push_back(w);
        }
    }
    unsigned mask = 0;
    for (int i = 0; i < n(); ++i)
        if (seen[legs[i]]) mask |= 1u << i;
    return mask;
}

namespace {
std::string encode_from(const MarkedTree& t, const std::vector<std::vector<int>>& adj,
                        int v, int parent) {
    std::vector<std::string> parts;
    for (int i = 0; i < t.n(); ++i)
        if (t.legs[i] == v) parts.push_back("L" + std::to_string(i + 1));
    for (int w : adj[v])
        if (w != parent) parts.push_back(encode_from(t, adj, w, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (auto& p : parts) out += p;
    out += ")";
    return out;
}
}  // namespace

std::string MarkedTree::canonical_key() const {
    auto adj = adjacency(*this);
    std::string best;
    for (int v = 0; v < num_vertices; ++v) {
        std::string e = encode_from(*this, adj, v, -1);
        if (best.empty() || e < best) best = e;
    }
    return best;
}

std::vector<int> MarkedTree::canonical_dfs_order() const {
    auto adj = adjacency(*this);
    int root = 0;
    std::string best;
    for (int v = 0; v < num_vertices; ++v) {
        std::string e = encode_from(*this, adj, v, -1);
        if (best.empty() || e < best) best = e, root = v;
    }
    std::vector<int> order;
    // children visited in subtree-encoding order; encodings of distinct
    // subtrees differ (distinct leg labels), so this is deterministic
    auto dfs = [&](auto&& self, int v, int parent) -> void {
        order.push_back(v);
        std::vector<std::pair<std::string, int>> kids;
        for (int w : adj[v])
            if (w != parent) kids.push_back({encode_from(*this, adj, w, v), w});
        std::sort(kids.begin(), kids.end());
        for (auto& [e, w] : kids) self(self, w, v);
    };
    dfs(dfs, root, -1);
    return order;
}

std::vector<MarkedTree> enumerate_stable_trees(int n) {
    if (n < 3) throw Error("TooFewMarks", "need n >= 3");
    // grow mark by mark: every stable n-tree restricts (delete leg n,
    // stabilise) to a stable (n-1)-tree, and the three attachment moves below
    // invert that restriction
    std::vector<MarkedTree> cur{{1, {}, {0, 0, 0}}};
    for (int k = 4; k <= n; ++k) {
        std::map<std::string, MarkedTree> next;
        auto add = [&](MarkedTree t) {
            t.validate();
            next.emplace(t.canonical_key(), std::move(t));
        };
        for (const auto& t : cur) {
            // (a) new leg on an existing vertex
            for (int v = 0; v < t.num_vertices; ++v) {
                MarkedTree s = t;
                s.legs.push_back(v);
                add(std::move(s));
            }
            // (b) new trivalent vertex splitting an edge
            for (size_t e = 0; e < t.edges.size(); ++e) {
                MarkedTree s = t;
                auto [a, b] = s.edges[e];
                int x = s.num_vertices++;
                s.edges[e] = {a, x};
                s.edges.push_back({x, b});
                s.legs.push_back(x);
                add(std::move(s));
            }
            // (c) new trivalent vertex splitting a leg
            for (int i = 0; i < t.n(); ++i) {
                MarkedTree s = t;
                int v = s.legs[i];
                int x = s.num_vertices++;
                s.legs[i] = x;
                s.edges.push_back({v, x});
                s.legs.push_back(x);
                add(std::move(s));
            }
        }
        cur.clear();
        for (auto& [key, t] : next) cur.push_back(std::move(t));
    }
    return cur;
}

SlopeAssignment balanced_slopes(const MarkedTree& tree, const Tangency& alpha) {
    if (tree.n() != alpha.n) throw Error("Unbalanced", "leg count != n");
    SlopeAssignment out;
    for (auto [a, b] : tree.edges) {
        // slope toward b is alpha summed over the marks on the b side
        out.edge_slopes.push_back(subset_slope(alpha, tree.marks_behind(b, a)));
    }
    out.leg_slopes = alpha.entries;
    return out;
}

MarkedTree smooth_unstable(const MarkedTree& tree) {
    MarkedTree t = tree;
    for (;;) {
        int bad = -1;
        for (int v = 0; v < t.num_vertices && bad < 0; ++v)
            if (t.is_unstable(v)) bad = v;
        if (bad < 0) break;
        int u = -1, w = -1;
        std::vector<std::pair<int, int>> edges;
        for (auto [a, b] : t.edges) {
            if (a == bad) (u < 0 ? u : w) = b;
            else if (b == bad) (u < 0 ? u : w) = a;
            else edges.push_back({a, b});
        }
        edges.push_back({u, w});
        // drop vertex `bad`, compact ids
        MarkedTree s;
        s.num_vertices = t.num_vertices - 1;
        auto remap = [&](int v) { return v > bad ? v - 1 : v; };
        for (auto [a, b] : edges) s.edges.push_back({remap(a), remap(b)});
        for (int l : t.legs) s.legs.push_back(remap(l));
        t = std::move(s);
    }
    t.validate();
    return t;
}

}  // namespace cf
