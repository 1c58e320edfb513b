#include "ell/labelers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace ell {

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw Error("bad-number", "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw Error("bad-number", "empty number");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            long long p = std::stoll(text.substr(0, slash));
            long long q = std::stoll(text.substr(slash + 1));
            return Rational(p, q);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string frac = text.substr(dot + 1);
            if (frac.empty() || frac.size() > 9) throw Error("bad-number", "bad decimal");
            long long scale = 1;
            for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
            long long whole = std::stoll(text.substr(0, dot));
            long long f = std::stoll(frac);
            bool neg = text[0] == '-';
            long long n = whole * scale + (neg ? -f : f);
            return Rational(n, scale);
        }
        return Rational(std::stoll(text), 1);
    } catch (const std::logic_error&) {
        throw Error("bad-number", "cannot parse number: " + text);
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

Graph intervals_graph(const IntervalSet& iv) {
    int n = iv.size();
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& a = iv.intervals[i];
            const auto& b = iv.intervals[j];
            if (a.first <= b.second && b.first <= a.second) es.emplace_back(i, j);
        }
    return Graph(n, std::move(es));
}

Labeling label_interval(const IntervalSet& iv) {
    for (const auto& [a, b] : iv.intervals)
        if (!(a < b)) throw Error("bad-interval", "interval needs a < b");
    std::vector<Vertex> order(iv.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex u, Vertex v) {
        const auto& a = iv.intervals[u];
        const auto& b = iv.intervals[v];
        if (!(a.first == b.first)) return a.first < b.first;
        if (!(a.second == b.second)) return a.second < b.second;
        return u < v;
    });
    return Labeling(std::move(order));
}

ConvexBipartite::ConvexBipartite(Graph graph, std::vector<Vertex> border)
    : g(std::move(graph)), b_order(std::move(border)) {
    int n = g.num_vertices();
    in_b.assign(n, 0);
    f.assign(n, 0);
    for (size_t i = 0; i < b_order.size(); ++i) {
        Vertex b = b_order[i];
        if (b < 0 || b >= n || in_b[b]) throw Error("bad-bipartite", "bad B ordering");
        in_b[b] = 1;
        f[b] = static_cast<int>(i) + 1;
    }
    for (auto [u, v] : g.edges())
        if (in_b[u] == in_b[v])
            throw Error("bad-bipartite", "edge inside one part");
}

Labeling label_convex_bipartite(const ConvexBipartite& cb) {
    int n = cb.g.num_vertices();
    constexpr long long INF = std::numeric_limits<long long>::max();
    std::vector<long long> s(n, INF);
    for (Vertex r = 0; r < n; ++r) {
        if (cb.in_b[r]) continue;
        int lo = std::numeric_limits<int>::max(), hi = 0, cnt = 0;
        for (Vertex b : cb.g.neighbors(r)) {
            lo = std::min(lo, cb.f[b]);
            hi = std::max(hi, cb.f[b]);
            ++cnt;
        }
        if (cnt == 0) continue;
        if (hi - lo + 1 != cnt) {
            for (int fv = lo + 1; fv < hi; ++fv) {
                Vertex z = cb.b_order[fv - 1];
                if (!cb.g.has_edge(r, z))
                    throw Error("convexity", "neighbors of vertex " + std::to_string(r) +
                                                 " skip vertex " + std::to_string(z) +
                                                 " in the f-ordering");
            }
        }
        s[r] = lo;
    }
    std::vector<Vertex> rs;
    for (Vertex r = 0; r < n; ++r)
        if (!cb.in_b[r]) rs.push_back(r);
    std::sort(rs.begin(), rs.end(), [&](Vertex a, Vertex b) {
        if (s[a] != s[b]) return s[a] > s[b];
        return a < b;
    });
    std::vector<Vertex> order = rs;
    order.insert(order.end(), cb.b_order.begin(), cb.b_order.end());
    return Labeling(std::move(order));
}

namespace {

struct Block {
    std::vector<Vertex> verts;
    std::vector<Edge> edges;
};

// Biconnected components (blocks) via an iterative lowpoint DFS.
std::vector<Block> biconnected_blocks(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1), child_idx(n, 0);
    std::vector<Edge> estack;
    std::vector<Block> blocks;
    int counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        std::vector<Vertex> stack{root};
        num[root] = low[root] = counter++;
        while (!stack.empty()) {
            Vertex u = stack.back();
            if (child_idx[u] < g.degree(u)) {
                Vertex w = g.neighbors(u)[child_idx[u]++];
                if (num[w] == -1) {
                    estack.emplace_back(u, w);
                    parent[w] = u;
                    num[w] = low[w] = counter++;
                    stack.push_back(w);
                } else if (w != parent[u] && num[w] < num[u]) {
                    estack.emplace_back(u, w);
                    low[u] = std::min(low[u], num[w]);
                }
            } else {
                stack.pop_back();
                if (stack.empty()) break;
                Vertex p = stack.back();
                low[p] = std::min(low[p], low[u]);
                if (low[u] >= num[p]) {
                    // edges pushed after (p,u) plus (p,u) itself form one block
                    Block b;
                    std::set<Vertex> vs;
                    while (!estack.empty()) {
                        Edge e = estack.back();
                        estack.pop_back();
                        b.edges.push_back(e);
                        vs.insert(e.first);
                        vs.insert(e.second);
                        if (e.first == p && e.second == u) break;
                    }
                    b.verts.assign(vs.begin(), vs.end());
                    blocks.push_back(std::move(b));
                }
            }
        }
    }
    return blocks;
}

// Outer cycle of a biconnected outerplanar block, via degree-2 reduction.
std::vector<Vertex> block_outer_cycle(const Block& blk) {
    if (blk.verts.size() <= 2) return blk.verts;

    std::map<Vertex, std::set<Vertex>> adj;
    for (Vertex v : blk.verts) adj[v];
    for (auto [u, v] : blk.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }

    struct Step {
        Vertex v, u, w;
    };
    std::vector<Step> steps;
    std::set<Vertex> alive(blk.verts.begin(), blk.verts.end());
    while (alive.size() > 3) {
        Vertex pick = -1;
        for (Vertex v : alive)
            if (adj[v].size() == 2) {
                pick = v;
                break;
            }
        if (pick == -1) throw Error("not-outerplanar", "no degree-2 vertex during reduction");
        auto it = adj[pick].begin();
        Vertex u = *it++;
        Vertex w = *it;
        adj[u].erase(pick);
        adj[w].erase(pick);
        adj[u].insert(w);
        adj[w].insert(u);
        adj.erase(pick);
        alive.erase(pick);
        steps.push_back({pick, u, w});
    }
    for (Vertex v : alive)
        if (adj[v].size() != 2)
            throw Error("not-outerplanar", "reduction did not end in a triangle");

    std::vector<Vertex> cycle(alive.begin(), alive.end());
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        auto pos_u = std::find(cycle.begin(), cycle.end(), it->u);
        auto pos_w = std::find(cycle.begin(), cycle.end(), it->w);
        long du = pos_u - cycle.begin(), dw = pos_w - cycle.begin();
        long m = static_cast<long>(cycle.size());
        if ((du + 1) % m == dw)
            cycle.insert(pos_w, it->v);
        else if ((dw + 1) % m == du)
            cycle.insert(pos_u, it->v);
        else
            throw Error("not-outerplanar", "outer cycle insertion failed");
    }
    return cycle;
}

} // namespace

Labeling label_outerplanar(const Graph& g) {
    int n = g.num_vertices();
    auto blocks = biconnected_blocks(g);
    std::vector<std::vector<int>> blocks_at(n);
    for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
        for (Vertex v : blocks[b].verts) blocks_at[v].push_back(b);

    std::vector<std::vector<Vertex>> cycles(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b) cycles[b] = block_outer_cycle(blocks[b]);

    std::vector<char> vertex_done(n, 0), block_done(blocks.size(), 0);
    std::vector<Vertex> order;
    order.reserve(n);

    // DFS over the block-cut structure: emit a vertex, then walk each of its
    // unvisited blocks along the outer cycle starting from it.
    auto place = [&](auto&& self, Vertex v) -> void {
        vertex_done[v] = 1;
        order.push_back(v);
        for (int b : blocks_at[v]) {
            if (block_done[b]) continue;
            block_done[b] = 1;
            const auto& cyc = cycles[b];
            auto at = std::find(cyc.begin(), cyc.end(), v);
            long pos = at - cyc.begin();
            long m = static_cast<long>(cyc.size());
            bool forward = true;
            if (m > 2) {
                Vertex nxt = cyc[(pos + 1) % m], prv = cyc[(pos - 1 + m) % m];
                forward = nxt < prv;
            }
            for (long step = 1; step < m; ++step) {
                Vertex x = forward ? cyc[(pos + step) % m] : cyc[(pos - step + m) % m];
                if (!vertex_done[x]) self(self, x);
            }
        }
    };
    for (Vertex v = 0; v < n; ++v)
        if (!vertex_done[v]) place(place, v);

    Labeling lab((std::vector<Vertex>(order)));

    // one-page property: no two edges may interleave in the spine order
    std::vector<std::pair<int, int>> ps;
    ps.reserve(g.num_edges());
    for (auto [u, v] : g.edges()) {
        int a = lab.position_of(u), b = lab.position_of(v);
        if (a > b) std::swap(a, b);
        ps.emplace_back(a, b);
    }
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j) {
            auto [a, b] = ps[i];
            auto [c, d] = ps[j];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                throw Error("not-outerplanar", "spine order has crossing edges");
        }
    return lab;
}

std::pair<Graph, Labeling> label_3leaf(const LeafTree& t) {
    int root = t.root();
    if (t.is_leaf(root)) throw Error("bad-argument", "tree root must not be a leaf");

    int n = t.num_nodes();
    std::vector<int> height(n, 0);
    // children ids are always smaller positions in no particular order; compute
    // heights bottom-up over a DFS finish order
    std::vector<int> dfo;
    dfo.reserve(n);
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        dfo.push_back(v);
        for (int c : t.children(v)) stack.push_back(c);
    }
    for (auto it = dfo.rbegin(); it != dfo.rend(); ++it)
        for (int c : t.children(*it)) height[*it] = std::max(height[*it], height[c] + 1);

    std::vector<int> leaf_order;
    auto dfs = [&](auto&& self, int v) -> void {
        if (t.is_leaf(v)) {
            leaf_order.push_back(v);
            return;
        }
        std::vector<int> kids = t.children(v);
        std::stable_sort(kids.begin(), kids.end(),
                         [&](int a, int b) { return height[a] < height[b]; });
        for (int c : kids) self(self, c);
    };
    dfs(dfs, root);

    Graph g = graph_from_leaf_tree(t, 3);
    const auto& sorted = t.sorted_leaves();
    std::map<int, int> vertex_of;
    for (size_t i = 0; i < sorted.size(); ++i) vertex_of[sorted[i]] = static_cast<int>(i);
    std::vector<Vertex> order;
    order.reserve(leaf_order.size());
    for (int leaf : leaf_order) order.push_back(vertex_of.at(leaf));
    return {std::move(g), Labeling(std::move(order))};
}

} // namespace ell
