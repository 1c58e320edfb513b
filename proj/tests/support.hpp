#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "ell/builders.hpp"
#include "ell/geometry.hpp"
#include "ell/graph.hpp"
#include "ell/labelers.hpp"
#include "ell/monotone.hpp"

namespace support {

using namespace ell;

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(eng) < p; }
};

inline Graph random_graph(Rng& rng, int n, double p) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

inline Labeling random_labeling(Rng& rng, int n) {
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng.eng);
    return Labeling(std::move(order));
}

inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return Graph(n, std::move(es));
}

inline Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return Graph(n, std::move(es));
}

// ---- oracles ----

// Lattice-raster classification of two L-segments; independent of crossing().
inline CrossingKind raster_crossing(const LSegment& a, const LSegment& b) {
    auto h_pts = [](const LSegment& s) {
        std::set<std::pair<Coord, Coord>> pts;
        for (Coord x = s.x; x <= s.x + s.w; ++x) pts.insert({x, s.y});
        return pts;
    };
    auto v_pts = [](const LSegment& s) {
        std::set<std::pair<Coord, Coord>> pts;
        for (Coord y = s.y - s.h; y <= s.y; ++y) pts.insert({s.x, y});
        return pts;
    };
    auto meets = [](const std::set<std::pair<Coord, Coord>>& p,
                    const std::set<std::pair<Coord, Coord>>& q) {
        for (auto& pt : p)
            if (q.count(pt)) return true;
        return false;
    };
    auto ha = h_pts(a), va = v_pts(a), hb = h_pts(b), vb = v_pts(b);
    if (meets(ha, hb) || meets(va, vb)) return CrossingKind::overlap;
    std::set<std::pair<Coord, Coord>> common;
    for (auto& pt : ha)
        if (hb.count(pt) || vb.count(pt)) common.insert(pt);
    for (auto& pt : va)
        if (hb.count(pt) || vb.count(pt)) common.insert(pt);
    if (common.empty()) return CrossingKind::none;
    auto interior_of_some_arm = [](const LSegment& s, std::pair<Coord, Coord> p) {
        bool in_h = p.second == s.y && p.first > s.x && p.first < s.x + s.w;
        bool in_v = p.first == s.x && p.second > s.y - s.h && p.second < s.y;
        return in_h || in_v;
    };
    if (common.size() == 1) {
        auto p = *common.begin();
        if (interior_of_some_arm(a, p) && interior_of_some_arm(b, p))
            return CrossingKind::proper;
    }
    return CrossingKind::corner_touch;
}

// All horizontal x vertical arm contacts by direct pair enumeration.
inline std::vector<SweepEvent> brute_arm_events(const std::vector<ArmSegment>& arms) {
    std::vector<SweepEvent> out;
    for (const auto& h : arms) {
        if (!h.horizontal) continue;
        for (const auto& v : arms) {
            if (v.horizontal) continue;
            if (v.fixed >= h.lo && v.fixed <= h.hi && h.fixed >= v.lo && h.fixed <= v.hi)
                out.push_back({v.fixed, h.fixed, h.owner, v.owner, h.owner == v.owner});
        }
    }
    std::sort(out.begin(), out.end(), [](const SweepEvent& a, const SweepEvent& b) {
        auto key = [](const SweepEvent& e) {
            return std::tuple<Coord, Coord, int, int, int, int>(
                e.x, e.y, e.corner ? 0 : 1, std::min(e.a, e.b), std::max(e.a, e.b), e.a);
        };
        return key(a) < key(b);
    });
    return out;
}

// Distance-hereditary by definition: all induced paths between every pair
// have one length. Exponential; n <= 8.
inline bool brute_is_distance_hereditary(const Graph& g) {
    int n = g.num_vertices();
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            std::set<int> lengths;
            std::vector<Vertex> path{s};
            std::vector<char> on(n, 0);
            on[s] = 1;
            auto dfs = [&](auto&& self, Vertex u) -> void {
                if (u == t) {
                    lengths.insert(static_cast<int>(path.size()) - 1);
                    return;
                }
                for (Vertex w : g.neighbors(u)) {
                    if (on[w]) continue;
                    bool induced = true;
                    for (Vertex p : path)
                        if (p != u && g.has_edge(p, w)) induced = false;
                    if (!induced) continue;
                    on[w] = 1;
                    path.push_back(w);
                    self(self, w);
                    path.pop_back();
                    on[w] = 0;
                }
            };
            dfs(dfs, s);
            if (lengths.size() > 1) return false;
        }
    return true;
}

// ---- structured instance generators ----

inline IntervalSet random_intervals(Rng& rng, int n) {
    IntervalSet iv;
    for (int i = 0; i < n; ++i) {
        long long den = rng.uniform(1, 6);
        long long a = rng.uniform(0, 4 * n);
        long long len = rng.uniform(1, 2 * n);
        iv.intervals.emplace_back(Rational(a, den), Rational(a + len, den));
    }
    return iv;
}

inline ConvexBipartite random_convex_bipartite(Rng& rng, int nr, int nb) {
    int n = nr + nb;
    std::vector<Edge> es;
    for (int r = 0; r < nr; ++r) {
        if (rng.chance(0.15)) continue; // isolated R vertex
        int lo = rng.uniform(1, nb);
        int hi = rng.uniform(lo, std::min(nb, lo + rng.uniform(0, nb)));
        for (int f = lo; f <= hi; ++f) es.emplace_back(r, nr + f - 1);
    }
    std::vector<Vertex> b_order;
    for (int f = 1; f <= nb; ++f) b_order.push_back(nr + f - 1);
    return ConvexBipartite(Graph(n, std::move(es)), std::move(b_order));
}

// Maximal outerplanar: polygon plus a random triangulation; chords are then
// dropped with some probability (the graph stays outerplanar).
inline Graph random_outerplanar(Rng& rng, int n) {
    if (n == 1) return Graph(1, {});
    if (n == 2) return Graph(2, {{0, 1}});
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.insert({i, i + 1});
    edges.insert({0, n - 1});
    auto tri = [&](auto&& self, int lo, int hi) -> void {
        if (hi - lo < 2) return;
        int k = rng.uniform(lo + 1, hi - 1);
        if (k - lo > 1 && !rng.chance(0.25)) edges.insert({lo, k});
        if (hi - k > 1 && !rng.chance(0.25)) edges.insert({k, hi});
        self(self, lo, k);
        self(self, k, hi);
    };
    tri(tri, 0, n - 1);
    std::vector<Edge> es(edges.begin(), edges.end());
    return Graph(n, std::move(es));
}

// Random growth by pendant / true twin / false twin steps (DH by construction).
inline Graph random_dh_graph(Rng& rng, int n) {
    std::vector<std::set<int>> adj(n);
    for (int v = 1; v < n; ++v) {
        int u = rng.uniform(0, v - 1);
        int op = rng.uniform(0, 2);
        if (op == 2 && adj[u].empty()) op = 0; // keep the graph connected
        if (op == 1) { // true twin of u
            for (int w : adj[u]) {
                adj[v].insert(w);
                adj[w].insert(v);
            }
            adj[v].insert(u);
            adj[u].insert(v);
        } else if (op == 2) { // false twin of u
            for (int w : adj[u]) {
                adj[v].insert(w);
                adj[w].insert(v);
            }
        } else { // pendant on u
            adj[v].insert(u);
            adj[u].insert(v);
        }
    }
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int w : adj[u])
            if (u < w) es.emplace_back(u, w);
    return Graph(n, std::move(es));
}

// Random rooted tree with all childless nodes named; depth capped.
inline LeafTree random_leaf_tree(Rng& rng, int nodes, int max_depth) {
    std::vector<int> parent{-1};
    std::vector<int> depth{0};
    for (int v = 1; v < nodes; ++v) {
        int p;
        do {
            p = rng.uniform(0, v - 1);
        } while (depth[p] >= max_depth);
        parent.push_back(p);
        depth.push_back(depth[p] + 1);
    }
    std::vector<char> has_child(nodes, 0);
    for (int v = 1; v < nodes; ++v) has_child[parent[v]] = 1;
    std::map<int, std::string> names;
    int i = 0;
    for (int v = 0; v < nodes; ++v)
        if (!has_child[v]) {
            char buf[16];
            std::snprintf(buf, sizeof buf, "L%03d", i++);
            names[v] = buf;
        }
    return LeafTree(std::move(parent), std::move(names));
}

// Valid embedding with edges: monotone drawing of a random interval instance.
inline std::pair<Graph, LEmbedding> random_valid_embedding(Rng& rng, int n) {
    IntervalSet iv = random_intervals(rng, n);
    Graph g = intervals_graph(iv);
    Labeling lab = label_interval(iv);
    return {std::move(g), build_monotone(g, lab)};
}

// Arbitrary segments in a small window (not a valid embedding of anything).
inline LEmbedding random_embedding(Rng& rng, int n) {
    LEmbedding e;
    for (int v = 0; v < n; ++v) {
        LSegment s;
        s.x = rng.uniform(0, 3 * n);
        s.y = rng.uniform(1, 3 * n);
        s.w = rng.uniform(1, n + 1);
        s.h = rng.uniform(1, std::max(1, static_cast<int>(s.y)));
        e.insert(v, s);
    }
    return e;
}

// Intersection graph of an embedding that is assumed violation-free.
inline Graph graph_of_embedding(const LEmbedding& e) {
    std::vector<Edge> es;
    std::vector<Vertex> verts;
    for (auto& [v, s] : e) verts.push_back(v);
    std::map<Vertex, int> idx;
    for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (crossing(e.at(verts[i]), e.at(verts[j])) == CrossingKind::proper)
                es.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(verts.size()), std::move(es));
}

} // namespace support
