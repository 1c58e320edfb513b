#include "ell/graph.hpp"

#include <algorithm>
#include <queue>

namespace ell {

std::uint64_t Graph::key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(n) {
    if (n < 0) throw Error("bad-graph", "negative vertex count");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("bad-graph", "edge endpoint out of range");
        if (u == v) throw Error("bad-graph", "self-loop");
        if (u > v) std::swap(u, v);
        if (!edge_set_.insert(key(u, v)).second)
            throw Error("bad-graph", "duplicate edge");
        edges_.emplace_back(u, v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    return edge_set_.count(key(u, v)) != 0;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
    std::vector<int> newid(n_, -1);
    for (size_t i = 0; i < keep.size(); ++i) newid[keep[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : edges_)
        if (newid[u] >= 0 && newid[v] >= 0)
            es.emplace_back(newid[u], newid[v]);
    return Graph(static_cast<int>(keep.size()), std::move(es));
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<int> comp(n_, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n_; ++s) {
        if (comp[s] >= 0) continue;
        int c = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<Vertex> q;
        q.push(s);
        comp[s] = c;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            out[c].push_back(u);
            for (Vertex w : adj_[u])
                if (comp[w] < 0) {
                    comp[w] = c;
                    q.push(w);
                }
        }
        std::sort(out[c].begin(), out[c].end());
    }
    return out;
}

bool Graph::operator==(const Graph& o) const {
    if (n_ != o.n_ || edges_.size() != o.edges_.size()) return false;
    for (auto [u, v] : edges_)
        if (!o.has_edge(u, v)) return false;
    return true;
}

Labeling::Labeling(std::vector<Vertex> order) : order_(std::move(order)) {
    int n = static_cast<int>(order_.size());
    pos_.assign(n, -1);
    for (int p = 0; p < n; ++p) {
        Vertex v = order_[p];
        if (v < 0 || v >= n || pos_[v] != -1)
            throw Error("bad-labeling", "labeling is not a permutation");
        pos_[v] = p;
    }
}

LeafTree::LeafTree(std::vector<int> parent, std::map<int, std::string> leaf_names)
    : parent_(std::move(parent)), leaf_names_(std::move(leaf_names)) {
    int n = static_cast<int>(parent_.size());
    if (n == 0) throw Error("bad-tree", "empty tree");
    children_.assign(n, {});
    for (int v = 0; v < n; ++v) {
        int p = parent_[v];
        if (p == -1) {
            if (root_ != -1) throw Error("bad-tree", "two roots");
            root_ = v;
        } else if (p < 0 || p >= n || p == v) {
            throw Error("bad-tree", "bad parent reference");
        } else {
            children_[p].push_back(v);
        }
    }
    if (root_ == -1) throw Error("bad-tree", "no root");
    depth_.assign(n, -1);
    depth_[root_] = 0;
    std::vector<int> stack{root_};
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int c : children_[v]) {
            if (depth_[c] != -1) throw Error("bad-tree", "cycle in parent array");
            depth_[c] = depth_[v] + 1;
            stack.push_back(c);
        }
    }
    if (seen != n) throw Error("bad-tree", "node unreachable from root");

    std::unordered_set<std::string> names_seen;
    for (auto& [node, name] : leaf_names_) {
        if (node < 0 || node >= n || !is_leaf(node))
            throw Error("bad-tree", "leaf name on non-leaf node");
        if (!names_seen.insert(name).second)
            throw Error("bad-tree", "duplicate leaf name: " + name);
    }
    for (int v = 0; v < n; ++v)
        if (is_leaf(v) && !leaf_names_.count(v))
            throw Error("bad-tree", "unnamed leaf node");

    std::vector<std::pair<std::string, int>> order;
    order.reserve(leaf_names_.size());
    for (auto& [node, name] : leaf_names_) order.emplace_back(name, node);
    std::sort(order.begin(), order.end());
    for (auto& [name, node] : order) sorted_leaves_.push_back(node);
}

const std::string& LeafTree::leaf_name(int v) const {
    auto it = leaf_names_.find(v);
    if (it == leaf_names_.end()) throw Error("bad-tree", "node has no leaf name");
    return it->second;
}

int LeafTree::distance(int u, int v) const {
    int d = 0;
    int a = u, b = v;
    while (depth_[a] > depth_[b]) {
        a = parent_[a];
        ++d;
    }
    while (depth_[b] > depth_[a]) {
        b = parent_[b];
        ++d;
    }
    while (a != b) {
        a = parent_[a];
        b = parent_[b];
        d += 2;
    }
    return d;
}

int LeafTree::ancestor(int v, int k) const {
    while (k-- > 0) {
        if (v < 0) return -1;
        v = parent_[v];
    }
    return v;
}

Graph graph_from_leaf_tree(const LeafTree& t, int k) {
    if (k < 1) throw Error("bad-argument", "k must be >= 1");
    const auto& leaves = t.sorted_leaves();
    int n = static_cast<int>(leaves.size());
    std::vector<Edge> es;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (t.distance(leaves[a], leaves[b]) <= k) es.emplace_back(a, b);
    return Graph(n, std::move(es));
}

Kinship kinship(const LeafTree& t, int u, int v) {
    if (!t.is_leaf(u) || !t.is_leaf(v) || u == v)
        throw Error("bad-argument", "kinship expects two distinct leaves");
    int u1 = t.ancestor(u, 1), u2 = t.ancestor(u, 2), u3 = t.ancestor(u, 3);
    int v1 = t.ancestor(v, 1), v2 = t.ancestor(v, 2), v3 = t.ancestor(v, 3);
    if (u1 != -1 && u1 == v1) return Kinship::sibling;
    if (u1 != -1 && u1 == v2) return Kinship::first_is_uncle;
    if (v1 != -1 && v1 == u2) return Kinship::second_is_uncle;
    if (u2 != -1 && u2 == v2) return Kinship::cousin;
    if (u1 != -1 && u1 == v3) return Kinship::first_is_puncle;
    if (v1 != -1 && v1 == u3) return Kinship::second_is_puncle;
    return Kinship::unrelated;
}

bool is_jumping_witness(const Graph& g, const Labeling& lab, const JumpWitness& w) {
    int n = lab.size();
    if (!(0 <= w.i && w.i < w.j && w.j < w.k && w.k < w.l && w.l < n))
        throw Error("bad-argument", "witness positions must satisfy 0<=i<j<k<l<n");
    return g.has_edge(lab.at(w.i), lab.at(w.k)) && g.has_edge(lab.at(w.j), lab.at(w.l)) &&
           !g.has_edge(lab.at(w.j), lab.at(w.k));
}

Graph jumping8() {
    // 0=III_l 1=III_r 2=II_l_t 3=II_l_b 4=II_r_t 5=II_r_b 6=I_in 7=I_out
    std::vector<Edge> es = {{0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 5},
                            {6, 0}, {6, 1}, {6, 2}, {6, 3}, {6, 4}, {6, 5},
                            {7, 2}, {7, 3}, {7, 4}, {7, 5}};
    return Graph(8, std::move(es));
}

const std::vector<std::string>& jumping8_names() {
    static const std::vector<std::string> names = {"III_l", "III_r", "II_l_t", "II_l_b",
                                                   "II_r_t", "II_r_b", "I_in",  "I_out"};
    return names;
}

} // namespace ell
