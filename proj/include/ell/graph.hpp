#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ell/errors.hpp"

namespace ell {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on dense vertex ids 0..n-1.
/// Immutable after construction; edge queries are O(1) expected.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Subgraph induced by `keep`; vertices are relabeled 0..k-1 in `keep` order.
    Graph induced(const std::vector<Vertex>& keep) const;

    /// Connected components as vertex lists (ascending within each).
    std::vector<std::vector<Vertex>> components() const;

    bool operator==(const Graph& o) const;

private:
    static std::uint64_t key(Vertex u, Vertex v);

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::unordered_set<std::uint64_t> edge_set_;
};

/// A permutation of 0..n-1. order()[p] is the vertex at position p (0-based).
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<Vertex> order);

    int size() const { return static_cast<int>(order_.size()); }
    Vertex at(int pos) const { return order_.at(pos); }
    int position_of(Vertex v) const { return pos_.at(v); }
    const std::vector<Vertex>& order() const { return order_; }

    bool operator==(const Labeling& o) const { return order_ == o.order_; }

private:
    std::vector<Vertex> order_;
    std::vector<int> pos_;
};

/// Rooted tree with externally named leaves (parent-array representation).
/// parent[i] == -1 exactly for the root. A leaf is a node without children;
/// leaf_names must cover exactly the leaves and be injective.
class LeafTree {
public:
    LeafTree() = default;
    LeafTree(std::vector<int> parent, std::map<int, std::string> leaf_names);

    int num_nodes() const { return static_cast<int>(parent_.size()); }
    int root() const { return root_; }
    int parent(int v) const { return parent_.at(v); }
    const std::vector<int>& children(int v) const { return children_.at(v); }
    bool is_leaf(int v) const { return children_.at(v).empty(); }
    int depth(int v) const { return depth_.at(v); }
    const std::string& leaf_name(int v) const;
    const std::map<int, std::string>& leaf_names() const { return leaf_names_; }

    /// Edge-count distance between two nodes (via LCA depth walk).
    int distance(int u, int v) const;

    /// Leaves sorted by external name; the rank is the graph vertex id.
    const std::vector<int>& sorted_leaves() const { return sorted_leaves_; }

    /// Ancestor k levels up, or -1 if it does not exist.
    int ancestor(int v, int k) const;

private:
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> depth_;
    std::map<int, std::string> leaf_names_;
    std::vector<int> sorted_leaves_;
    int root_ = -1;
};

/// Positions i<j<k<l in a labeling that certify a jumping vertex v_j.
struct JumpWitness {
    int i, j, k, l;
    bool operator==(const JumpWitness& o) const {
        return i == o.i && j == o.j && k == o.k && l == o.l;
    }
};

enum class Kinship {
    sibling,
    cousin,
    first_is_uncle,
    second_is_uncle,
    first_is_puncle,
    second_is_puncle,
    unrelated,
};

/// Graph on the named leaves of `t`: two leaves are adjacent iff their tree
/// distance is at most k. Vertex ids follow sorted leaf-name order.
Graph graph_from_leaf_tree(const LeafTree& t, int k);

/// Kinship classification of two distinct leaves (sibling/cousin/uncle/p-uncle).
Kinship kinship(const LeafTree& t, int u, int v);

/// True iff positions w = (i<j<k<l) satisfy (v_i,v_k) in E, (v_j,v_l) in E and
/// (v_j,v_k) not in E.
bool is_jumping_witness(const Graph& g, const Labeling& lab, const JumpWitness& w);

/// The 8-vertex jumping graph (no labeling of it is non-jumping).
/// Vertices 0..7 are III_l, III_r, II_l_t, II_l_b, II_r_t, II_r_b, I_in, I_out.
Graph jumping8();
const std::vector<std::string>& jumping8_names();

} // namespace ell
