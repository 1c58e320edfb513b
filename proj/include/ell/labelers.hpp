#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ell/graph.hpp"

namespace ell {

/// Exact rational, normalized (den > 0, reduced).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    static Rational parse(const std::string& text); // "p/q", "12", "3.25"

    std::string str() const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return !(o < *this); }
};

/// Closed intervals [a,b] with a < b, one per vertex 0..n-1.
struct IntervalSet {
    std::vector<std::pair<Rational, Rational>> intervals;
    int size() const { return static_cast<int>(intervals.size()); }
};

/// Intersection graph of the intervals (closed-interval overlap).
Graph intervals_graph(const IntervalSet& iv);

/// Non-jumping labeling of an interval graph: sort by left endpoint, ties by
/// right endpoint then vertex id.
Labeling label_interval(const IntervalSet& iv);

/// Bipartite graph R vs B with an f-ordering of B. f(b_order[i]) = i+1.
struct ConvexBipartite {
    ConvexBipartite() = default;
    ConvexBipartite(Graph g, std::vector<Vertex> b_order);

    Graph g;
    std::vector<Vertex> b_order;
    std::vector<char> in_b;          // indicator per vertex
    std::vector<int> f;              // f-value per vertex (0 for R)
};

/// gamma = R sorted by s(r) non-increasing (s = min f over neighbors;
/// neighborless r first), then B by f ascending. Throws Error("convexity")
/// naming the offending r and gap vertex when the f-ordering is not convex.
Labeling label_convex_bipartite(const ConvexBipartite& cb);

/// One-page spine order: per biconnected block the outer cycle, blocks glued
/// at cut vertices in block-tree DFS order. Throws Error("not-outerplanar")
/// when no non-crossing spine order exists.
Labeling label_outerplanar(const Graph& g);

/// 3-leaf-power labeling: leaves in a DFS order that visits children by
/// ascending subtree height. Returns the k=3 leaf-power graph and the order.
std::pair<Graph, Labeling> label_3leaf(const LeafTree& t);

} // namespace ell
