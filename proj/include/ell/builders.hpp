#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ell/geometry.hpp"
#include "ell/graph.hpp"

namespace ell {

struct PruneStep {
    enum class Kind { pendant, true_twin, false_twin };
    Kind kind;
    Vertex removed;
    Vertex anchor; // neighbor for pendant, surviving twin otherwise
    bool operator==(const PruneStep& o) const {
        return kind == o.kind && removed == o.removed && anchor == o.anchor;
    }
};

const char* to_string(PruneStep::Kind k);

/// Greedily removes a pendant / true twin / false twin until one vertex
/// remains (pendant preferred, then true twin, then false twin; smallest ids
/// break ties). Succeeds exactly on distance-hereditary graphs; otherwise
/// throws NotDistanceHereditaryError carrying the stuck residual vertex set.
/// The input must be connected.
std::vector<PruneStep> pruning_sequence(const Graph& g);

/// Pendant vertex: expand rightward twice and up/down once around the anchor,
/// then drop the new L one unit right and below the anchor's corner (w=1,
/// h=2). The new segment crosses the anchor and nothing else.
LEmbedding add_pendant(const LEmbedding& e, Vertex anchor, Vertex pend);

/// True twin: expand rightward and downward once; the twin sits one unit
/// down-right of the anchor with h = anchor.h + 1 and w = anchor.w - 1 (post
/// expansion). Crosses the anchor and exactly the anchor's neighbors.
LEmbedding add_true_twin(const LEmbedding& e, Vertex anchor, Vertex twin);

/// False twin: expand leftward and downward once; the twin sits one unit
/// down-left of the anchor with both arms one unit longer. Crosses exactly
/// the anchor's neighbors, not the anchor.
LEmbedding add_false_twin(const LEmbedding& e, Vertex anchor, Vertex twin);

/// Prunes each connected component, replays the steps in reverse from a unit
/// L, and juxtaposes the component drawings on disjoint bounding boxes.
LEmbedding embed_distance_hereditary(const Graph& g);

/// Leaf tree normalized so every internal node has exactly one leaf child:
/// sibling-leaf groups collapse to one survivor (the removed ones re-enter
/// the final drawing as true twins), internal nodes lacking a leaf child gain
/// a dummy leaf, and the tree is rooted at the lowest-id internal node.
struct SimplifiedLeafTree {
    LeafTree tree;
    std::map<int, std::vector<std::string>> removed_twins; // surviving leaf node -> names
    std::set<int> dummies;                                 // dummy leaf nodes
};

SimplifiedLeafTree simplify_leaf_tree(const LeafTree& raw);

/// Staircase drawing of K_|vertices| in the given order (all segments cross
/// one another pairwise).
LEmbedding fully_connected_embedding(const std::vector<Vertex>& vertices);

enum class ConfigKind { rectangle, ell };

/// Axis-aligned free cell (inclusive interior lattice points).
struct FreeRegion {
    int cousin_leaf; // node id of the owning cousin leaf
    Coord x1, y1, x2, y2;
};

/// Drawing of T_conf's leaves for one internal node: the node's child leaf
/// plus its nephews, fully connected, with one empty free cell per cousin.
/// rectangle: cousins' horizontal arms cross the uncle's vertical arm;
/// ell: cousins' vertical arms cross the uncle's horizontal arm.
/// Keys of `emb` are leaf node ids of the simplified tree.
struct Configuration {
    LEmbedding emb;
    ConfigKind kind;
    int uncle_leaf;
    std::vector<FreeRegion> regions;
};

Configuration build_configuration(const SimplifiedLeafTree& t, int node, ConfigKind kind);

/// L-embedding of the k-leaf-power graph of `raw` for k <= 4, along with the
/// graph itself. k = 4 runs the alternating Rectangle/L configuration
/// induction; smaller k reuse the same simplify / replay / twin machinery.
std::pair<Graph, LEmbedding> embed_leaf_power(const LeafTree& raw, int k);

std::pair<Graph, LEmbedding> embed_4leaf(const LeafTree& raw);

} // namespace ell
