#include "ell/builders.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>

namespace ell {

const char* to_string(PruneStep::Kind k) {
    switch (k) {
    case PruneStep::Kind::pendant: return "pendant";
    case PruneStep::Kind::true_twin: return "true-twin";
    case PruneStep::Kind::false_twin: return "false-twin";
    }
    return "?";
}

namespace {

struct BitRows {
    int n, words;
    std::vector<std::uint64_t> bits;
    explicit BitRows(const Graph& g) : n(g.num_vertices()), words((n + 63) / 64) {
        bits.assign(static_cast<size_t>(n) * words, 0);
        for (auto [u, v] : g.edges()) {
            set(u, v);
            set(v, u);
        }
    }
    void set(int r, int c) { bits[static_cast<size_t>(r) * words + c / 64] |= 1ull << (c % 64); }
    void clear(int r, int c) {
        bits[static_cast<size_t>(r) * words + c / 64] &= ~(1ull << (c % 64));
    }
    bool get(int r, int c) const {
        return bits[static_cast<size_t>(r) * words + c / 64] >> (c % 64) & 1;
    }
    // rows equal ignoring columns {r1, r2}
    bool twin_rows(int r1, int r2) const {
        const std::uint64_t* a = &bits[static_cast<size_t>(r1) * words];
        const std::uint64_t* b = &bits[static_cast<size_t>(r2) * words];
        for (int w = 0; w < words; ++w) {
            std::uint64_t x = a[w] ^ b[w];
            if (r1 / 64 == w) x &= ~(1ull << (r1 % 64));
            if (r2 / 64 == w) x &= ~(1ull << (r2 % 64));
            if (x) return false;
        }
        return true;
    }
};

} // namespace

std::vector<PruneStep> pruning_sequence(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return {};
    if (g.components().size() > 1)
        throw Error("not-connected", "pruning_sequence expects a connected graph");

    BitRows rows(g);
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n, 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    int alive_count = n;

    std::vector<PruneStep> steps;
    auto remove = [&](Vertex v) {
        alive[v] = 0;
        --alive_count;
        for (Vertex u = 0; u < n; ++u)
            if (alive[u] && rows.get(u, v)) {
                rows.clear(u, v);
                rows.clear(v, u);
                --deg[u];
            }
        deg[v] = 0;
    };

    while (alive_count > 1) {
        PruneStep step{PruneStep::Kind::pendant, -1, -1};
        for (Vertex v = 0; v < n && step.removed < 0; ++v) {
            if (!alive[v] || deg[v] != 1) continue;
            for (Vertex u = 0; u < n; ++u)
                if (alive[u] && rows.get(v, u)) {
                    step = {PruneStep::Kind::pendant, v, u};
                    break;
                }
        }
        if (step.removed < 0) {
            for (Vertex v = 0; v < n && step.removed < 0; ++v) {
                if (!alive[v]) continue;
                for (Vertex u = 0; u < n; ++u) {
                    if (!alive[u] || u == v) continue;
                    if (rows.get(v, u) && rows.twin_rows(v, u)) {
                        step = {PruneStep::Kind::true_twin, v, u};
                        break;
                    }
                }
            }
        }
        if (step.removed < 0) {
            for (Vertex v = 0; v < n && step.removed < 0; ++v) {
                if (!alive[v]) continue;
                for (Vertex u = 0; u < n; ++u) {
                    if (!alive[u] || u == v) continue;
                    if (!rows.get(v, u) && rows.twin_rows(v, u)) {
                        step = {PruneStep::Kind::false_twin, v, u};
                        break;
                    }
                }
            }
        }
        if (step.removed < 0) {
            std::vector<Vertex> residual;
            for (Vertex v = 0; v < n; ++v)
                if (alive[v]) residual.push_back(v);
            throw NotDistanceHereditaryError("no pendant or twin in residual graph",
                                             std::move(residual));
        }
        remove(step.removed);
        steps.push_back(step);
    }
    return steps;
}

namespace {

void check_add_args(const LEmbedding& e, Vertex anchor, Vertex fresh) {
    if (!e.contains(anchor)) throw Error("bad-argument", "anchor not in embedding");
    if (e.contains(fresh)) throw Error("bad-argument", "new vertex already in embedding");
}

} // namespace

LEmbedding add_pendant(const LEmbedding& e, Vertex anchor, Vertex pend) {
    check_add_args(e, anchor, pend);
    LEmbedding r = expand(e, anchor, Direction::right);
    r = expand(r, anchor, Direction::right);
    r = expand(r, anchor, Direction::up);
    r = expand(r, anchor, Direction::down);
    const LSegment& a = r.at(anchor);
    r.insert(pend, {a.x + 1, a.y + 1, 1, 2});
    return r;
}

LEmbedding add_true_twin(const LEmbedding& e, Vertex anchor, Vertex twin) {
    check_add_args(e, anchor, twin);
    LEmbedding r = expand(e, anchor, Direction::right);
    r = expand(r, anchor, Direction::down);
    const LSegment& a = r.at(anchor);
    assert(a.w >= 2);
    r.insert(twin, {a.x + 1, a.y + 1, a.w - 1, a.h + 1});
    return r;
}

LEmbedding add_false_twin(const LEmbedding& e, Vertex anchor, Vertex twin) {
    check_add_args(e, anchor, twin);
    LEmbedding r = expand(e, anchor, Direction::left);
    r = expand(r, anchor, Direction::down);
    const LSegment& a = r.at(anchor);
    r.insert(twin, {a.x - 1, a.y + 1, a.w + 1, a.h + 1});
    return r;
}

LEmbedding embed_distance_hereditary(const Graph& g) {
    LEmbedding full;
    Coord offset = 0;
    for (const auto& comp : g.components()) {
        Graph sub = g.induced(comp);
        auto steps = pruning_sequence(sub);
        std::vector<char> removed(comp.size(), 0);
        for (const auto& s : steps) removed[s.removed] = 1;
        Vertex last = -1;
        for (size_t v = 0; v < comp.size(); ++v)
            if (!removed[v]) last = static_cast<Vertex>(v);

        LEmbedding e;
        e.insert(last, {2, 2, 1, 1});
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            switch (it->kind) {
            case PruneStep::Kind::pendant: e = add_pendant(e, it->anchor, it->removed); break;
            case PruneStep::Kind::true_twin: e = add_true_twin(e, it->anchor, it->removed); break;
            case PruneStep::Kind::false_twin:
                e = add_false_twin(e, it->anchor, it->removed);
                break;
            }
        }
        Coord min_x, min_y, max_x, max_y;
        e.bounds(min_x, min_y, max_x, max_y);
        e.translate(offset + 1 - min_x, 1 - min_y);
        for (auto& [v, s] : e) full.insert(comp[v], s);
        offset += (max_x - min_x) + 3;
    }
    return full;
}

SimplifiedLeafTree simplify_leaf_tree(const LeafTree& raw) {
    int n = raw.num_nodes();
    int new_root = -1;
    for (int v = 0; v < n && new_root < 0; ++v)
        if (!raw.is_leaf(v)) new_root = v;
    if (new_root < 0) throw Error("bad-argument", "tree has no internal node");

    // re-root at the lowest-id internal node (leaf distances are unrooted)
    std::vector<int> par(n, -2);
    std::vector<std::vector<int>> kids(n);
    {
        std::vector<std::vector<int>> und(n);
        for (int v = 0; v < n; ++v)
            if (raw.parent(v) != -1) {
                und[v].push_back(raw.parent(v));
                und[raw.parent(v)].push_back(v);
            }
        std::queue<int> q;
        q.push(new_root);
        par[new_root] = -1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : und[v])
                if (par[w] == -2) {
                    par[w] = v;
                    kids[v].push_back(w);
                    q.push(w);
                }
        }
        for (auto& k : kids) std::sort(k.begin(), k.end());
    }

    // drop unlabeled nodes that became childless through re-rooting
    std::vector<char> gone(n, 0);
    for (;;) {
        bool changed = false;
        for (int v = 0; v < n; ++v) {
            if (gone[v] || v == new_root) continue;
            bool childless = true;
            for (int c : kids[v])
                if (!gone[c]) childless = false;
            if (childless && !raw.leaf_names().count(v)) {
                gone[v] = 1;
                changed = true;
            }
        }
        if (!changed) break;
    }

    // collapse sibling-leaf groups to the survivor with the smallest name
    std::map<int, std::vector<std::string>> twins_by_old_survivor;
    for (int v = 0; v < n; ++v) {
        if (gone[v]) continue;
        std::vector<int> leaf_kids;
        for (int c : kids[v])
            if (!gone[c] && raw.leaf_names().count(c)) leaf_kids.push_back(c);
        if (leaf_kids.size() < 2) continue;
        int survivor = leaf_kids[0];
        for (int c : leaf_kids)
            if (raw.leaf_names().at(c) < raw.leaf_names().at(survivor)) survivor = c;
        std::vector<std::string> names;
        for (int c : leaf_kids)
            if (c != survivor) {
                names.push_back(raw.leaf_names().at(c));
                gone[c] = 1;
            }
        std::sort(names.begin(), names.end());
        twins_by_old_survivor[survivor] = std::move(names);
    }

    // renumber kept nodes, then append one dummy per leafless internal node
    std::vector<int> new_id(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) new_id[v] = next++;
    std::vector<int> new_par(next, -1);
    std::map<int, std::string> leaf_names;
    for (int v = 0; v < n; ++v) {
        if (gone[v]) continue;
        new_par[new_id[v]] = par[v] == -1 ? -1 : new_id[par[v]];
        auto it = raw.leaf_names().find(v);
        if (it != raw.leaf_names().end()) leaf_names[new_id[v]] = it->second;
    }

    std::set<std::string> used;
    for (auto& [node, name] : leaf_names) used.insert(name);
    auto fresh_name = [&](int i) {
        std::string name = "~d" + std::to_string(i);
        while (used.count(name)) name = "~" + name;
        used.insert(name);
        return name;
    };

    SimplifiedLeafTree out;
    int dummy_counter = 0;
    for (int v = 0; v < n; ++v) {
        if (gone[v] || raw.leaf_names().count(v)) continue;
        bool has_leaf_child = false;
        for (int c : kids[v])
            if (!gone[c] && raw.leaf_names().count(c)) has_leaf_child = true;
        if (!has_leaf_child) {
            int d = next++;
            new_par.push_back(new_id[v]);
            leaf_names[d] = fresh_name(dummy_counter++);
            out.dummies.insert(d);
        }
    }

    out.tree = LeafTree(std::move(new_par), std::move(leaf_names));
    for (auto& [old_survivor, names] : twins_by_old_survivor)
        out.removed_twins[new_id[old_survivor]] = names;
    return out;
}

LEmbedding fully_connected_embedding(const std::vector<Vertex>& vertices) {
    if (vertices.empty()) throw Error("bad-argument", "need at least one vertex");
    Coord k = static_cast<Coord>(vertices.size());
    LEmbedding e;
    for (Coord j = 1; j <= k; ++j) {
        LSegment s;
        s.x = s.y = 2 * j;
        s.w = 2 * (k - j) + 1;
        s.h = 2 * (j - 1) + 1;
        e.insert(vertices[j - 1], s);
    }
    return e;
}

namespace {

// internal children (ascending) and the unique leaf child of an internal node
std::vector<int> internal_children(const LeafTree& t, int node) {
    std::vector<int> out;
    for (int c : t.children(node))
        if (!t.is_leaf(c)) out.push_back(c);
    return out;
}

int leaf_child(const LeafTree& t, int node) {
    int leaf = -1;
    for (int c : t.children(node))
        if (t.is_leaf(c)) {
            if (leaf != -1)
                throw Error("bad-simplified-tree", "internal node with two leaf children");
            leaf = c;
        }
    if (leaf == -1) throw Error("bad-simplified-tree", "internal node without a leaf child");
    return leaf;
}

} // namespace

Configuration build_configuration(const SimplifiedLeafTree& t, int node, ConfigKind kind) {
    const LeafTree& tr = t.tree;
    if (tr.is_leaf(node)) throw Error("bad-argument", "configuration node must be internal");
    int uncle = leaf_child(tr, node);
    std::vector<int> nephews;
    for (int c : internal_children(tr, node)) nephews.push_back(leaf_child(tr, c));
    Coord k = static_cast<Coord>(nephews.size());

    std::vector<Vertex> order;
    if (kind == ConfigKind::rectangle) {
        order = nephews;
        order.push_back(uncle);
    } else {
        order.push_back(uncle);
        order.insert(order.end(), nephews.begin(), nephews.end());
    }

    Configuration conf;
    conf.emb = fully_connected_embedding(order);
    conf.kind = kind;
    conf.uncle_leaf = uncle;
    for (Coord j = 1; j <= k; ++j) {
        FreeRegion r;
        r.cousin_leaf = nephews[j - 1];
        if (kind == ConfigKind::rectangle) {
            r.x1 = r.x2 = 2 * k + 1;
            r.y1 = r.y2 = 2 * j + 1;
        } else {
            r.x1 = r.x2 = 2 * j + 1;
            r.y1 = r.y2 = 3;
        }
        conf.regions.push_back(r);
    }
    return conf;
}

namespace {

struct ConfDraw {
    LEmbedding emb;               // keyed by leaf node id
    int root_leaf;
    std::vector<int> nephew_leaves; // arms to extend when spliced into a parent
};

struct ContentBox {
    Coord max_corner_row = 0; // max y over non-root segments
    Coord max_arm_col = 0;    // max x+w over non-root segments
};

ContentBox measure_content(const ConfDraw& d) {
    ContentBox b;
    for (auto& [v, s] : d.emb) {
        if (v == d.root_leaf) continue;
        b.max_corner_row = std::max(b.max_corner_row, s.y);
        b.max_arm_col = std::max(b.max_arm_col, s.x + s.w);
    }
    return b;
}

ConfDraw conf_build(const SimplifiedLeafTree& t, int node, ConfigKind kind) {
    const LeafTree& tr = t.tree;
    std::vector<int> cs = internal_children(tr, node);
    Coord k = static_cast<Coord>(cs.size());

    Configuration core = build_configuration(t, node, kind);
    ConfDraw out;
    out.emb = core.emb;
    out.root_leaf = core.uncle_leaf;
    for (const auto& r : core.regions) out.nephew_leaves.push_back(r.cousin_leaf);
    if (k == 0) return out;

    ConfigKind sub_kind =
        kind == ConfigKind::rectangle ? ConfigKind::ell : ConfigKind::rectangle;
    std::vector<std::optional<ConfDraw>> subs(cs.size());
    std::vector<ContentBox> boxes(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) {
        if (internal_children(tr, cs[i]).empty()) continue;
        subs[i] = conf_build(t, cs[i], sub_kind);
        boxes[i] = measure_content(*subs[i]);
    }

    if (kind == ConfigKind::rectangle) {
        // widen the shared side room, then deepen each cousin's band
        Coord grow_right = 0;
        for (size_t i = 0; i < cs.size(); ++i)
            if (subs[i]) grow_right = std::max(grow_right, boxes[i].max_arm_col - 3);
        for (Coord s = 0; s < grow_right; ++s)
            out.emb = expand(out.emb, out.nephew_leaves[k - 1], Direction::right);
        for (size_t i = 0; i < cs.size(); ++i) {
            if (!subs[i]) continue;
            Coord grow_down = boxes[i].max_corner_row - 2;
            for (Coord s = 0; s < grow_down; ++s)
                out.emb = expand(out.emb, out.nephew_leaves[i], Direction::down);
        }
        Coord room_left = out.emb.at(out.nephew_leaves[k - 1]).x;
        Coord bus_col = out.emb.at(out.root_leaf).x;
        for (size_t i = 0; i < cs.size(); ++i) {
            if (!subs[i]) continue;
            const ConfDraw& d = *subs[i];
            Coord dy = out.emb.at(out.nephew_leaves[i]).y - 2; // bus row alignment
            Coord dx = room_left - 2;                          // content starts one past the room edge
            for (auto& [v, s] : d.emb) {
                if (v == d.root_leaf) continue;
                out.emb.insert(v, {s.x + dx, s.y + dy, s.w, s.h});
            }
            for (int nv : d.nephew_leaves) {
                LSegment& s = out.emb.at(nv);
                s.w = bus_col + 1 - s.x; // cross the uncle's vertical arm
            }
        }
    } else {
        // deepen the shared attic, then widen each cousin's strip
        Coord grow_down = 0;
        for (size_t i = 0; i < cs.size(); ++i)
            if (subs[i]) grow_down = std::max(grow_down, boxes[i].max_corner_row - 1);
        for (Coord s = 0; s < grow_down; ++s)
            out.emb = expand(out.emb, out.root_leaf, Direction::down);
        for (size_t i = 0; i < cs.size(); ++i) {
            if (!subs[i]) continue;
            Coord bus_col_sub = subs[i]->emb.at(subs[i]->root_leaf).x;
            Coord grow_right = bus_col_sub - 2;
            Vertex ref = i == 0 ? out.root_leaf : out.nephew_leaves[i - 1];
            for (Coord s = 0; s < grow_right; ++s) out.emb = expand(out.emb, ref, Direction::right);
        }
        for (size_t i = 0; i < cs.size(); ++i) {
            if (!subs[i]) continue;
            const ConfDraw& d = *subs[i];
            Coord dx = out.emb.at(out.nephew_leaves[i]).x - d.emb.at(d.root_leaf).x;
            Coord dy = 2; // content rows 1.. land in the attic from row 3 on
            for (auto& [v, s] : d.emb) {
                if (v == d.root_leaf) continue;
                out.emb.insert(v, {s.x + dx, s.y + dy, s.w, s.h});
            }
            for (int nv : d.nephew_leaves) {
                LSegment& s = out.emb.at(nv);
                s.h = s.y - 1; // cross the uncle's horizontal arm
            }
        }
    }
    return out;
}

} // namespace

std::pair<Graph, LEmbedding> embed_leaf_power(const LeafTree& raw, int k) {
    if (k < 1 || k > 4) throw Error("bad-argument", "k must be in 1..4");
    Graph g = graph_from_leaf_tree(raw, k);
    const auto& sorted = raw.sorted_leaves();
    std::map<std::string, Vertex> id_of_name;
    for (size_t i = 0; i < sorted.size(); ++i)
        id_of_name[raw.leaf_name(sorted[i])] = static_cast<Vertex>(i);

    if (k == 1) {
        LEmbedding e;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            e.insert(v, {2 + 4 * static_cast<Coord>(v), 2, 1, 1});
        return {std::move(g), std::move(e)};
    }

    SimplifiedLeafTree s = simplify_leaf_tree(raw);
    const LeafTree& tr = s.tree;

    LEmbedding by_node;
    if (k == 4) {
        by_node = conf_build(s, tr.root(), ConfigKind::rectangle).emb;
    } else if (k == 3) {
        // adjacency collapses to parent/child of internal nodes: replay the
        // internal tree with pendant additions on the leaves
        std::vector<int> bfs{tr.root()};
        for (size_t i = 0; i < bfs.size(); ++i)
            for (int c : internal_children(tr, bfs[i])) bfs.push_back(c);
        by_node.insert(leaf_child(tr, tr.root()), {2, 2, 1, 1});
        for (size_t i = 1; i < bfs.size(); ++i)
            by_node = add_pendant(by_node, leaf_child(tr, tr.parent(bfs[i])),
                                  leaf_child(tr, bfs[i]));
    } else { // k == 2: survivors are pairwise non-adjacent
        Coord x = 2;
        for (auto& [leaf, name] : tr.leaf_names()) {
            by_node.insert(leaf, {x, 2, 1, 1});
            x += 4;
        }
    }

    for (int d : s.dummies) by_node.erase(d);

    LEmbedding e;
    for (auto& [leaf, seg] : by_node) e.insert(id_of_name.at(tr.leaf_name(leaf)), seg);

    for (auto& [survivor, names] : s.removed_twins) {
        Vertex anchor = id_of_name.at(tr.leaf_name(survivor));
        for (const auto& name : names) e = add_true_twin(e, anchor, id_of_name.at(name));
    }

    Coord min_x, min_y, max_x, max_y;
    if (e.size() > 0) {
        e.bounds(min_x, min_y, max_x, max_y);
        if (min_x < 1 || min_y < 1) e.translate(std::max<Coord>(0, 1 - min_x),
                                                std::max<Coord>(0, 1 - min_y));
    }
    return {std::move(g), std::move(e)};
}

std::pair<Graph, LEmbedding> embed_4leaf(const LeafTree& raw) { return embed_leaf_power(raw, 4); }

} // namespace ell
