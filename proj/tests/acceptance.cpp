// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "support.hpp"

using namespace ell;
using support::Rng;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass;
    std::string note;
};

int failures = 0;

void run(int id, const std::string& title, const std::function<Outcome()>& fn) {
    auto t0 = Clock::now();
    Outcome o{false, ""};
    try {
        o = fn();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << title
              << " (" << o.note << ", " << std::fixed << std::setprecision(0) << ms << " ms)"
              << std::endl;
}

// labelings produced by the suite, reused by the round-trip criterion
std::vector<std::pair<Graph, Labeling>> produced;

Outcome criterion1() {
    Graph g = jumping8();
    SearchOptions noprune;
    noprune.prune = false;
    noprune.jobs = 1;
    SearchResult full = find_nonjumping_labeling(g, noprune);
    if (full.status != SearchResult::Status::exhausted)
        return {false, "no-prune search did not exhaust"};
    if (full.complete_labelings != 40320)
        return {false, "expected 40320 labelings, saw " + std::to_string(full.complete_labelings)};
    SearchResult pruned = find_nonjumping_labeling(g);
    if (pruned.status != SearchResult::Status::exhausted)
        return {false, "pruned search did not exhaust"};
    return {true, "40320 labelings enumerated, 0 non-jumping"};
}

Outcome criterion2() {
    Rng rng(1002);
    int disagreements = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = rng.uniform(1, 9);
        Graph g = support::random_graph(rng, n, rng.chance(0.5) ? 0.3 : 0.6);
        Labeling lab = support::random_labeling(rng, n);
        bool naive_ok = !is_nonjumping_naive(g, lab).has_value();
        bool drawing_ok = validate_embedding_naive(g, build_monotone(g, lab)).ok();
        bool fast_ok = is_nonjumping_fast(g, lab);
        if (naive_ok != drawing_ok || naive_ok != fast_ok) ++disagreements;
    }
    return {disagreements == 0, std::to_string(disagreements) + " disagreements in 1000 pairs"};
}

Outcome criterion3() {
    Rng rng(1003);
    for (int n = 1; n <= 200; ++n) {
        IntervalSet iv = support::random_intervals(rng, n);
        Graph g = intervals_graph(iv);
        Labeling lab = label_interval(iv);
        if (is_nonjumping_naive(g, lab).has_value()) return {false, "labeler failed"};
        LEmbedding e = build_monotone(g, lab);
        Coord min_x, min_y, max_x, max_y;
        e.bounds(min_x, min_y, max_x, max_y);
        if (min_x < 0 || min_y < 0 || max_x > 2 * n + 1 || max_y > 2 * n + 1)
            return {false, "drawing escapes the 2n box at n=" + std::to_string(n)};
        for (int p = 0; p < n; ++p) {
            const LSegment& s = e.at(lab.at(p));
            if (s.x != 2 * (p + 1) || s.y != 2 * (p + 1))
                return {false, "corner off the diagonal at n=" + std::to_string(n)};
        }
        produced.emplace_back(g, lab);
    }
    return {true, "all n <= 200 inside [0,2n+1]^2 with corners at (2j,2j)"};
}

Outcome criterion4() {
    Rng rng(1004);
    for (int trial = 0; trial < 1000; ++trial) {
        LEmbedding e = support::random_embedding(rng, rng.uniform(1, 64));
        auto arms = decompose_arms(e);
        if (!(sweep_intersections(arms, std::nullopt) == support::brute_arm_events(arms)))
            return {false, "sweep disagrees with the pair scan on trial " + std::to_string(trial)};
    }
    // the |E|+|V| early exit decides exactly like the unbounded run
    for (int trial = 0; trial < 1000; ++trial) {
        int n = rng.uniform(1, 10);
        Graph g = support::random_graph(rng, n, 0.45);
        Labeling lab = support::random_labeling(rng, n);
        LEmbedding e = build_monotone(g, lab);
        auto all = sweep_intersections(decompose_arms(e), std::nullopt);
        std::size_t limit = static_cast<std::size_t>(g.num_edges()) + g.num_vertices();
        bool full_verdict = all.size() == limit;
        for (const auto& ev : all)
            if (!ev.corner && !g.has_edge(ev.a, ev.b)) full_verdict = false;
        if (is_nonjumping_fast(g, lab) != full_verdict)
            return {false, "early exit changed the verdict"};
    }
    return {true, "1000 embeddings equal + 1000 truncation verdicts equal"};
}

Outcome criterion5() {
    Rng rng(1005);
    auto verify = [&](const Graph& g, const Labeling& lab) {
        if (is_nonjumping_naive(g, lab).has_value()) return false;
        if (!is_nonjumping_fast(g, lab)) return false;
        produced.emplace_back(g, lab);
        return true;
    };
    for (int trial = 0; trial < 500; ++trial) {
        IntervalSet iv = support::random_intervals(rng, rng.uniform(1, 200));
        if (!verify(intervals_graph(iv), label_interval(iv)))
            return {false, "interval instance failed"};

        ConvexBipartite cb =
            support::random_convex_bipartite(rng, rng.uniform(1, 100), rng.uniform(1, 100));
        if (!verify(cb.g, label_convex_bipartite(cb)))
            return {false, "convex bipartite instance failed"};

        Graph op = support::random_outerplanar(rng, rng.uniform(1, 200));
        Labeling ol = label_outerplanar(op);
        for (size_t a = 0; a < op.edges().size(); ++a)
            for (size_t b = a + 1; b < op.edges().size(); ++b) {
                int i = std::min(ol.position_of(op.edges()[a].first),
                                 ol.position_of(op.edges()[a].second));
                int k = std::max(ol.position_of(op.edges()[a].first),
                                 ol.position_of(op.edges()[a].second));
                int j = std::min(ol.position_of(op.edges()[b].first),
                                 ol.position_of(op.edges()[b].second));
                int l = std::max(ol.position_of(op.edges()[b].first),
                                 ol.position_of(op.edges()[b].second));
                if ((i < j && j < k && k < l) || (j < i && i < l && l < k))
                    return {false, "outerplanar order has an interleaving pair"};
            }
        if (!verify(op, ol)) return {false, "outerplanar instance failed"};

        LeafTree t = support::random_leaf_tree(rng, rng.uniform(2, 120), 7);
        if (t.is_leaf(t.root())) continue;
        auto [g3, l3] = label_3leaf(t);
        if (!verify(g3, l3)) return {false, "3-leaf instance failed"};
    }
    return {true, "500 instances per family pass both checkers"};
}

Outcome criterion6() {
    Rng rng(1006);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = support::random_dh_graph(rng, rng.uniform(1, 100));
        auto steps = pruning_sequence(g);
        std::vector<char> removed(g.num_vertices(), 0);
        for (const auto& s : steps) removed[s.removed] = 1;
        std::vector<Vertex> present;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (!removed[v]) present.push_back(v);
        if (present.size() != 1) return {false, "pruning left more than one vertex"};

        LEmbedding e;
        e.insert(present[0], {2, 2, 1, 1});
        auto stepwise_ok = [&]() {
            std::vector<Vertex> verts = present;
            std::sort(verts.begin(), verts.end());
            Graph sub = g.induced(verts);
            LEmbedding renamed;
            for (size_t i = 0; i < verts.size(); ++i)
                renamed.insert(static_cast<Vertex>(i), e.at(verts[i]));
            return validate_embedding_naive(sub, renamed).ok();
        };
        if (!stepwise_ok()) return {false, "base step invalid"};
        for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
            switch (it->kind) {
            case PruneStep::Kind::pendant: e = add_pendant(e, it->anchor, it->removed); break;
            case PruneStep::Kind::true_twin: e = add_true_twin(e, it->anchor, it->removed); break;
            case PruneStep::Kind::false_twin:
                e = add_false_twin(e, it->anchor, it->removed);
                break;
            }
            present.push_back(it->removed);
            if (!stepwise_ok())
                return {false, "replay step broke the induced subgraph (trial " +
                                   std::to_string(trial) + ")"};
        }
        if (!validate_embedding_naive(g, embed_distance_hereditary(g)).ok())
            return {false, "final embedding invalid"};
    }
    try {
        pruning_sequence(support::cycle_graph(5));
        return {false, "C5 was not rejected"};
    } catch (const NotDistanceHereditaryError&) {
    }
    return {true, "200 graphs replay stepwise; C5 rejected"};
}

Outcome criterion7() {
    Rng rng(1007);
    for (int trial = 0; trial < 200; ++trial) {
        LeafTree t = support::random_leaf_tree(rng, rng.uniform(2, 41), 5);
        auto [g, e] = embed_4leaf(t);
        if (!(g == graph_from_leaf_tree(t, 4))) return {false, "graph mismatch"};
        if (static_cast<int>(e.size()) != g.num_vertices())
            return {false, "embedding misses vertices"};
        if (!validate_embedding_naive(g, e).ok())
            return {false, "embedding invalid on trial " + std::to_string(trial)};
    }
    return {true, "200 trees embed exactly (edges and non-edges)"};
}

Outcome criterion8() {
    for (const auto& [g, lab] : produced) {
        if (!(labeling_from_embedding(build_monotone(g, lab)) == lab))
            return {false, "round trip changed a labeling"};
    }
    return {true, std::to_string(produced.size()) + " labelings round-trip"};
}

Outcome criterion9() {
    Rng rng(1009);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int n = rng.uniform(1, 7);
        Graph g = support::random_graph(rng, n, 0.4);
        SearchResult res = find_nonjumping_labeling(g);
        if (res.status != SearchResult::Status::found) continue; // jumping graph
        const Labeling& lab = *res.labeling;
        for (int len = 1; len <= n; ++len) {
            std::vector<Vertex> pref(lab.order().begin(), lab.order().begin() + len);
            Graph sub = g.induced(pref);
            std::vector<Vertex> ids(len);
            for (int i = 0; i < len; ++i) ids[i] = i;
            if (is_nonjumping_naive(sub, Labeling(ids)).has_value())
                return {false, "a prefix of a non-jumping labeling jumps"};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " prefixes verified"};
}

Outcome criterion10() {
    // path plus short chords; n = 1e5 keeps the naive checker out of reach
    int n = 100000;
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    for (int i = 0; i + 2 < n; i += 3) es.emplace_back(i, i + 2);
    Graph g(n, std::move(es));
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    Labeling lab(std::move(order));
    auto t0 = Clock::now();
    bool ok = is_nonjumping_fast(g, lab);
    double sec = std::chrono::duration<double>(Clock::now() - t0).count();
    if (!ok) return {false, "path-like labeling rejected"};
    if (sec >= 2.0) return {false, "took " + std::to_string(sec) + " s"};
    std::ostringstream note;
    note << "n=100000 verified in " << std::fixed << std::setprecision(3) << sec << " s";
    return {true, note.str()};
}

} // namespace

int main() {
    run(1, "jumping-graph certificate: 8! labelings, none non-jumping", criterion1);
    run(2, "characterization equivalence on 1000 random (graph, labeling) pairs", criterion2);
    run(3, "monotone drawings stay in [0,2n+1]^2 with corners on the diagonal", criterion3);
    run(4, "sweep equals the naive pair scan; early exit keeps the verdict", criterion4);
    run(5, "family labelers are non-jumping under both checkers", criterion5);
    run(6, "distance-hereditary replay validates at every step; C5 rejected", criterion6);
    run(7, "4-leaf-power embeddings match the leaf-power graph exactly", criterion7);
    run(8, "labeling -> drawing -> labeling round trip", criterion8);
    run(9, "prefixes of non-jumping labelings are non-jumping", criterion9);
    run(10, "fast recognizer handles n = 1e5 within 2 s", criterion10);
    return failures;
}
