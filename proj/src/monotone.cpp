#include "ell/monotone.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace ell {

LEmbedding build_monotone(const Graph& g, const Labeling& lab) {
    int n = g.num_vertices();
    if (lab.size() != n) throw Error("bad-argument", "labeling size mismatch");
    // smallest earlier / largest later neighbor position, per position
    std::vector<int> min_earlier(n, -1), max_later(n, -1);
    for (auto [u, v] : g.edges()) {
        int p = lab.position_of(u), q = lab.position_of(v);
        if (p > q) std::swap(p, q);
        if (min_earlier[q] == -1 || p < min_earlier[q]) min_earlier[q] = p;
        if (max_later[p] == -1 || q > max_later[p]) max_later[p] = q;
    }
    LEmbedding e;
    for (int p = 0; p < n; ++p) {
        Coord j = p + 1;
        LSegment s;
        s.x = s.y = 2 * j;
        s.h = min_earlier[p] >= 0 ? 2 * (p - min_earlier[p]) + 1 : 1;
        s.w = max_later[p] >= 0 ? 2 * (max_later[p] - p) + 1 : 1;
        e.insert(lab.at(p), s);
    }
    return e;
}

Labeling labeling_from_embedding(const LEmbedding& e) {
    std::vector<std::pair<Vertex, LSegment>> items(e.begin(), e.end());
    int n = static_cast<int>(items.size());
    if (n > 2) {
        // all corners on one line: cross products against the first distinct pair
        int base = 0, second = -1;
        for (int i = 1; i < n; ++i)
            if (items[i].second.x != items[base].second.x ||
                items[i].second.y != items[base].second.y) {
                second = i;
                break;
            }
        if (second != -1) {
            Coord dx = items[second].second.x - items[base].second.x;
            Coord dy = items[second].second.y - items[base].second.y;
            for (int i = 0; i < n; ++i) {
                Coord ex = items[i].second.x - items[base].second.x;
                Coord ey = items[i].second.y - items[base].second.y;
                if (dx * ey - dy * ex != 0)
                    throw Error("not-monotone", "corners are not collinear");
            }
        }
    }
    bool vertical = true;
    for (int i = 1; i < n; ++i)
        if (items[i].second.x != items[0].second.x) {
            vertical = false;
            break;
        }
    std::sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
        if (vertical) {
            if (a.second.y != b.second.y) return a.second.y < b.second.y;
        } else {
            if (a.second.x != b.second.x) return a.second.x < b.second.x;
        }
        return a.first < b.first;
    });
    std::vector<Vertex> order;
    order.reserve(items.size());
    for (auto& [v, s] : items) order.push_back(v);
    return Labeling(std::move(order));
}

std::optional<JumpWitness> is_nonjumping_naive(const Graph& g, const Labeling& lab) {
    int n = g.num_vertices();
    if (lab.size() != n) throw Error("bad-argument", "labeling size mismatch");
    std::vector<int> min_earlier(n, -1), max_later(n, -1);
    for (auto [u, v] : g.edges()) {
        int p = lab.position_of(u), q = lab.position_of(v);
        if (p > q) std::swap(p, q);
        if (min_earlier[q] == -1 || p < min_earlier[q]) min_earlier[q] = p;
        if (max_later[p] == -1 || q > max_later[p]) max_later[p] = q;
    }
    auto edgepos = [&](int p, int q) { return g.has_edge(lab.at(p), lab.at(q)); };

    // existence: a witness (i,j,k,l) exists iff some non-edge (j,k) has an
    // earlier neighbor of v_k and a later neighbor of v_j around it
    bool found = false;
    for (int j = 0; j < n && !found; ++j) {
        if (max_later[j] < 0) continue;
        for (int k = j + 1; k < max_later[j] && !found; ++k)
            if (min_earlier[k] >= 0 && min_earlier[k] < j && !edgepos(j, k)) found = true;
    }
    if (!found) return std::nullopt;

    // lexicographically first witness
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (max_later[j] < 0) continue;
            for (int k = j + 1; k < n; ++k) {
                if (k >= max_later[j]) break; // no later neighbor of v_j remains
                if (edgepos(i, k) && !edgepos(j, k)) {
                    for (int l = k + 1; l < n; ++l)
                        if (edgepos(j, l)) return JumpWitness{i, j, k, l};
                    break; // unreachable: max_later[j] > k guarantees an l
                }
            }
        }
    return std::nullopt;
}

bool is_nonjumping_fast(const Graph& g, const Labeling& lab) {
    LEmbedding e = build_monotone(g, lab);
    std::size_t limit = static_cast<std::size_t>(g.num_edges()) + g.num_vertices();
    auto events = sweep_intersections(decompose_arms(e), limit);
    if (events.size() != limit) return false;
    for (const auto& ev : events)
        if (!ev.corner && !g.has_edge(ev.a, ev.b)) return false;
    return true;
}

namespace {

// One worker explores all labelings whose first vertex lies in [first, first]
// (fixed). Vertices are chosen in ascending id order, so results are
// lexicographic within the subtree.
struct SearchWorker {
    const Graph& g;
    bool prune;
    std::atomic<long long>& nodes;
    long long budget;
    bool aborted = false;
    std::optional<std::vector<Vertex>> found;
    long long complete = 0;

    std::vector<Vertex> order;
    std::vector<char> placed;
    std::vector<int> unplaced_deg;

    SearchWorker(const Graph& g_, bool prune_, std::atomic<long long>& nodes_, long long budget_)
        : g(g_), prune(prune_), nodes(nodes_), budget(budget_) {
        placed.assign(g.num_vertices(), 0);
        unplaced_deg.assign(g.num_vertices(), 0);
        for (Vertex v = 0; v < g.num_vertices(); ++v) unplaced_deg[v] = g.degree(v);
    }

    // A witness (i,j,k,l) is detectable as soon as k is placed: v_l is either a
    // later placed neighbor of v_j or still unplaced. Checking k = last
    // position only is complete because earlier k were checked at their time.
    bool prefix_jumps_at_last() const {
        int p = static_cast<int>(order.size()) - 1;
        Vertex vk = order[p];
        bool earlier_neighbor = false; // exists i < j with (v_i, v_k) in E
        for (int j = 0; j < p; ++j) {
            Vertex vj = order[j];
            if (earlier_neighbor && !g.has_edge(vj, vk) && unplaced_deg[vj] > 0) return true;
            if (g.has_edge(vj, vk)) earlier_neighbor = true;
        }
        return false;
    }

    bool complete_is_nonjumping() const {
        int n = g.num_vertices();
        for (int k = 1; k < n; ++k) {
            Vertex vk = order[k];
            bool earlier_neighbor = false;
            for (int j = 0; j < k; ++j) {
                Vertex vj = order[j];
                if (earlier_neighbor && !g.has_edge(vj, vk)) {
                    for (int l = k + 1; l < n; ++l)
                        if (g.has_edge(vj, order[l])) return false;
                }
                if (g.has_edge(vj, vk)) earlier_neighbor = true;
            }
        }
        return true;
    }

    // returns true when a labeling was found (stop)
    bool dfs() {
        if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget) {
            aborted = true;
            return false;
        }
        int n = g.num_vertices();
        if (prune && order.size() > 1 && prefix_jumps_at_last()) return false;
        if (static_cast<int>(order.size()) == n) {
            ++complete;
            bool ok = prune ? true : complete_is_nonjumping();
            if (ok) {
                found = order;
                return true;
            }
            return false;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            placed[v] = 1;
            for (Vertex w : g.neighbors(v)) --unplaced_deg[w];
            order.push_back(v);
            bool done = dfs();
            order.pop_back();
            for (Vertex w : g.neighbors(v)) ++unplaced_deg[w];
            placed[v] = 0;
            if (done || aborted) return done;
        }
        return false;
    }

    void run(Vertex first) {
        placed[first] = 1;
        for (Vertex w : g.neighbors(first)) --unplaced_deg[w];
        order.push_back(first);
        dfs();
        order.pop_back();
        for (Vertex w : g.neighbors(first)) ++unplaced_deg[w];
        placed[first] = 0;
    }
};

} // namespace

SearchResult find_nonjumping_labeling(const Graph& g, const SearchOptions& opts) {
    int n = g.num_vertices();
    if (n > 12 && !opts.budget)
        throw Error("search-guard",
                    "refusing exhaustive search for n > 12 without an explicit budget");
    long long budget = opts.budget.value_or(10'000'000LL);
    int jobs = std::max(1, opts.jobs);

    SearchResult res;
    res.status = SearchResult::Status::exhausted;
    if (n == 0) {
        res.status = SearchResult::Status::found;
        res.labeling = Labeling(std::vector<Vertex>{});
        return res;
    }

    std::atomic<long long> nodes{0};
    std::vector<SearchWorker> workers;
    workers.reserve(n);
    for (int f = 0; f < n; ++f) workers.emplace_back(g, opts.prune, nodes, budget);

    if (jobs == 1) {
        for (int f = 0; f < n; ++f) {
            workers[f].run(f);
            if (workers[f].found || workers[f].aborted) break;
        }
    } else {
        std::atomic<int> next{0};
        auto loop = [&]() {
            for (;;) {
                int f = next.fetch_add(1);
                if (f >= n) return;
                workers[f].run(f);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::min(jobs, n); ++t) pool.emplace_back(loop);
        for (auto& th : pool) th.join();
    }

    res.nodes_visited = nodes.load();
    for (int f = 0; f < n; ++f) {
        res.complete_labelings += workers[f].complete;
        if (workers[f].aborted) {
            res.status = SearchResult::Status::budget_exceeded;
            return res;
        }
        if (workers[f].found) {
            res.status = SearchResult::Status::found;
            res.labeling = Labeling(*workers[f].found);
            return res;
        }
    }
    return res;
}

} // namespace ell
