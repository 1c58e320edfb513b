#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ell/graph.hpp"

namespace ell {

using Coord = long long;

/// One vertex's drawing: corner (x,y), horizontal arm of length w going right,
/// vertical arm of length h going up. y grows downward, so "up" means -y.
/// Arms: horizontal {(x..x+w, y)}, vertical {(x, y-h..y)}. w >= 1, h >= 1.
struct LSegment {
    Coord x = 0, y = 0, w = 1, h = 1;
    bool operator==(const LSegment& o) const {
        return x == o.x && y == o.y && w == o.w && h == o.h;
    }
};

enum class CrossingKind { none, proper, corner_touch, overlap };

const char* to_string(CrossingKind k);

/// Vertex -> L-segment map. Kept ordered for deterministic iteration.
class LEmbedding {
public:
    LEmbedding() = default;

    void insert(Vertex v, const LSegment& s);
    void erase(Vertex v) { segs_.erase(v); }
    bool contains(Vertex v) const { return segs_.count(v) != 0; }
    const LSegment& at(Vertex v) const { return segs_.at(v); }
    LSegment& at(Vertex v) { return segs_.at(v); }
    int size() const { return static_cast<int>(segs_.size()); }
    auto begin() const { return segs_.begin(); }
    auto end() const { return segs_.end(); }

    void translate(Coord dx, Coord dy);
    /// Smallest x/y touched by any arm and largest x/y touched by any arm.
    void bounds(Coord& min_x, Coord& min_y, Coord& max_x, Coord& max_y) const;

    bool operator==(const LEmbedding& o) const { return segs_ == o.segs_; }

private:
    std::map<Vertex, LSegment> segs_;
};

/// Classifies how two L-segments interact.
/// proper: exactly one transversal crossing, strictly interior to both arms.
/// overlap: parallel arms share at least one grid point.
/// corner_touch: arms meet only at an arm endpoint.
CrossingKind crossing(const LSegment& a, const LSegment& b);

struct Violation {
    Vertex u, v;
    CrossingKind kind;
    bool adjacent;
    bool operator==(const Violation& o) const {
        return u == o.u && v == o.v && kind == o.kind && adjacent == o.adjacent;
    }
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// O(n^2) pair scan. Adjacent pairs must classify proper, non-adjacent pairs
/// none; overlap and corner_touch are violations regardless of adjacency.
ValidationReport validate_embedding_naive(const Graph& g, const LEmbedding& e);

/// One axis-aligned arm of an L. For horizontal arms `fixed` is y and [lo,hi]
/// the x-extent; for vertical arms `fixed` is x and [lo,hi] the y-extent.
struct ArmSegment {
    Vertex owner;
    bool horizontal;
    Coord fixed;
    Coord lo, hi;
};

std::vector<ArmSegment> decompose_arms(const LEmbedding& e);

/// A horizontal x vertical arm contact point. `corner` marks the two arms of
/// one L meeting at its corner (then a == b).
struct SweepEvent {
    Coord x, y;
    Vertex a, b; // horizontal owner, vertical owner
    bool corner;
    bool operator==(const SweepEvent& o) const {
        return x == o.x && y == o.y && a == o.a && b == o.b && corner == o.corner;
    }
};

/// Enumerates horizontal x vertical arm intersections in sweep order (x, then
/// y, corner events before cross events, then owner ids), stopping once
/// limit+1 events were collected. Pass nullopt for an unbounded run.
std::vector<SweepEvent> sweep_intersections(const std::vector<ArmSegment>& arms,
                                            std::optional<std::size_t> limit);

enum class Direction { right, left, up, down };

/// Inserts a unit slice next to the corner of `ref` (to its right/left/above/
/// below). Segments beyond the cut move one unit away; arms spanning the cut
/// grow by one. The intersection graph of the result equals the input's.
LEmbedding expand(const LEmbedding& e, Vertex ref, Direction dir);

} // namespace ell
