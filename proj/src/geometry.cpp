#include "ell/geometry.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace ell {

const char* to_string(CrossingKind k) {
    switch (k) {
    case CrossingKind::none: return "none";
    case CrossingKind::proper: return "proper";
    case CrossingKind::corner_touch: return "corner-touch";
    case CrossingKind::overlap: return "overlap";
    }
    return "?";
}

void LEmbedding::insert(Vertex v, const LSegment& s) {
    if (s.w < 1 || s.h < 1) throw Error("bad-segment", "arm lengths must be >= 1");
    segs_[v] = s;
}

void LEmbedding::translate(Coord dx, Coord dy) {
    for (auto& [v, s] : segs_) {
        s.x += dx;
        s.y += dy;
    }
}

void LEmbedding::bounds(Coord& min_x, Coord& min_y, Coord& max_x, Coord& max_y) const {
    min_x = min_y = std::numeric_limits<Coord>::max();
    max_x = max_y = std::numeric_limits<Coord>::min();
    for (auto& [v, s] : segs_) {
        min_x = std::min(min_x, s.x);
        min_y = std::min(min_y, s.y - s.h);
        max_x = std::max(max_x, s.x + s.w);
        max_y = std::max(max_y, s.y);
    }
}

namespace {

inline bool ranges_meet(Coord a1, Coord a2, Coord b1, Coord b2) {
    return a1 <= b2 && b1 <= a2;
}

// Contact point of a's horizontal arm with b's vertical arm, if any.
// interior = strictly inside both arms.
struct Contact {
    bool exists = false;
    bool interior = false;
};

Contact h_cross_v(const LSegment& a, const LSegment& b) {
    Contact c;
    if (b.x >= a.x && b.x <= a.x + a.w && a.y >= b.y - b.h && a.y <= b.y) {
        c.exists = true;
        c.interior = b.x > a.x && b.x < a.x + a.w && a.y > b.y - b.h && a.y < b.y;
    }
    return c;
}

} // namespace

CrossingKind crossing(const LSegment& a, const LSegment& b) {
    // Parallel arms sharing any grid point count as overlap.
    if (a.y == b.y && ranges_meet(a.x, a.x + a.w, b.x, b.x + b.w))
        return CrossingKind::overlap;
    if (a.x == b.x && ranges_meet(a.y - a.h, a.y, b.y - b.h, b.y))
        return CrossingKind::overlap;

    Contact ab = h_cross_v(a, b);
    Contact ba = h_cross_v(b, a);
    int contacts = (ab.exists ? 1 : 0) + (ba.exists ? 1 : 0);
    if (contacts == 0) return CrossingKind::none;
    if (contacts == 1 && (ab.exists ? ab.interior : ba.interior))
        return CrossingKind::proper;
    return CrossingKind::corner_touch;
}

ValidationReport validate_embedding_naive(const Graph& g, const LEmbedding& e) {
    if (e.size() != g.num_vertices())
        throw Error("vertex-set-mismatch", "embedding does not cover the vertex set");
    for (auto& [v, s] : e)
        if (v < 0 || v >= g.num_vertices())
            throw Error("vertex-set-mismatch", "embedding has an unknown vertex");

    ValidationReport rep;
    for (auto it = e.begin(); it != e.end(); ++it)
        for (auto jt = std::next(it); jt != e.end(); ++jt) {
            CrossingKind k = crossing(it->second, jt->second);
            bool adj = g.has_edge(it->first, jt->first);
            bool bad = (adj && k != CrossingKind::proper) || (!adj && k != CrossingKind::none);
            if (bad) rep.violations.push_back({it->first, jt->first, k, adj});
        }
    return rep;
}

std::vector<ArmSegment> decompose_arms(const LEmbedding& e) {
    std::vector<ArmSegment> arms;
    arms.reserve(2 * e.size());
    for (auto& [v, s] : e) {
        arms.push_back({v, true, s.y, s.x, s.x + s.w});
        arms.push_back({v, false, s.x, s.y - s.h, s.y});
    }
    return arms;
}

std::vector<SweepEvent> sweep_intersections(const std::vector<ArmSegment>& arms,
                                            std::optional<std::size_t> limit) {
    std::size_t cap = limit ? *limit + 1 : std::numeric_limits<std::size_t>::max();

    // Sweep stops: horizontal starts, vertical queries, horizontal ends.
    struct Stop {
        Coord x;
        int phase; // 0 start, 1 query, 2 end
        int idx;
    };
    std::vector<Stop> stops;
    for (int i = 0; i < static_cast<int>(arms.size()); ++i) {
        const ArmSegment& a = arms[i];
        if (a.horizontal) {
            stops.push_back({a.lo, 0, i});
            stops.push_back({a.hi, 2, i});
        } else {
            stops.push_back({a.fixed, 1, i});
        }
    }
    std::sort(stops.begin(), stops.end(), [](const Stop& a, const Stop& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.phase != b.phase) return a.phase < b.phase;
        return a.idx < b.idx;
    });

    std::set<std::pair<Coord, int>> active; // (y, arm index)
    std::vector<SweepEvent> out;
    std::vector<SweepEvent> column;

    auto column_key = [](const SweepEvent& ev) {
        int lo = std::min(ev.a, ev.b), hi = std::max(ev.a, ev.b);
        return std::tuple<Coord, int, int, int, int>(ev.y, ev.corner ? 0 : 1, lo, hi, ev.a);
    };

    std::size_t i = 0;
    while (i < stops.size() && out.size() < cap) {
        Coord x = stops[i].x;
        std::size_t j = i;
        while (j < stops.size() && stops[j].x == x && stops[j].phase == 0) {
            const ArmSegment& h = arms[stops[j].idx];
            active.insert({h.fixed, stops[j].idx});
            ++j;
        }
        column.clear();
        std::size_t remaining = cap - out.size();
        while (j < stops.size() && stops[j].x == x && stops[j].phase == 1) {
            const ArmSegment& v = arms[stops[j].idx];
            // performance guard: beyond remaining+1 kept events the rest of this
            // vertical cannot reach the sorted prefix, except ties on the last y
            std::size_t kept = 0;
            Coord last_y = 0;
            for (auto it = active.lower_bound({v.lo, std::numeric_limits<int>::min()});
                 it != active.end() && it->first <= v.hi; ++it) {
                if (kept > remaining && it->first != last_y) break;
                const ArmSegment& h = arms[it->second];
                column.push_back({x, it->first, h.owner, v.owner, h.owner == v.owner});
                ++kept;
                last_y = it->first;
            }
            ++j;
        }
        while (j < stops.size() && stops[j].x == x && stops[j].phase == 2) {
            const ArmSegment& h = arms[stops[j].idx];
            active.erase({h.fixed, stops[j].idx});
            ++j;
        }
        std::sort(column.begin(), column.end(), [&](const SweepEvent& a, const SweepEvent& b) {
            return column_key(a) < column_key(b);
        });
        for (const SweepEvent& ev : column) {
            if (out.size() >= cap) break;
            out.push_back(ev);
        }
        i = j;
    }
    return out;
}

LEmbedding expand(const LEmbedding& e, Vertex ref, Direction dir) {
    if (!e.contains(ref)) throw Error("bad-argument", "expand: ref not in embedding");
    const Coord rx = e.at(ref).x;
    const Coord ry = e.at(ref).y;
    LEmbedding out;
    for (auto& [v, s0] : e) {
        LSegment s = s0;
        switch (dir) {
        case Direction::right:
            // cut between rx and rx+1
            if (s.x > rx) s.x += 1;
            else if (s.x + s.w >= rx + 1) s.w += 1;
            break;
        case Direction::left:
            // cut between rx-1 and rx
            if (s.x < rx) {
                s.x -= 1;
                if (s.x + 1 + s.w >= rx) s.w += 1; // arm crossed the cut; keep its tip
            }
            break;
        case Direction::up:
            // cut between ry-1 and ry
            if (s.y < ry) s.y -= 1;
            else if (s.y - s.h <= ry - 1) s.h += 1;
            break;
        case Direction::down:
            // cut between ry and ry+1
            if (s.y > ry) {
                s.y += 1;
                if (s.y - 1 - s.h <= ry) s.h += 1; // arm crossed the cut; keep its top
            }
            break;
        }
        out.insert(v, s);
    }
    return out;
}

} // namespace ell
