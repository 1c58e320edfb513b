#pragma once

#include <cstdint>
#include <optional>

#include "ell/geometry.hpp"
#include "ell/graph.hpp"

namespace ell {

/// Monotone drawing of g under labeling lab: the j-th labeled vertex gets its
/// corner at (2j, 2j) (1-based j); v_j.h = 2|j-a|+1 for a the smallest earlier
/// neighbor position (else 1), v_j.w = 2|j-b|+1 for b the largest later
/// neighbor position (else 1). Always returns; the output is a valid embedding
/// of g exactly when lab is non-jumping. O(n+m).
LEmbedding build_monotone(const Graph& g, const Labeling& lab);

/// Recovers the labeling of a monotone embedding: vertices sorted by corner x
/// (by y when the corner line is vertical). Throws Error("not-monotone") when
/// the corners are not collinear.
Labeling labeling_from_embedding(const LEmbedding& e);

/// Brute-force oracle: scans positions for a jumping witness and returns the
/// lexicographically first (i,j,k,l), or nullopt when lab is non-jumping.
std::optional<JumpWitness> is_nonjumping_naive(const Graph& g, const Labeling& lab);

/// Fast recognition: builds the monotone drawing and sweeps its arms with an
/// |E|+|V| event budget; true iff exactly |E|+|V| events occur and every cross
/// event joins an adjacent pair. O(n log n + m).
bool is_nonjumping_fast(const Graph& g, const Labeling& lab);

struct SearchOptions {
    std::optional<long long> budget; // max partial nodes; default 1e7
    bool prune = true;               // abandon prefixes with a detectable witness
    int jobs = 1;                    // parallel workers split by first position
};

struct SearchResult {
    enum class Status { found, exhausted, budget_exceeded };
    Status status;
    std::optional<Labeling> labeling;  // set when status == found
    long long nodes_visited = 0;
    long long complete_labelings = 0; // full permutations reached
};

/// Depth-first enumeration over labeling prefixes, lexicographic in vertex
/// ids; returns the first non-jumping labeling, exhausted-none, or
/// budget-exceeded. Refuses n > 12 unless a budget is given.
SearchResult find_nonjumping_labeling(const Graph& g, const SearchOptions& opts = {});

} // namespace ell
