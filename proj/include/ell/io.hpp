#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ell/builders.hpp"
#include "ell/geometry.hpp"
#include "ell/graph.hpp"
#include "ell/labelers.hpp"

namespace ell::io {

enum class DocKind { graph, tree, intervals, bipartite, embedding, labeling };

const char* to_string(DocKind k);
DocKind kind_from_string(const std::string& s);

/// names[v] is the external name of vertex v.
struct GraphDoc {
    Graph g;
    std::vector<std::string> names;
};

struct TreeDoc {
    LeafTree t;
    std::vector<std::string> node_names; // per tree node id
};

struct IntervalsDoc {
    IntervalSet iv;
    std::vector<std::string> names;
};

struct BipartiteDoc {
    ConvexBipartite cb;
    std::vector<std::string> names;
};

struct EmbeddingDoc {
    LEmbedding e;
    std::vector<std::string> names;
};

struct LabelingDoc {
    std::vector<std::string> order; // vertex names, first position first
};

using Document =
    std::variant<GraphDoc, TreeDoc, IntervalsDoc, BipartiteDoc, EmbeddingDoc, LabelingDoc>;

DocKind kind_of(const Document& d);

/// Parses `text` as the given kind; throws ParseError with a diagnostic code
/// and 1-based line number on malformed input.
Document parse(DocKind kind, const std::string& text);

/// Deterministic inverse of parse (sorted names).
std::string serialize(const Document& d);

/// Resolves a labeling document against a named graph (unknown or repeated
/// names raise ParseError-style diagnostics).
Labeling bind_labeling(const LabelingDoc& lab, const GraphDoc& g);

/// Deterministic SVG: one two-stroke polyline per L, corner dots, y growing
/// downward, and a corner guide line when all corners are collinear.
std::string render_svg(const LEmbedding& e, const std::vector<std::string>& names,
                       const std::set<Vertex>& highlight = {});

} // namespace ell::io
