#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ell/builders.hpp"
#include "ell/io.hpp"
#include "ell/monotone.hpp"

namespace py = pybind11;
using namespace ell;

namespace {

LEmbedding embedding_from_dict(const std::map<Vertex, std::tuple<Coord, Coord, Coord, Coord>>& d) {
    LEmbedding e;
    for (auto& [v, t] : d)
        e.insert(v, {std::get<0>(t), std::get<1>(t), std::get<2>(t), std::get<3>(t)});
    return e;
}

std::map<Vertex, std::tuple<Coord, Coord, Coord, Coord>> embedding_to_dict(const LEmbedding& e) {
    std::map<Vertex, std::tuple<Coord, Coord, Coord, Coord>> d;
    for (auto& [v, s] : e) d[v] = {s.x, s.y, s.w, s.h};
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "L-embeddings and monotone L-embeddings of graphs";

    py::register_exception<Error>(m, "EllError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def("has_edge", &Graph::has_edge)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; });

    py::class_<Labeling>(m, "Labeling")
        .def(py::init<std::vector<Vertex>>(), py::arg("order"))
        .def_property_readonly("order", &Labeling::order)
        .def("position_of", &Labeling::position_of)
        .def("__len__", &Labeling::size)
        .def("__eq__", [](const Labeling& a, const Labeling& b) { return a == b; });

    py::class_<LeafTree>(m, "LeafTree")
        .def(py::init<std::vector<int>, std::map<int, std::string>>(), py::arg("parent"),
             py::arg("leaf_names"))
        .def_property_readonly("root", &LeafTree::root)
        .def("distance", &LeafTree::distance)
        .def("sorted_leaves", &LeafTree::sorted_leaves)
        .def("leaf_name", &LeafTree::leaf_name);

    py::class_<LSegment>(m, "LSegment")
        .def(py::init([](Coord x, Coord y, Coord w, Coord h) {
                 return LSegment{x, y, w, h};
             }),
             py::arg("x"), py::arg("y"), py::arg("w"), py::arg("h"))
        .def_readonly("x", &LSegment::x)
        .def_readonly("y", &LSegment::y)
        .def_readonly("w", &LSegment::w)
        .def_readonly("h", &LSegment::h);

    py::class_<LEmbedding>(m, "LEmbedding")
        .def(py::init(&embedding_from_dict), py::arg("segments"))
        .def("as_dict", &embedding_to_dict)
        .def("__len__", &LEmbedding::size);

    py::class_<JumpWitness>(m, "JumpWitness")
        .def_readonly("i", &JumpWitness::i)
        .def_readonly("j", &JumpWitness::j)
        .def_readonly("k", &JumpWitness::k)
        .def_readonly("l", &JumpWitness::l);

    m.def("graph_from_leaf_tree", &graph_from_leaf_tree, py::arg("tree"), py::arg("k"));
    m.def("jumping8", &jumping8);
    m.def("jumping8_names", &jumping8_names);

    m.def("crossing", [](const LSegment& a, const LSegment& b) {
        return std::string(to_string(crossing(a, b)));
    });
    m.def("validate_embedding_naive", [](const Graph& g, const LEmbedding& e) {
        auto rep = validate_embedding_naive(g, e);
        std::vector<std::tuple<Vertex, Vertex, std::string, bool>> out;
        for (auto& v : rep.violations) out.emplace_back(v.u, v.v, to_string(v.kind), v.adjacent);
        return out;
    });
    m.def("expand", [](const LEmbedding& e, Vertex ref, const std::string& dir) {
        Direction d = dir == "right"  ? Direction::right
                      : dir == "left" ? Direction::left
                      : dir == "up"   ? Direction::up
                                      : Direction::down;
        return expand(e, ref, d);
    });

    m.def("build_monotone", &build_monotone);
    m.def("labeling_from_embedding", &labeling_from_embedding);
    m.def("is_nonjumping_naive", [](const Graph& g, const Labeling& lab) {
        return is_nonjumping_naive(g, lab); // None when non-jumping
    });
    m.def("is_nonjumping_fast", &is_nonjumping_fast);
    m.def(
        "find_nonjumping_labeling",
        [](const Graph& g, std::optional<long long> budget, bool prune, int jobs) {
            SearchOptions opts;
            opts.budget = budget;
            opts.prune = prune;
            opts.jobs = jobs;
            auto res = find_nonjumping_labeling(g, opts);
            const char* status = res.status == SearchResult::Status::found ? "found"
                                 : res.status == SearchResult::Status::exhausted
                                     ? "exhausted"
                                     : "budget-exceeded";
            return py::make_tuple(status, res.labeling, res.nodes_visited,
                                  res.complete_labelings);
        },
        py::arg("g"), py::arg("budget") = std::nullopt, py::arg("prune") = true,
        py::arg("jobs") = 1);

    py::class_<IntervalSet>(m, "IntervalSet").def(py::init([](
        const std::vector<std::pair<std::string, std::string>>& ivs) {
        IntervalSet s;
        for (auto& [a, b] : ivs) s.intervals.emplace_back(Rational::parse(a), Rational::parse(b));
        return s;
    }));
    m.def("intervals_graph", &intervals_graph);
    m.def("label_interval", &label_interval);

    py::class_<ConvexBipartite>(m, "ConvexBipartite")
        .def(py::init<Graph, std::vector<Vertex>>(), py::arg("g"), py::arg("b_order"));
    m.def("label_convex_bipartite", &label_convex_bipartite);
    m.def("label_outerplanar", &label_outerplanar);
    m.def("label_3leaf", &label_3leaf);

    m.def("pruning_sequence", [](const Graph& g) {
        std::vector<std::tuple<std::string, Vertex, Vertex>> out;
        for (auto& s : pruning_sequence(g)) out.emplace_back(to_string(s.kind), s.removed, s.anchor);
        return out;
    });
    m.def("add_pendant", &add_pendant);
    m.def("add_true_twin", &add_true_twin);
    m.def("add_false_twin", &add_false_twin);
    m.def("embed_distance_hereditary", &embed_distance_hereditary);
    m.def("fully_connected_embedding", &fully_connected_embedding);
    m.def("embed_leaf_power", &embed_leaf_power, py::arg("tree"), py::arg("k"));
    m.def("embed_4leaf", &embed_4leaf);

    m.def("render_svg", [](const LEmbedding& e, const std::vector<std::string>& names) {
        return io::render_svg(e, names);
    });
    m.def("parse", [](const std::string& kind, const std::string& text) {
        auto doc = io::parse(io::kind_from_string(kind), text);
        return io::serialize(doc); // canonical form
    });
}
