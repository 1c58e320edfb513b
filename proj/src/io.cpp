#include "ell/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ell::io {

const char* to_string(DocKind k) {
    switch (k) {
    case DocKind::graph: return "graph";
    case DocKind::tree: return "tree";
    case DocKind::intervals: return "intervals";
    case DocKind::bipartite: return "bipartite";
    case DocKind::embedding: return "embedding";
    case DocKind::labeling: return "labeling";
    }
    return "?";
}

DocKind kind_from_string(const std::string& s) {
    if (s == "graph") return DocKind::graph;
    if (s == "tree") return DocKind::tree;
    if (s == "intervals") return DocKind::intervals;
    if (s == "bipartite") return DocKind::bipartite;
    if (s == "embedding") return DocKind::embedding;
    if (s == "labeling") return DocKind::labeling;
    throw Error("bad-kind", "unknown document kind: " + s);
}

DocKind kind_of(const Document& d) {
    return static_cast<DocKind>(d.index());
}

namespace {

struct Line {
    int no;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{no, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

long long parse_int(const std::string& tok, int line) {
    try {
        size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("BAD_NUMBER", "expected an integer, got '" + tok + "'", line);
    }
}

// sorted unique names -> id; returns the sorted name list
std::vector<std::string> assign_ids(const std::set<std::string>& names,
                                    std::map<std::string, Vertex>& id_of) {
    std::vector<std::string> sorted(names.begin(), names.end());
    for (size_t i = 0; i < sorted.size(); ++i) id_of[sorted[i]] = static_cast<Vertex>(i);
    return sorted;
}

Document parse_graph(const std::vector<Line>& lines) {
    if (lines.empty() || lines[0].tokens[0] != "graph" || lines[0].tokens.size() != 3)
        throw ParseError("BAD_HEADER", "expected 'graph <n> <m>'", lines.empty() ? 1 : lines[0].no);
    long long n_decl = parse_int(lines[0].tokens[1], lines[0].no);
    long long m_decl = parse_int(lines[0].tokens[2], lines[0].no);

    std::set<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<int> edge_lines;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.tokens[0] == "vertex") {
            if (ln.tokens.size() != 2)
                throw ParseError("MALFORMED_LINE", "expected 'vertex <name>'", ln.no);
            names.insert(ln.tokens[1]);
        } else if (ln.tokens.size() == 2) {
            names.insert(ln.tokens[0]);
            names.insert(ln.tokens[1]);
            edges.emplace_back(ln.tokens[0], ln.tokens[1]);
            edge_lines.push_back(ln.no);
        } else {
            throw ParseError("MALFORMED_LINE", "expected an edge '<name> <name>'", ln.no);
        }
    }
    if (static_cast<long long>(names.size()) != n_decl)
        throw ParseError("COUNT_MISMATCH",
                         "header declares " + std::to_string(n_decl) + " vertices, found " +
                             std::to_string(names.size()),
                         lines[0].no);
    if (static_cast<long long>(edges.size()) != m_decl)
        throw ParseError("COUNT_MISMATCH",
                         "header declares " + std::to_string(m_decl) + " edges, found " +
                             std::to_string(edges.size()),
                         lines[0].no);

    std::map<std::string, Vertex> id_of;
    GraphDoc doc;
    doc.names = assign_ids(names, id_of);
    std::vector<Edge> es;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (size_t i = 0; i < edges.size(); ++i) {
        Vertex u = id_of[edges[i].first], v = id_of[edges[i].second];
        if (u == v) throw ParseError("SELF_LOOP", "self-loop on " + edges[i].first, edge_lines[i]);
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw ParseError("DUP_EDGE",
                             "duplicate edge " + edges[i].first + " " + edges[i].second,
                             edge_lines[i]);
        es.emplace_back(u, v);
    }
    doc.g = Graph(static_cast<int>(doc.names.size()), std::move(es));
    return doc;
}

Document parse_tree(const std::vector<Line>& lines) {
    if (lines.empty() || lines[0].tokens[0] != "tree" || lines[0].tokens.size() != 1)
        throw ParseError("BAD_HEADER", "expected 'tree'", lines.empty() ? 1 : lines[0].no);

    std::map<std::string, int> node_id;
    std::vector<std::string> node_names;
    std::vector<std::pair<std::string, int>> parent_name; // per node: parent or "-"
    std::vector<std::tuple<std::string, std::string, int>> leaf_lines;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.tokens[0] == "leaf") {
            if (ln.tokens.size() != 3)
                throw ParseError("MALFORMED_LINE", "expected 'leaf <node> <name>'", ln.no);
            leaf_lines.emplace_back(ln.tokens[1], ln.tokens[2], ln.no);
        } else if (ln.tokens.size() == 2) {
            if (node_id.count(ln.tokens[0]))
                throw ParseError("DUP_NODE", "node declared twice: " + ln.tokens[0], ln.no);
            node_id[ln.tokens[0]] = static_cast<int>(node_names.size());
            node_names.push_back(ln.tokens[0]);
            parent_name.emplace_back(ln.tokens[1], ln.no);
        } else {
            throw ParseError("MALFORMED_LINE", "expected '<node> <parent|->'", ln.no);
        }
    }

    std::vector<int> parent(node_names.size(), -1);
    int roots = 0;
    for (size_t v = 0; v < node_names.size(); ++v) {
        const auto& [pname, no] = parent_name[v];
        if (pname == "-") {
            ++roots;
            if (roots > 1) throw ParseError("DUP_ROOT", "second root: " + node_names[v], no);
            parent[v] = -1;
        } else {
            auto it = node_id.find(pname);
            if (it == node_id.end())
                throw ParseError("UNKNOWN_NODE", "unknown parent node: " + pname, no);
            parent[v] = it->second;
        }
    }
    if (roots == 0)
        throw ParseError("NO_ROOT", "no root line ('<node> -')", lines[0].no);

    std::map<int, std::string> leaf_names;
    std::set<std::string> used_names;
    for (auto& [node, name, no] : leaf_lines) {
        auto it = node_id.find(node);
        if (it == node_id.end())
            throw ParseError("UNKNOWN_NODE", "leaf line for unknown node: " + node, no);
        if (leaf_names.count(it->second))
            throw ParseError("DUP_LEAF", "two leaf names for node " + node, no);
        if (!used_names.insert(name).second)
            throw ParseError("DUP_LEAF", "leaf name used twice: " + name, no);
        leaf_names[it->second] = name;
    }

    TreeDoc doc;
    try {
        doc.t = LeafTree(std::move(parent), std::move(leaf_names));
    } catch (const Error& e) {
        throw ParseError("BAD_TREE", e.what(), lines[0].no);
    }
    doc.node_names = std::move(node_names);
    return doc;
}

Document parse_intervals(const std::vector<Line>& lines) {
    if (lines.empty() || lines[0].tokens[0] != "intervals" || lines[0].tokens.size() != 1)
        throw ParseError("BAD_HEADER", "expected 'intervals'", lines.empty() ? 1 : lines[0].no);
    std::map<std::string, std::pair<Rational, Rational>> by_name;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.tokens.size() != 3)
            throw ParseError("MALFORMED_LINE", "expected '<name> <a> <b>'", ln.no);
        if (by_name.count(ln.tokens[0]))
            throw ParseError("DUP_VERTEX", "interval declared twice: " + ln.tokens[0], ln.no);
        Rational a, b;
        try {
            a = Rational::parse(ln.tokens[1]);
            b = Rational::parse(ln.tokens[2]);
        } catch (const Error& e) {
            throw ParseError("BAD_NUMBER", e.what(), ln.no);
        }
        if (!(a < b)) throw ParseError("BAD_INTERVAL", "interval needs a < b", ln.no);
        by_name[ln.tokens[0]] = {a, b};
    }
    IntervalsDoc doc;
    for (auto& [name, iv] : by_name) {
        doc.names.push_back(name);
        doc.iv.intervals.push_back(iv);
    }
    return doc;
}

Document parse_bipartite(const std::vector<Line>& lines) {
    if (lines.empty() || lines[0].tokens[0] != "bipartite" || lines[0].tokens.size() != 1)
        throw ParseError("BAD_HEADER", "expected 'bipartite'", lines.empty() ? 1 : lines[0].no);
    std::vector<std::string> b_names; // in f order
    std::set<std::string> names, bset, rset;
    std::vector<std::tuple<std::string, std::string, int>> edges;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.tokens[0] == "b" && ln.tokens.size() == 2) {
            if (!names.insert(ln.tokens[1]).second)
                throw ParseError("DUP_VERTEX", "vertex declared twice: " + ln.tokens[1], ln.no);
            bset.insert(ln.tokens[1]);
            b_names.push_back(ln.tokens[1]);
        } else if (ln.tokens[0] == "r" && ln.tokens.size() == 2) {
            if (!names.insert(ln.tokens[1]).second)
                throw ParseError("DUP_VERTEX", "vertex declared twice: " + ln.tokens[1], ln.no);
            rset.insert(ln.tokens[1]);
        } else if (ln.tokens[0] == "edge" && ln.tokens.size() == 3) {
            edges.emplace_back(ln.tokens[1], ln.tokens[2], ln.no);
        } else {
            throw ParseError("MALFORMED_LINE", "expected 'b <name>', 'r <name>' or 'edge <r> <b>'",
                             ln.no);
        }
    }
    std::map<std::string, Vertex> id_of;
    BipartiteDoc doc;
    doc.names = assign_ids(names, id_of);
    std::vector<Edge> es;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto& [rn, bn, no] : edges) {
        if (!rset.count(rn))
            throw ParseError(rset.count(bn) || bset.count(rn) ? "WRONG_PART" : "UNKNOWN_VERTEX",
                             "edge must name an r vertex first: " + rn, no);
        if (!bset.count(bn))
            throw ParseError(rset.count(bn) ? "WRONG_PART" : "UNKNOWN_VERTEX",
                             "edge must name a b vertex second: " + bn, no);
        Vertex u = id_of[rn], v = id_of[bn];
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw ParseError("DUP_EDGE", "duplicate edge " + rn + " " + bn, no);
        es.emplace_back(u, v);
    }
    std::vector<Vertex> b_order;
    for (auto& bn : b_names) b_order.push_back(id_of[bn]);
    doc.cb = ConvexBipartite(Graph(static_cast<int>(doc.names.size()), std::move(es)),
                             std::move(b_order));
    return doc;
}

Document parse_embedding(const std::vector<Line>& lines) {
    if (lines.empty() || lines[0].tokens[0] != "embedding" || lines[0].tokens.size() != 1)
        throw ParseError("BAD_HEADER", "expected 'embedding'", lines.empty() ? 1 : lines[0].no);
    std::map<std::string, LSegment> by_name;
    for (size_t i = 1; i < lines.size(); ++i) {
        const Line& ln = lines[i];
        if (ln.tokens.size() != 5)
            throw ParseError("MALFORMED_LINE", "expected '<name> <x> <y> <w> <h>'", ln.no);
        if (by_name.count(ln.tokens[0]))
            throw ParseError("DUP_VERTEX", "segment declared twice: " + ln.tokens[0], ln.no);
        LSegment s;
        s.x = parse_int(ln.tokens[1], ln.no);
        s.y = parse_int(ln.tokens[2], ln.no);
        s.w = parse_int(ln.tokens[3], ln.no);
        s.h = parse_int(ln.tokens[4], ln.no);
        if (s.w < 1 || s.h < 1)
            throw ParseError("BAD_SEGMENT", "arm lengths must be >= 1", ln.no);
        by_name[ln.tokens[0]] = s;
    }
    EmbeddingDoc doc;
    Vertex id = 0;
    for (auto& [name, seg] : by_name) {
        doc.names.push_back(name);
        doc.e.insert(id++, seg);
    }
    return doc;
}

Document parse_labeling(const std::vector<Line>& lines) {
    if (lines.empty() || lines[0].tokens[0] != "labeling" || lines[0].tokens.size() != 1)
        throw ParseError("BAD_HEADER", "expected 'labeling'", lines.empty() ? 1 : lines[0].no);
    LabelingDoc doc;
    std::set<std::string> seen;
    for (size_t i = 1; i < lines.size(); ++i)
        for (const auto& tok : lines[i].tokens) {
            if (!seen.insert(tok).second)
                throw ParseError("NOT_PERMUTATION", "name repeated in labeling: " + tok,
                                 lines[i].no);
            doc.order.push_back(tok);
        }
    return doc;
}

} // namespace

Document parse(DocKind kind, const std::string& text) {
    auto lines = tokenize(text);
    switch (kind) {
    case DocKind::graph: return parse_graph(lines);
    case DocKind::tree: return parse_tree(lines);
    case DocKind::intervals: return parse_intervals(lines);
    case DocKind::bipartite: return parse_bipartite(lines);
    case DocKind::embedding: return parse_embedding(lines);
    case DocKind::labeling: return parse_labeling(lines);
    }
    throw Error("bad-kind", "unreachable");
}

std::string serialize(const Document& d) {
    std::ostringstream out;
    if (auto* gd = std::get_if<GraphDoc>(&d)) {
        out << "graph " << gd->g.num_vertices() << " " << gd->g.num_edges() << "\n";
        std::vector<std::string> isolated;
        for (Vertex v = 0; v < gd->g.num_vertices(); ++v)
            if (gd->g.degree(v) == 0) isolated.push_back(gd->names[v]);
        std::sort(isolated.begin(), isolated.end());
        for (const auto& name : isolated) out << "vertex " << name << "\n";
        std::vector<std::pair<std::string, std::string>> es;
        for (auto [u, v] : gd->g.edges()) {
            std::string a = gd->names[u], b = gd->names[v];
            if (b < a) std::swap(a, b);
            es.emplace_back(std::move(a), std::move(b));
        }
        std::sort(es.begin(), es.end());
        for (auto& [a, b] : es) out << a << " " << b << "\n";
    } else if (auto* td = std::get_if<TreeDoc>(&d)) {
        out << "tree\n";
        std::vector<int> order(td->t.num_nodes());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if ((td->t.parent(a) == -1) != (td->t.parent(b) == -1))
                return td->t.parent(a) == -1;
            return td->node_names[a] < td->node_names[b];
        });
        for (int v : order) {
            out << td->node_names[v] << " "
                << (td->t.parent(v) == -1 ? "-" : td->node_names[td->t.parent(v)]) << "\n";
        }
        std::vector<std::pair<std::string, int>> leaves;
        for (auto& [node, name] : td->t.leaf_names()) leaves.emplace_back(td->node_names[node], node);
        std::sort(leaves.begin(), leaves.end());
        for (auto& [nodename, node] : leaves)
            out << "leaf " << nodename << " " << td->t.leaf_name(node) << "\n";
    } else if (auto* ivd = std::get_if<IntervalsDoc>(&d)) {
        out << "intervals\n";
        std::vector<int> order(ivd->names.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return ivd->names[a] < ivd->names[b]; });
        for (int i : order)
            out << ivd->names[i] << " " << ivd->iv.intervals[i].first.str() << " "
                << ivd->iv.intervals[i].second.str() << "\n";
    } else if (auto* bd = std::get_if<BipartiteDoc>(&d)) {
        out << "bipartite\n";
        for (Vertex b : bd->cb.b_order) out << "b " << bd->names[b] << "\n";
        std::vector<std::string> rs;
        for (Vertex v = 0; v < bd->cb.g.num_vertices(); ++v)
            if (!bd->cb.in_b[v]) rs.push_back(bd->names[v]);
        std::sort(rs.begin(), rs.end());
        for (const auto& name : rs) out << "r " << name << "\n";
        std::vector<std::pair<std::string, std::string>> es;
        for (auto [u, v] : bd->cb.g.edges()) {
            Vertex r = bd->cb.in_b[u] ? v : u;
            Vertex b = bd->cb.in_b[u] ? u : v;
            es.emplace_back(bd->names[r], bd->names[b]);
        }
        std::sort(es.begin(), es.end());
        for (auto& [rn, bn] : es) out << "edge " << rn << " " << bn << "\n";
    } else if (auto* ed = std::get_if<EmbeddingDoc>(&d)) {
        out << "embedding\n";
        std::vector<std::pair<std::string, LSegment>> lines;
        for (auto& [v, s] : ed->e) lines.emplace_back(ed->names[v], s);
        std::sort(lines.begin(), lines.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [name, s] : lines)
            out << name << " " << s.x << " " << s.y << " " << s.w << " " << s.h << "\n";
    } else if (auto* ld = std::get_if<LabelingDoc>(&d)) {
        out << "labeling\n";
        if (!ld->order.empty()) {
            for (size_t i = 0; i < ld->order.size(); ++i)
                out << ld->order[i] << (i + 1 == ld->order.size() ? "" : " ");
            out << "\n";
        }
    }
    return out.str();
}

Labeling bind_labeling(const LabelingDoc& lab, const GraphDoc& g) {
    std::map<std::string, Vertex> id_of;
    for (size_t i = 0; i < g.names.size(); ++i) id_of[g.names[i]] = static_cast<Vertex>(i);
    std::vector<Vertex> order;
    for (const auto& name : lab.order) {
        auto it = id_of.find(name);
        if (it == id_of.end())
            throw ParseError("UNKNOWN_VERTEX", "labeling names unknown vertex: " + name, 0);
        order.push_back(it->second);
    }
    try {
        return Labeling(std::move(order));
    } catch (const Error& e) {
        throw ParseError("NOT_PERMUTATION", e.what(), 0);
    }
}

std::string render_svg(const LEmbedding& e, const std::vector<std::string>& names,
                       const std::set<Vertex>& highlight) {
    constexpr Coord scale = 10;
    constexpr Coord margin = 20;
    std::ostringstream out;
    if (e.size() == 0) {
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"40\" height=\"40\" "
               "viewBox=\"0 0 40 40\"></svg>\n";
        return out.str();
    }
    Coord min_x, min_y, max_x, max_y;
    e.bounds(min_x, min_y, max_x, max_y);
    Coord w = (max_x - min_x) * scale + 2 * margin;
    Coord h = (max_y - min_y) * scale + 2 * margin;
    auto X = [&](Coord x) { return (x - min_x) * scale + margin; };
    auto Y = [&](Coord y) { return (y - min_y) * scale + margin; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";

    // guide through the corners when they are collinear
    bool collinear = true;
    if (e.size() >= 2) {
        auto first = e.begin();
        auto base = first->second;
        LSegment dirseg = base;
        bool have_dir = false;
        for (auto& [v, s] : e) {
            if (s.x != base.x || s.y != base.y) {
                dirseg = s;
                have_dir = true;
                break;
            }
        }
        if (have_dir) {
            Coord dx = dirseg.x - base.x, dy = dirseg.y - base.y;
            for (auto& [v, s] : e)
                if (dx * (s.y - base.y) - dy * (s.x - base.x) != 0) collinear = false;
        }
    }
    if (collinear && e.size() >= 2) {
        const LSegment* lo = nullptr;
        const LSegment* hi = nullptr;
        for (auto& [v, s] : e) {
            if (!lo || s.x < lo->x || (s.x == lo->x && s.y < lo->y)) lo = &e.at(v);
            if (!hi || s.x > hi->x || (s.x == hi->x && s.y > hi->y)) hi = &e.at(v);
        }
        out << "<line x1=\"" << X(lo->x) << "\" y1=\"" << Y(lo->y) << "\" x2=\"" << X(hi->x)
            << "\" y2=\"" << Y(hi->y)
            << "\" stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
    }

    for (auto& [v, s] : e) {
        const char* color = highlight.count(v) ? "#d62728" : "#1f77b4";
        out << "<polyline points=\"" << X(s.x) << "," << Y(s.y - s.h) << " " << X(s.x) << ","
            << Y(s.y) << " " << X(s.x + s.w) << "," << Y(s.y) << "\" fill=\"none\" stroke=\""
            << color << "\" stroke-width=\"2\"/>\n";
        out << "<circle cx=\"" << X(s.x) << "\" cy=\"" << Y(s.y) << "\" r=\"3\" fill=\"" << color
            << "\"/>\n";
        if (v >= 0 && v < static_cast<Vertex>(names.size()))
            out << "<text x=\"" << X(s.x) + 4 << "\" y=\"" << Y(s.y) - 4
                << "\" font-size=\"10\" font-family=\"monospace\">" << names[v] << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace ell::io
