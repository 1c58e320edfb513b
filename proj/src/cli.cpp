#include "ell/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "ell/builders.hpp"
#include "ell/io.hpp"
#include "ell/monotone.hpp"

namespace ell::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error("io", "cannot open file for writing: " + out_path);
    f << text;
}

bool color_enabled(std::ostream& out) {
    const char* env = std::getenv("ELL_COLOR");
    if (env) return std::string(env) != "0";
    return &out == &std::cout && isatty(fileno(stdout));
}

io::GraphDoc load_graph(const std::string& path) {
    return std::get<io::GraphDoc>(io::parse(io::DocKind::graph, read_file(path)));
}

io::EmbeddingDoc load_embedding(const std::string& path) {
    return std::get<io::EmbeddingDoc>(io::parse(io::DocKind::embedding, read_file(path)));
}

io::LabelingDoc load_labeling(const std::string& path) {
    return std::get<io::LabelingDoc>(io::parse(io::DocKind::labeling, read_file(path)));
}

std::string labeling_text(const Labeling& lab, const std::vector<std::string>& names) {
    io::LabelingDoc doc;
    for (int p = 0; p < lab.size(); ++p) doc.order.push_back(names[lab.at(p)]);
    return io::serialize(io::Document{doc});
}

int cmd_label(const std::string& family, const std::string& in_path, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
    std::string text = read_file(in_path);
    try {
        if (family == "interval") {
            auto doc = std::get<io::IntervalsDoc>(io::parse(io::DocKind::intervals, text));
            write_output(labeling_text(label_interval(doc.iv), doc.names), out_path, out);
        } else if (family == "convex-bipartite") {
            auto doc = std::get<io::BipartiteDoc>(io::parse(io::DocKind::bipartite, text));
            write_output(labeling_text(label_convex_bipartite(doc.cb), doc.names), out_path, out);
        } else if (family == "outerplanar") {
            auto doc = std::get<io::GraphDoc>(io::parse(io::DocKind::graph, text));
            write_output(labeling_text(label_outerplanar(doc.g), doc.names), out_path, out);
        } else { // 3leaf
            auto doc = std::get<io::TreeDoc>(io::parse(io::DocKind::tree, text));
            auto [g, lab] = label_3leaf(doc.t);
            std::vector<std::string> names;
            for (int leaf : doc.t.sorted_leaves()) names.push_back(doc.t.leaf_name(leaf));
            write_output(labeling_text(lab, names), out_path, out);
        }
    } catch (const Error& e) {
        if (e.code() == "not-outerplanar") {
            err << "not outerplanar: " << e.what() << "\n";
            return 1;
        }
        throw;
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& lab_path, bool naive,
               std::ostream& out) {
    auto gd = load_graph(graph_path);
    Labeling lab = io::bind_labeling(load_labeling(lab_path), gd);
    bool ok = naive ? !is_nonjumping_naive(gd.g, lab).has_value() : is_nonjumping_fast(gd.g, lab);
    if (ok) {
        out << "non-jumping\n";
        return 0;
    }
    auto w = is_nonjumping_naive(gd.g, lab);
    out << "jumping vertex at positions " << w->i + 1 << " " << w->j + 1 << " " << w->k + 1 << " "
        << w->l + 1 << " (1-based: v_" << w->j + 1 << " jumps over v_" << w->k + 1 << ")\n";
    return 1;
}

int cmd_embed(const std::string& method, const std::string& in_path, const std::string& lab_path,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (method == "monotone") {
        auto gd = load_graph(in_path);
        Labeling lab;
        if (!lab_path.empty()) {
            lab = io::bind_labeling(load_labeling(lab_path), gd);
        } else {
            std::vector<Vertex> order(gd.g.num_vertices());
            for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<Vertex>(i);
            lab = Labeling(std::move(order));
        }
        io::EmbeddingDoc doc{build_monotone(gd.g, lab), gd.names};
        write_output(io::serialize(io::Document{doc}), out_path, out);
        return 0;
    }
    if (method == "dh") {
        auto gd = load_graph(in_path);
        try {
            io::EmbeddingDoc doc{embed_distance_hereditary(gd.g), gd.names};
            write_output(io::serialize(io::Document{doc}), out_path, out);
        } catch (const NotDistanceHereditaryError& e) {
            err << "not distance-hereditary; stuck residual:";
            for (Vertex v : e.residual()) err << " " << gd.names[v];
            err << "\n";
            return 1;
        }
        return 0;
    }
    // 4leaf
    auto td = std::get<io::TreeDoc>(io::parse(io::DocKind::tree, read_file(in_path)));
    auto [g, emb] = embed_4leaf(td.t);
    std::vector<std::string> names;
    for (int leaf : td.t.sorted_leaves()) names.push_back(td.t.leaf_name(leaf));
    io::EmbeddingDoc doc{std::move(emb), std::move(names)};
    write_output(io::serialize(io::Document{doc}), out_path, out);
    return 0;
}

int cmd_check(const std::string& graph_path, const std::string& emb_path, std::ostream& out) {
    auto gd = load_graph(graph_path);
    auto ed = load_embedding(emb_path);
    if (gd.names != ed.names)
        throw ParseError("UNKNOWN_VERTEX", "embedding and graph name different vertex sets", 0);
    auto rep = validate_embedding_naive(gd.g, ed.e);
    if (rep.ok()) {
        out << "ok\n";
        return 0;
    }
    bool color = color_enabled(out);
    for (const auto& v : rep.violations) {
        if (color) out << "\033[31m";
        out << "violation: " << gd.names[v.u] << " " << gd.names[v.v] << " " << to_string(v.kind)
            << (v.adjacent ? " (adjacent)" : " (non-adjacent)");
        if (color) out << "\033[0m";
        out << "\n";
    }
    out << rep.violations.size() << " violation(s)\n";
    return 1;
}

int cmd_search(const std::string& graph_path, std::optional<long long> budget, int jobs,
               bool no_prune, std::ostream& out) {
    auto gd = load_graph(graph_path);
    SearchOptions opts;
    opts.budget = budget;
    opts.jobs = jobs;
    opts.prune = !no_prune;
    SearchResult res = find_nonjumping_labeling(gd.g, opts);
    switch (res.status) {
    case SearchResult::Status::found:
        out << labeling_text(*res.labeling, gd.names);
        return 0;
    case SearchResult::Status::exhausted:
        out << "exhausted: jumping graph\n";
        return 1;
    case SearchResult::Status::budget_exceeded:
        out << "budget exceeded after " << res.nodes_visited << " nodes\n";
        return 1;
    }
    return 2;
}

int cmd_render(const std::string& emb_path, const std::string& out_path, std::ostream& out) {
    auto ed = load_embedding(emb_path);
    write_output(io::render_svg(ed.e, ed.names), out_path, out);
    return 0;
}

int cmd_builtin(const std::string& which, std::ostream& out) {
    if (which != "jumping8") throw Error("bad-argument", "unknown builtin: " + which);
    io::GraphDoc doc{jumping8(), jumping8_names()};
    out << io::serialize(io::Document{doc});
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"L-embeddings and monotone L-embeddings of graphs"};
    app.require_subcommand(1);

    std::string family, in_path, out_path, lab_path, graph_path, emb_path, method, which;
    bool naive = false, no_prune = false;
    std::optional<long long> budget;
    long long budget_raw = -1;
    int jobs = 1;

    auto* label = app.add_subcommand("label", "labeling for a structured family instance");
    label->add_option("--family", family, "family")
        ->required()
        ->check(CLI::IsMember({"interval", "convex-bipartite", "outerplanar", "3leaf"}));
    label->add_option("input", in_path, "input file")->required();
    label->add_option("--out", out_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "check whether a labeling is non-jumping");
    verify->add_option("graph", graph_path)->required();
    verify->add_option("labeling", lab_path)->required();
    verify->add_flag("--naive", naive, "use the quadratic checker");

    auto* embed = app.add_subcommand("embed", "construct an L-embedding");
    embed->add_option("--method", method)
        ->required()
        ->check(CLI::IsMember({"monotone", "dh", "4leaf"}));
    embed->add_option("input", in_path)->required();
    embed->add_option("labeling", lab_path);
    embed->add_option("--out", out_path);

    auto* check = app.add_subcommand("check", "validate an embedding against a graph");
    check->add_option("graph", graph_path)->required();
    check->add_option("embedding", emb_path)->required();

    auto* search = app.add_subcommand("search", "exhaustive non-jumping labeling search");
    search->add_option("graph", graph_path)->required();
    search->add_option("--budget", budget_raw, "max partial nodes");
    search->add_option("--jobs", jobs, "parallel workers");
    search->add_flag("--no-prune", no_prune, "enumerate complete labelings only");

    auto* render = app.add_subcommand("render", "render an embedding as SVG");
    render->add_option("embedding", emb_path)->required();
    render->add_option("--out", out_path);

    auto* builtin = app.add_subcommand("builtin", "emit a built-in instance");
    builtin->add_option("name", which)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (label->parsed()) return cmd_label(family, in_path, out_path, out, err);
        if (verify->parsed()) return cmd_verify(graph_path, lab_path, naive, out);
        if (embed->parsed()) return cmd_embed(method, in_path, lab_path, out_path, out, err);
        if (check->parsed()) return cmd_check(graph_path, emb_path, out);
        if (search->parsed()) {
            if (budget_raw >= 0) budget = budget_raw;
            return cmd_search(graph_path, budget, jobs, no_prune, out);
        }
        if (render->parsed()) return cmd_render(emb_path, out_path, out);
        if (builtin->parsed()) return cmd_builtin(which, out);
    } catch (const ParseError& e) {
        err << "error [" << e.code() << "]";
        if (e.line() > 0) err << " line " << e.line();
        err << ": " << e.what() << "\n";
        return 2;
    } catch (const NotDistanceHereditaryError& e) {
        err << "error [" << e.code() << "]: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        if (e.code() == "not-outerplanar" || e.code() == "not-monotone") {
            err << "error [" << e.code() << "]: " << e.what() << "\n";
            return 1;
        }
        err << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace ell::cli
