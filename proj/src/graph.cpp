#include "mgh/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mgh {

namespace {

std::vector<Arc> sorted_arcs(const MixedGraph& g) {
    auto a = g.arcs;
    std::sort(a.begin(), a.end());
    return a;
}

std::vector<Edge> sorted_edges(const MixedGraph& g) {
    auto e = g.edges;
    std::sort(e.begin(), e.end());
    return e;
}

}  // namespace

bool MixedGraph::operator==(const MixedGraph& other) const {
    return num_vertices == other.num_vertices && num_arc_colors == other.num_arc_colors &&
           num_edge_colors == other.num_edge_colors && sorted_arcs(*this) == sorted_arcs(other) &&
           sorted_edges(*this) == sorted_edges(other) && labels == other.labels;
}

int MixedGraph::vertex_by_label(const std::string& name) const {
    for (const auto& [idx, lab] : labels)
        if (lab == name) return idx;
    return -1;
}

std::string MixedGraph::display(int v) const {
    auto it = labels.find(v);
    return it != labels.end() ? it->second : std::to_string(v);
}

bool pattern_matches(const MixedGraph& g, const LinkPattern& pattern) {
    if (pattern.empty()) return false;
    for (const auto& s : pattern) {
        if (s.kind == StepKind::Edge) {
            if (s.color < 0 || s.color >= g.num_edge_colors) return false;
        } else {
            if (s.color < 0 || s.color >= g.num_arc_colors) return false;
        }
    }
    return true;
}

LinkStep forward_arc(int color) { return {StepKind::ArcForward, color}; }
LinkStep backward_arc(int color) { return {StepKind::ArcBackward, color}; }
LinkStep edge_step(int color) { return {StepKind::Edge, color}; }

LinkStep reversed(const LinkStep& s) {
    switch (s.kind) {
        case StepKind::ArcForward: return {StepKind::ArcBackward, s.color};
        case StepKind::ArcBackward: return {StepKind::ArcForward, s.color};
        default: return s;
    }
}

std::vector<Violation> validate_graph(const MixedGraph& g) {
    std::vector<Violation> out;
    std::set<std::pair<int, int>> seen;

    auto in_range = [&](int v) { return v >= 0 && v < g.num_vertices; };
    auto pair_check = [&](int a, int b, const std::string& what, int ai, int ei) {
        if (a == b) {
            out.push_back({Violation::Kind::Loop, what + " is a loop", ai, ei});
            return;
        }
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            out.push_back({Violation::Kind::DuplicatePair,
                           "more than one link on pair {" + g.display(key.first) + "," +
                               g.display(key.second) + "}",
                           ai, ei});
    };

    for (size_t i = 0; i < g.arcs.size(); ++i) {
        const auto& a = g.arcs[i];
        const int ai = static_cast<int>(i);
        std::string what = "arc " + std::to_string(a.tail) + "->" + std::to_string(a.head);
        if (!in_range(a.tail) || !in_range(a.head)) {
            out.push_back({Violation::Kind::VertexRange, what + " has a vertex outside 0.." +
                                                             std::to_string(g.num_vertices - 1),
                           ai, -1});
            continue;
        }
        if (a.color < 0 || a.color >= g.num_arc_colors)
            out.push_back({Violation::Kind::ColorRange,
                           what + " has arc color " + std::to_string(a.color) + " outside 0.." +
                               std::to_string(g.num_arc_colors - 1),
                           ai, -1});
        pair_check(a.tail, a.head, what, ai, -1);
    }
    for (size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        const int ei = static_cast<int>(i);
        std::string what = "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
        if (!in_range(e.u) || !in_range(e.v)) {
            out.push_back({Violation::Kind::VertexRange, what + " has a vertex outside 0.." +
                                                             std::to_string(g.num_vertices - 1),
                           -1, ei});
            continue;
        }
        if (e.color < 0 || e.color >= g.num_edge_colors)
            out.push_back({Violation::Kind::ColorRange,
                           what + " has edge color " + std::to_string(e.color) + " outside 0.." +
                               std::to_string(g.num_edge_colors - 1),
                           -1, ei});
        pair_check(e.u, e.v, what, -1, ei);
    }
    for (const auto& [idx, lab] : g.labels) {
        if (!in_range(idx))
            out.push_back({Violation::Kind::VertexRange,
                           "label '" + lab + "' on vertex " + std::to_string(idx) +
                               " outside range"});
    }
    return out;
}

MixedGraph parse_graph(const std::string& text) {
    MixedGraph g;
    bool have_header = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<int> arc_lines, edge_lines;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag.empty()) continue;
        if (tag == "c") continue;
        auto want_int = [&](const char* what) {
            long long x;
            if (!(ls >> x)) throw ParseError(lineno, std::string("expected ") + what);
            return static_cast<int>(x);
        };
        auto want_end = [&] {
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "unexpected token '" + extra + "'");
        };
        if (!have_header) {
            if (tag != "p") throw ParseError(lineno, "expected header 'p mg <n> <m> <k>'");
            std::string fmt;
            if (!(ls >> fmt) || fmt != "mg") throw ParseError(lineno, "unknown format, want 'mg'");
            g.num_vertices = want_int("vertex count");
            g.num_arc_colors = want_int("arc color count");
            g.num_edge_colors = want_int("edge color count");
            want_end();
            if (g.num_vertices < 0 || g.num_arc_colors < 0 || g.num_edge_colors < 0)
                throw ParseError(lineno, "negative count in header");
            have_header = true;
            continue;
        }
        if (tag == "p") throw ParseError(lineno, "duplicate header");
        if (tag == "v") {
            int idx = want_int("vertex index");
            std::string name;
            if (!(ls >> name)) throw ParseError(lineno, "expected label");
            want_end();
            if (g.labels.count(idx)) throw ParseError(lineno, "duplicate label for vertex");
            g.labels[idx] = name;
        } else if (tag == "a") {
            int t = want_int("tail"), h = want_int("head"), c = want_int("color");
            want_end();
            g.add_arc(t, h, c);
            arc_lines.push_back(lineno);
        } else if (tag == "e") {
            int u = want_int("endpoint"), v = want_int("endpoint"), c = want_int("color");
            want_end();
            g.add_edge(u, v, c);
            edge_lines.push_back(lineno);
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) throw ParseError(lineno, "missing header");

    // Semantic checks go through the one authority.
    auto violations = validate_graph(g);
    if (!violations.empty()) {
        const auto& v = violations.front();
        int at = lineno;
        if (v.arc_index >= 0 && v.arc_index < static_cast<int>(arc_lines.size()))
            at = arc_lines[v.arc_index];
        else if (v.edge_index >= 0 && v.edge_index < static_cast<int>(edge_lines.size()))
            at = edge_lines[v.edge_index];
        throw ParseError(at, v.message);
    }
    return g;
}

std::string serialize_graph(const MixedGraph& g) {
    std::ostringstream out;
    out << "p mg " << g.num_vertices << ' ' << g.num_arc_colors << ' ' << g.num_edge_colors
        << '\n';
    for (const auto& [idx, lab] : g.labels) out << "v " << idx << ' ' << lab << '\n';
    for (const auto& a : sorted_arcs(g))
        out << "a " << a.tail << ' ' << a.head << ' ' << a.color << '\n';
    for (const auto& e : sorted_edges(g)) out << "e " << e.u << ' ' << e.v << ' ' << e.color << '\n';
    return out.str();
}

std::vector<std::vector<int>> underlying_adjacency(const MixedGraph& g) {
    std::vector<std::vector<int>> adj(g.num_vertices);
    for (const auto& a : g.arcs) {
        adj[a.tail].push_back(a.head);
        adj[a.head].push_back(a.tail);
    }
    for (const auto& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

}  // namespace mgh
