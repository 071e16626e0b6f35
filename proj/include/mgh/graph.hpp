#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mgh {

// Directed link of one arc-color class. tail -> head.
struct Arc {
    int tail = 0;
    int head = 0;
    int color = 0;
    auto operator<=>(const Arc&) const = default;
};

// Undirected link of one edge-color class, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    int color = 0;
    auto operator<=>(const Edge&) const = default;
};

// An (m,n)-colored-mixed graph: m arc-color classes, n edge-color classes,
// at most one link (of any kind) per unordered vertex pair, no loops.
// The container itself does not enforce the invariants; validate_graph does.
struct MixedGraph {
    int num_vertices = 0;
    int num_arc_colors = 0;
    int num_edge_colors = 0;
    std::vector<Arc> arcs;
    std::vector<Edge> edges;
    std::map<int, std::string> labels;  // optional decoration only

    MixedGraph() = default;
    MixedGraph(int vertices, int arc_colors, int edge_colors)
        : num_vertices(vertices), num_arc_colors(arc_colors), num_edge_colors(edge_colors) {}

    void add_arc(int tail, int head, int color = 0) { arcs.push_back({tail, head, color}); }
    void add_edge(int u, int v, int color = 0) {
        if (u > v) std::swap(u, v);
        edges.push_back({u, v, color});
    }

    size_t num_links() const { return arcs.size() + edges.size(); }
    bool same_signature(const MixedGraph& other) const {
        return num_arc_colors == other.num_arc_colors && num_edge_colors == other.num_edge_colors;
    }

    // Canonical field equality (link order irrelevant).
    bool operator==(const MixedGraph& other) const;

    // -1 if no vertex carries the label.
    int vertex_by_label(const std::string& name) const;
    std::string display(int v) const;  // label if present, else decimal index
};

// One step of a walk/path shape: an arc of a given color traversed forward or
// backward, or an edge of a given color.
enum class StepKind { ArcForward, ArcBackward, Edge };

struct LinkStep {
    StepKind kind = StepKind::Edge;
    int color = 0;
    auto operator<=>(const LinkStep&) const = default;
};

using LinkPattern = std::vector<LinkStep>;

// Nonempty and all colors within g's signature.
bool pattern_matches(const MixedGraph& g, const LinkPattern& pattern);

LinkStep forward_arc(int color = 0);
LinkStep backward_arc(int color = 0);
LinkStep edge_step(int color = 0);
LinkStep reversed(const LinkStep& s);

// A total vertex map source -> target. Validity is checked by
// check_homomorphism (solver module).
struct Homomorphism {
    std::vector<int> mapping;
};

struct Violation {
    enum class Kind { Loop, DuplicatePair, VertexRange, ColorRange };
    Kind kind;
    std::string message;
    // Offending element, when one exists: index into arcs or edges.
    int arc_index = -1;
    int edge_index = -1;
};

// Empty iff all MixedGraph invariants hold.
std::vector<Violation> validate_graph(const MixedGraph& g);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// MG1 format. Throws ParseError on syntax or invariant violations.
MixedGraph parse_graph(const std::string& text);

// Canonical MG1 text; parse_graph(serialize_graph(g)) == g for valid g.
std::string serialize_graph(const MixedGraph& g);

// Adjacency of the underlying simple graph (colors and orientations dropped).
std::vector<std::vector<int>> underlying_adjacency(const MixedGraph& g);

}  // namespace mgh
