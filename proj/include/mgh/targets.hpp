#pragma once

#include <string>
#include <variant>
#include <vector>

#include "mgh/colorset.hpp"
#include "mgh/graph.hpp"

namespace mgh {

// ---- fact sheet vocabulary -------------------------------------------------
// Every fact is decidable by exhaustive check on a graph with at most 6
// vertices. The sheet is the executable cross-check that the compiled-in
// targets match every structural statement made about them, and it drives the
// reconstruction oracle.

enum class LinkSide { ArcOut, ArcIn, Edge };

// Neighborhood of `vertex` along one relation equals (or contains) `expected`.
struct NeighborhoodFact {
    LinkSide side;
    int color;
    int vertex;
    std::vector<int> expected;
    bool exact = true;  // false: containment only
};

struct ArcAbsenceFact {
    int tail, head, color;
};

// No walk realizing `pattern` from `from` to `to`.
struct WalkAbsenceFact {
    LinkPattern pattern;
    int from, to;
};

// No walk realizing `pattern` from any vertex of `from` to any vertex of `to`.
struct PathShapeAbsenceFact {
    LinkPattern pattern;
    std::vector<int> from, to;
};

// Over all start vertices and all patterns of a path with `internal_length`
// internal vertices (one orientation or edge-color choice per link), the
// largest forbidden endpoint set has exactly `max_forbidden_size` vertices and
// the sets of that size are exactly `maximal_sets`. Forbidden = complement of
// attainable. This states which path shapes cannot exclude more.
struct ForbiddenProfileFact {
    int internal_length;
    int max_forbidden_size;
    std::vector<std::vector<int>> maximal_sets;
};

// Induced subgraph on `vertices` equals `pattern` with vertex i of the
// pattern standing for vertices[i].
struct InducedEqualityFact {
    std::vector<int> vertices;
    MixedGraph pattern;
};

// All cycles on exactly `scope` (as a vertex set) of length scope.size()
// satisfying the mode are exactly `expected_cycles` (each a vertex sequence;
// compared as edge sets).
struct CycleEnumerationFact {
    enum class Mode { ExactlyOneRed, Alternating };
    Mode mode;
    std::vector<int> scope;
    std::vector<std::vector<int>> expected_cycles;
};

// Edge color class: connected spanning subgraph. Arc color class: for every
// ordered vertex pair, alternating walks (forward first) of both parities
// exist, length bounded by 2|V|^2.
struct SpanningConnectivityFact {
    bool arc_class;
    int color;
};

// The `edge_color` class contains an odd cycle, and every odd cycle of the
// class passes through `vertex` (the class minus the vertex is bipartite).
struct OddCycleForcingFact {
    int edge_color;
    int vertex;
};

using Fact = std::variant<NeighborhoodFact, ArcAbsenceFact, WalkAbsenceFact, PathShapeAbsenceFact,
                          ForbiddenProfileFact, InducedEqualityFact, CycleEnumerationFact,
                          SpanningConnectivityFact, OddCycleForcingFact>;

struct NamedFact {
    std::string description;
    Fact fact;
};

struct TargetFactSheet {
    std::string target_name;
    std::vector<NamedFact> facts;
};

struct FactResult {
    std::string description;
    bool pass;
    std::string detail;  // nonempty on failure
};

struct FactReport {
    std::string target_name;
    std::vector<FactResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

// ---- builtin targets ---------------------------------------------------------

// Names: t5, t6, t4_oriented, t4_2ec.
MixedGraph builtin_target(const std::string& name);
bool is_builtin_target(const std::string& name);
std::vector<std::string> builtin_target_names();

TargetFactSheet fact_sheet(const std::string& name);

FactReport verify_target_facts(const std::string& name);
FactReport evaluate_facts(const MixedGraph& g, const TargetFactSheet& sheet);

// ---- reconstruction oracle ---------------------------------------------------

struct Signature {
    int num_vertices;
    int arc_colors;
    int edge_colors;
};

// Exhaustively enumerates every labeled graph of the signature (at most one
// link per pair), filters by the fact sheet plus the planar edge bound
// (3n-6 for n >= 3), and returns one representative per isomorphism class,
// ordered by canonical serialization.
std::vector<MixedGraph> reconstruct_candidates(const TargetFactSheet& sheet, Signature sig);

// Brute-force color-and-orientation-preserving isomorphism (small graphs).
bool graphs_isomorphic(const MixedGraph& a, const MixedGraph& b);

}  // namespace mgh
