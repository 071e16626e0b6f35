#pragma once

#include <string>
#include <vector>

#include "mgh/colorset.hpp"
#include "mgh/graph.hpp"

namespace mgh {

// Colors attainable at the far endpoint of a path realizing `pattern`, over
// all valid colorings of the internal vertices, when the near endpoint is
// colored start_color. Equals the last element of transfer_sequence.
ColorSet path_allowed_set(const MixedGraph& target, const LinkPattern& pattern, int start_color);

enum class PathKind { Oriented, TwoEdgeColored };

// One row of the forbidden-set profile: sweep all start colors and all
// link-choice patterns of a path with `internal_length` internal vertices.
struct PathProfileRow {
    int internal_length = 0;
    int min_allowed = 0;
    int max_forbidden_size = 0;
    std::vector<ColorSet> maximal_forbidden;  // all distinct sets of max size
};

PathProfileRow path_profile(const MixedGraph& target, int internal_length, PathKind kind);

// True iff for every ordered endpoint color pair and every pattern of
// internal_count+1 links, the internal vertices admit a valid coloring.
bool verify_path_extension(const MixedGraph& target, int internal_count);

struct BranchCase {
    int l1, l2, l3;  // internal 2-vertex counts per branch, l1 >= l2 >= l3 >= 0
};

// True iff for every case, every adversarial choice of the three outer
// endpoint colors, and every pattern on each branch, the three allowed sets
// at the center vertex intersect.
bool verify_branch_cases(const MixedGraph& target, const std::vector<BranchCase>& cases);

// All patterns of `length` links for the kind (orientations of one arc color,
// or blue/red choices), in lexicographic order.
std::vector<LinkPattern> sweep_patterns(PathKind kind, int length);

PathKind kind_for(const MixedGraph& target);

}  // namespace mgh
