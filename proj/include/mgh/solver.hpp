#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mgh/colorset.hpp"
#include "mgh/graph.hpp"

namespace mgh {

// Unary domain restrictions on source vertices.
struct ConstraintSet {
    std::map<int, ColorSet> domains;

    ConstraintSet() = default;
    void restrict(int vertex, ColorSet allowed) { domains.emplace(vertex, std::move(allowed)); }
    bool empty() const { return domains.empty(); }
};

enum class SearchStatus { Found, None, Unknown };

struct SearchOutcome {
    SearchStatus status = SearchStatus::None;
    Homomorphism witness;   // valid iff status == Found
    uint64_t nodes = 0;     // backtracking nodes explored
    bool found() const { return status == SearchStatus::Found; }
    bool none() const { return status == SearchStatus::None; }
};

struct SolveOptions {
    // Wall-clock budget; the search reports Unknown when exceeded.
    std::optional<std::chrono::steady_clock::duration> budget;
};

// Deterministic exhaustive backtracking with arc-consistency propagation.
// Variable order: smallest current domain, lowest index first. Values ascend.
// Connected components of the source are solved independently.
SearchOutcome find_homomorphism(const MixedGraph& source, const MixedGraph& target,
                                const ConstraintSet& constraints = {},
                                const SolveOptions& options = {});

// Exact number of valid total mappings (equals brute-force enumeration).
uint64_t count_homomorphisms(const MixedGraph& source, const MixedGraph& target,
                             const ConstraintSet& constraints = {});

// {x : some valid homomorphism maps v to x}; empty iff unsatisfiable.
ColorSet forced_colors(const MixedGraph& source, int v, const MixedGraph& target,
                       const ConstraintSet& constraints = {});

// True iff a walk realizing the pattern step by step joins `from` to `to`.
bool exists_walk(const MixedGraph& target, const LinkPattern& pattern, int from, int to);

// C_1 = start; C_{i+1} = image of C_i across step i. Returns C_1..C_{L+1}.
std::vector<ColorSet> transfer_sequence(const MixedGraph& target, const LinkPattern& pattern,
                                        const ColorSet& start);

// Image of a set across one step (successors / predecessors / neighbors).
ColorSet step_image(const MixedGraph& target, const LinkStep& step, const ColorSet& from);

// Validity of a total mapping, checked link by link.
bool check_homomorphism(const MixedGraph& source, const MixedGraph& target,
                        const Homomorphism& h);

// Composition g: A->B, f: B->C to A->C.
Homomorphism compose(const Homomorphism& first, const Homomorphism& second);

}  // namespace mgh
