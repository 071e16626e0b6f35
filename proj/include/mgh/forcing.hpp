#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgh/colorset.hpp"
#include "mgh/graph.hpp"

namespace mgh {

// The gadget calculus on forced sets: if S can be forced on a vertex of some
// graph, each gadget forces its output set on a new vertex. Attached copies
// of the forcing graph are modeled as unary constraints, so gadget graphs
// stay tiny.
struct ForcingGadget {
    enum class Kind { Out, In, Blue, Red, DashedBlue, DashedRed, Z, X, Y };
    Kind kind;
    int girth_param = 0;  // 0 = smallest legal value (Z, X, Y only)

    std::string name() const;
    static ForcingGadget parse(const std::string& name, int girth_param = 0);
};

// Forced set at the gadget's output vertex, given that s is forced on every
// attachment vertex. Out/In need an oriented target; the others need a
// 2-edge-colored target. Throws on empty s or signature mismatch.
ColorSet apply_gadget(const MixedGraph& target, const ForcingGadget& gadget, const ColorSet& s);

// Minimum-vertex induced subgraph R with a homomorphism g -> R; unique up to
// isomorphism. Brute-force scale: |V| <= 8.
MixedGraph core_of(const MixedGraph& g);

// Core of target[s] isomorphic to the 2-edge-colored 4-clique whose color
// classes are paths (builtin t4_2ec).
bool is_good_set(const MixedGraph& target, const ColorSet& s);

enum class ForcingGoal { EqualsAbcd, GoodSet };

struct ReachabilityStep {
    std::string gadget;
    ColorSet result;
};

struct ReachabilityOutcome {
    ColorSet start;
    bool reached = false;
    std::vector<ReachabilityStep> witness;  // gadget sequence from start
};

struct ReachabilityReport {
    std::vector<ReachabilityOutcome> outcomes;
    bool all_reached() const {
        for (const auto& o : outcomes)
            if (!o.reached) return false;
        return true;
    }
};

// Breadth-first closure of the start sets under the gadget menu; per start,
// whether a goal-satisfying set is reachable plus one witness sequence.
ReachabilityReport forcing_reachability(const MixedGraph& target,
                                        const std::vector<ColorSet>& start_sets, ForcingGoal goal,
                                        const std::vector<ForcingGadget>& menu);

}  // namespace mgh
