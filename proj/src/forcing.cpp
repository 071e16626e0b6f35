#include "mgh/forcing.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mgh/constructions.hpp"
#include "mgh/solver.hpp"
#include "mgh/targets.hpp"

namespace mgh {

namespace {

bool oriented_signature(const MixedGraph& g) {
    return g.num_arc_colors == 1 && g.num_edge_colors == 0;
}
bool two_ec_signature(const MixedGraph& g) {
    return g.num_arc_colors == 0 && g.num_edge_colors == 2;
}

ColorSet neighborhood_image(const MixedGraph& target, const LinkStep& step, const ColorSet& s) {
    return step_image(target, step, s);
}

// Vertices of s incident to an edge of the given color inside target[s].
ColorSet incident_within(const MixedGraph& target, int color, const ColorSet& s) {
    ColorSet out(target.num_vertices);
    for (const auto& e : target.edges)
        if (e.color == color && s.test(e.u) && s.test(e.v)) {
            out.set(e.u);
            out.set(e.v);
        }
    return out;
}

// Forced set at `output` of a gadget graph whose listed vertices are each
// constrained to s.
ColorSet forced_at(const MixedGraph& gadget_graph, const std::vector<int>& constrained,
                   const ColorSet& s, int output, const MixedGraph& target) {
    ConstraintSet cs;
    for (int v : constrained) cs.restrict(v, s);
    return forced_colors(gadget_graph, output, target, cs);
}

ColorSet apply_z(const MixedGraph& target, int girth_param, const ColorSet& s) {
    const int gp = next_congruent(std::max(girth_param, 3), 4, 6);
    MixedGraph circuit(gp, 1, 0);
    for (int i = 0; i < gp; ++i) circuit.add_arc(i, (i + 1) % gp, 0);
    std::vector<int> constrained;
    for (int i = 1; i < gp; ++i) constrained.push_back(i);  // v_2..v_{g'}
    return forced_at(circuit, constrained, s, 1, target);   // output w = v_2
}

ColorSet apply_x(const MixedGraph& target, int girth_param, const ColorSet& s) {
    const int gp = 2 * ((std::max(girth_param, 4) + 1) / 2);  // even, >= 4
    MixedGraph cycle(gp, 0, 2);
    for (int i = 0; i + 1 < gp; ++i) cycle.add_edge(i, i + 1, 0);
    cycle.add_edge(gp - 1, 0, 1);  // the one red edge, incident to the output
    std::vector<int> constrained(gp);
    for (int i = 0; i < gp; ++i) constrained[i] = i;
    return forced_at(cycle, constrained, s, 0, target);
}

ColorSet apply_y(const MixedGraph& target, int girth_param, const ColorSet& s) {
    const int reps = std::max(girth_param, 1);
    const int len = 8 * reps;
    MixedGraph gadget(len + 1, 0, 2);
    for (int i = 0; i < len; ++i) gadget.add_edge(i, (i + 1) % len, i % 2);  // alternating
    const int apex = len;
    gadget.add_edge(apex, 0, 0);
    gadget.add_edge(apex, 4 * reps + 2, 0);
    std::vector<int> constrained(len);
    for (int i = 0; i < len; ++i) constrained[i] = i;
    return forced_at(gadget, constrained, s, 0, target);
}

}  // namespace

std::string ForcingGadget::name() const {
    switch (kind) {
        case Kind::Out: return "out";
        case Kind::In: return "in";
        case Kind::Blue: return "blue";
        case Kind::Red: return "red";
        case Kind::DashedBlue: return "dashed_blue";
        case Kind::DashedRed: return "dashed_red";
        case Kind::Z: return "Z";
        case Kind::X: return "X";
        case Kind::Y: return "Y";
    }
    return "?";
}

ForcingGadget ForcingGadget::parse(const std::string& name, int girth_param) {
    static const std::map<std::string, Kind> kinds = {
        {"out", Kind::Out},           {"in", Kind::In},
        {"blue", Kind::Blue},         {"red", Kind::Red},
        {"dashed_blue", Kind::DashedBlue}, {"dashed_red", Kind::DashedRed},
        {"Z", Kind::Z},               {"X", Kind::X},
        {"Y", Kind::Y},
    };
    auto it = kinds.find(name);
    if (it == kinds.end()) throw std::invalid_argument("unknown gadget '" + name + "'");
    return {it->second, girth_param};
}

ColorSet apply_gadget(const MixedGraph& target, const ForcingGadget& gadget, const ColorSet& s) {
    if (s.empty()) throw std::invalid_argument("gadget applied to an empty set");
    if (s.universe() != target.num_vertices)
        throw std::invalid_argument("set universe does not match target");
    using K = ForcingGadget::Kind;
    switch (gadget.kind) {
        case K::Out:
        case K::In:
            if (!oriented_signature(target))
                throw std::invalid_argument("out/in gadgets need an oriented target");
            return neighborhood_image(
                target, gadget.kind == K::Out ? forward_arc(0) : backward_arc(0), s);
        case K::Blue:
        case K::Red:
            if (!two_ec_signature(target))
                throw std::invalid_argument("blue/red gadgets need a 2-edge-colored target");
            return neighborhood_image(target, edge_step(gadget.kind == K::Blue ? 0 : 1), s);
        case K::DashedBlue:
        case K::DashedRed:
            if (!two_ec_signature(target))
                throw std::invalid_argument("dashed gadgets need a 2-edge-colored target");
            return incident_within(target, gadget.kind == K::DashedBlue ? 0 : 1, s);
        case K::Z:
            if (!oriented_signature(target))
                throw std::invalid_argument("the Z gadget needs an oriented target");
            return apply_z(target, gadget.girth_param, s);
        case K::X:
            if (!two_ec_signature(target))
                throw std::invalid_argument("the X gadget needs a 2-edge-colored target");
            return apply_x(target, gadget.girth_param, s);
        case K::Y:
            if (!two_ec_signature(target))
                throw std::invalid_argument("the Y gadget needs a 2-edge-colored target");
            return apply_y(target, gadget.girth_param, s);
    }
    throw std::logic_error("unreachable");
}

MixedGraph core_of(const MixedGraph& g) {
    if (g.num_vertices > 8) throw std::invalid_argument("core computation limited to 8 vertices");
    if (g.num_vertices == 0) return g;

    const int n = g.num_vertices;
    // subsets by ascending size, lexicographic within a size
    for (int size = 1; size <= n; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            // induced subgraph on idx
            std::vector<int> local(n, -1);
            for (int i = 0; i < size; ++i) local[idx[i]] = i;
            MixedGraph sub(size, g.num_arc_colors, g.num_edge_colors);
            for (const auto& a : g.arcs)
                if (local[a.tail] >= 0 && local[a.head] >= 0)
                    sub.add_arc(local[a.tail], local[a.head], a.color);
            for (const auto& e : g.edges)
                if (local[e.u] >= 0 && local[e.v] >= 0)
                    sub.add_edge(local[e.u], local[e.v], e.color);
            for (int i = 0; i < size; ++i) {
                auto it = g.labels.find(idx[i]);
                if (it != g.labels.end()) sub.labels[i] = it->second;
            }
            if (find_homomorphism(g, sub).found()) return sub;
            // next combination
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return g;  // unreachable: the full subset always admits the identity
}

bool is_good_set(const MixedGraph& target, const ColorSet& s) {
    if (s.empty()) return false;
    auto verts = s.to_vector();
    std::vector<int> local(target.num_vertices, -1);
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    MixedGraph sub(static_cast<int>(verts.size()), target.num_arc_colors, target.num_edge_colors);
    for (const auto& e : target.edges)
        if (local[e.u] >= 0 && local[e.v] >= 0) sub.add_edge(local[e.u], local[e.v], e.color);
    for (const auto& a : target.arcs)
        if (local[a.tail] >= 0 && local[a.head] >= 0)
            sub.add_arc(local[a.tail], local[a.head], a.color);
    MixedGraph core = core_of(sub);
    MixedGraph t4 = builtin_target("t4_2ec");
    t4.labels.clear();
    core.labels.clear();
    return graphs_isomorphic(core, t4);
}

ReachabilityReport forcing_reachability(const MixedGraph& target,
                                        const std::vector<ColorSet>& start_sets, ForcingGoal goal,
                                        const std::vector<ForcingGadget>& menu) {
    if (start_sets.empty()) throw std::invalid_argument("no start sets");
    auto satisfies = [&](const ColorSet& s) {
        if (goal == ForcingGoal::EqualsAbcd)
            return s == ColorSet(target.num_vertices, {0, 1, 2, 3});
        return is_good_set(target, s);
    };

    // Gadget applications are pure; memoize across starts.
    std::map<std::pair<std::string, ColorSet>, ColorSet> cache;
    auto apply = [&](const ForcingGadget& gg, const ColorSet& s) {
        auto key = std::make_pair(gg.name(), s);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        ColorSet r = apply_gadget(target, gg, s);
        cache.emplace(key, r);
        return r;
    };

    ReachabilityReport rep;
    for (const auto& start : start_sets) {
        ReachabilityOutcome oc;
        oc.start = start;
        if (start.empty()) {
            rep.outcomes.push_back(oc);
            continue;
        }
        std::map<ColorSet, std::pair<ColorSet, std::string>> parent;  // state -> (prev, gadget)
        std::vector<ColorSet> frontier{start};
        parent.emplace(start, std::make_pair(ColorSet(), std::string()));
        std::optional<ColorSet> hit;
        if (satisfies(start)) hit = start;
        while (!hit && !frontier.empty()) {
            std::vector<ColorSet> next;
            for (const auto& state : frontier) {
                for (const auto& gg : menu) {
                    ColorSet r = apply(gg, state);
                    if (r.empty() || parent.count(r)) continue;
                    parent.emplace(r, std::make_pair(state, gg.name()));
                    if (satisfies(r)) {
                        hit = r;
                        break;
                    }
                    next.push_back(r);
                }
                if (hit) break;
            }
            frontier = std::move(next);
        }
        if (hit) {
            oc.reached = true;
            // walk parents back to the start
            std::vector<ReachabilityStep> rev;
            ColorSet cur = *hit;
            while (!(cur == start)) {
                auto& [prev, gname] = parent.at(cur);
                rev.push_back({gname, cur});
                cur = prev;
            }
            oc.witness.assign(rev.rbegin(), rev.rend());
        }
        rep.outcomes.push_back(oc);
    }
    return rep;
}

}  // namespace mgh
