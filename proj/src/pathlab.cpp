#include "mgh/pathlab.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mgh/solver.hpp"

namespace mgh {

PathKind kind_for(const MixedGraph& target) {
    if (target.num_arc_colors == 1 && target.num_edge_colors == 0) return PathKind::Oriented;
    if (target.num_arc_colors == 0 && target.num_edge_colors == 2)
        return PathKind::TwoEdgeColored;
    throw std::invalid_argument("path sweeps expect an oriented or 2-edge-colored target");
}

std::vector<LinkPattern> sweep_patterns(PathKind kind, int length) {
    std::vector<LinkPattern> out;
    LinkPattern cur(length, kind == PathKind::Oriented ? forward_arc(0) : edge_step(0));
    std::vector<int> choice(length, 0);
    for (;;) {
        for (int i = 0; i < length; ++i) {
            if (kind == PathKind::Oriented)
                cur[i] = choice[i] ? backward_arc(0) : forward_arc(0);
            else
                cur[i] = edge_step(choice[i]);
        }
        out.push_back(cur);
        int i = 0;
        while (i < length && ++choice[i] == 2) choice[i++] = 0;
        if (i >= length) break;
    }
    return out;
}

ColorSet path_allowed_set(const MixedGraph& target, const LinkPattern& pattern, int start_color) {
    if (start_color < 0 || start_color >= target.num_vertices)
        throw std::invalid_argument("start color out of range");
    ColorSet start(target.num_vertices);
    start.set(start_color);
    return transfer_sequence(target, pattern, start).back();
}

PathProfileRow path_profile(const MixedGraph& target, int internal_length, PathKind kind) {
    if (internal_length < 0) throw std::invalid_argument("negative internal length");
    if (kind_for(target) != kind) throw std::invalid_argument("kind does not match target");
    PathProfileRow row;
    row.internal_length = internal_length;
    const int nt = target.num_vertices;
    int min_allowed = nt + 1;
    std::set<ColorSet> maximal;
    for (const auto& pattern : sweep_patterns(kind, internal_length + 1)) {
        for (int start = 0; start < nt; ++start) {
            ColorSet allowed = path_allowed_set(target, pattern, start);
            int a = allowed.count();
            if (a < min_allowed) {
                min_allowed = a;
                maximal.clear();
            }
            if (a == min_allowed) maximal.insert(allowed.complement());
        }
    }
    row.min_allowed = min_allowed;
    row.max_forbidden_size = nt - min_allowed;
    row.maximal_forbidden.assign(maximal.begin(), maximal.end());
    return row;
}

bool verify_path_extension(const MixedGraph& target, int internal_count) {
    if (internal_count < 0) throw std::invalid_argument("negative internal count");
    const int nt = target.num_vertices;
    PathKind kind = kind_for(target);
    for (const auto& pattern : sweep_patterns(kind, internal_count + 1)) {
        for (int s = 0; s < nt; ++s) {
            ColorSet allowed = path_allowed_set(target, pattern, s);
            if (allowed.count() != nt) return false;  // some ordered pair not joinable
        }
    }
    return true;
}

bool verify_branch_cases(const MixedGraph& target, const std::vector<BranchCase>& cases) {
    if (cases.empty()) throw std::invalid_argument("no branch cases given");
    PathKind kind = kind_for(target);
    const int nt = target.num_vertices;

    // Distinct allowed sets reachable at the center across one branch of a
    // given internal length, over every start color and pattern.
    auto family = [&](int l) {
        std::set<ColorSet> fam;
        for (const auto& pattern : sweep_patterns(kind, l + 1))
            for (int s = 0; s < nt; ++s) fam.insert(path_allowed_set(target, pattern, s));
        return std::vector<ColorSet>(fam.begin(), fam.end());
    };

    for (const auto& bc : cases) {
        if (!(bc.l1 >= bc.l2 && bc.l2 >= bc.l3 && bc.l3 >= 0))
            throw std::invalid_argument("branch case lengths must be ordered l1 >= l2 >= l3 >= 0");
        auto f1 = family(bc.l1), f2 = family(bc.l2), f3 = family(bc.l3);
        for (const auto& a : f1)
            for (const auto& b : f2) {
                ColorSet ab = a & b;
                if (ab.empty()) return false;
                for (const auto& c : f3)
                    if ((ab & c).empty()) return false;
            }
    }
    return true;
}

}  // namespace mgh
