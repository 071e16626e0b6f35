#include "mgh/solver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mgh {

std::string ColorSet::to_string(const MixedGraph* names) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < universe_; ++i) {
        if (!test(i)) continue;
        if (!first) out += ",";
        out += names ? names->display(i) : std::to_string(i);
        first = false;
    }
    return out + "}";
}

namespace {

// Per-target adjacency tables, one row of bitmask words per (relation, vertex).
// Tables: out_c (arc color c, successors), in_c (predecessors), nbr_j (edges).
struct TargetTables {
    int n = 0;
    int words = 1;
    int arc_colors = 0;
    int edge_colors = 0;
    std::vector<uint64_t> rows;

    int table_out(int c) const { return c; }
    int table_in(int c) const { return arc_colors + c; }
    int table_edge(int j) const { return 2 * arc_colors + j; }
    int num_tables() const { return 2 * arc_colors + edge_colors; }

    const uint64_t* row(int table, int v) const {
        return rows.data() + (static_cast<size_t>(table) * n + v) * words;
    }
    uint64_t* row_mut(int table, int v) {
        return rows.data() + (static_cast<size_t>(table) * n + v) * words;
    }

    // dst = union of rows over the set bits of src. dst sized `words`.
    void image(int table, const uint64_t* src, uint64_t* dst) const {
        std::fill(dst, dst + words, 0);
        for (int w = 0; w < words; ++w) {
            uint64_t bits = src[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                const uint64_t* r = row(table, w * 64 + b);
                for (int k = 0; k < words; ++k) dst[k] |= r[k];
            }
        }
    }

    int step_table(const LinkStep& s) const {
        switch (s.kind) {
            case StepKind::ArcForward: return table_out(s.color);
            case StepKind::ArcBackward: return table_in(s.color);
            default: return table_edge(s.color);
        }
    }
};

TargetTables build_tables(const MixedGraph& t) {
    TargetTables tt;
    tt.n = t.num_vertices;
    tt.words = std::max(1, (t.num_vertices + 63) / 64);
    tt.arc_colors = t.num_arc_colors;
    tt.edge_colors = t.num_edge_colors;
    tt.rows.assign(static_cast<size_t>(tt.num_tables()) * std::max(tt.n, 1) * tt.words, 0);
    auto set_bit = [&](int table, int v, int bit) {
        tt.row_mut(table, v)[bit >> 6] |= uint64_t{1} << (bit & 63);
    };
    for (const auto& a : t.arcs) {
        set_bit(tt.table_out(a.color), a.tail, a.head);
        set_bit(tt.table_in(a.color), a.head, a.tail);
    }
    for (const auto& e : t.edges) {
        set_bit(tt.table_edge(e.color), e.u, e.v);
        set_bit(tt.table_edge(e.color), e.v, e.u);
    }
    return tt;
}

// One constraint as seen from one side: my value's row (in `table`) must
// intersect the other vertex's domain.
struct SideLink {
    int other;
    int table;
};

struct Csp {
    const TargetTables& tt;
    int nv;  // source vertices in this component, renumbered 0..nv-1
    int words;
    std::vector<std::vector<SideLink>> links;
    std::vector<uint64_t> domains;           // nv * words
    std::vector<std::vector<uint64_t>> snaps;  // per-depth snapshots
    uint64_t nodes = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    bool out_of_time = false;

    Csp(const TargetTables& tables, int vertex_count)
        : tt(tables), nv(vertex_count), words(tables.words) {
        links.resize(nv);
        domains.assign(static_cast<size_t>(nv) * words, 0);
    }

    uint64_t* dom(int v) { return domains.data() + static_cast<size_t>(v) * words; }
    const uint64_t* dom(int v) const { return domains.data() + static_cast<size_t>(v) * words; }

    int dom_count(int v) const {
        int c = 0;
        for (int w = 0; w < words; ++w) c += __builtin_popcountll(dom(v)[w]);
        return c;
    }

    bool dom_empty(int v) const {
        for (int w = 0; w < words; ++w)
            if (dom(v)[w]) return false;
        return true;
    }

    // Remove values of `me` with no support in `other` along `table`.
    // Returns true if the domain changed.
    bool revise(int me, int table, int other) {
        bool changed = false;
        uint64_t* d = dom(me);
        const uint64_t* od = dom(other);
        for (int w = 0; w < words; ++w) {
            uint64_t bits = d[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                const uint64_t* r = tt.row(table, w * 64 + b);
                bool supported = false;
                for (int k = 0; k < words; ++k)
                    if (r[k] & od[k]) { supported = true; break; }
                if (!supported) {
                    d[w] &= ~(uint64_t{1} << b);
                    changed = true;
                }
            }
        }
        return changed;
    }

    // AC-3 over the component, seeded with `seed` (vertices whose domains
    // changed). Returns false on a wiped-out domain.
    bool propagate(std::vector<int>& seed) {
        std::vector<char> queued(nv, 0);
        std::vector<int> queue = seed;
        for (int v : queue) queued[v] = 1;
        size_t qi = 0;
        while (qi < queue.size()) {
            int v = queue[qi++];
            queued[v] = 0;
            for (const auto& l : links[v]) {
                // v's domain changed; the neighbor may have lost support.
                if (revise(l.other, side_table(l.other, v), v)) {
                    if (dom_empty(l.other)) return false;
                    if (!queued[l.other]) {
                        queued[l.other] = 1;
                        queue.push_back(l.other);
                    }
                }
            }
        }
        return true;
    }

    // The table the neighbor uses when revising itself against v.
    int side_table(int neighbor, int v) const {
        for (const auto& l : links[neighbor])
            if (l.other == v) return l.table;
        return -1;  // unreachable for well-formed links
    }

    bool time_up() {
        if (!deadline) return false;
        if ((nodes & 1023) == 0 && std::chrono::steady_clock::now() > *deadline) {
            out_of_time = true;
        }
        return out_of_time;
    }

    int pick_branch_vertex(const std::vector<int>& active) const {
        int best = -1, best_size = INT32_MAX;
        for (int v : active) {
            int c = dom_count(v);
            if (c >= 2 && c < best_size) {
                best_size = c;
                best = v;
            }
        }
        return best;
    }

    // Connected components of the still-unassigned vertices within `active`,
    // using only links whose two ends are both unassigned. Independent
    // components are solved independently: values chosen in one cannot
    // influence another, so a refuted component fails the whole node at once.
    std::vector<std::vector<int>> split_unassigned(const std::vector<int>& active) const {
        std::vector<int> mark(nv, 0);  // 1 = unassigned member of active
        std::vector<int> comp(nv, -1);
        for (int v : active)
            if (dom_count(v) >= 2) mark[v] = 1;
        std::vector<std::vector<int>> out;
        for (int v : active) {
            if (!mark[v] || comp[v] >= 0) continue;
            out.emplace_back();
            std::vector<int> stack{v};
            comp[v] = static_cast<int>(out.size()) - 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                out.back().push_back(x);
                for (const auto& l : links[x])
                    if (mark[l.other] && comp[l.other] < 0) {
                        comp[l.other] = comp[x];
                        stack.push_back(l.other);
                    }
            }
            std::sort(out.back().begin(), out.back().end());
        }
        return out;
    }

    uint64_t* snapshot(int depth) {
        if (snaps.size() <= static_cast<size_t>(depth)) snaps.resize(depth + 1);
        snaps[depth] = domains;
        return snaps[depth].data();
    }

    void restore(int depth) { domains = snaps[depth]; }

    // Find one solution among `active`. Status via return + out_of_time.
    bool search_one(int depth, const std::vector<int>& active) {
        ++nodes;
        if (time_up()) return false;
        auto comps = split_unassigned(active);
        if (comps.empty()) return true;  // all singletons, AC-consistent
        if (comps.size() > 1) {
            for (const auto& comp : comps)
                if (!search_one(depth, comp)) return false;
            return true;
        }
        const auto& comp = comps.front();
        int v = pick_branch_vertex(comp);
        snapshot(depth);
        for (int val = 0; val < tt.n; ++val) {
            if (!((dom(v)[val >> 6] >> (val & 63)) & 1)) continue;
            std::fill(dom(v), dom(v) + words, 0);
            dom(v)[val >> 6] = uint64_t{1} << (val & 63);
            std::vector<int> seed{v};
            if (propagate(seed) && search_one(depth + 1, comp)) return true;
            if (out_of_time) return false;
            restore(depth);
        }
        return false;
    }

    // Count all solutions among `active`.
    uint64_t search_count(int depth, const std::vector<int>& active) {
        ++nodes;
        auto comps = split_unassigned(active);
        if (comps.empty()) return 1;
        if (comps.size() > 1) {
            uint64_t total = 1;
            for (const auto& comp : comps) {
                total *= search_count(depth, comp);
                if (total == 0) break;
            }
            return total;
        }
        const auto& comp = comps.front();
        int v = pick_branch_vertex(comp);
        uint64_t total = 0;
        const std::vector<uint64_t> saved = domains;
        for (int val = 0; val < tt.n; ++val) {
            if (!((saved[static_cast<size_t>(v) * words + (val >> 6)] >> (val & 63)) & 1)) continue;
            domains = saved;
            std::fill(dom(v), dom(v) + words, 0);
            dom(v)[val >> 6] = uint64_t{1} << (val & 63);
            std::vector<int> seed{v};
            if (propagate(seed)) total += search_count(depth + 1, comp);
        }
        domains = saved;
        return total;
    }

    std::vector<int> extract_solution() const {
        std::vector<int> sol(nv, -1);
        for (int v = 0; v < nv; ++v) {
            for (int w = 0; w < words; ++w) {
                if (dom(v)[w]) {
                    sol[v] = w * 64 + __builtin_ctzll(dom(v)[w]);
                    break;
                }
            }
        }
        return sol;
    }
};

void require_signature(const MixedGraph& source, const MixedGraph& target) {
    if (!source.same_signature(target))
        throw std::invalid_argument("source and target have different (m,n) signatures");
}

std::vector<int> component_ids(const MixedGraph& g, int& count) {
    std::vector<int> parent(g.num_vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& a : g.arcs) unite(a.tail, a.head);
    for (const auto& e : g.edges) unite(e.u, e.v);
    std::vector<int> id(g.num_vertices, -1);
    count = 0;
    for (int v = 0; v < g.num_vertices; ++v) {
        int r = find(v);
        if (id[r] < 0) id[r] = count++;
        id[v] = id[r];
    }
    return id;
}

struct Component {
    std::vector<int> vertices;           // original indices, ascending
    std::vector<int> local;              // original -> local (shared across comps)
};

// Builds the CSP for one component with initial domains from constraints.
// Returns false if a constrained domain is already empty.
bool init_csp(Csp& csp, const MixedGraph& source, const TargetTables& tt,
              const ConstraintSet& constraints, const std::vector<int>& comp_vertices,
              const std::vector<int>& local) {
    const int W = tt.words;
    // Full domain = all target vertices.
    std::vector<uint64_t> full(W, 0);
    for (int v = 0; v < tt.n; ++v) full[v >> 6] |= uint64_t{1} << (v & 63);
    for (int v : comp_vertices) {
        uint64_t* d = csp.dom(local[v]);
        std::copy(full.begin(), full.end(), d);
        auto it = constraints.domains.find(v);
        if (it != constraints.domains.end()) {
            const auto& cw = it->second.words();
            for (int w = 0; w < W; ++w) d[w] &= (w < static_cast<int>(cw.size()) ? cw[w] : 0);
        }
        bool any = false;
        for (int w = 0; w < W; ++w) any |= d[w] != 0;
        if (!any) return false;
    }
    for (const auto& a : source.arcs) {
        if (local[a.tail] < 0 || local[a.head] < 0) continue;
        csp.links[local[a.tail]].push_back({local[a.head], tt.table_out(a.color)});
        csp.links[local[a.head]].push_back({local[a.tail], tt.table_in(a.color)});
    }
    for (const auto& e : source.edges) {
        if (local[e.u] < 0 || local[e.v] < 0) continue;
        csp.links[local[e.u]].push_back({local[e.v], tt.table_edge(e.color)});
        csp.links[local[e.v]].push_back({local[e.u], tt.table_edge(e.color)});
    }
    return true;
}

}  // namespace

SearchOutcome find_homomorphism(const MixedGraph& source, const MixedGraph& target,
                                const ConstraintSet& constraints, const SolveOptions& options) {
    require_signature(source, target);
    for (const auto& [v, dom] : constraints.domains)
        if (v < 0 || v >= source.num_vertices)
            throw std::invalid_argument("constraint on nonexistent vertex");

    TargetTables tt = build_tables(target);
    SearchOutcome out;
    out.witness.mapping.assign(source.num_vertices, -1);

    std::optional<std::chrono::steady_clock::time_point> deadline;
    if (options.budget) deadline = std::chrono::steady_clock::now() + *options.budget;

    int ncomp = 0;
    auto comp_of = component_ids(source, ncomp);
    std::vector<std::vector<int>> comps(ncomp);
    for (int v = 0; v < source.num_vertices; ++v) comps[comp_of[v]].push_back(v);

    for (const auto& comp : comps) {
        std::vector<int> local(source.num_vertices, -1);
        for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
        Csp csp(tt, static_cast<int>(comp.size()));
        csp.deadline = deadline;
        if (!init_csp(csp, source, tt, constraints, comp, local)) {
            out.status = SearchStatus::None;
            return out;
        }
        std::vector<int> seed(comp.size());
        std::iota(seed.begin(), seed.end(), 0);
        bool ok = csp.propagate(seed) && csp.search_one(0, seed);
        out.nodes += csp.nodes;
        if (csp.out_of_time) {
            out.status = SearchStatus::Unknown;
            return out;
        }
        if (!ok) {
            out.status = SearchStatus::None;
            return out;
        }
        auto sol = csp.extract_solution();
        for (size_t i = 0; i < comp.size(); ++i) out.witness.mapping[comp[i]] = sol[i];
    }
    out.status = SearchStatus::Found;
    return out;
}

uint64_t count_homomorphisms(const MixedGraph& source, const MixedGraph& target,
                             const ConstraintSet& constraints) {
    require_signature(source, target);
    TargetTables tt = build_tables(target);

    int ncomp = 0;
    auto comp_of = component_ids(source, ncomp);
    std::vector<std::vector<int>> comps(ncomp);
    for (int v = 0; v < source.num_vertices; ++v) comps[comp_of[v]].push_back(v);

    uint64_t total = 1;
    for (const auto& comp : comps) {
        std::vector<int> local(source.num_vertices, -1);
        for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
        Csp csp(tt, static_cast<int>(comp.size()));
        if (!init_csp(csp, source, tt, constraints, comp, local)) return 0;
        std::vector<int> seed(comp.size());
        std::iota(seed.begin(), seed.end(), 0);
        if (!csp.propagate(seed)) return 0;
        uint64_t c = csp.search_count(0, seed);
        if (c == 0) return 0;
        total *= c;
    }
    return total;
}

ColorSet forced_colors(const MixedGraph& source, int v, const MixedGraph& target,
                       const ConstraintSet& constraints) {
    require_signature(source, target);
    if (v < 0 || v >= source.num_vertices)
        throw std::invalid_argument("forced_colors: vertex out of range");
    ColorSet result(target.num_vertices);
    for (int x = 0; x < target.num_vertices; ++x) {
        auto it = constraints.domains.find(v);
        if (it != constraints.domains.end() && !it->second.test(x)) continue;
        ConstraintSet cs = constraints;
        ColorSet single(target.num_vertices);
        single.set(x);
        cs.domains.erase(v);
        cs.restrict(v, single);
        if (find_homomorphism(source, target, cs).found()) result.set(x);
    }
    return result;
}

ColorSet step_image(const MixedGraph& target, const LinkStep& step, const ColorSet& from) {
    LinkPattern p{step};
    if (!pattern_matches(target, p)) throw std::invalid_argument("step does not match signature");
    TargetTables tt = build_tables(target);
    ColorSet out(target.num_vertices);
    tt.image(tt.step_table(step), from.words().data(), out.words().data());
    return out;
}

std::vector<ColorSet> transfer_sequence(const MixedGraph& target, const LinkPattern& pattern,
                                        const ColorSet& start) {
    if (!pattern_matches(target, pattern))
        throw std::invalid_argument("pattern does not match target signature");
    if (start.universe() != target.num_vertices)
        throw std::invalid_argument("start set universe mismatch");
    TargetTables tt = build_tables(target);
    std::vector<ColorSet> seq;
    seq.reserve(pattern.size() + 1);
    seq.push_back(start);
    ColorSet cur = start;
    for (const auto& s : pattern) {
        ColorSet next(target.num_vertices);
        tt.image(tt.step_table(s), cur.words().data(), next.words().data());
        seq.push_back(next);
        cur = next;
    }
    return seq;
}

bool exists_walk(const MixedGraph& target, const LinkPattern& pattern, int from, int to) {
    if (from < 0 || from >= target.num_vertices || to < 0 || to >= target.num_vertices)
        throw std::invalid_argument("walk endpoint out of range");
    ColorSet start(target.num_vertices);
    start.set(from);
    auto seq = transfer_sequence(target, pattern, start);
    return seq.back().test(to);
}

bool check_homomorphism(const MixedGraph& source, const MixedGraph& target,
                        const Homomorphism& h) {
    if (!source.same_signature(target)) return false;
    if (h.mapping.size() != static_cast<size_t>(source.num_vertices)) return false;
    for (int img : h.mapping)
        if (img < 0 || img >= target.num_vertices) return false;
    auto has_arc = [&](int t, int hd, int c) {
        for (const auto& a : target.arcs)
            if (a.tail == t && a.head == hd && a.color == c) return true;
        return false;
    };
    auto has_edge = [&](int u, int v, int c) {
        if (u > v) std::swap(u, v);
        for (const auto& e : target.edges)
            if (e.u == u && e.v == v && e.color == c) return true;
        return false;
    };
    for (const auto& a : source.arcs)
        if (!has_arc(h.mapping[a.tail], h.mapping[a.head], a.color)) return false;
    for (const auto& e : source.edges)
        if (!has_edge(h.mapping[e.u], h.mapping[e.v], e.color)) return false;
    return true;
}

Homomorphism compose(const Homomorphism& first, const Homomorphism& second) {
    Homomorphism out;
    out.mapping.reserve(first.mapping.size());
    for (int x : first.mapping) out.mapping.push_back(second.mapping.at(x));
    return out;
}

}  // namespace mgh
