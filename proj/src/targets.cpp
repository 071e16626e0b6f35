#include "mgh/targets.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <functional>
#include <memory>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mgh {

namespace {

constexpr int kMaxFactVertices = 8;

// Dense adjacency view for fact checking: one uint8 mask per (relation,
// vertex) plus a pair-state matrix. Built either from a MixedGraph or
// directly from a candidate assignment during reconstruction.
struct DenseView {
    int nv = 0, m = 0, n = 0;
    // tables: out_c at [c], in_c at [m+c], nbr_j at [2m+j]
    std::array<std::array<uint8_t, kMaxFactVertices>, 16> tables{};
    // state(i,j): 0 none; 1+c arc i->j; 1+m+c arc j->i; 1+2m+j edge color j
    std::array<std::array<uint8_t, kMaxFactVertices>, kMaxFactVertices> state{};
    int link_count = 0;

    int table_out(int c) const { return c; }
    int table_in(int c) const { return m + c; }
    int table_edge(int j) const { return 2 * m + j; }
    int num_tables() const { return 2 * m + n; }
    uint8_t full() const { return static_cast<uint8_t>((1u << nv) - 1); }

    void clear(int nv_, int m_, int n_) {
        if (2 * m_ + n_ > 16) throw std::invalid_argument("too many color classes for fact view");
        nv = nv_;
        m = m_;
        n = n_;
        link_count = 0;
        for (auto& t : tables) t.fill(0);
        for (auto& r : state) r.fill(0);
    }

    void add_arc(int t, int h, int c) {
        tables[table_out(c)][t] |= uint8_t(1u << h);
        tables[table_in(c)][h] |= uint8_t(1u << t);
        state[t][h] = static_cast<uint8_t>(1 + c);
        state[h][t] = static_cast<uint8_t>(1 + m + c);
        ++link_count;
    }
    void add_edge(int u, int v, int j) {
        tables[table_edge(j)][u] |= uint8_t(1u << v);
        tables[table_edge(j)][v] |= uint8_t(1u << u);
        state[u][v] = state[v][u] = static_cast<uint8_t>(1 + 2 * m + j);
        ++link_count;
    }

    uint8_t image(int table, uint8_t s) const {
        uint8_t out = 0;
        while (s) {
            int b = __builtin_ctz(s);
            s &= s - 1;
            out |= tables[table][b];
        }
        return out;
    }

    int step_table(const LinkStep& s) const {
        switch (s.kind) {
            case StepKind::ArcForward: return table_out(s.color);
            case StepKind::ArcBackward: return table_in(s.color);
            default: return table_edge(s.color);
        }
    }

    uint8_t walk(const LinkPattern& pattern, uint8_t start) const {
        uint8_t s = start;
        for (const auto& st : pattern) s = image(step_table(st), s);
        return s;
    }
};

DenseView view_of(const MixedGraph& g) {
    if (g.num_vertices > kMaxFactVertices)
        throw std::invalid_argument("fact checking is limited to graphs with at most 8 vertices");
    DenseView v;
    v.clear(g.num_vertices, g.num_arc_colors, g.num_edge_colors);
    for (const auto& a : g.arcs) v.add_arc(a.tail, a.head, a.color);
    for (const auto& e : g.edges) v.add_edge(e.u, e.v, e.color);
    return v;
}

uint8_t mask_of(const std::vector<int>& vs) {
    uint8_t s = 0;
    for (int v : vs) s |= uint8_t(1u << v);
    return s;
}

// All step kinds legal for the signature, in a fixed order.
std::vector<LinkStep> step_alphabet(int m, int n) {
    std::vector<LinkStep> a;
    for (int c = 0; c < m; ++c) {
        a.push_back(forward_arc(c));
        a.push_back(backward_arc(c));
    }
    for (int j = 0; j < n; ++j) a.push_back(edge_step(j));
    return a;
}

bool class_connected_spanning(const DenseView& v, int edge_color) {
    if (v.nv == 0) return true;
    uint8_t reach = 1;
    for (;;) {
        uint8_t next = reach | v.image(v.table_edge(edge_color), reach);
        if (next == reach) break;
        reach = next;
    }
    return reach == v.full();
}

bool arc_class_both_parity(const DenseView& v, int color) {
    const int bound = 2 * v.nv * v.nv;
    for (int u = 0; u < v.nv; ++u) {
        uint8_t s = uint8_t(1u << u);
        uint8_t odd = 0, even = 0;
        for (int i = 1; i <= bound; ++i) {
            s = v.image(i % 2 == 1 ? v.table_out(color) : v.table_in(color), s);
            (i % 2 == 1 ? odd : even) |= s;
        }
        if (odd != v.full() || even != v.full()) return false;
    }
    return true;
}

bool class_bipartite_within(const DenseView& v, int edge_color, uint8_t allowed) {
    std::array<int, kMaxFactVertices> side{};
    side.fill(-1);
    for (int s = 0; s < v.nv; ++s) {
        if (!((allowed >> s) & 1) || side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            uint8_t nb = v.tables[v.table_edge(edge_color)][x] & allowed;
            while (nb) {
                int y = __builtin_ctz(nb);
                nb &= nb - 1;
                if (side[y] < 0) {
                    side[y] = 1 - side[x];
                    stack.push_back(y);
                } else if (side[y] == side[x]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Cycles of the given length with vertices inside scope, as edge sets.
using EdgeSet = std::set<std::pair<int, int>>;

void enumerate_cycles(const DenseView& v, const CycleEnumerationFact& f,
                      std::set<EdgeSet>& found) {
    const int L = static_cast<int>(f.expected_cycles.empty() ? 4 : f.expected_cycles[0].size());
    std::vector<int> pool = f.scope;
    std::sort(pool.begin(), pool.end());
    std::vector<int> subset;
    // choose L vertices of the pool, then all cyclic orders
    std::function<void(size_t, int)> choose = [&](size_t from, int need) {
        if (need == 0) {
            std::vector<int> rest(subset.begin() + 1, subset.end());
            std::sort(rest.begin(), rest.end());
            do {
                // fix subset[0] first, dedupe reflection by rest.front()<rest.back()
                if (L > 2 && rest.front() > rest.back()) continue;
                std::vector<int> cyc;
                cyc.push_back(subset[0]);
                cyc.insert(cyc.end(), rest.begin(), rest.end());
                bool ok = true;
                std::vector<int> colors;
                for (int i = 0; i < L && ok; ++i) {
                    int a = cyc[i], b = cyc[(i + 1) % L];
                    int st = v.state[a][b];
                    if (st <= 2 * v.m) {  // none or arc
                        ok = false;
                    } else {
                        colors.push_back(st - 1 - 2 * v.m);
                    }
                }
                if (!ok) continue;
                if (f.mode == CycleEnumerationFact::Mode::ExactlyOneRed) {
                    if (std::count(colors.begin(), colors.end(), 1) != 1) continue;
                } else {
                    bool alt = true;
                    for (int i = 0; i < L; ++i) alt &= colors[i] != colors[(i + 1) % L];
                    if (!alt) continue;
                }
                EdgeSet es;
                for (int i = 0; i < L; ++i)
                    es.insert(std::minmax(cyc[i], cyc[(i + 1) % L]));
                found.insert(es);
            } while (std::next_permutation(rest.begin(), rest.end()));
            return;
        }
        for (size_t i = from; i < pool.size(); ++i) {
            subset.push_back(pool[i]);
            choose(i + 1, need - 1);
            subset.pop_back();
        }
    };
    choose(0, L);
}

bool check_profile(const DenseView& v, const ForbiddenProfileFact& f, bool check_sets) {
    auto alphabet = step_alphabet(v.m, v.n);
    const int steps = f.internal_length + 1;
    int max_forb = -1;
    std::set<uint8_t> maximal;
    std::vector<int> pat(steps, 0);
    for (int start = 0; start < v.nv; ++start) {
        std::fill(pat.begin(), pat.end(), 0);
        for (;;) {
            uint8_t s = uint8_t(1u << start);
            for (int i = 0; i < steps; ++i) s = v.image(v.step_table(alphabet[pat[i]]), s);
            uint8_t forb = static_cast<uint8_t>(v.full() & ~s);
            int size = __builtin_popcount(forb);
            if (size > max_forb) {
                max_forb = size;
                maximal = {forb};
            } else if (size == max_forb) {
                maximal.insert(forb);
            }
            int i = 0;
            while (i < steps && ++pat[i] == static_cast<int>(alphabet.size())) pat[i++] = 0;
            if (i == steps) break;
        }
    }
    if (max_forb != f.max_forbidden_size) return false;
    if (!check_sets) return true;
    std::set<uint8_t> expected;
    for (const auto& s : f.maximal_sets) expected.insert(mask_of(s));
    return maximal == expected;
}

bool check_fact(const DenseView& v, const Fact& fact, const DenseView* cached_pattern = nullptr) {
    return std::visit(
        [&](const auto& f) -> bool {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, NeighborhoodFact>) {
                int table = f.side == LinkSide::ArcOut  ? v.table_out(f.color)
                            : f.side == LinkSide::ArcIn ? v.table_in(f.color)
                                                        : v.table_edge(f.color);
                uint8_t got = v.tables[table][f.vertex];
                uint8_t want = mask_of(f.expected);
                return f.exact ? got == want : (got & want) == want;
            } else if constexpr (std::is_same_v<T, ArcAbsenceFact>) {
                return v.state[f.tail][f.head] != 1 + f.color;
            } else if constexpr (std::is_same_v<T, WalkAbsenceFact>) {
                return !((v.walk(f.pattern, uint8_t(1u << f.from)) >> f.to) & 1);
            } else if constexpr (std::is_same_v<T, PathShapeAbsenceFact>) {
                return (v.walk(f.pattern, mask_of(f.from)) & mask_of(f.to)) == 0;
            } else if constexpr (std::is_same_v<T, ForbiddenProfileFact>) {
                return check_profile(v, f, !f.maximal_sets.empty());
            } else if constexpr (std::is_same_v<T, InducedEqualityFact>) {
                DenseView local;
                const DenseView* p = cached_pattern;
                if (!p) {
                    local = view_of(f.pattern);
                    p = &local;
                }
                if (p->m != v.m || p->n != v.n) return false;
                for (size_t i = 0; i < f.vertices.size(); ++i)
                    for (size_t j = 0; j < f.vertices.size(); ++j)
                        if (p->state[i][j] != v.state[f.vertices[i]][f.vertices[j]]) return false;
                return true;
            } else if constexpr (std::is_same_v<T, CycleEnumerationFact>) {
                std::set<EdgeSet> found;
                enumerate_cycles(v, f, found);
                std::set<EdgeSet> expected;
                for (const auto& cyc : f.expected_cycles) {
                    EdgeSet es;
                    for (size_t i = 0; i < cyc.size(); ++i)
                        es.insert(std::minmax(cyc[i], cyc[(i + 1) % cyc.size()]));
                    expected.insert(es);
                }
                return found == expected;
            } else if constexpr (std::is_same_v<T, SpanningConnectivityFact>) {
                return f.arc_class ? arc_class_both_parity(v, f.color)
                                   : class_connected_spanning(v, f.color);
            } else if constexpr (std::is_same_v<T, OddCycleForcingFact>) {
                uint8_t all = v.full();
                bool has_odd = !class_bipartite_within(v, f.edge_color, all);
                bool without = class_bipartite_within(
                    v, f.edge_color, static_cast<uint8_t>(all & ~(1u << f.vertex)));
                return has_odd && without;
            }
        },
        fact);
}

// Cheap facts first, so reconstruction rejects candidates early.
int fact_cost(const Fact& f) {
    struct V {
        int operator()(const NeighborhoodFact&) const { return 0; }
        int operator()(const ArcAbsenceFact&) const { return 0; }
        int operator()(const InducedEqualityFact&) const { return 1; }
        int operator()(const WalkAbsenceFact&) const { return 2; }
        int operator()(const PathShapeAbsenceFact&) const { return 2; }
        int operator()(const CycleEnumerationFact&) const { return 3; }
        int operator()(const SpanningConnectivityFact&) const { return 3; }
        int operator()(const OddCycleForcingFact&) const { return 3; }
        int operator()(const ForbiddenProfileFact&) const { return 4; }
    };
    return std::visit(V{}, f);
}

// ---- builtin adjacency -------------------------------------------------------

void label_letters(MixedGraph& g) {
    for (int i = 0; i < g.num_vertices; ++i) g.labels[i] = std::string(1, char('a' + i));
}

MixedGraph make_t5() {
    MixedGraph g(5, 1, 0);
    // a=0 b=1 c=2 d=3 e=4
    for (auto [t, h] : {std::pair{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 0}, {3, 4},
                        {4, 0}})
        g.add_arc(t, h, 0);
    label_letters(g);
    return g;
}

MixedGraph make_t6() {
    MixedGraph g(6, 0, 2);
    // a=0 b=1 c=2 d=3 e=4 f=5; blue=0, red=1
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {0, 5}, {1, 3}, {3, 4}, {4, 5}})
        g.add_edge(u, v, 0);
    for (auto [u, v] : {std::pair{0, 3}, {0, 4}, {1, 2}, {1, 4}, {1, 5}, {2, 3}})
        g.add_edge(u, v, 1);
    label_letters(g);
    return g;
}

MixedGraph induced(const MixedGraph& g, const std::vector<int>& keep) {
    std::vector<int> local(g.num_vertices, -1);
    for (size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
    MixedGraph out(static_cast<int>(keep.size()), g.num_arc_colors, g.num_edge_colors);
    for (const auto& a : g.arcs)
        if (local[a.tail] >= 0 && local[a.head] >= 0)
            out.add_arc(local[a.tail], local[a.head], a.color);
    for (const auto& e : g.edges)
        if (local[e.u] >= 0 && local[e.v] >= 0) out.add_edge(local[e.u], local[e.v], e.color);
    for (size_t i = 0; i < keep.size(); ++i) {
        auto it = g.labels.find(keep[i]);
        if (it != g.labels.end()) out.labels[static_cast<int>(i)] = it->second;
    }
    return out;
}

MixedGraph make_t4_oriented() { return induced(make_t5(), {0, 1, 2, 3}); }
MixedGraph make_t4_2ec() { return induced(make_t6(), {0, 1, 2, 3}); }

MixedGraph directed_triangle() {
    MixedGraph g(3, 1, 0);
    g.add_arc(0, 1, 0);
    g.add_arc(1, 2, 0);
    g.add_arc(2, 0, 0);
    return g;
}

// ---- fact sheets ---------------------------------------------------------------

constexpr int A = 0, B = 1, C = 2, D = 3, E = 4, F = 5;

TargetFactSheet sheet_t5() {
    TargetFactSheet s;
    s.target_name = "t5";
    auto F1 = forward_arc(0);
    s.facts = {
        {"out-neighborhood of a is exactly {b,c}",
         NeighborhoodFact{LinkSide::ArcOut, 0, A, {B, C}, true}},
        {"out-neighborhood of c is exactly {d}",
         NeighborhoodFact{LinkSide::ArcOut, 0, C, {D}, true}},
        {"out-neighborhood of e is exactly {a}",
         NeighborhoodFact{LinkSide::ArcOut, 0, E, {A}, true}},
        {"in-neighborhood of b is exactly {a}",
         NeighborhoodFact{LinkSide::ArcIn, 0, B, {A}, true}},
        {"in-neighborhood of c is exactly {a,b}",
         NeighborhoodFact{LinkSide::ArcIn, 0, C, {A, B}, true}},
        {"a->d is not an arc", ArcAbsenceFact{A, D, 0}},
        {"{a,b,d} induces the directed 3-cycle a->b->d->a",
         InducedEqualityFact{{A, B, D}, directed_triangle()}},
        {"{a,b,c,d} induces the 4-tournament with arcs ab,ac,bc,bd,cd,da",
         InducedEqualityFact{{A, B, C, D}, make_t4_oriented()}},
        {"no directed 2-path from {d,e} to {d,e}",
         PathShapeAbsenceFact{{F1, F1}, {D, E}, {D, E}}},
        {"arc class reaches every ordered pair by alternating walks of both parities",
         SpanningConnectivityFact{true, 0}},
        {"paths with 0 internal vertices forbid at most 4 colors",
         ForbiddenProfileFact{0, 4, {}}},
        {"paths with 1 internal vertex forbid at most 3 colors",
         ForbiddenProfileFact{1, 3, {}}},
        {"paths with 2 internal vertices forbid at most 3 colors, only {c,d,e} and {b,c,d}",
         ForbiddenProfileFact{2, 3, {{C, D, E}, {B, C, D}}}},
        {"paths with 3 internal vertices forbid at most 2 colors",
         ForbiddenProfileFact{3, 2, {}}},
        {"paths with 4 internal vertices forbid at most 1 color",
         ForbiddenProfileFact{4, 1, {}}},
        {"paths with 5 internal vertices forbid at most 1 color, only {b}, {c}, {e}",
         ForbiddenProfileFact{5, 1, {{B}, {C}, {E}}}},
    };
    return s;
}

TargetFactSheet sheet_t6() {
    TargetFactSheet s;
    s.target_name = "t6";
    auto Bl = edge_step(0);
    auto Rd = edge_step(1);
    s.facts = {
        {"red neighborhood of f is exactly {b}",
         NeighborhoodFact{LinkSide::Edge, 1, F, {B}, true}},
        {"no blue walk of length 5 from c to c", WalkAbsenceFact{{Bl, Bl, Bl, Bl, Bl}, C, C}},
        {"no walk colored (blue,blue,red,blue) from c to c",
         WalkAbsenceFact{{Bl, Bl, Rd, Bl}, C, C}},
        {"c and e have no common blue neighbor", WalkAbsenceFact{{Bl, Bl}, C, E}},
        {"b is a common blue neighbor of a and d",
         NeighborhoodFact{LinkSide::Edge, 0, B, {A, D}, false}},
        {"within {a,b,c,d,e}, the 4-cycles with exactly one red edge are aedb and cdba",
         CycleEnumerationFact{CycleEnumerationFact::Mode::ExactlyOneRed,
                              {A, B, C, D, E},
                              {{A, E, D, B}, {C, D, B, A}}}},
        {"acde is an alternating 4-cycle",
         CycleEnumerationFact{CycleEnumerationFact::Mode::Alternating,
                              {A, C, D, E},
                              {{A, C, D, E}}}},
        {"red class has an odd cycle and every red odd cycle passes through c",
         OddCycleForcingFact{1, C}},
        {"blue class is a connected spanning subgraph", SpanningConnectivityFact{false, 0}},
        {"red class is a connected spanning subgraph", SpanningConnectivityFact{false, 1}},
        {"{a,b,c,d} induces the 2-edge-colored clique with blue path c-a-b-d and red path b-c-d-a",
         InducedEqualityFact{{A, B, C, D}, make_t4_2ec()}},
        {"direct edges forbid at most 5 colors, only {a,c,d,e,f} and {b,c,d,e,f}",
         ForbiddenProfileFact{0, 5, {{A, C, D, E, F}, {B, C, D, E, F}}}},
        {"paths with 1 internal vertex forbid at most 4 colors, only {a,b,c,f} and {b,c,e,f}",
         ForbiddenProfileFact{1, 4, {{A, B, C, F}, {B, C, E, F}}}},
        {"paths with 2 internal vertices forbid at most 3 colors, only {b,c,f}, {c,e,f}, {d,e,f}",
         ForbiddenProfileFact{2, 3, {{B, C, F}, {C, E, F}, {D, E, F}}}},
        {"paths with 3 internal vertices forbid at most 2 colors, only {b,c}",
         ForbiddenProfileFact{3, 2, {{B, C}}}},
        {"paths with 4 internal vertices forbid at most 1 color, only {c} and {f}",
         ForbiddenProfileFact{4, 1, {{C}, {F}}}},
    };
    return s;
}

TargetFactSheet sheet_t4_oriented() {
    TargetFactSheet s;
    s.target_name = "t4_oriented";
    s.facts = {
        {"{a,b,d} induces the directed 3-cycle a->b->d->a",
         InducedEqualityFact{{A, B, D}, directed_triangle()}},
        {"a->d is not an arc", ArcAbsenceFact{A, D, 0}},
        {"out-neighborhood of d is exactly {a}",
         NeighborhoodFact{LinkSide::ArcOut, 0, D, {A}, true}},
        {"in-neighborhood of a is exactly {d}",
         NeighborhoodFact{LinkSide::ArcIn, 0, A, {D}, true}},
    };
    return s;
}

TargetFactSheet sheet_t4_2ec() {
    TargetFactSheet s;
    s.target_name = "t4_2ec";
    s.facts = {
        {"blue neighborhood of c is exactly {a}",
         NeighborhoodFact{LinkSide::Edge, 0, C, {A}, true}},
        {"red neighborhood of b is exactly {c}",
         NeighborhoodFact{LinkSide::Edge, 1, B, {C}, true}},
        {"blue class is a connected spanning subgraph", SpanningConnectivityFact{false, 0}},
        {"red class is a connected spanning subgraph", SpanningConnectivityFact{false, 1}},
    };
    return s;
}

}  // namespace

MixedGraph builtin_target(const std::string& name) {
    if (name == "t5") return make_t5();
    if (name == "t6") return make_t6();
    if (name == "t4_oriented") return make_t4_oriented();
    if (name == "t4_2ec") return make_t4_2ec();
    throw std::invalid_argument("unknown builtin target '" + name + "'");
}

bool is_builtin_target(const std::string& name) {
    return name == "t5" || name == "t6" || name == "t4_oriented" || name == "t4_2ec";
}

std::vector<std::string> builtin_target_names() { return {"t5", "t6", "t4_oriented", "t4_2ec"}; }

TargetFactSheet fact_sheet(const std::string& name) {
    if (name == "t5") return sheet_t5();
    if (name == "t6") return sheet_t6();
    if (name == "t4_oriented") return sheet_t4_oriented();
    if (name == "t4_2ec") return sheet_t4_2ec();
    throw std::invalid_argument("no fact sheet for '" + name + "'");
}

FactReport evaluate_facts(const MixedGraph& g, const TargetFactSheet& sheet) {
    FactReport rep;
    rep.target_name = sheet.target_name;
    DenseView v = view_of(g);
    for (const auto& nf : sheet.facts) {
        bool ok = check_fact(v, nf.fact);
        rep.results.push_back({nf.description, ok, ok ? "" : "check failed on this graph"});
    }
    return rep;
}

FactReport verify_target_facts(const std::string& name) {
    return evaluate_facts(builtin_target(name), fact_sheet(name));
}

bool graphs_isomorphic(const MixedGraph& a, const MixedGraph& b) {
    if (a.num_vertices != b.num_vertices || !a.same_signature(b)) return false;
    if (a.arcs.size() != b.arcs.size() || a.edges.size() != b.edges.size()) return false;
    if (a.num_vertices > kMaxFactVertices)
        throw std::invalid_argument("brute-force isomorphism limited to 8 vertices");
    DenseView va = view_of(a), vb = view_of(b);
    std::vector<int> perm(a.num_vertices);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < a.num_vertices && ok; ++i)
            for (int j = 0; j < a.num_vertices && ok; ++j)
                ok = va.state[i][j] == vb.state[perm[i]][perm[j]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<MixedGraph> reconstruct_candidates(const TargetFactSheet& sheet, Signature sig) {
    if (sig.num_vertices > 6)
        throw std::invalid_argument("reconstruction is limited to 6 vertices");
    const int nv = sig.num_vertices, m = sig.arc_colors, n = sig.edge_colors;

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) pairs.emplace_back(i, j);
    const int P = static_cast<int>(pairs.size());
    const int states = 1 + 2 * m + n;
    const int max_links = nv >= 3 ? 3 * nv - 6 : (nv == 2 ? 1 : 0);

    std::vector<NamedFact> ordered = sheet.facts;
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const NamedFact& x, const NamedFact& y) {
                         return fact_cost(x.fact) < fact_cost(y.fact);
                     });
    // Pattern views of induced-equality facts, built once.
    std::vector<std::unique_ptr<DenseView>> patterns(ordered.size());
    for (size_t i = 0; i < ordered.size(); ++i)
        if (const auto* ie = std::get_if<InducedEqualityFact>(&ordered[i].fact))
            patterns[i] = std::make_unique<DenseView>(view_of(ie->pattern));

    std::vector<MixedGraph> survivors;
    std::vector<int> st(P, 0);
    DenseView v;
    for (;;) {
        v.clear(nv, m, n);
        bool too_many = false;
        for (int p = 0; p < P; ++p) {
            int s = st[p];
            if (s == 0) continue;
            auto [i, j] = pairs[p];
            if (s <= m)
                v.add_arc(i, j, s - 1);
            else if (s <= 2 * m)
                v.add_arc(j, i, s - 1 - m);
            else
                v.add_edge(i, j, s - 1 - 2 * m);
            if (v.link_count > max_links) {
                too_many = true;
                break;
            }
        }
        if (!too_many) {
            bool pass = true;
            for (size_t i = 0; i < ordered.size(); ++i) {
                if (!check_fact(v, ordered[i].fact, patterns[i].get())) {
                    pass = false;
                    break;
                }
            }
            if (pass) {
                MixedGraph g(nv, m, n);
                for (int p = 0; p < P; ++p) {
                    int s = st[p];
                    if (s == 0) continue;
                    auto [i, j] = pairs[p];
                    if (s <= m)
                        g.add_arc(i, j, s - 1);
                    else if (s <= 2 * m)
                        g.add_arc(j, i, s - 1 - m);
                    else
                        g.add_edge(i, j, s - 1 - 2 * m);
                }
                survivors.push_back(std::move(g));
            }
        }
        int p = 0;
        while (p < P && ++st[p] == states) st[p++] = 0;
        if (p >= P) break;  // odometer exhausted (covers the zero-pair case)
    }

    // isomorphism-class representatives, canonical order
    std::vector<MixedGraph> reps;
    for (auto& g : survivors) {
        bool fresh = true;
        for (const auto& r : reps)
            if (graphs_isomorphic(g, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(std::move(g));
    }
    std::sort(reps.begin(), reps.end(), [](const MixedGraph& x, const MixedGraph& y) {
        return serialize_graph(x) < serialize_graph(y);
    });
    return reps;
}

}  // namespace mgh
