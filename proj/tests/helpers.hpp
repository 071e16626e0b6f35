#pragma once

// Test-only helpers: a brute-force homomorphism oracle independent of the
// solver's search path, small random graph generators, and a second girth
// implementation. These stay deliberately naive.

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "mgh/graph.hpp"
#include "mgh/solver.hpp"

namespace mgh::testing {

inline void for_each_assignment(int source_vertices, int target_vertices,
                                const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> phi(source_vertices, 0);
    if (source_vertices == 0) {
        fn(phi);
        return;
    }
    if (target_vertices == 0) return;
    for (;;) {
        fn(phi);
        int i = 0;
        while (i < source_vertices && ++phi[i] == target_vertices) phi[i++] = 0;
        if (i == source_vertices) break;
    }
}

inline bool respects_constraints(const std::vector<int>& phi, const ConstraintSet& cs) {
    for (const auto& [v, dom] : cs.domains)
        if (!dom.test(phi[v])) return false;
    return true;
}

inline uint64_t brute_count(const MixedGraph& src, const MixedGraph& tgt,
                            const ConstraintSet& cs = {}) {
    uint64_t count = 0;
    for_each_assignment(src.num_vertices, tgt.num_vertices, [&](const std::vector<int>& phi) {
        if (!respects_constraints(phi, cs)) return;
        if (check_homomorphism(src, tgt, Homomorphism{phi})) ++count;
    });
    return count;
}

inline ColorSet brute_forced(const MixedGraph& src, int v, const MixedGraph& tgt,
                             const ConstraintSet& cs = {}) {
    ColorSet out(tgt.num_vertices);
    for_each_assignment(src.num_vertices, tgt.num_vertices, [&](const std::vector<int>& phi) {
        if (!respects_constraints(phi, cs)) return;
        if (check_homomorphism(src, tgt, Homomorphism{phi})) out.set(phi[v]);
    });
    return out;
}

// Random (m,n)-colored-mixed graph respecting the one-link-per-pair rule.
inline MixedGraph random_mixed(std::mt19937& rng, int num_vertices, int m, int n,
                               double link_probability = 0.5) {
    MixedGraph g(num_vertices, m, n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> kind(0, 2 * m + n - 1);
    for (int i = 0; i < num_vertices; ++i)
        for (int j = i + 1; j < num_vertices; ++j) {
            if (coin(rng) > link_probability) continue;
            int k = kind(rng);
            if (k < m)
                g.add_arc(i, j, k);
            else if (k < 2 * m)
                g.add_arc(j, i, k - m);
            else
                g.add_edge(i, j, k - 2 * m);
        }
    return g;
}

// Path realizing a pattern: vertices 0..L, step i links i and i+1.
inline MixedGraph pattern_path(const LinkPattern& pattern, int m, int n) {
    MixedGraph g(static_cast<int>(pattern.size()) + 1, m, n);
    for (size_t i = 0; i < pattern.size(); ++i) {
        const auto& s = pattern[i];
        int a = static_cast<int>(i), b = a + 1;
        if (s.kind == StepKind::ArcForward)
            g.add_arc(a, b, s.color);
        else if (s.kind == StepKind::ArcBackward)
            g.add_arc(b, a, s.color);
        else
            g.add_edge(a, b, s.color);
    }
    return g;
}

// Independent girth: for each underlying edge, remove it and BFS the distance
// between its endpoints; the shortest cycle through that edge is dist + 1.
inline std::optional<int> naive_girth(const MixedGraph& g) {
    auto adj = underlying_adjacency(g);
    std::vector<std::pair<int, int>> edges;
    for (const auto& a : g.arcs) edges.emplace_back(a.tail, a.head);
    for (const auto& e : g.edges) edges.emplace_back(e.u, e.v);
    std::optional<int> best;
    for (auto [u, v] : edges) {
        std::vector<int> dist(g.num_vertices, -1);
        std::vector<int> queue{u};
        dist[u] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int x = queue[qi];
            for (int y : adj[x]) {
                if ((x == u && y == v) || (x == v && y == u)) continue;  // skip the edge itself
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist[v] >= 0 && (!best || dist[v] + 1 < *best)) best = dist[v] + 1;
    }
    return best;
}

// Simple graph (0,1) from an adjacency list of undirected pairs.
inline MixedGraph simple_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    MixedGraph g(n, 0, 1);
    for (auto [u, v] : edges) g.add_edge(u, v, 0);
    return g;
}

inline MixedGraph directed_cycle(int n) {
    MixedGraph g(n, 1, 0);
    for (int i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n, 0);
    return g;
}

inline MixedGraph undirected_cycle(int n) {
    MixedGraph g(n, 0, 1);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, 0);
    return g;
}

// Graphs meeting the discharging hypothesis for a given k: a small simple
// base graph with minimum degree 3, each edge subdivided so that thread
// lengths stay within floor((k+1)/2) and every 3-vertex keeps at most k
// 2-weak-neighbors.
inline MixedGraph hypothesis_graph(std::mt19937& rng, int k) {
    std::uniform_int_distribution<int> base_size(4, 9);
    const int nb = base_size(rng) & ~1;  // even, 4..8
    // Hamiltonian cycle plus a perfect matching on antipodal vertices keeps
    // the base simple with all degrees exactly 3.
    std::vector<std::pair<int, int>> base_edges;
    for (int i = 0; i < nb; ++i) base_edges.emplace_back(i, (i + 1) % nb);
    for (int i = 0; i < nb / 2; ++i) base_edges.emplace_back(i, i + nb / 2);

    const int run_cap = (k + 1) / 2;
    std::uniform_int_distribution<int> sub(0, run_cap);
    std::vector<int> subdivisions(base_edges.size());
    std::vector<int> weak(nb, 0);
    for (size_t e = 0; e < base_edges.size(); ++e) {
        int s = sub(rng);
        auto [u, v] = base_edges[e];
        // every base vertex has degree 3, so cap its thread total at k
        while (s > 0 && (weak[u] + s > k || weak[v] + s > k)) --s;
        subdivisions[e] = s;
        weak[u] += s;
        weak[v] += s;
    }
    int total = nb;
    for (int s : subdivisions) total += s;
    MixedGraph g(total, 0, 1);
    int next = nb;
    for (size_t e = 0; e < base_edges.size(); ++e) {
        auto [u, v] = base_edges[e];
        int prev = u;
        for (int j = 0; j < subdivisions[e]; ++j) {
            g.add_edge(prev, next, 0);
            prev = next++;
        }
        g.add_edge(prev, v, 0);
    }
    return g;
}

}  // namespace mgh::testing
