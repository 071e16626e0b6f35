#include "mgh/metrics.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace mgh {

namespace {

long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

}  // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = gcd_ll(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const { return Rational(num * o.num, den * o.den); }

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<int> degrees(const MixedGraph& g) {
    std::vector<int> d(g.num_vertices, 0);
    for (const auto& a : g.arcs) {
        ++d[a.tail];
        ++d[a.head];
    }
    for (const auto& e : g.edges) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

std::optional<int> girth(const MixedGraph& g) {
    auto adj = underlying_adjacency(g);
    const int n = g.num_vertices;
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{root};
        dist[root] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            // cycles through deeper vertices cannot beat the current best
            if (2 * dist[u] >= best) break;
            for (int w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u] && u != parent[w]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

bool is_bipartite(const MixedGraph& g) {
    auto adj = underlying_adjacency(g);
    std::vector<int> side(g.num_vertices, -1);
    for (int s = 0; s < g.num_vertices; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : adj[u]) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    q.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Rational mad_exact_exhaustive(const MixedGraph& g) {
    const int n = g.num_vertices;
    if (n < 1) throw std::invalid_argument("mad of an empty graph");
    if (n > 24) throw std::invalid_argument("exhaustive mad limited to 24 vertices");
    std::vector<uint32_t> adj(n, 0);
    auto add = [&](int a, int b) {
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
    };
    for (const auto& a : g.arcs) add(a.tail, a.head);
    for (const auto& e : g.edges) add(e.u, e.v);
    long long best_num = 0, best_den = 1;  // best 2e/s so far
    for (uint32_t s = 1; s < (1u << n); ++s) {
        int verts = __builtin_popcount(s);
        long long twice_edges = 0;
        uint32_t rest = s;
        while (rest) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            twice_edges += __builtin_popcount(adj[v] & s);
        }
        if (twice_edges * best_den > best_num * verts) {
            best_num = twice_edges;
            best_den = verts;
        }
    }
    return Rational(best_num, best_den);
}

namespace {

// Dinic max-flow on integer capacities.
struct Dinic {
    struct E {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<E>> g;
    std::vector<int> level, it;
    explicit Dinic(int n) : g(n), level(n), it(n) {}
    void add(int a, int b, long long cap) {
        g[a].push_back({b, cap, static_cast<int>(g[b].size())});
        g[b].push_back({a, 0, static_cast<int>(g[a].size()) - 1});
    }
    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::deque<int> q{s};
        level[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (const auto& e : g[u])
                if (e.cap > 0 && level[e.to] < 0) {
                    level[e.to] = level[u] + 1;
                    q.push_back(e.to);
                }
        }
        return level[t] >= 0;
    }
    long long dfs(int u, int t, long long f) {
        if (u == t) return f;
        for (int& i = it[u]; i < static_cast<int>(g[u].size()); ++i) {
            E& e = g[u][i];
            if (e.cap > 0 && level[e.to] == level[u] + 1) {
                long long d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    g[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }
    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(it.begin(), it.end(), 0);
            long long f;
            while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
        }
        return flow;
    }
    // s-side of a minimum cut after max_flow.
    std::vector<char> min_cut_side(int s) {
        std::vector<char> side(g.size(), 0);
        std::deque<int> q{s};
        side[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (const auto& e : g[u])
                if (e.cap > 0 && !side[e.to]) {
                    side[e.to] = 1;
                    q.push_back(e.to);
                }
        }
        return side;
    }
};

struct SimpleEdges {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg;
};

SimpleEdges simple_edges(const MixedGraph& g) {
    SimpleEdges se;
    se.n = g.num_vertices;
    se.deg.assign(se.n, 0);
    for (const auto& a : g.arcs) se.edges.emplace_back(a.tail, a.head);
    for (const auto& e : g.edges) se.edges.emplace_back(e.u, e.v);
    for (auto [u, v] : se.edges) {
        ++se.deg[u];
        ++se.deg[v];
    }
    return se;
}

// Is there a nonempty S with e(S)/|S| > p/q? If so return one via min-cut
// (Goldberg's construction, capacities scaled by q).
std::optional<std::vector<int>> denser_than(const SimpleEdges& se, long long p, long long q) {
    const int n = se.n;
    const long long m = static_cast<long long>(se.edges.size());
    if (m == 0) return std::nullopt;
    const int s = n, t = n + 1;
    Dinic din(n + 2);
    for (int v = 0; v < n; ++v) {
        din.add(s, v, m * q);
        din.add(v, t, m * q + 2 * p - q * se.deg[v]);
    }
    for (auto [u, v] : se.edges) {
        din.add(u, v, q);
        din.add(v, u, q);
    }
    long long flow = din.max_flow(s, t);
    if (flow >= static_cast<long long>(n) * m * q) return std::nullopt;  // cut value n*m*q: no S
    auto side = din.min_cut_side(s);
    std::vector<int> S;
    for (int v = 0; v < n; ++v)
        if (side[v]) S.push_back(v);
    if (S.empty()) return std::nullopt;
    return S;
}

Rational density_of(const SimpleEdges& se, const std::vector<int>& S) {
    std::vector<char> in(se.n, 0);
    for (int v : S) in[v] = 1;
    long long e = 0;
    for (auto [u, v] : se.edges) e += in[u] && in[v];
    return Rational(e, static_cast<long long>(S.size()));
}

}  // namespace

Rational mad_exact_flow(const MixedGraph& g) {
    if (g.num_vertices < 1) throw std::invalid_argument("mad of an empty graph");
    SimpleEdges se = simple_edges(g);
    if (se.edges.empty()) return Rational(0);
    // Dinkelbach iteration: repeatedly ask for a subgraph denser than the
    // densest found so far; exact rationals keep boundary cases sharp.
    Rational best(0);
    {
        std::vector<int> all(se.n);
        std::iota(all.begin(), all.end(), 0);
        best = density_of(se, all);
    }
    for (;;) {
        auto S = denser_than(se, best.num, best.den);
        if (!S) break;
        Rational d = density_of(se, *S);
        if (!(best < d)) break;  // flow found nothing strictly better
        best = d;
    }
    return best + best;  // mad = 2 * max density
}

Rational mad_exact(const MixedGraph& g) {
    if (g.num_vertices <= 20) {
        Rational r = mad_exact_exhaustive(g);
        return r;
    }
    return mad_exact_flow(g);
}

namespace {

// Longest path segment whose vertices all have degree 2. Components of the
// 2-vertex-induced subgraph are paths or cycles; a cycle of size c contains a
// path through all c vertices.
int longest_two_vertex_run(const MixedGraph& g) {
    auto adj = underlying_adjacency(g);
    auto deg = degrees(g);
    const int n = g.num_vertices;
    std::vector<char> seen(n, 0);
    int best = 0;
    for (int v = 0; v < n; ++v) {
        if (deg[v] != 2 || seen[v]) continue;
        // flood the 2-vertex component of v
        int size = 0;
        std::deque<int> q{v};
        seen[v] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            ++size;
            for (int w : adj[u])
                if (deg[w] == 2 && !seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
        best = std::max(best, size);
    }
    return best;
}

// 2-weak-neighbors of a 3-vertex: 2-vertices on the threads leaving it.
int two_weak_neighbors(int v, const std::vector<std::vector<int>>& adj,
                       const std::vector<int>& deg) {
    std::set<int> found;
    for (int start : adj[v]) {
        int prev = v, cur = start;
        while (deg[cur] == 2 && cur != v) {
            if (!found.insert(cur).second) break;  // rejoined an already-walked thread
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
        }
    }
    return static_cast<int>(found.size());
}

bool has_pure_two_vertex_component(const MixedGraph& g) {
    auto adj = underlying_adjacency(g);
    auto deg = degrees(g);
    const int n = g.num_vertices;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        bool all_two = true;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            all_two &= deg[u] == 2;
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
        if (all_two) return true;
    }
    return false;
}

}  // namespace

DischargingReport check_discharging(const MixedGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("negative discharging parameter");
    DischargingReport rep;
    rep.k = k;
    rep.mad_lower_bound = Rational(2) + Rational(2, k + 2);
    rep.girth_exclusion = 2 * k + 6;

    auto deg = degrees(g);
    auto adj = underlying_adjacency(g);
    rep.max_consecutive_2vertices = longest_two_vertex_run(g);
    rep.max_2weak_neighbors_of_3vertex = 0;
    for (int v = 0; v < g.num_vertices; ++v)
        if (deg[v] == 3)
            rep.max_2weak_neighbors_of_3vertex =
                std::max(rep.max_2weak_neighbors_of_3vertex, two_weak_neighbors(v, adj, deg));

    int min_deg = g.num_vertices ? *std::min_element(deg.begin(), deg.end()) : 0;
    if (g.num_vertices == 0) {
        rep.reason = "empty graph";
    } else if (min_deg < 2) {
        rep.reason = "minimum degree below 2";
    } else if (has_pure_two_vertex_component(g)) {
        // A component made only of 2-vertices is a bare cycle; 2-vertices
        // there have no 3-weak-neighbor to draw charge from.
        rep.reason = "a component consists only of 2-vertices";
    } else if (rep.max_consecutive_2vertices > (k + 1) / 2) {
        rep.reason = "a path of " + std::to_string(rep.max_consecutive_2vertices) +
                     " consecutive 2-vertices exceeds floor((k+1)/2) = " +
                     std::to_string((k + 1) / 2);
    } else if (rep.max_2weak_neighbors_of_3vertex > k) {
        rep.reason = "a 3-vertex has " + std::to_string(rep.max_2weak_neighbors_of_3vertex) +
                     " 2-weak-neighbors, more than k";
    } else {
        rep.hypothesis_holds = true;
    }

    if (rep.hypothesis_holds) {
        rep.mad_value = mad_exact(g);
        rep.mad_meets_bound = *rep.mad_value >= rep.mad_lower_bound;
    }
    return rep;
}

EdgeBoundReport universality_edge_bound(int m, int n, int k) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative color counts");
    if (k < 3) throw std::invalid_argument("target size must be at least 3");
    EdgeBoundReport rep;
    rep.required = static_cast<long long>(2 * m + n) * k - m - n;
    rep.planar_max = 3LL * k - 6;
    rep.impossible = 2 * m + n >= 3;
    return rep;
}

bool ConnectivityReport::all_pass() const {
    for (const auto& e : edge_classes)
        if (!e.connected_spanning || e.edge_count < e.spanning_tree_edges) return false;
    for (const auto& a : arc_classes)
        if (!a.both_parity_reachable || a.arc_count < a.required_arcs) return false;
    return true;
}

ConnectivityReport color_class_connectivity(const MixedGraph& target) {
    ConnectivityReport rep;
    const int n = target.num_vertices;
    for (int j = 0; j < target.num_edge_colors; ++j) {
        EdgeClassReport er;
        er.color = j;
        er.spanning_tree_edges = n - 1;
        std::vector<std::vector<int>> adj(n);
        for (const auto& e : target.edges)
            if (e.color == j) {
                ++er.edge_count;
                adj[e.u].push_back(e.v);
                adj[e.v].push_back(e.u);
            }
        std::vector<char> seen(n, 0);
        if (n > 0) {
            std::deque<int> q{0};
            seen[0] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (int w : adj[u])
                    if (!seen[w]) {
                        seen[w] = 1;
                        q.push_back(w);
                    }
            }
        }
        er.connected_spanning = std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
        rep.edge_classes.push_back(er);
    }
    for (int c = 0; c < target.num_arc_colors; ++c) {
        ArcClassReport ar;
        ar.color = c;
        ar.required_arcs = 2 * n - 1;
        std::vector<std::vector<int>> out(n), in(n);
        for (const auto& a : target.arcs)
            if (a.color == c) {
                ++ar.arc_count;
                out[a.tail].push_back(a.head);
                in[a.head].push_back(a.tail);
            }
        const int bound = 2 * n * n;
        ar.both_parity_reachable = true;
        for (int u = 0; u < n && ar.both_parity_reachable; ++u) {
            std::vector<char> cur(n, 0), odd(n, 0), even(n, 0);
            cur[u] = 1;
            for (int step = 1; step <= bound; ++step) {
                std::vector<char> next(n, 0);
                bool fwd = step % 2 == 1;  // alternating, forward first
                for (int x = 0; x < n; ++x)
                    if (cur[x])
                        for (int y : fwd ? out[x] : in[x]) next[y] = 1;
                for (int y = 0; y < n; ++y)
                    if (next[y]) (fwd ? odd[y] : even[y]) = 1;
                cur.swap(next);
            }
            for (int y = 0; y < n; ++y)
                if (!odd[y] || !even[y]) {
                    ar.both_parity_reachable = false;
                    break;
                }
        }
        rep.arc_classes.push_back(ar);
    }
    return rep;
}

}  // namespace mgh
