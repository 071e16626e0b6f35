#include "mgh/constructions.hpp"

#include <deque>
#include <stdexcept>

namespace mgh {

int next_congruent(int minimum, int residue, int modulus) {
    int delta = ((residue - minimum) % modulus + modulus) % modulus;
    return minimum + delta;
}

namespace {

std::string num(int x) { return std::to_string(x); }

// Circuit of length g' with an alternating-pattern cycle hung on each vertex.
MixedGraph gen_cactus(int g) {
    const int gp = next_congruent(g, 4, 6);
    MixedGraph out(gp + gp * (gp - 1), 1, 0);
    // circuit v_1..v_gp, arcs v_i -> v_{i+1}, v_gp -> v_1
    for (int i = 0; i < gp; ++i) out.labels[i] = "v" + num(i + 1);
    for (int i = 0; i < gp; ++i) out.add_arc(i, (i + 1) % gp, 0);
    // one copy of the cycle C per circuit vertex; its w_1 is the circuit vertex
    int next = gp;
    for (int copy = 0; copy < gp; ++copy) {
        std::vector<int> w(gp + 1);  // 1-based
        w[1] = copy;
        for (int j = 2; j <= gp; ++j) {
            w[j] = next++;
            out.labels[w[j]] = "c" + num(copy + 1) + "_w" + num(j);
        }
        for (int i = 1; i <= gp / 2; ++i) out.add_arc(w[2 * i - 1], w[2 * i], 0);
        for (int i = 1; i <= gp / 2 - 1; ++i) out.add_arc(w[2 * i + 1], w[2 * i], 0);
        out.add_arc(w[gp], w[1], 0);
    }
    return out;
}

// Alternating cycle of length g' with opposite-color paths bridging the first
// g'-2 consecutive pairs.
MixedGraph gen_outerplanar5(int g) {
    const int gp = next_congruent(g, 2, 4);
    const int internals = gp - 2;
    MixedGraph out(gp + (gp - 2) * internals, 0, 2);
    for (int i = 0; i < gp; ++i) out.labels[i] = "v" + num(i);
    for (int i = 0; i < gp; ++i) out.add_edge(i, (i + 1) % gp, i % 2);
    int next = gp;
    for (int i = 0; i <= gp - 3; ++i) {
        const int color = 1 - i % 2;  // opposite of edge v_i v_{i+1}
        int prev = i;
        for (int j = 1; j <= internals; ++j) {
            int w = next++;
            out.labels[w] = "p" + num(i) + "_w" + num(j);
            out.add_edge(prev, w, color);
            prev = w;
        }
        out.add_edge(prev, i + 1, color);
    }
    return out;
}

// 14-cycle, tails at even indices except the closing arc.
MixedGraph gen_x14() {
    MixedGraph out(14, 1, 0);
    for (int i = 0; i < 14; ++i) out.labels[i] = "v" + num(i);
    for (int i = 0; i < 13; ++i) {
        if (i % 2 == 0)
            out.add_arc(i, i + 1, 0);
        else
            out.add_arc(i + 1, i, 0);
    }
    out.add_arc(13, 0, 0);
    return out;
}

MixedGraph gen_p7() {
    MixedGraph out(7, 1, 0);
    for (int i = 0; i < 7; ++i) out.labels[i] = "p" + num(i);
    out.add_arc(1, 0, 0);
    out.add_arc(1, 2, 0);
    out.add_arc(3, 2, 0);
    out.add_arc(4, 3, 0);
    out.add_arc(5, 4, 0);
    out.add_arc(5, 6, 0);
    return out;
}

// 8 copies of x14 tied together by 49 copies of p7: path copy (i,j) runs from
// vertex i of the main cycle to vertex j of the i-th satellite cycle.
MixedGraph gen_y() {
    const MixedGraph x = gen_x14();
    const MixedGraph p = gen_p7();
    const std::vector<int> evens{0, 2, 4, 6, 8, 10, 12};
    const int nx = 14, satellites = 7;
    int total = nx * (1 + satellites) + 5 * satellites * satellites;
    MixedGraph out(total, 1, 0);

    auto put_x = [&](int offset, const std::string& prefix) {
        for (const auto& a : x.arcs) out.add_arc(offset + a.tail, offset + a.head, 0);
        for (int v = 0; v < nx; ++v) out.labels[offset + v] = prefix + "_v" + num(v);
    };
    put_x(0, "m");
    for (int s = 0; s < satellites; ++s) put_x(nx * (1 + s), "x" + num(evens[s]));

    int next = nx * (1 + satellites);
    for (int si = 0; si < satellites; ++si) {
        for (int sj = 0; sj < satellites; ++sj) {
            const int i = evens[si], j = evens[sj];
            // p0 -> main's v_i, p6 -> satellite si's v_j, p1..p5 fresh
            std::vector<int> node(7);
            node[0] = i;
            node[6] = nx * (1 + si) + j;
            for (int k = 1; k <= 5; ++k) {
                node[k] = next++;
                out.labels[node[k]] = "p" + num(i) + "_" + num(j) + "_" + num(k);
            }
            for (const auto& a : p.arcs) out.add_arc(node[a.tail], node[a.head], 0);
        }
    }
    return out;
}

// 12 all-red 11-cycles, blue length-5 paths from cycle hubs (vertex 11) into
// the other cycles. Cycle vertices are 1-based v_{i,1}..v_{i,11}; a vertex
// index of 0 is read modulo 11 as 11. A path must never stay inside its own
// cycle: its endpoints there would be at red distance at most 5 and close a
// cycle shorter than 11. The diagonal pairs (i,i) therefore attach to the
// spare twelfth cycle, which receives one path per vertex.
MixedGraph gen_red_cycles() {
    const int cycles = 12, len = 11;
    MixedGraph out(cycles * len + 121 * 4, 0, 2);
    auto vat = [&](int copy, int j) {  // j is 1-based
        return copy * len + (j - 1);
    };
    for (int i = 0; i < cycles; ++i) {
        for (int j = 1; j <= len; ++j) out.labels[vat(i, j)] = "x" + num(i) + "_v" + num(j);
        for (int j = 1; j <= len; ++j) out.add_edge(vat(i, j), vat(i, j % len + 1), 1);
    }
    int next = cycles * len;
    for (int i = 0; i <= 10; ++i) {
        const int pos = i == 0 ? len : i;  // vertex index, 0 read as 11
        for (int j = 0; j <= 10; ++j) {
            int from = vat(i, len);
            int to = j == i ? vat(11, pos) : vat(j, pos);
            int prev = from;
            for (int k = 1; k <= 4; ++k) {
                int w = next++;
                out.labels[w] = "b" + num(i) + "_" + num(j) + "_" + num(k);
                out.add_edge(prev, w, 0);
                prev = w;
            }
            out.add_edge(prev, to, 0);
        }
    }
    return out;
}

// Bipartition of a connected bipartite graph by 2-coloring from vertex 0.
std::vector<int> two_color(const MixedGraph& g) {
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
                    throw std::logic_error("expected a bipartite graph");
                }
            }
        }
    }
    return side;
}

// Girth-10 bipartite assembly: a main copy of outerplanar5(10), one extra copy
// per main vertex, blue-5 paths from the vertex to one part of its copy and
// blue-blue-red-blue paths to the other part.
MixedGraph gen_bip_g10(bool swap_parts) {
    const MixedGraph m = gen_outerplanar5(10);
    const int nm = m.num_vertices;
    const auto side = two_color(m);
    int part_a = 0, part_b = 0;
    for (int v = 0; v < nm; ++v) (side[v] == 0 ? part_a : part_b)++;

    const int total = nm + nm * nm + nm * (part_a * 4 + part_b * 3);
    MixedGraph out(total, 0, 2);

    auto put_m = [&](int offset, const std::string& prefix) {
        for (const auto& e : m.edges) out.add_edge(offset + e.u, offset + e.v, e.color);
        for (int v = 0; v < nm; ++v) out.labels[offset + v] = prefix + "_" + m.labels.at(v);
    };
    put_m(0, "y");
    for (int v = 0; v < nm; ++v) put_m(nm * (1 + v), "y" + num(v));

    int next = nm * (1 + nm);
    for (int v = 0; v < nm; ++v) {
        const int off = nm * (1 + v);
        for (int w = 0; w < nm; ++w) {
            bool to_first_part = (side[w] == 0) != swap_parts;
            int prev = v;
            if (to_first_part) {
                // path of 5 blue edges, 4 internal vertices
                for (int k = 1; k <= 4; ++k) {
                    int x = next++;
                    out.labels[x] = "a" + num(v) + "_" + num(w) + "_" + num(k);
                    out.add_edge(prev, x, 0);
                    prev = x;
                }
                out.add_edge(prev, off + w, 0);
            } else {
                // path of 4 edges colored blue, blue, red, blue
                const int colors[4] = {0, 0, 1, 0};
                for (int k = 1; k <= 3; ++k) {
                    int x = next++;
                    out.labels[x] = "b" + num(v) + "_" + num(w) + "_" + num(k);
                    out.add_edge(prev, x, colors[k - 1]);
                    prev = x;
                }
                out.add_edge(prev, off + w, colors[3]);
            }
        }
    }
    return out;
}

}  // namespace

MixedGraph generate(const ConstructionSpec& spec) {
    const std::string& name = spec.name;
    if (name == "cactus" || name == "outerplanar5") {
        int g = spec.param_or("girth", 3);
        if (g < 3) throw std::invalid_argument("girth parameter must be at least 3");
        return name == "cactus" ? gen_cactus(g) : gen_outerplanar5(g);
    }
    if (name == "x14") return gen_x14();
    if (name == "p7") return gen_p7();
    if (name == "y_graph") return gen_y();
    if (name == "red_cycles") return gen_red_cycles();
    if (name == "bip_g10") return gen_bip_g10(spec.param_or("swap_parts", 0) != 0);
    throw std::invalid_argument("unknown construction '" + name + "'");
}

MixedGraph replication_gadget(const MixedGraph& g, int girth_param) {
    if (girth_param < 3) throw std::invalid_argument("girth parameter must be at least 3");
    auto violations = validate_graph(g);
    if (!violations.empty())
        throw std::invalid_argument("invalid input graph: " + violations.front().message);

    MixedGraph out = g;
    int next = g.num_vertices;

    // Alternating arc path of `len` arcs between u and v; u_is_tail picks the
    // direction of the first arc.
    auto add_alternating = [&](int u, int v, int color, int len, bool u_is_tail) {
        std::vector<int> node(len + 1);
        node[0] = u;
        node[len] = v;
        for (int i = 1; i < len; ++i) node[i] = next++;
        for (int i = 1; i <= len; ++i) {
            bool fwd = (i % 2 == 1) == u_is_tail;
            if (fwd)
                out.add_arc(node[i - 1], node[i], color);
            else
                out.add_arc(node[i], node[i - 1], color);
        }
    };
    auto add_edge_path = [&](int u, int v, int color, int len) {
        int prev = u;
        for (int i = 1; i < len; ++i) {
            int w = next++;
            out.add_edge(prev, w, color);
            prev = w;
        }
        out.add_edge(prev, v, color);
    };

    std::vector<std::pair<int, int>> links;
    for (const auto& a : g.arcs) links.emplace_back(a.tail, a.head);
    for (const auto& e : g.edges) links.emplace_back(e.u, e.v);

    for (auto [u, v] : links) {
        for (int j = 0; j < g.num_edge_colors; ++j) add_edge_path(u, v, j, girth_param - 1);
        for (int c = 0; c < g.num_arc_colors; ++c) {
            add_alternating(u, v, c, girth_param - 1, true);
            add_alternating(u, v, c, girth_param - 1, false);
            add_alternating(u, v, c, girth_param, true);
            add_alternating(u, v, c, girth_param, false);
        }
    }
    out.num_vertices = next;
    return out;
}

}  // namespace mgh
