#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mgh/graph.hpp"

namespace mgh {

// Exact rational arithmetic; all comparisons cross-multiply in 128 bits.
struct Rational {
    long long num = 0;
    long long den = 1;  // always > 0, gcd(num,den) == 1

    Rational() = default;
    Rational(long long n, long long d = 1);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const;
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
};

// Length of the shortest cycle of the underlying simple graph; nullopt for
// forests.
std::optional<int> girth(const MixedGraph& g);

bool is_bipartite(const MixedGraph& g);

// Maximum over nonempty vertex subsets S of 2*e(S)/|S|, computed exactly.
// Dispatches to subset enumeration for small graphs, parametric flow above.
Rational mad_exact(const MixedGraph& g);
Rational mad_exact_exhaustive(const MixedGraph& g);  // |V| <= 24
Rational mad_exact_flow(const MixedGraph& g);

struct DischargingReport {
    int k = 0;
    int max_consecutive_2vertices = 0;
    int max_2weak_neighbors_of_3vertex = 0;
    bool hypothesis_holds = false;
    std::string reason;  // nonempty when the hypothesis fails
    Rational mad_lower_bound;     // 2 + 2/(k+2)
    int girth_exclusion = 0;      // 2k + 6
    std::optional<Rational> mad_value;  // computed when the hypothesis holds
    bool mad_meets_bound = false;
};

// Hypothesis: minimum degree 2, no component made only of 2-vertices, at most
// floor((k+1)/2) consecutive 2-vertices on any path, and every 3-vertex has
// at most k 2-weak-neighbors. When it holds, mad_exact(g) >= 2 + 2/(k+2).
DischargingReport check_discharging(const MixedGraph& g, int k);

struct EdgeBoundReport {
    long long required = 0;    // (2m+n)k - m - n
    long long planar_max = 0;  // 3k - 6
    bool impossible = false;   // required > planar_max for every k >= 3, i.e. 2m+n >= 3
};

EdgeBoundReport universality_edge_bound(int m, int n, int k);

struct EdgeClassReport {
    int color = 0;
    bool connected_spanning = false;
    int edge_count = 0;
    int spanning_tree_edges = 0;  // |V| - 1
};

struct ArcClassReport {
    int color = 0;
    bool both_parity_reachable = false;  // alternating walks, all ordered pairs
    int arc_count = 0;
    int required_arcs = 0;  // 2|V| - 1
};

struct ConnectivityReport {
    std::vector<EdgeClassReport> edge_classes;
    std::vector<ArcClassReport> arc_classes;
    bool all_pass() const;
};

ConnectivityReport color_class_connectivity(const MixedGraph& target);

// Degree in the underlying simple graph.
std::vector<int> degrees(const MixedGraph& g);

}  // namespace mgh
