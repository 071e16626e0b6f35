#pragma once

#include <map>
#include <string>

#include "mgh/graph.hpp"

namespace mgh {

struct ConstructionSpec {
    std::string name;
    std::map<std::string, int> params;  // e.g. {"girth", 5}

    int param_or(const std::string& key, int fallback) const {
        auto it = params.find(key);
        return it == params.end() ? fallback : it->second;
    }
};

// Deterministic generators. Names:
//   cactus        girth g >= 3: circuit of length g' (smallest >= g, == 4 mod 6)
//                 with one alternating-pattern cycle hung on each circuit vertex
//   outerplanar5  girth g >= 3: alternating cycle of length g' (== 2 mod 4) with
//                 opposite-color paths bridging consecutive cycle vertices
//   x14           the 14-cycle with tails at even indices except the last arc
//   p7            the 7-vertex path with the fixed zigzag orientation
//   y_graph       8 copies of x14 tied together by 49 copies of p7
//   red_cycles    12 all-red 11-cycles joined by 121 blue paths of length 5
//   bip_g10       a girth-10 bipartite assembly of outerplanar5(10) copies with
//                 blue-5 paths to one part and blue-blue-red-blue paths to the
//                 other (param swap_parts = 1 swaps the two parts)
MixedGraph generate(const ConstructionSpec& spec);

// For each link uv, adds degree-2 paths between u and v: one path of
// girth_param-1 edges per edge color; per arc color, two alternating paths of
// girth_param-1 arcs and two of girth_param arcs (u once as tail of the first
// arc, once as head). Original links are retained.
MixedGraph replication_gadget(const MixedGraph& g, int girth_param);

// Smallest h >= minimum with h == residue (mod modulus).
int next_congruent(int minimum, int residue, int modulus);

}  // namespace mgh
