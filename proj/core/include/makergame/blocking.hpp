#pragma once

#include "makergame/bitset.hpp"
#include "makergame/graph.hpp"
#include "makergame/leveling.hpp"

#include <string>
#include <vector>

namespace makergame {

// Directed blocking graph D over V(G). u blocks v when l(u) < l(v) and
// either (u,v) is a G-edge, or some w with l(w) < l(u) is adjacent to both.
// Arcs run from v to u; levels strictly decrease along arcs, so D is acyclic.
struct BlockingDag {
    std::vector<std::vector<Vertex>> arcs;  // out-neighbors, sorted by id
    std::vector<std::vector<Vertex>> preds; // reverse arcs, sorted by id
    std::vector<Bitset> descendants;        // P(v), excluding v
    std::vector<int> p_size;                // |P(v)|

    int out_degree(Vertex v) const { return static_cast<int>(arcs[static_cast<std::size_t>(v)].size()); }
    const std::vector<Vertex>& out(Vertex v) const { return arcs[static_cast<std::size_t>(v)]; }

    std::vector<Vertex> descendant_list(Vertex v) const;

    // "v u" per arc
    std::string to_arc_list() const;
};

BlockingDag build_blocking_dag(const TargetGraph& g, const Leveling& l);

struct DagBoundsReport {
    int max_out_degree = 0;
    long long out_degree_bound = 0; // d^2
    int max_descendants = 0;
    unsigned long long descendant_bound = 0; // (d^2)^r, saturated at 2^64-1
    bool descendant_bound_saturated = false;
    bool out_degree_ok = false;
    bool descendants_ok = false;
    bool arcs_level_decreasing = false;

    bool pass() const { return out_degree_ok && descendants_ok && arcs_level_decreasing; }
    std::string to_text() const;
};

DagBoundsReport check_dag_bounds(const BlockingDag& dag, const TargetGraph& g, const Leveling& l);

} // namespace makergame
