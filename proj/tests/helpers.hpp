#pragma once

// Brute-force references shared by the test suites. These deliberately avoid
// the library's own shortest-path / candidate / engine code paths.

#include "makergame/board.hpp"
#include "makergame/graph.hpp"
#include "makergame/leveling.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace testhelpers {

using namespace makergame;

// Shortest path by exhaustive simple-path enumeration.
inline std::optional<int> brute_force_distance(const TargetGraph& g, Vertex s, Vertex t) {
    if (s == t) return 0;
    std::optional<int> best;
    std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
    auto dfs = [&](auto&& self, Vertex at, int len) -> void {
        if (best && len >= *best) return;
        if (at == t) {
            best = len;
            return;
        }
        used[static_cast<std::size_t>(at)] = 1;
        for (Vertex nb : g.neighbors(at))
            if (!used[static_cast<std::size_t>(nb)]) self(self, nb, len + 1);
        used[static_cast<std::size_t>(at)] = 0;
    };
    dfs(dfs, s, 0);
    return best;
}

inline GameBoard make_board(TargetGraph g, std::int64_t s) {
    Leveling l = level_greedy(g);
    return GameBoard::build(std::move(g), std::move(l), s);
}

// Fix every B_v to the first s block indices (fresh positions only).
inline void fix_all_b(GamePosition& pos) {
    const auto& board = pos.board();
    for (Vertex v = 0; v < board.graph.vertex_count(); ++v) {
        std::vector<std::int64_t> idxs;
        for (std::int64_t k = 0; k < board.spec.s(); ++k) idxs.push_back(k);
        pos.set_b(v, idxs);
    }
}

// Random hypergraph for engine property tests.
struct RandomHypergraph {
    int vertex_count = 0;
    std::vector<std::vector<int>> edges;
};

inline RandomHypergraph random_hypergraph(std::mt19937_64& rng, int max_vertices, int max_edges,
                                          int max_edge_size) {
    RandomHypergraph h;
    h.vertex_count = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices - 1));
    int ne = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_edges));
    for (int e = 0; e < ne; ++e) {
        int size = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(
                                            std::min(max_edge_size, h.vertex_count) - 1));
        std::vector<int> ids(static_cast<std::size_t>(h.vertex_count));
        for (int v = 0; v < h.vertex_count; ++v) ids[static_cast<std::size_t>(v)] = v;
        for (int k = 0; k < size; ++k) {
            std::size_t j = static_cast<std::size_t>(k) +
                            rng() % (ids.size() - static_cast<std::size_t>(k));
            std::swap(ids[static_cast<std::size_t>(k)], ids[j]);
        }
        ids.resize(static_cast<std::size_t>(size));
        h.edges.push_back(std::move(ids));
    }
    return h;
}

} // namespace testhelpers
