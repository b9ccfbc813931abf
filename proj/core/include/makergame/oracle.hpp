#pragma once

#include "makergame/board.hpp"
#include "makergame/discrepancy.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace makergame {

// Exhaustive solver for positional games on hypergraphs with at most 14
// vertices. The game value is the ascending-sorted vector of final maker
// counts: Maker maximizes it lexicographically, Breaker minimizes it, so the
// first component is the guaranteed minimum hyperedge count.
class HypergraphSolver {
public:
    HypergraphSolver(int vertex_count, std::vector<std::vector<int>> hyperedges);

    static constexpr int kMaxVertices = 14;

    std::vector<int> value(std::uint32_t maker_mask, std::uint32_t breaker_mask, bool maker_turn);

    // optimal move for the side to play; -1 when the board is full
    int best_move(std::uint32_t maker_mask, std::uint32_t breaker_mask, bool maker_turn);

    int vertex_count() const { return nv_; }

private:
    std::vector<int> terminal_value(std::uint32_t maker_mask) const;

    int nv_;
    std::vector<std::uint32_t> edge_masks_;
    std::unordered_map<std::uint64_t, std::vector<int>> memo_;
};

// Full game value from the empty position.
std::vector<int> minimax_hypergraph(int vertex_count, const std::vector<std::vector<int>>& hyperedges,
                                    bool maker_first);

// Plays the exponential-weight engine against the minimax-optimal breaker;
// the result is sandwiched between the quota and the oracle optimum.
HypergraphPlayResult play_engine_vs_oracle(int vertex_count,
                                           const std::vector<std::vector<int>>& hyperedges,
                                           bool maker_first);

// Definition-faithful candidate check: plain tuple loops, no masks, no
// caching. Differential reference for the optimized checker.
bool verify_candidate_by_enumeration(const GamePosition& pos, const StarVertex& x, Vertex u,
                                     Vertex v);

} // namespace makergame
