#include "makergame/oracle.hpp"

#include "makergame/candidate.hpp"
#include "makergame/errors.hpp"

#include <algorithm>
#include <bit>
#include <memory>

namespace makergame {

HypergraphSolver::HypergraphSolver(int vertex_count, std::vector<std::vector<int>> hyperedges)
    : nv_(vertex_count) {
    if (nv_ < 0 || nv_ > kMaxVertices)
        throw OracleCapError("solver handles at most " + std::to_string(kMaxVertices) + " vertices");
    for (const auto& e : hyperedges) {
        std::uint32_t mask = 0;
        for (int v : e) {
            if (v < 0 || v >= nv_) throw Error("hyperedge member out of range");
            mask |= 1u << v;
        }
        edge_masks_.push_back(mask);
    }
}

std::vector<int> HypergraphSolver::terminal_value(std::uint32_t maker_mask) const {
    std::vector<int> counts;
    counts.reserve(edge_masks_.size());
    for (auto m : edge_masks_) counts.push_back(std::popcount(m & maker_mask));
    std::sort(counts.begin(), counts.end());
    return counts;
}

std::vector<int> HypergraphSolver::value(std::uint32_t maker_mask, std::uint32_t breaker_mask,
                                         bool maker_turn) {
    const std::uint32_t full = (nv_ == 32 ? ~0u : (1u << nv_) - 1);
    std::uint32_t open = full & ~(maker_mask | breaker_mask);
    if (!open) return terminal_value(maker_mask);

    std::uint64_t key = static_cast<std::uint64_t>(maker_mask) |
                        (static_cast<std::uint64_t>(breaker_mask) << 14) |
                        (static_cast<std::uint64_t>(maker_turn) << 28);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<int> best;
    for (std::uint32_t rest = open; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        std::vector<int> val =
            maker_turn ? value(maker_mask | (1u << v), breaker_mask, false)
                       : value(maker_mask, breaker_mask | (1u << v), true);
        if (best.empty() ? true : (maker_turn ? val > best : val < best)) best = std::move(val);
    }
    memo_.emplace(key, best);
    return best;
}

int HypergraphSolver::best_move(std::uint32_t maker_mask, std::uint32_t breaker_mask,
                                bool maker_turn) {
    const std::uint32_t full = (nv_ == 32 ? ~0u : (1u << nv_) - 1);
    std::uint32_t open = full & ~(maker_mask | breaker_mask);
    if (!open) return -1;
    int best_v = -1;
    std::vector<int> best;
    for (std::uint32_t rest = open; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        std::vector<int> val =
            maker_turn ? value(maker_mask | (1u << v), breaker_mask, false)
                       : value(maker_mask, breaker_mask | (1u << v), true);
        if (best_v < 0 || (maker_turn ? val > best : val < best)) {
            best_v = v;
            best = std::move(val);
        }
    }
    return best_v;
}

std::vector<int> minimax_hypergraph(int vertex_count,
                                    const std::vector<std::vector<int>>& hyperedges,
                                    bool maker_first) {
    HypergraphSolver solver(vertex_count, hyperedges);
    return solver.value(0, 0, maker_first);
}

HypergraphPlayResult play_engine_vs_oracle(int vertex_count,
                                           const std::vector<std::vector<int>>& hyperedges,
                                           bool maker_first) {
    auto solver = std::make_shared<HypergraphSolver>(vertex_count, hyperedges);
    auto breaker = [solver](const HypergraphGame& g) -> int {
        std::uint32_t maker_mask = 0, breaker_mask = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.mark(v) == HypergraphGame::Mark::Maker) maker_mask |= 1u << v;
            if (g.mark(v) == HypergraphGame::Mark::Breaker) breaker_mask |= 1u << v;
        }
        return solver->best_move(maker_mask, breaker_mask, false);
    };
    return play_hypergraph_game(HypergraphGame(vertex_count, hyperedges), breaker, maker_first);
}

bool verify_candidate_by_enumeration(const GamePosition& pos, const StarVertex& x, Vertex u,
                                     Vertex v) {
    const auto& board = pos.board();
    auto uppers = upper_set(board.graph, board.leveling, u, v);
    if (!pos.b_determined(u)) throw BUndeterminedError("B_u undetermined");
    for (Vertex ui : uppers)
        if (!pos.b_determined(ui)) throw BUndeterminedError("upper B undetermined");

    const std::size_t t = uppers.size() + 1;
    const std::int64_t denom = static_cast<std::int64_t>(t) << t;
    auto bu = pos.b_set(u);

    std::vector<std::size_t> choice(uppers.size(), 0);
    for (;;) {
        // count B_u members Maker-connected to the whole tuple and to x
        std::int64_t count = 0;
        for (auto bidx : bu) {
            StarVertex bstar{u, bidx};
            bool ok = pos.maker_has(bstar, x);
            for (std::size_t i = 0; i < uppers.size() && ok; ++i) {
                auto bi = pos.b_set(uppers[i])[choice[i]];
                ok = pos.maker_has(bstar, StarVertex{uppers[i], bi});
            }
            if (ok) ++count;
        }
        if (count * denom < static_cast<std::int64_t>(bu.size())) return false;

        std::size_t d = 0;
        for (; d < choice.size(); ++d) {
            if (++choice[d] < pos.b_set(uppers[d]).size()) break;
            choice[d] = 0;
        }
        if (d == choice.size()) return true;
    }
}

} // namespace makergame
