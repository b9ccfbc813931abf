#include "makergame/candidate.hpp"
#include "makergame/errors.hpp"
#include "makergame/oracle.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace makergame;
using testhelpers::fix_all_b;
using testhelpers::make_board;
using testhelpers::random_hypergraph;

TEST_CASE("minimax values on pinned instances") {
    // two vertices, one hyperedge, maker first: alternation gives one each
    CHECK(minimax_hypergraph(2, {{0, 1}}, true) == std::vector<int>{1});
    // four vertices, one hyperedge of all four, breaker first
    CHECK(minimax_hypergraph(4, {{0, 1, 2, 3}}, false) == std::vector<int>{2});
    // two disjoint triples, breaker first
    CHECK(minimax_hypergraph(6, {{0, 1, 2}, {3, 4, 5}}, false) == std::vector<int>{1, 2});

    CHECK_THROWS_AS(minimax_hypergraph(15, {{0}}, true), OracleCapError);
}

TEST_CASE("engine sandwiched between quota and the optimum") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        auto h = random_hypergraph(rng, 10, 3, 8);
        auto res = play_engine_vs_oracle(h.vertex_count, h.edges, false);
        CHECK(res.quota_met);
        auto optimum = minimax_hypergraph(h.vertex_count, h.edges, false);
        int engine_min = *std::min_element(res.maker_counts.begin(), res.maker_counts.end());
        CHECK(engine_min <= optimum.front());
        CHECK(static_cast<double>(engine_min) >= res.quota_value);
    }
}

TEST_CASE("naive candidate enumeration agrees with the optimized checker") {
    std::mt19937_64 rng(77);
    int checks = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        GameBoard board = make_board(TargetGraph::cycle(n), 2 + static_cast<std::int64_t>(rng() % 3));
        GamePosition pos(board);
        fix_all_b(pos);
        for (auto [u, v] : board.graph.edges())
            for (std::int64_t i = 0; i < board.spec.s(); ++i)
                for (std::int64_t j = 0; j < board.spec.s(); ++j) {
                    auto r = rng() % 3;
                    if (r == 0)
                        pos.claim(Player::Maker, board.make_edge({u, i}, {v, j}));
                    else if (r == 1)
                        pos.claim(Player::Breaker, board.make_edge({u, i}, {v, j}));
                }
        for (auto [a, b] : board.graph.edges()) {
            Vertex u = a, v = b;
            if (board.leveling.level_of(u) > board.leveling.level_of(v)) std::swap(u, v);
            for (std::int64_t k = 0; k < board.spec.s(); ++k) {
                StarVertex x{v, k};
                CHECK(is_candidate_wrt_edge(pos, x, u, v) ==
                      verify_candidate_by_enumeration(pos, x, u, v));
                ++checks;
            }
        }
    }
    CHECK(checks > 400);
}

TEST_CASE("enumeration edge cases") {
    GameBoard board = make_board(TargetGraph::single_edge(), 4);
    GamePosition pos(board);
    fix_all_b(pos);
    StarVertex x{1, 0};
    // empty maker graph with a nonempty lower neighborhood
    CHECK(!verify_candidate_by_enumeration(pos, x, 0, 1));
    // fully connected maker graph
    for (std::int64_t i = 0; i < 4; ++i)
        for (std::int64_t j = 0; j < 4; ++j)
            pos.claim(Player::Maker, board.make_edge({0, i}, {1, j}));
    CHECK(verify_candidate_by_enumeration(pos, x, 0, 1));
}
