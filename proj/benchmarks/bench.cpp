#include "makergame/breaker.hpp"
#include "makergame/discrepancy.hpp"
#include "makergame/maker.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace makergame;

namespace {

GameBoard c6_board(std::int64_t s) {
    TargetGraph g = TargetGraph::cycle(6);
    Leveling l = level_greedy(g);
    return GameBoard::build(std::move(g), std::move(l), s);
}

// subgame-shaped hypergraph: X edges of size about half the board
std::vector<std::vector<int>> dense_edges(int nv, int ne, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> edges;
    for (int e = 0; e < ne; ++e) {
        std::vector<int> members;
        for (int v = 0; v < nv; ++v)
            if (rng() % 2) members.push_back(v);
        if (members.size() < 2) members = {0, 1};
        edges.push_back(std::move(members));
    }
    return edges;
}

void BM_engine_game(benchmark::State& state) {
    int nv = static_cast<int>(state.range(0));
    auto edges = dense_edges(nv, static_cast<int>(state.range(1)), 42);
    for (auto _ : state) {
        auto res = play_hypergraph_game(HypergraphGame(nv, edges), hypergraph_passing_breaker(),
                                        true);
        benchmark::DoNotOptimize(res.maker_counts.data());
    }
}
BENCHMARK(BM_engine_game)->Args({128, 128})->Args({64, 1024});

void BM_claims(benchmark::State& state) {
    GameBoard board = c6_board(64);
    std::mt19937_64 rng(1);
    for (auto _ : state) {
        state.PauseTiming();
        GamePosition pos(board);
        state.ResumeTiming();
        for (int i = 0; i < 10000; ++i) {
            StarVertex a{0, static_cast<std::int64_t>(rng() % 64)};
            StarVertex b{1, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(
                                board.spec.block_size(1)))};
            StarEdge e = board.make_edge(a, b);
            if (!pos.is_claimed(e)) pos.claim(Player::Maker, e);
        }
        benchmark::DoNotOptimize(pos.claimed_edge_count());
    }
}
BENCHMARK(BM_claims);

void BM_full_game_c6(benchmark::State& state) {
    GameBoard board = c6_board(state.range(0));
    for (auto _ : state) {
        RandomBreaker breaker(7);
        MakerConfig mc;
        mc.record_moves = false;
        Outcome out = run_game(board, breaker, mc);
        benchmark::DoNotOptimize(out.rounds);
    }
}
BENCHMARK(BM_full_game_c6)->Arg(32)->Arg(128);

} // namespace

BENCHMARK_MAIN();
