#include "makergame/discrepancy.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace makergame;
using testhelpers::random_hypergraph;

TEST_CASE("quota arithmetic") {
    CHECK(quota(4, 1) == doctest::Approx(0.8225899775).epsilon(1e-9));
    CHECK(quota(2, 1) == doctest::Approx(0.1674453888).epsilon(1e-9));
    CHECK(quota(100, 1) == doctest::Approx(44.1129498874).epsilon(1e-9));
    CHECK_THROWS(quota(0, 1));

    // strictly below x/2 for every X >= 1
    for (std::int64_t x : {1, 2, 16, 256})
        for (std::int64_t X : {1, 2, 64, 4096}) CHECK(quota(x, X) < static_cast<double>(x) / 2.0);
}

TEST_CASE("maker move rule") {
    SUBCASE("fresh single hyperedge: tie-break to vertex 0") {
        HypergraphGame g(4, {{0, 1, 2, 3}});
        CHECK(g.best_maker_move() == 0);
    }
    SUBCASE("threatened hyperedge attracts the move") {
        HypergraphGame g(6, {{0, 1, 2}, {3, 4, 5}});
        g.claim(4, HypergraphGame::Mark::Breaker);
        int mv = g.best_maker_move();
        CHECK((mv == 3 || mv == 5));
    }
    SUBCASE("one unclaimed vertex left") {
        HypergraphGame g(2, {{0, 1}});
        g.claim(0, HypergraphGame::Mark::Maker);
        CHECK(g.best_maker_move() == 1);
    }
    SUBCASE("no hyperedges: lowest unclaimed index") {
        HypergraphGame g(3, {});
        g.claim(0, HypergraphGame::Mark::Breaker);
        CHECK(g.best_maker_move() == 1);
    }
}

TEST_CASE("counts stay consistent") {
    HypergraphGame g(5, {{0, 1, 2}, {2, 3, 4}});
    g.claim(2, HypergraphGame::Mark::Maker);
    g.claim(0, HypergraphGame::Mark::Breaker);
    CHECK(g.maker_count(0) == 1);
    CHECK(g.breaker_count(0) == 1);
    CHECK(g.maker_count(1) == 1);
    CHECK(g.breaker_count(1) == 0);
    CHECK(g.maker_count(0) + g.breaker_count(0) <= g.edge_size(0));
    CHECK_THROWS(g.claim(2, HypergraphGame::Mark::Breaker));
    CHECK(g.first_unclaimed_in_edge(0) == 1);
    CHECK(g.min_maker_count() == 1);
}

TEST_CASE("play examples") {
    SUBCASE("X=1, x=4 vs random breaker clears the quota") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto res = play_hypergraph_game(HypergraphGame(4, {{0, 1, 2, 3}}),
                                            hypergraph_random_breaker(seed), false);
            CHECK(res.maker_counts[0] >= 1); // ceil(0.8226)
            CHECK(res.quota_met);
        }
    }
    SUBCASE("passing breaker leaves the whole hyperedge to maker") {
        auto res = play_hypergraph_game(HypergraphGame(5, {{0, 1, 2, 3, 4}}),
                                        hypergraph_passing_breaker(), false);
        CHECK(res.maker_counts[0] == 5);
    }
    SUBCASE("greedy breaker on two disjoint edges") {
        auto res = play_hypergraph_game(HypergraphGame(6, {{0, 1, 2}, {3, 4, 5}}),
                                        hypergraph_greedy_breaker(), false);
        CHECK(res.quota_met);
    }
    SUBCASE("greedy breaker attacks the minimum maker count") {
        HypergraphGame g(6, {{0, 1, 2}, {3, 4, 5}});
        g.claim(0, HypergraphGame::Mark::Maker);
        // edge 1 has the smaller maker count now
        int pick = hypergraph_greedy_breaker()(g);
        CHECK(pick == 3);
        g.claim(3, HypergraphGame::Mark::Breaker);
        g.claim(4, HypergraphGame::Mark::Maker);
        // counts tied again at 1; the first open edge wins, lowest vertex
        CHECK(hypergraph_greedy_breaker()(g) == 1);
    }
}

TEST_CASE("quota property over random hypergraphs") {
    std::mt19937_64 rng(2024);
    for (int game = 0; game < 150; ++game) {
        auto h = random_hypergraph(rng, 64, 16, 48);
        HypergraphGame f(h.vertex_count, h.edges);
        auto breaker = (game % 2) ? hypergraph_greedy_breaker()
                                  : hypergraph_random_breaker(rng());
        auto res = play_hypergraph_game(std::move(f), breaker, false);
        CHECK(res.quota_met);
        for (std::size_t e = 0; e < res.maker_counts.size(); ++e)
            CHECK(static_cast<double>(res.maker_counts[e]) >= res.quota_value);
    }
}

TEST_CASE("potential growth per round is bounded by one breaker increment") {
    std::mt19937_64 rng(5);
    for (int game = 0; game < 30; ++game) {
        auto h = random_hypergraph(rng, 16, 6, 12);
        if (h.vertex_count % 2) h.vertex_count += 1; // breaker first, maker answers every round
        HypergraphGame f(h.vertex_count, h.edges);
        auto breaker = hypergraph_random_breaker(rng());
        const long double factor = std::exp(static_cast<long double>(f.lambda())) - 1.0L;
        while (!f.all_claimed()) {
            long double before = f.potential();
            // worst single breaker increment from this position
            long double worst = 0.0L;
            for (int v = 0; v < f.vertex_count(); ++v) {
                if (f.claimed(v)) continue;
                long double s = 0.0L;
                for (int e = 0; e < f.hyperedge_count(); ++e)
                    if (f.edge_contains(e, v)) s += f.weight_of(e);
                worst = std::max(worst, s * factor);
            }
            int bv = breaker(f);
            f.claim(bv, HypergraphGame::Mark::Breaker);
            long double mid = f.potential();
            CHECK(mid <= before + worst + 1e-9L);
            if (f.all_claimed()) break;
            f.claim(f.best_maker_move(), HypergraphGame::Mark::Maker);
            long double after = f.potential();
            // maker's own move never increases the potential
            CHECK(after <= mid * (1.0L + 1e-12L) + 1e-12L);
            CHECK(after <= before + worst + 1e-9L);
        }
    }
}
