#include "makergame/breaker.hpp"
#include "makergame/errors.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <sstream>

using namespace makergame;
using testhelpers::make_board;

TEST_CASE("random breaker emits unclaimed board edges, deterministically per seed") {
    GameBoard board = make_board(TargetGraph::cycle(6), 8);
    std::vector<StarEdge> first, second;
    for (int pass = 0; pass < 2; ++pass) {
        MakerEngine engine(board);
        RandomBreaker breaker(42);
        auto& edges = pass == 0 ? first : second;
        for (int i = 0; i < 50 && !engine.game_over(); ++i) {
            auto e = breaker.next(engine);
            REQUIRE(e.has_value());
            CHECK(board.is_board_edge(e->lo, e->hi));
            CHECK(!engine.position().is_claimed(*e));
            edges.push_back(*e);
            ScriptedBreaker one({*e});
            engine.step(one);
        }
    }
    CHECK(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
}

TEST_CASE("scatter targets the largest descendant sets first") {
    GameBoard board = make_board(TargetGraph::cycle(6), 8);
    MakerEngine engine(board);
    ScatterBreaker breaker(1);
    auto e = breaker.next(engine);
    REQUIRE(e.has_value());
    // v2 and v5 have |P| = 4 and are not ready; lowest id wins the tie, and
    // the untouched target is reached from its first lower neighbor
    CHECK(e->hi.g == 2);
    CHECK(e->hi.idx == 0);
    CHECK(e->lo == StarVertex{1, 0});

    // successive calls walk the untouched prefix
    ScriptedBreaker replay({*e});
    engine.step(replay);
    auto e2 = breaker.next(engine);
    REQUIRE(e2.has_value());
    CHECK(e2->hi.g == 2);
    CHECK(e2->hi.idx == 1);
}

TEST_CASE("greedy breaker attacks a live subgame") {
    GameBoard board = make_board(TargetGraph::cycle(6), 8);
    MakerEngine engine(board);
    GreedySubgameBreaker breaker(1);
    auto e = breaker.next(engine);
    REQUIRE(e.has_value());
    // all live subgames at the start belong to v1 and v4 (t = 1 boards);
    // the attack lands inside one of their boards
    CHECK((e->hi.g == 1 || e->hi.g == 4));
    CHECK(engine.position().b_position(e->hi).has_value());
    CHECK(engine.position().b_position(e->lo).has_value());

    // full game: still a maker win, and the policy never emits a bad edge
    Outcome out = engine.run(breaker);
    CHECK(out.maker_win);
}

TEST_CASE("scripted breaker replays and then passes") {
    GameBoard board = make_board(TargetGraph::cycle(6), 8);
    MakerEngine engine(board);
    auto script = ScriptedBreaker::parse_script("v0#0 v1#0\npass\nv0#1 v1#1\n");
    ScriptedBreaker breaker(script);
    auto e1 = breaker.next(engine);
    REQUIRE(e1.has_value());
    CHECK(e1->lo == StarVertex{0, 0});
    CHECK(!breaker.next(engine).has_value()); // pass
    auto e3 = breaker.next(engine);
    REQUIRE(e3.has_value());
    CHECK(e3->hi == StarVertex{1, 1});
    CHECK(!breaker.next(engine).has_value()); // exhausted
    CHECK(!breaker.next(engine).has_value());

    CHECK_THROWS_AS(ScriptedBreaker::parse_script("v0#0\n"), ScriptError);
}

TEST_CASE("interactive breaker parses claims and reprompts on garbage") {
    GameBoard board = make_board(TargetGraph::cycle(6), 8);
    MakerEngine engine(board);
    std::istringstream in("nonsense\nshow 1\n0#0 1#3\nquit\n");
    std::ostringstream out;
    InteractiveBreaker breaker(in, out);
    auto e = breaker.next(engine);
    REQUIRE(e.has_value());
    CHECK(*e == board.make_edge({0, 0}, {1, 3}));
    CHECK(out.str().find("expected:") != std::string::npos);
    CHECK(out.str().find("B =") != std::string::npos);
    CHECK_THROWS_AS(breaker.next(engine), BreakerQuit);
}

TEST_CASE("factory") {
    CHECK(make_breaker("random", 1)->name() == "random");
    CHECK(make_breaker("greedy", 1)->name() == "greedy");
    CHECK(make_breaker("scatter", 1)->name() == "scatter");
    CHECK(make_breaker("scripted", 1, "pass\n")->name() == "scripted");
    CHECK_THROWS_AS(make_breaker("chaos", 1), ConfigError);
}
