#include "makergame/breaker.hpp"
#include "makergame/errors.hpp"
#include "makergame/experiment.hpp"
#include "makergame/transcript.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace makergame;

namespace {

std::string play_to_text(RunConfig cfg) {
    GameBoard board = board_from_config(cfg);
    auto breaker = make_breaker(cfg.breaker, cfg.breaker_seed);
    MakerEngine engine(board);
    Outcome out = engine.run(*breaker);
    cfg.s_value = board.spec.s();
    cfg.round_cap = out.round_cap;
    return write_transcript(cfg, board, out);
}

} // namespace

TEST_CASE("config resolution") {
    RunConfig cfg;
    cfg.graph_spec = "c6";
    cfg.s_mode = "custom";
    cfg.s_value = 4;
    GameBoard board = board_from_config(cfg);
    CHECK(board.spec.s() == 4);
    CHECK(board.graph.vertex_count() == 6);

    cfg.graph_spec = "random:10,3,5";
    cfg.s_mode = "custom";
    cfg.s_value = 2;
    GameBoard rboard = board_from_config(cfg);
    CHECK(rboard.graph.vertex_count() == 10);
    CHECK(rboard.graph.degree() == 3);

    cfg.graph_spec = "nope:";
    CHECK_THROWS(board_from_config(cfg));
}

TEST_CASE("transcript round trip is byte identical") {
    RunConfig cfg;
    cfg.graph_spec = "c6";
    cfg.s_mode = "custom";
    cfg.s_value = 16;
    cfg.breaker = "random";
    cfg.breaker_seed = 9;
    std::string text = play_to_text(cfg);

    auto res = verify_transcript(text);
    CHECK(res.ok);
    CHECK(res.byte_identical);
    CHECK(res.first_divergence.empty());
    CHECK(res.outcome.maker_win);
    CHECK(res.outcome.scheme_verified);
}

TEST_CASE("parse rejects garbage and truncation") {
    CHECK_THROWS_AS(parse_transcript("hello\n"), ParseError);
    RunConfig cfg;
    cfg.graph_spec = "edge";
    cfg.s_mode = "custom";
    cfg.s_value = 4;
    std::string text = play_to_text(cfg);
    std::string truncated = text.substr(0, text.size() - 5);
    CHECK_THROWS_AS(parse_transcript(truncated), ParseError);
}

TEST_CASE("a tampered maker move produces a divergence report") {
    RunConfig cfg;
    cfg.graph_spec = "edge";
    cfg.s_mode = "custom";
    cfg.s_value = 8;
    cfg.breaker = "random";
    cfg.breaker_seed = 3;
    std::string text = play_to_text(cfg);

    // rewrite a recorded maker response; the replayed engine will disagree
    auto pos = text.find(" M v0#");
    REQUIRE(pos != std::string::npos);
    auto line_start = text.rfind("move", pos);
    auto line_end = text.find('\n', pos);
    std::string line = text.substr(line_start, line_end - line_start);
    auto hash = line.find('#');
    line = line.substr(0, hash + 1) + "7" + line.substr(line.find(' ', hash));
    std::string tampered = text.substr(0, line_start) + line + text.substr(line_end);
    REQUIRE(tampered != text);

    auto res = verify_transcript(tampered);
    CHECK(!res.ok);
    CHECK(!res.first_divergence.empty());
    CHECK(res.first_divergence.find("line") != std::string::npos);
}

TEST_CASE("experiment aggregates and derives per-run seeds") {
    RunConfig cfg;
    cfg.graph_spec = "edge";
    cfg.s_mode = "custom";
    cfg.s_value = 16;
    cfg.breaker = "random";
    cfg.breaker_seed = 50;
    GameBoard board = board_from_config(cfg);

    ExperimentReport rep = run_experiment(board, cfg, 8, 2);
    CHECK(rep.runs == 8);
    CHECK(rep.wins == 8);
    CHECK(rep.errors == 0);
    CHECK(rep.invariant_violations == 0);
    CHECK(rep.quota_violations == 0);
    REQUIRE(rep.per_run.size() == 8);
    for (int i = 0; i < 8; ++i) {
        CHECK(rep.per_run[static_cast<std::size_t>(i)].seed == 50 + static_cast<std::uint64_t>(i));
        CHECK(rep.per_run[static_cast<std::size_t>(i)].win);
    }
    CHECK(rep.max_rounds >= 1);
    CHECK(rep.to_text().find("aggregate runs=8 wins=8") != std::string::npos);

    ExperimentReport empty = run_experiment(board, cfg, 0);
    CHECK(empty.runs == 0);
    CHECK(empty.per_run.empty());
}
