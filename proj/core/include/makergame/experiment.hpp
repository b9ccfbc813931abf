#pragma once

#include "makergame/maker.hpp"
#include "makergame/transcript.hpp"

#include <string>
#include <vector>

namespace makergame {

struct RunSummary {
    int index = 0;
    std::uint64_t seed = 0;
    GameStatus status = GameStatus::Stuck;
    bool win = false;
    std::uint64_t rounds = 0;
    bool invariant_ok = true;
    bool attribution_ok = true;
    int quota_losses = 0;
    bool scheme_verified = false;
    bool embedding_ok = false;
    std::string error;

    std::string to_line() const;
};

struct ExperimentReport {
    int runs = 0;
    int wins = 0;
    int errors = 0;
    double mean_rounds = 0.0;
    std::uint64_t max_rounds = 0;
    std::uint64_t round_cap = 0;
    int invariant_violations = 0;
    int attribution_violations = 0;
    int quota_violations = 0;
    std::vector<RunSummary> per_run;

    std::string aggregate_line() const;
    std::string to_text() const; // one line per run plus the aggregate
};

// Runs `repetitions` games concurrently with per-run breaker seeds
// breaker_seed + index. Per-run failures are collected, not fatal.
ExperimentReport run_experiment(const GameBoard& board, const RunConfig& cfg, int repetitions,
                                unsigned threads = 0);

} // namespace makergame
