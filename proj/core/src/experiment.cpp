#include "makergame/experiment.hpp"

#include "makergame/breaker.hpp"
#include "makergame/errors.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace makergame {

std::string RunSummary::to_line() const {
    std::string out = "run " + std::to_string(index);
    out += " seed=" + std::to_string(seed);
    out += " status=";
    out += status_name(status);
    out += " rounds=" + std::to_string(rounds);
    out += invariant_ok ? " invariant_ok=1" : " invariant_ok=0";
    out += attribution_ok ? " attribution_ok=1" : " attribution_ok=0";
    out += " quota_losses=" + std::to_string(quota_losses);
    out += scheme_verified ? " scheme=1" : " scheme=0";
    out += embedding_ok ? " embedding=1" : " embedding=0";
    if (!error.empty()) out += " error=\"" + error + "\"";
    return out;
}

std::string ExperimentReport::aggregate_line() const {
    std::string out = "aggregate runs=" + std::to_string(runs);
    out += " wins=" + std::to_string(wins);
    out += " errors=" + std::to_string(errors);
    out += " mean_rounds=" + std::to_string(mean_rounds);
    out += " max_rounds=" + std::to_string(max_rounds);
    out += " round_cap=" + std::to_string(round_cap);
    out += " invariant_violations=" + std::to_string(invariant_violations);
    out += " attribution_violations=" + std::to_string(attribution_violations);
    out += " quota_violations=" + std::to_string(quota_violations);
    return out;
}

std::string ExperimentReport::to_text() const {
    std::string out;
    for (const auto& r : per_run) out += r.to_line() + "\n";
    out += aggregate_line() + "\n";
    return out;
}

ExperimentReport run_experiment(const GameBoard& board, const RunConfig& cfg, int repetitions,
                                unsigned threads) {
    ExperimentReport rep;
    rep.runs = repetitions;
    rep.round_cap = cfg.round_cap ? cfg.round_cap : default_round_cap(board);
    if (repetitions <= 0) return rep;
    rep.per_run.resize(static_cast<std::size_t>(repetitions));

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(repetitions));

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= repetitions) return;
            RunSummary sum;
            sum.index = i;
            sum.seed = cfg.breaker_seed + static_cast<std::uint64_t>(i);
            try {
                auto breaker = make_breaker(cfg.breaker, sum.seed);
                MakerConfig mc;
                mc.round_cap = cfg.round_cap;
                mc.record_moves = false;
                Outcome out = run_game(board, *breaker, mc);
                sum.status = out.status;
                sum.win = out.maker_win;
                sum.rounds = out.rounds;
                sum.invariant_ok = out.invariant_ok;
                sum.attribution_ok = out.attribution_ok;
                sum.quota_losses = out.quota_violations;
                sum.scheme_verified = out.scheme_verified;
                sum.embedding_ok = out.embedding_ok;
                sum.error = out.error;
            } catch (const std::exception& e) {
                sum.error = e.what();
            }
            rep.per_run[static_cast<std::size_t>(i)] = std::move(sum);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    double total_rounds = 0;
    for (const auto& r : rep.per_run) {
        if (!r.error.empty() && r.status != GameStatus::InvariantViolation) ++rep.errors;
        if (r.win) ++rep.wins;
        total_rounds += static_cast<double>(r.rounds);
        rep.max_rounds = std::max(rep.max_rounds, r.rounds);
        if (!r.invariant_ok) ++rep.invariant_violations;
        if (!r.attribution_ok) ++rep.attribution_violations;
        rep.quota_violations += r.quota_losses;
    }
    rep.mean_rounds = repetitions ? total_rounds / repetitions : 0.0;
    return rep;
}

} // namespace makergame
