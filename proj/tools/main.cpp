// Command-line front end: build boards, label graphs, play and verify games.
//
// Exit codes: 0 on success (and Maker wins), 2 when Maker loses or hits the
// round cap, 1 on configuration or I/O errors.

#include "makergame/breaker.hpp"
#include "makergame/errors.hpp"
#include "makergame/experiment.hpp"
#include "makergame/oracle.hpp"
#include "makergame/transcript.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace makergame;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << text;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& config_path) {
    cmd->add_option("--graph", cfg.graph_spec,
                    "named graph (c{n}, k{n}, petersen, edge), file:PATH, or random:N,D,SEED");
    cmd->add_option("--leveling", cfg.leveling_mode, "greedy | lll")
        ->check(CLI::IsMember({"greedy", "lll"}));
    cmd->add_option("--level-seed", cfg.level_seed, "seed for the lll leveling");
    cmd->add_option("--s", cfg.s_mode, "paper | guarantee | an explicit block parameter");
    cmd->add_option("--config", config_path, "flat key=value config file; flags win");
}

// Flat key=value file; command-line flags take precedence.
void apply_config_file(CLI::App* cmd, RunConfig& cfg, const std::string& path) {
    if (path.empty()) return;
    std::istringstream in(slurp(path));
    std::string line;
    std::map<std::string, std::string, std::less<>> kv;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
            continue;
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    auto flag_given = [&](const char* name) {
        auto* opt = cmd->get_option_no_throw(name);
        return opt && opt->count() > 0;
    };
    auto take = [&](const char* key, const char* flag, auto&& apply) {
        auto it = kv.find(key);
        if (it != kv.end() && !flag_given(flag)) apply(it->second);
    };
    take("graph", "--graph", [&](const std::string& v) { cfg.graph_spec = v; });
    take("leveling", "--leveling", [&](const std::string& v) { cfg.leveling_mode = v; });
    take("level_seed", "--level-seed", [&](const std::string& v) { cfg.level_seed = std::stoull(v); });
    take("s", "--s", [&](const std::string& v) { cfg.s_mode = v; });
    take("breaker", "--breaker", [&](const std::string& v) { cfg.breaker = v; });
    take("seed", "--seed", [&](const std::string& v) { cfg.breaker_seed = std::stoull(v); });
    take("breaker_seed", "--seed", [&](const std::string& v) { cfg.breaker_seed = std::stoull(v); });
    take("script", "--script", [&](const std::string& v) { cfg.script_path = v; });
    take("round_cap", "--round-cap", [&](const std::string& v) { cfg.round_cap = std::stoull(v); });
    take("reps", "--reps", [&](const std::string& v) { cfg.repetitions = std::stoi(v); });
    take("out", "--out", [&](const std::string& v) { cfg.out_path = v; });
}

void resolve_s_mode(RunConfig& cfg) {
    // --s accepts a mode name or a number
    if (cfg.s_mode != "paper" && cfg.s_mode != "guarantee" && cfg.s_mode != "custom") {
        try {
            std::size_t used = 0;
            long long v = std::stoll(cfg.s_mode, &used);
            if (used != cfg.s_mode.size()) throw std::invalid_argument("");
            cfg.s_value = v;
            cfg.s_mode = "custom";
        } catch (const std::exception&) {
            throw ConfigError("--s must be paper, guarantee, or a positive integer");
        }
    }
}

int cmd_label(RunConfig cfg) {
    resolve_s_mode(cfg);
    TargetGraph g = graph_from_spec(cfg.graph_spec);
    Leveling l = leveling_from_config(g, cfg);
    auto violations = validate_leveling(g, l);
    std::string out = l.to_text();
    out += "# r=" + std::to_string(l.r) + " violations=" + std::to_string(violations.size()) + "\n";
    for (const auto& v : violations)
        out += "# violation " + std::to_string(v.u) + " " + std::to_string(v.v) +
               " dist=" + std::to_string(v.distance) + "\n";
    write_out(cfg.out_path, out);
    return violations.empty() ? 0 : 2;
}

int cmd_dag(RunConfig cfg) {
    resolve_s_mode(cfg);
    TargetGraph g = graph_from_spec(cfg.graph_spec);
    Leveling l = leveling_from_config(g, cfg);
    BlockingDag dag = build_blocking_dag(g, l);
    auto report = check_dag_bounds(dag, g, l);
    std::string out = dag.to_arc_list();
    std::istringstream rep(report.to_text());
    std::string line;
    while (std::getline(rep, line)) out += "# " + line + "\n";
    write_out(cfg.out_path, out);
    return report.pass() ? 0 : 2;
}

int cmd_board(RunConfig cfg) {
    resolve_s_mode(cfg);
    GameBoard board = board_from_config(cfg);
    auto ec = edge_count(board.spec, board.graph, board.leveling);
    std::string out;
    out += "graph n=" + std::to_string(board.graph.vertex_count()) +
           " d=" + std::to_string(board.graph.degree()) +
           " edges=" + std::to_string(board.graph.edge_count()) + "\n";
    out += "leveling r=" + std::to_string(board.leveling.r) + "\n";
    out += "s=" + std::to_string(board.spec.s());
    out += " guarantee=" +
           std::string(check_s_guarantee(std::max(1, board.graph.degree()), board.spec.s()) ? "yes"
                                                                                            : "no");
    out += "\n";
    for (Vertex v = 0; v < board.graph.vertex_count(); ++v)
        out += "block v" + std::to_string(v) + " size=" + std::to_string(board.spec.block_size(v)) +
               " descendants=" + std::to_string(board.dag.p_size[static_cast<std::size_t>(v)]) +
               "\n";
    out += "stars total=" + std::to_string(board.spec.total_star_vertices()) + "\n";
    out += "edges exact=" + ec.exact_str() + " bound=" + ec.bound_str() +
           " within_bound=" + (ec.exact_le_bound ? "yes" : "no") + "\n";
    write_out(cfg.out_path, out);
    return 0;
}

int cmd_play(RunConfig cfg, bool quiet) {
    resolve_s_mode(cfg);
    GameBoard board = board_from_config(cfg);
    std::string script_text;
    if (cfg.breaker == "scripted") script_text = slurp(cfg.script_path);
    auto breaker = make_breaker(cfg.breaker, cfg.breaker_seed, script_text);

    MakerConfig mc;
    mc.round_cap = cfg.round_cap;
    MakerEngine engine(board, mc);
    Outcome outcome = engine.run(*breaker);

    // echo the resolved values so the transcript replays standalone
    cfg.s_value = board.spec.s();
    cfg.round_cap = outcome.round_cap;
    std::string transcript = write_transcript(cfg, board, outcome);
    write_out(cfg.out_path, transcript);
    if (!quiet && !cfg.out_path.empty() && cfg.out_path != "-") {
        std::cout << "status=" << status_name(outcome.status) << " rounds=" << outcome.rounds
                  << " scheme=" << (outcome.scheme_verified ? 1 : 0)
                  << " embedding=" << (outcome.embedding_ok ? 1 : 0) << "\n";
    }
    return outcome.maker_win ? 0 : 2;
}

int cmd_experiment(RunConfig cfg, unsigned threads) {
    resolve_s_mode(cfg);
    GameBoard board = board_from_config(cfg);
    ExperimentReport rep = run_experiment(board, cfg, cfg.repetitions, threads);
    write_out(cfg.out_path, rep.to_text());
    bool clean = rep.errors == 0 && rep.invariant_violations == 0;
    return clean ? 0 : 2;
}

int cmd_verify(const std::string& path) {
    VerifyResult res = verify_transcript(slurp(path));
    if (res.ok) {
        std::cout << "replay ok: byte-identical, status=" << status_name(res.outcome.status)
                  << " rounds=" << res.outcome.rounds
                  << " scheme=" << (res.outcome.scheme_verified ? 1 : 0)
                  << " embedding=" << (res.outcome.embedding_ok ? 1 : 0) << "\n";
        return 0;
    }
    std::cout << "replay diverged: " << res.first_divergence << "\n";
    return 1;
}

int cmd_oracle(int games, int positions, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int failures = 0;

    // engine vs minimax-optimal breaker, sandwiched between quota and optimum
    for (int i = 0; i < games; ++i) {
        int nv = 4 + static_cast<int>(rng() % 9); // 4..12
        int ne = 1 + static_cast<int>(rng() % 4);
        std::vector<std::vector<int>> edges;
        for (int e = 0; e < ne; ++e) {
            std::vector<int> members;
            for (int v = 0; v < nv; ++v)
                if (rng() % 2) members.push_back(v);
            if (members.empty()) members.push_back(static_cast<int>(rng() % nv));
            edges.push_back(members);
        }
        auto res = play_engine_vs_oracle(nv, edges, false);
        auto optimum = minimax_hypergraph(nv, edges, false);
        int engine_min = *std::min_element(res.maker_counts.begin(), res.maker_counts.end());
        bool ok = res.quota_met && engine_min <= optimum.front();
        if (!ok) {
            std::cout << "oracle sandwich FAIL at game " << i << ": engine_min=" << engine_min
                      << " optimum=" << optimum.front() << " quota=" << res.quota_value << "\n";
            ++failures;
        }
    }
    std::cout << "minimax sandwich: " << games - failures << "/" << games << " ok\n";

    // optimized candidate checker vs naive enumeration
    int disagreements = 0;
    for (int i = 0; i < positions; ++i) {
        TargetGraph g = TargetGraph::cycle(4 + static_cast<int>(rng() % 3));
        Leveling l = level_greedy(g);
        GameBoard board = GameBoard::build(std::move(g), std::move(l), 2 + static_cast<int>(rng() % 3));
        GamePosition pos(board);
        for (Vertex v = 0; v < board.graph.vertex_count(); ++v) {
            std::vector<std::int64_t> idxs;
            for (std::int64_t k = 0; k < board.spec.s(); ++k) idxs.push_back(k);
            pos.set_b(v, idxs);
        }
        for (auto [u, v] : board.graph.edges())
            for (std::int64_t i1 = 0; i1 < board.spec.s(); ++i1)
                for (std::int64_t i2 = 0; i2 < board.spec.s(); ++i2)
                    if (rng() % 2)
                        pos.claim(rng() % 4 ? Player::Maker : Player::Breaker,
                                  board.make_edge({u, i1}, {v, i2}));
        for (auto [a, b] : board.graph.edges()) {
            Vertex u = a, v = b;
            if (board.leveling.level_of(u) > board.leveling.level_of(v)) std::swap(u, v);
            StarVertex x{v, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(board.spec.s()))};
            bool fast = is_candidate_wrt_edge(pos, x, u, v);
            bool naive = verify_candidate_by_enumeration(pos, x, u, v);
            if (fast != naive) ++disagreements;
        }
    }
    std::cout << "candidate differential: " << disagreements << " disagreements over "
              << positions << " positions\n";
    if (disagreements) ++failures;

    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maker-Breaker games on sparse boards: explicit Maker strategy, "
                 "pluggable adversaries, full invariant auditing"};
    app.require_subcommand(1);

    RunConfig cfg;
    unsigned threads = 0;
    bool quiet = false;
    std::string verify_path;
    std::string config_path;
    int oracle_games = 40, oracle_positions = 100;
    std::uint64_t oracle_seed = 1;

    auto* label = app.add_subcommand("label", "emit a leveling and its validation");
    add_common_options(label, cfg, config_path);
    label->add_option("--out", cfg.out_path, "output path (default stdout)");

    auto* dag = app.add_subcommand("dag", "emit the blocking DAG and its bounds report");
    add_common_options(dag, cfg, config_path);
    dag->add_option("--out", cfg.out_path, "output path (default stdout)");

    auto* board = app.add_subcommand("board", "emit the board summary and edge counts");
    add_common_options(board, cfg, config_path);
    board->add_option("--out", cfg.out_path, "output path (default stdout)");

    auto* play = app.add_subcommand("play", "play one game and emit the transcript");
    add_common_options(play, cfg, config_path);
    play->add_option("--breaker", cfg.breaker, "random | greedy | scatter | scripted | interactive");
    play->add_option("--seed,--breaker-seed", cfg.breaker_seed, "breaker seed");
    play->add_option("--script", cfg.script_path, "move list for the scripted breaker");
    play->add_option("--round-cap", cfg.round_cap, "override the automatic round cap");
    play->add_option("--out", cfg.out_path, "transcript path (default stdout)");
    play->add_flag("--quiet", quiet, "suppress the status line");

    auto* exp = app.add_subcommand("experiment", "run N seeded games and aggregate");
    add_common_options(exp, cfg, config_path);
    exp->add_option("--breaker", cfg.breaker, "random | greedy | scatter");
    exp->add_option("--seed,--breaker-seed", cfg.breaker_seed, "base seed; run i uses seed+i");
    exp->add_option("--reps", cfg.repetitions, "number of games");
    exp->add_option("--round-cap", cfg.round_cap, "override the automatic round cap");
    exp->add_option("--threads", threads, "worker threads (default: hardware)");
    exp->add_option("--out", cfg.out_path, "report path (default stdout)");

    auto* verify = app.add_subcommand("verify", "replay a transcript and compare byte-for-byte");
    verify->add_option("transcript", verify_path, "transcript file")->required();

    auto* oracle = app.add_subcommand("oracle", "run the differential oracle suites");
    oracle->add_option("--games", oracle_games, "minimax sandwich instances");
    oracle->add_option("--positions", oracle_positions, "candidate differential positions");
    oracle->add_option("--seed", oracle_seed, "suite seed");

    CLI11_PARSE(app, argc, argv);

    try {
        for (CLI::App* cmd : {label, dag, board, play, exp})
            if (cmd->parsed()) apply_config_file(cmd, cfg, config_path);
        if (label->parsed()) return cmd_label(cfg);
        if (dag->parsed()) return cmd_dag(cfg);
        if (board->parsed()) return cmd_board(cfg);
        if (play->parsed()) return cmd_play(cfg, quiet);
        if (exp->parsed()) return cmd_experiment(cfg, threads);
        if (verify->parsed()) return cmd_verify(verify_path);
        if (oracle->parsed()) return cmd_oracle(oracle_games, oracle_positions, oracle_seed);
    } catch (const BreakerQuit&) {
        std::cout << "aborted\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
