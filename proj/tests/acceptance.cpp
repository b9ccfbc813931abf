// Acceptance suite: end-to-end checks of the construction, the engine
// guarantees, and the harness, printed one line per criterion. Exits with
// the number of failed criteria.

#include "makergame/breaker.hpp"
#include "makergame/candidate.hpp"
#include "makergame/experiment.hpp"
#include "makergame/oracle.hpp"
#include "makergame/transcript.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace makergame;

namespace {

struct Criterion {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Instance {
    TargetGraph graph;
    std::string label;
};

std::vector<Instance> instance_pool() {
    std::vector<Instance> out;
    out.push_back({TargetGraph::cycle(4), "c4"});
    out.push_back({TargetGraph::cycle(6), "c6"});
    out.push_back({TargetGraph::petersen(), "petersen"});
    for (int i = 0; i < 200; ++i) {
        int d = 2 + (i % 2);
        int n = 8 + (i * 7) % 53; // up to 60
        if ((n * d) % 2) ++n;
        out.push_back({TargetGraph::random_regular(n, d, static_cast<std::uint64_t>(i)),
                       "rr(n=" + std::to_string(n) + ",d=" + std::to_string(d) +
                           ",seed=" + std::to_string(i) + ")"});
    }
    return out;
}

double elapsed(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Criterion criterion_leveling(const std::vector<Instance>& pool) {
    Criterion c{"leveling validity (both algorithms, 203 instances)"};
    auto t0 = std::chrono::steady_clock::now();
    long violations = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto& g = pool[i].graph;
        violations += static_cast<long>(validate_leveling(g, level_greedy(g)).size());
        violations +=
            static_cast<long>(validate_leveling(g, level_lll(g, static_cast<std::uint64_t>(i))).size());
    }
    c.seconds = elapsed(t0);
    c.pass = violations == 0 && c.seconds < 10.0;
    c.detail = std::to_string(violations) + " violations";
    return c;
}

Criterion criterion_blocking(const std::vector<Instance>& pool) {
    Criterion c{"blocking bounds (out-degree <= d^2, arcs level-decreasing)"};
    auto t0 = std::chrono::steady_clock::now();
    int failures = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto& g = pool[i].graph;
        for (int mode = 0; mode < 2; ++mode) {
            Leveling l = mode ? level_lll(g, static_cast<std::uint64_t>(i)) : level_greedy(g);
            auto dag = build_blocking_dag(g, l);
            auto rep = check_dag_bounds(dag, g, l);
            if (!rep.pass()) ++failures;
        }
    }
    c.seconds = elapsed(t0);
    c.pass = failures == 0;
    c.detail = std::to_string(failures) + " bound failures";
    return c;
}

Criterion criterion_board(const std::vector<Instance>& pool) {
    Criterion c{"board formulas (C6/s=4 blocks and counts; exact <= bound everywhere)"};
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;

    TargetGraph g6 = TargetGraph::cycle(6);
    Leveling l6 = level_greedy(g6);
    GameBoard c6 = GameBoard::build(std::move(g6), std::move(l6), 4);
    std::vector<std::int64_t> sizes;
    for (Vertex v = 0; v < 6; ++v) sizes.push_back(c6.spec.block_size(v));
    if (sizes != std::vector<std::int64_t>{4, 36, 132, 4, 36, 132}) {
        pass = false;
        detail += "block sizes off; ";
    } else {
        detail += "blocks (4,36,132,4,36,132) ok; ";
    }

    auto ec6 = edge_count(c6.spec, c6.graph, c6.leveling);
    const u128 pinned_expected = 27072;
    if (ec6.exact != pinned_expected) {
        pass = false;
        detail += "exact |E(H)| = " + ec6.exact_str() + " != pinned 27072; ";
    } else {
        detail += "exact |E(H)| ok; ";
    }

    long bound_failures = 0;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const auto& g = pool[i].graph;
        for (int mode = 0; mode < 2; ++mode) {
            Leveling l = mode ? level_lll(g, static_cast<std::uint64_t>(i)) : level_greedy(g);
            auto dag = build_blocking_dag(g, l);
            auto spec = BoardSpec::build(g, l, dag, 4);
            if (!edge_count(spec, g, l).exact_le_bound) ++bound_failures;
        }
    }
    if (bound_failures) pass = false;
    detail += std::to_string(bound_failures) + " bound violations";

    c.seconds = elapsed(t0);
    c.pass = pass;
    c.detail = detail;
    return c;
}

Criterion criterion_quota() {
    Criterion c{"discrepancy quota (1000 games; oracle sandwich on small boards)"};
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20240);
    long quota_failures = 0;

    for (int game = 0; game < 1000; ++game) {
        int nv = 8 + static_cast<int>(rng() % 249);           // up to 256 vertices
        int ne = 1 + static_cast<int>(rng() % 64);            // X <= 64
        std::vector<std::vector<int>> edges;
        long volume = 0;
        for (int e = 0; e < ne && volume < 8192; ++e) {
            int size = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(nv, 256) - 1));
            std::vector<int> ids(static_cast<std::size_t>(nv));
            for (int v = 0; v < nv; ++v) ids[static_cast<std::size_t>(v)] = v;
            for (int k = 0; k < size; ++k) {
                std::size_t j =
                    static_cast<std::size_t>(k) + rng() % (ids.size() - static_cast<std::size_t>(k));
                std::swap(ids[static_cast<std::size_t>(k)], ids[j]);
            }
            ids.resize(static_cast<std::size_t>(size));
            volume += size;
            edges.push_back(std::move(ids));
        }
        HypergraphGame f(nv, edges);
        auto breaker =
            (game % 2) ? hypergraph_greedy_breaker() : hypergraph_random_breaker(rng());
        auto res = play_hypergraph_game(std::move(f), breaker, false);
        if (!res.quota_met) ++quota_failures;
    }

    // oracle sandwich on every small instance of the suite
    long sandwich_failures = 0;
    std::vector<std::pair<int, std::vector<std::vector<int>>>> small;
    small.push_back({2, {{0, 1}}});
    small.push_back({4, {{0, 1, 2, 3}}});
    small.push_back({6, {{0, 1, 2}, {3, 4, 5}}});
    std::mt19937_64 rng2(7);
    for (int i = 0; i < 24; ++i) {
        int nv = 4 + static_cast<int>(rng2() % 9); // 4..12
        int ne = 1 + static_cast<int>(rng2() % 4);
        std::vector<std::vector<int>> edges;
        for (int e = 0; e < ne; ++e) {
            std::vector<int> members;
            for (int v = 0; v < nv; ++v)
                if (rng2() % 2) members.push_back(v);
            if (members.size() < 2) members = {0, 1 % nv};
            edges.push_back(members);
        }
        small.push_back({nv, std::move(edges)});
    }
    for (auto& [nv, edges] : small) {
        auto res = play_engine_vs_oracle(nv, edges, false);
        auto optimum = minimax_hypergraph(nv, edges, false);
        int engine_min = *std::min_element(res.maker_counts.begin(), res.maker_counts.end());
        if (!res.quota_met || engine_min > optimum.front()) ++sandwich_failures;
    }

    c.seconds = elapsed(t0);
    c.pass = quota_failures == 0 && sandwich_failures == 0 && c.seconds < 120.0;
    c.detail = std::to_string(quota_failures) + " quota failures, " +
               std::to_string(sandwich_failures) + " sandwich failures";
    return c;
}

struct EndToEnd {
    std::vector<ExperimentReport> reports;
    bool pass = true;
    std::string detail;
};

EndToEnd run_end_to_end() {
    EndToEnd r;
    struct Job {
        const char* graph;
        std::int64_t s;
    };
    const Job jobs[] = {{"edge", 32}, {"c6", 128}, {"c12", 128}};
    const char* policies[] = {"random", "greedy", "scatter", "scripted"};
    int wins = 0, runs = 0, scheme_fail = 0, embed_fail = 0;
    for (const Job& j : jobs) {
        TargetGraph g = TargetGraph::named(j.graph);
        if (!check_s_guarantee(std::max(1, g.degree()), j.s)) {
            r.pass = false;
            r.detail += std::string(j.graph) + ": s not in guarantee range; ";
        }
        Leveling l = level_greedy(g);
        GameBoard board = GameBoard::build(std::move(g), std::move(l), j.s);
        for (const char* p : policies) {
            RunConfig cfg;
            cfg.graph_spec = j.graph;
            cfg.breaker = p;
            cfg.breaker_seed = 1000;
            ExperimentReport rep = run_experiment(board, cfg, 25);
            runs += rep.runs;
            wins += rep.wins;
            for (const auto& run : rep.per_run) {
                if (!run.scheme_verified) ++scheme_fail;
                if (!run.embedding_ok) ++embed_fail;
            }
            r.reports.push_back(std::move(rep));
        }
    }
    if (wins != runs || scheme_fail || embed_fail) r.pass = false;
    r.detail += std::to_string(wins) + "/" + std::to_string(runs) + " wins, " +
                std::to_string(scheme_fail) + " scheme failures, " + std::to_string(embed_fail) +
                " embedding failures";
    return r;
}

Criterion criterion_invariant(const EndToEnd& e2e) {
    Criterion c{"untouched-supply invariant and touch attribution bounds"};
    auto t0 = std::chrono::steady_clock::now();
    int invariant = 0, attribution = 0;
    for (const auto& rep : e2e.reports) {
        invariant += rep.invariant_violations;
        attribution += rep.attribution_violations;
    }
    // plus 100 empirical-mode petersen runs at s=64
    TargetGraph pet = TargetGraph::petersen();
    Leveling pl = level_greedy(pet);
    GameBoard board = GameBoard::build(std::move(pet), std::move(pl), 64);
    const char* policies[] = {"random", "greedy", "scatter"};
    int extra_runs = 0;
    for (int p = 0; p < 3; ++p) {
        RunConfig cfg;
        cfg.graph_spec = "petersen";
        cfg.breaker = policies[p];
        cfg.breaker_seed = 5000 + static_cast<std::uint64_t>(p) * 100;
        int reps = p == 0 ? 34 : 33;
        ExperimentReport rep = run_experiment(board, cfg, reps);
        invariant += rep.invariant_violations;
        attribution += rep.attribution_violations;
        extra_runs += rep.runs;
    }
    c.seconds = elapsed(t0);
    c.pass = invariant == 0 && attribution == 0 && extra_runs == 100;
    c.detail = std::to_string(invariant) + " invariant violations, " + std::to_string(attribution) +
               " attribution violations (incl. " + std::to_string(extra_runs) + " petersen runs)";
    return c;
}

Criterion criterion_thresholds() {
    Criterion c{"block-parameter threshold checks"};
    auto t0 = std::chrono::steady_clock::now();
    bool ok = check_s_guarantee(2, 128) && !check_s_guarantee(2, 64) && check_s_guarantee(2, 2048) &&
              check_s_guarantee(3, paper_s(3));
    c.seconds = elapsed(t0);
    c.pass = ok;
    c.detail = ok ? "all four pins hold" : "a pinned threshold flipped";
    return c;
}

Criterion criterion_differential() {
    Criterion c{"candidate checker vs naive enumeration (500 positions)"};
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(4242);
    int disagreements = 0;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        TargetGraph g = TargetGraph::cycle(n);
        Leveling l = level_greedy(g);
        GameBoard board = GameBoard::build(std::move(g), std::move(l),
                                           2 + static_cast<std::int64_t>(rng() % 4));
        GamePosition pos(board);
        for (Vertex v = 0; v < board.graph.vertex_count(); ++v) {
            std::vector<std::int64_t> idxs;
            for (std::int64_t k = 0; k < board.spec.s(); ++k) idxs.push_back(k);
            pos.set_b(v, idxs);
        }
        for (auto [u, v] : board.graph.edges())
            for (std::int64_t i = 0; i < board.spec.s(); ++i)
                for (std::int64_t j = 0; j < board.spec.s(); ++j) {
                    auto roll = rng() % 3;
                    if (roll == 0)
                        pos.claim(Player::Maker, board.make_edge({u, i}, {v, j}));
                    else if (roll == 1)
                        pos.claim(Player::Breaker, board.make_edge({u, i}, {v, j}));
                }
        Vertex a, b;
        auto edges = board.graph.edges();
        std::tie(a, b) = edges[rng() % edges.size()];
        if (board.leveling.level_of(a) > board.leveling.level_of(b)) std::swap(a, b);
        StarVertex x{b, static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(board.spec.s()))};
        if (is_candidate_wrt_edge(pos, x, a, b) != verify_candidate_by_enumeration(pos, x, a, b))
            ++disagreements;
    }
    c.seconds = elapsed(t0);
    c.pass = disagreements == 0;
    c.detail = std::to_string(disagreements) + " disagreements";
    return c;
}

Criterion criterion_replay() {
    Criterion c{"transcript replay determinism (12 byte-for-byte checks)"};
    auto t0 = std::chrono::steady_clock::now();
    const char* graphs[] = {"edge", "c6", "c12"};
    const std::int64_t svals[] = {32, 128, 128};
    const char* policies[] = {"random", "greedy", "scatter", "scripted"};
    int failures = 0;
    for (int gi = 0; gi < 3; ++gi)
        for (const char* p : policies) {
            RunConfig cfg;
            cfg.graph_spec = graphs[gi];
            cfg.s_mode = "custom";
            cfg.s_value = svals[gi];
            cfg.breaker = p;
            cfg.breaker_seed = 77;
            GameBoard board = board_from_config(cfg);
            auto breaker = make_breaker(cfg.breaker, cfg.breaker_seed);
            MakerEngine engine(board);
            Outcome out = engine.run(*breaker);
            cfg.s_value = board.spec.s();
            cfg.round_cap = out.round_cap;
            std::string text = write_transcript(cfg, board, out);
            auto res = verify_transcript(text);
            if (!res.byte_identical) ++failures;
        }
    c.seconds = elapsed(t0);
    c.pass = failures == 0;
    c.detail = std::to_string(failures) + " divergent replays";
    return c;
}

} // namespace

int main() {
    std::vector<Criterion> results;
    auto pool = instance_pool();

    results.push_back(criterion_leveling(pool));
    results.push_back(criterion_blocking(pool));
    results.push_back(criterion_board(pool));
    results.push_back(criterion_quota());

    auto t5 = std::chrono::steady_clock::now();
    EndToEnd e2e = run_end_to_end();
    Criterion c5{"guarantee-mode end-to-end (edge/s32, C6 and C12/s128, 4 policies x 25 seeds)"};
    c5.pass = e2e.pass;
    c5.detail = e2e.detail;
    c5.seconds = elapsed(t5);
    if (c5.seconds >= 600.0) c5.pass = false;
    results.push_back(c5);

    results.push_back(criterion_invariant(e2e));
    results.push_back(criterion_thresholds());
    results.push_back(criterion_differential());
    results.push_back(criterion_replay());

    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        if (!r.pass) ++failures;
        std::printf("[%zu] %-72s %s (%.1fs) %s\n", i + 1, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
                results.size());
    return failures;
}
