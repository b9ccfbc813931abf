#include "makergame/breaker.hpp"

#include "makergame/errors.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

namespace makergame {

std::optional<StarEdge> RandomBreaker::next(const MakerEngine& engine) {
    const auto& board = engine.board();
    const auto& pos = engine.position();
    if (g_edges_.empty()) g_edges_ = board.graph.edges();
    if (g_edges_.empty()) return std::nullopt;

    for (int attempt = 0; attempt < 2000; ++attempt) {
        auto [u, v] = g_edges_[rng_() % g_edges_.size()];
        std::int64_t i = static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(board.spec.block_size(u)));
        std::int64_t j = static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(board.spec.block_size(v)));
        StarEdge e = board.make_edge({u, i}, {v, j});
        if (!pos.is_claimed(e)) return e;
    }
    // small boards can genuinely fill up; enumerate before giving up
    auto count = edge_count(board.spec, board.graph, board.leveling);
    if (!count.bound_saturated && count.exact <= static_cast<u128>(1) << 22) {
        for (auto [u, v] : g_edges_)
            for (std::int64_t i = 0; i < board.spec.block_size(u); ++i)
                for (std::int64_t j = 0; j < board.spec.block_size(v); ++j) {
                    StarEdge e = board.make_edge({u, i}, {v, j});
                    if (!pos.is_claimed(e)) return e;
                }
    }
    return std::nullopt;
}

std::optional<StarEdge> GreedySubgameBreaker::next(const MakerEngine& engine) {
    cache_.resize(engine.subgame_count());
    int best = -1;
    int best_count = 0;
    for (std::size_t i = 0; i < engine.subgame_count(); ++i) {
        const Subgame& sg = engine.subgame(i);
        if (sg.finished) continue;
        Cache& c = cache_[i];
        if (c.version != sg.version) {
            c.version = sg.version;
            if (sg.t == 1) {
                c.maker_count = sg.maker1;
                c.pos = sg.first_unclaimed();
            } else {
                c.maker_count = 0;
                c.pos = -1;
                for (int e = 0; e < sg.game->hyperedge_count(); ++e) {
                    int p = sg.game->first_unclaimed_in_edge(e);
                    if (p < 0) continue;
                    if (c.pos < 0 || sg.game->maker_count(e) < c.maker_count) {
                        c.maker_count = sg.game->maker_count(e);
                        c.pos = p;
                    }
                }
                if (c.pos < 0) c.pos = sg.first_unclaimed(); // no open hyperedge left
            }
        }
        if (c.pos < 0) continue;
        if (best < 0 || c.maker_count < best_count) {
            best = static_cast<int>(i);
            best_count = c.maker_count;
        }
    }
    if (best < 0) return fallback_.next(engine);
    const Subgame& sg = engine.subgame(static_cast<std::size_t>(best));
    return engine.subgame_board_edge(sg, cache_[static_cast<std::size_t>(best)].pos);
}

std::optional<StarEdge> ScatterBreaker::next(const MakerEngine& engine) {
    const auto& board = engine.board();
    const auto& pos = engine.position();
    const int n = board.graph.vertex_count();
    cursor_.resize(static_cast<std::size_t>(n), 0);

    Vertex target = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (pos.ready(v)) continue;
        if (pos.untouched_in(v) == 0) continue;
        if (target < 0 || board.dag.p_size[static_cast<std::size_t>(v)] >
                              board.dag.p_size[static_cast<std::size_t>(target)])
            target = v;
    }
    if (target < 0) return fallback_.next(engine);

    // lowest-index untouched vertex of the block; an untouched vertex has no
    // claimed edge from below, so the edge from the first lower block is free
    std::int64_t& cur = cursor_[static_cast<std::size_t>(target)];
    const std::int64_t size = board.spec.block_size(target);
    while (cur < size && pos.touched(StarVertex{target, cur})) ++cur;
    if (cur >= size) return fallback_.next(engine);

    Vertex u = -1;
    for (Vertex w : board.graph.neighbors(target))
        if (board.leveling.level_of(w) < board.leveling.level_of(target)) {
            u = w;
            break;
        }
    if (u < 0) return fallback_.next(engine); // minimum-level blocks have no lower neighbor
    return board.make_edge({u, 0}, {target, cur});
}

std::optional<StarEdge> ScriptedBreaker::next(const MakerEngine&) {
    if (cursor_ >= script_.size()) return std::nullopt;
    return script_[cursor_++];
}

std::vector<std::optional<StarEdge>> ScriptedBreaker::parse_script(std::string_view text) {
    std::vector<std::optional<StarEdge>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        if (a == "pass") {
            out.push_back(std::nullopt);
            continue;
        }
        if (!(ls >> b)) throw ScriptError("script line needs two endpoints: " + line);
        out.push_back(StarEdge{StarVertex::parse(a), StarVertex::parse(b)});
    }
    return out;
}

void InteractiveBreaker::print_summary(const MakerEngine& engine) {
    const auto& board = engine.board();
    const auto& pos = engine.position();
    out_ << "round " << engine.rounds_played() << ", claimed " << pos.claimed_edge_count()
         << " (M " << pos.maker_edge_count() << " / B " << pos.breaker_edge_count() << ")\n";
    for (Vertex v = 0; v < board.graph.vertex_count(); ++v) {
        out_ << "  v" << v << " level=" << board.leveling.level_of(v)
             << " |S|=" << board.spec.block_size(v) << " untouched=" << pos.untouched_in(v)
             << (pos.b_determined(v) ? " B" : "") << (pos.ready(v) ? " ready" : "")
             << (pos.completed(v) ? " completed" : "") << "\n";
    }
}

void InteractiveBreaker::print_block(const MakerEngine& engine, Vertex v) {
    const auto& board = engine.board();
    const auto& pos = engine.position();
    if (v < 0 || v >= board.graph.vertex_count()) {
        out_ << "no such vertex\n";
        return;
    }
    out_ << "v" << v << ": level=" << board.leveling.level_of(v)
         << " |S|=" << board.spec.block_size(v) << " untouched=" << pos.untouched_in(v) << "\n";
    if (pos.b_determined(v)) {
        out_ << "  B =";
        for (auto idx : pos.b_set(v)) out_ << " " << idx;
        out_ << "\n";
    }
}

std::optional<StarEdge> InteractiveBreaker::next(const MakerEngine& engine) {
    print_summary(engine);
    std::string line;
    for (;;) {
        out_ << "breaker> " << std::flush;
        if (!std::getline(in_, line)) throw BreakerQuit();
        std::istringstream ls(line);
        std::string a;
        if (!(ls >> a)) continue;
        if (a == "quit") throw BreakerQuit();
        if (a == "pass") return std::nullopt;
        if (a == "show") {
            long v;
            if (ls >> v)
                print_block(engine, static_cast<Vertex>(v));
            else
                out_ << "usage: show <vertex>\n";
            continue;
        }
        std::string b;
        if (!(ls >> b)) {
            out_ << "expected: u#i v#j | show v | pass | quit\n";
            continue;
        }
        try {
            StarEdge e{StarVertex::parse(a), StarVertex::parse(b)};
            StarEdge canon = engine.board().make_edge(e.lo, e.hi);
            if (engine.position().is_claimed(canon)) {
                out_ << "already claimed\n";
                continue;
            }
            return canon;
        } catch (const Error& err) {
            out_ << err.what() << "\n";
        }
    }
}

std::unique_ptr<BreakerPolicy> make_breaker(const std::string& kind, std::uint64_t seed,
                                            const std::string& script_text) {
    if (kind == "random") return std::make_unique<RandomBreaker>(seed);
    if (kind == "greedy" || kind == "greedy_subgame")
        return std::make_unique<GreedySubgameBreaker>(seed);
    if (kind == "scatter") return std::make_unique<ScatterBreaker>(seed);
    if (kind == "scripted")
        return std::make_unique<ScriptedBreaker>(ScriptedBreaker::parse_script(script_text));
    if (kind == "interactive") return std::make_unique<InteractiveBreaker>(std::cin, std::cout);
    throw ConfigError("unknown breaker policy: " + kind);
}

} // namespace makergame
