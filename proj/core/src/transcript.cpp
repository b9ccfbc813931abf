#include "makergame/transcript.hpp"

#include "makergame/breaker.hpp"
#include "makergame/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace makergame {

TargetGraph graph_from_spec(const std::string& spec) {
    if (spec.starts_with("file:")) {
        std::ifstream in(spec.substr(5));
        if (!in) throw ConfigError("cannot open graph file: " + spec.substr(5));
        std::stringstream ss;
        ss << in.rdbuf();
        return TargetGraph::parse(ss.str());
    }
    if (spec.starts_with("random:")) {
        long n = 0, d = 0;
        unsigned long long seed = 0;
        char c1 = 0, c2 = 0;
        std::istringstream ls(spec.substr(7));
        if (!(ls >> n >> c1 >> d >> c2 >> seed) || c1 != ',' || c2 != ',')
            throw ConfigError("random graph spec needs random:N,D,SEED");
        return TargetGraph::random_regular(static_cast<int>(n), static_cast<int>(d), seed);
    }
    return TargetGraph::named(spec);
}

Leveling leveling_from_config(const TargetGraph& g, const RunConfig& cfg) {
    if (cfg.leveling_mode == "greedy") return level_greedy(g);
    if (cfg.leveling_mode == "lll") return level_lll(g, cfg.level_seed);
    throw ConfigError("unknown leveling mode: " + cfg.leveling_mode);
}

GameBoard board_from_config(const RunConfig& cfg) {
    TargetGraph g = graph_from_spec(cfg.graph_spec);
    Leveling l = leveling_from_config(g, cfg);
    std::int64_t s = resolve_s(cfg.s_mode, std::max(1, g.degree()), cfg.s_value);
    return GameBoard::build(std::move(g), std::move(l), s);
}

namespace {

std::string config_line(const RunConfig& cfg) {
    std::string out = "config";
    out += " graph=" + cfg.graph_spec;
    out += " leveling=" + cfg.leveling_mode;
    out += " level_seed=" + std::to_string(cfg.level_seed);
    out += " s_mode=" + cfg.s_mode;
    out += " s=" + std::to_string(cfg.s_value);
    out += " breaker=" + cfg.breaker;
    out += " breaker_seed=" + std::to_string(cfg.breaker_seed);
    out += " round_cap=" + std::to_string(cfg.round_cap);
    return out;
}

void append_ready(std::string& out, const ReadinessEvent& ev) {
    out += "ready " + std::to_string(ev.round) + " v=" + std::to_string(ev.v) +
           " untouched=" + std::to_string(ev.untouched) + " need=" + std::to_string(ev.required) +
           (ev.ok ? " ok=1" : " ok=0") + "\n";
}

} // namespace

std::string write_transcript(const RunConfig& cfg, const GameBoard& board, const Outcome& outcome) {
    std::string out = "makergame-transcript v1\n";
    out += config_line(cfg) + "\n";
    const int n = board.graph.vertex_count();
    out += "graphn " + std::to_string(n) + "\n";
    for (auto [u, v] : board.graph.edges())
        out += "gedge " + std::to_string(u) + " " + std::to_string(v) + "\n";
    for (Vertex v = 0; v < n; ++v)
        out += "level " + std::to_string(v) + " " + std::to_string(board.leveling.level_of(v)) + "\n";
    for (Vertex v = 0; v < n; ++v)
        out += "block " + std::to_string(v) + " " + std::to_string(board.spec.block_size(v)) + "\n";
    auto ec = edge_count(board.spec, board.graph, board.leveling);
    out += "board r=" + std::to_string(board.leveling.r) +
           " stars=" + std::to_string(board.spec.total_star_vertices()) + " edges=" + ec.exact_str() +
           " bound=" + ec.bound_str() + "\n";

    std::size_t ri = 0;
    auto flush_ready_before = [&](std::uint64_t round) {
        while (ri < outcome.readiness.size() && outcome.readiness[ri].round < round)
            append_ready(out, outcome.readiness[ri++]);
    };
    for (const auto& m : outcome.moves) {
        flush_ready_before(m.round);
        out += "move " + std::to_string(m.round) + " ";
        out += player_name(m.player);
        if (m.pass) {
            out += " pass";
        } else {
            out += " " + m.edge.lo.to_string() + " " + m.edge.hi.to_string();
        }
        if (m.player == Player::Maker) {
            out += " case=" + std::to_string(m.dispatch_case);
            out += " owner=" + std::to_string(m.subgame_owner);
            out += " u=" + std::to_string(m.subgame_u);
            out += " x=" + std::to_string(m.subgame_x_idx);
            out += m.in_board ? " inboard=1" : " inboard=0";
        }
        out += "\n";
    }
    flush_ready_before(~std::uint64_t{0});

    out += "outcome status=";
    out += status_name(outcome.status);
    out += " rounds=" + std::to_string(outcome.rounds);
    out += " cap=" + std::to_string(outcome.round_cap);
    out += " completed=" + std::to_string(outcome.completed_vertices) + "/" +
           std::to_string(outcome.total_vertices);
    out += " subgames_won=" + std::to_string(outcome.subgames_won);
    out += " subgames_total=" + std::to_string(outcome.subgames_total);
    out += " quota_losses=" + std::to_string(outcome.quota_violations);
    out += outcome.invariant_ok ? " invariant_ok=1" : " invariant_ok=0";
    out += outcome.attribution_ok ? " attribution_ok=1" : " attribution_ok=0";
    out += outcome.s_guaranteed ? " s_guaranteed=1" : " s_guaranteed=0";
    out += "\n";
    out += outcome.scheme_verified ? "scheme verified=1\n" : "scheme verified=0\n";
    if (outcome.embedding_ok)
        for (std::size_t v = 0; v < outcome.embedding.size(); ++v)
            out += "embed " + std::to_string(v) + " " + outcome.embedding[v].to_string() + "\n";
    out += "end\n";
    return out;
}

namespace {

std::string field(const std::string& line, const std::string& key) {
    auto pos = line.find(" " + key + "=");
    if (pos == std::string::npos) throw ParseError("transcript: missing field " + key);
    pos += key.size() + 2;
    auto end = line.find(' ', pos);
    return line.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
}

} // namespace

ParsedTranscript parse_transcript(const std::string& text) {
    ParsedTranscript pt;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "makergame-transcript v1")
        throw ParseError("not a makergame transcript (bad magic line)");
    bool saw_end = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "config") {
            pt.cfg.graph_spec = field(line, "graph");
            pt.cfg.leveling_mode = field(line, "leveling");
            pt.cfg.level_seed = std::stoull(field(line, "level_seed"));
            pt.cfg.s_mode = field(line, "s_mode");
            pt.cfg.s_value = std::stoll(field(line, "s"));
            pt.cfg.breaker = field(line, "breaker");
            pt.cfg.breaker_seed = std::stoull(field(line, "breaker_seed"));
            pt.cfg.round_cap = std::stoull(field(line, "round_cap"));
        } else if (tag == "graphn") {
            ls >> pt.graph_n;
            pt.levels.assign(static_cast<std::size_t>(pt.graph_n), 1);
        } else if (tag == "gedge") {
            int u, v;
            ls >> u >> v;
            pt.gedges.emplace_back(u, v);
        } else if (tag == "level") {
            int v, lev;
            ls >> v >> lev;
            if (v < 0 || v >= pt.graph_n) throw ParseError("transcript: level vertex out of range");
            pt.levels[static_cast<std::size_t>(v)] = lev;
        } else if (tag == "board") {
            pt.leveling_r = std::stoi(field(line, "r"));
        } else if (tag == "move") {
            std::uint64_t round;
            std::string who, a, b;
            ls >> round >> who >> a;
            if (who == "B") {
                if (a == "pass") {
                    pt.breaker_moves.push_back(std::nullopt);
                } else {
                    ls >> b;
                    pt.breaker_moves.push_back(
                        StarEdge{StarVertex::parse(a), StarVertex::parse(b)});
                }
            }
        } else if (tag == "outcome") {
            pt.outcome_status = field(line, "status");
        } else if (tag == "end") {
            saw_end = true;
        }
        // block/ready/scheme/embed lines are regenerated, not consumed
    }
    if (!saw_end) throw ParseError("transcript: truncated (no end line)");
    if (pt.graph_n <= 0) throw ParseError("transcript: missing graphn");
    return pt;
}

VerifyResult verify_transcript(const std::string& text) {
    ParsedTranscript pt = parse_transcript(text);

    TargetGraph g = TargetGraph::from_edges(pt.graph_n, pt.gedges);
    Leveling l;
    l.levels = pt.levels;
    l.r = pt.leveling_r;
    std::int64_t s = pt.cfg.s_value;
    GameBoard board = GameBoard::build(std::move(g), std::move(l), s);

    ScriptedBreaker breaker(pt.breaker_moves);
    MakerConfig mc;
    mc.round_cap = pt.cfg.round_cap;
    MakerEngine engine(board, mc);
    VerifyResult res;
    res.outcome = engine.run(breaker);

    std::string regen = write_transcript(pt.cfg, board, res.outcome);
    res.byte_identical = regen == text;
    if (!res.byte_identical) {
        std::istringstream a(text), b(regen);
        std::string la, lb;
        std::size_t lineno = 0;
        for (;;) {
            ++lineno;
            bool ga = static_cast<bool>(std::getline(a, la));
            bool gb = static_cast<bool>(std::getline(b, lb));
            if (!ga && !gb) break;
            if (!ga || !gb || la != lb) {
                res.first_divergence = "line " + std::to_string(lineno) + ": transcript has \"" +
                                       (ga ? la : std::string("<eof>")) + "\", replay produced \"" +
                                       (gb ? lb : std::string("<eof>")) + "\"";
                break;
            }
        }
    }
    res.ok = res.byte_identical;
    return res;
}

} // namespace makergame
