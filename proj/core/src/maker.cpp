#include "makergame/maker.hpp"

#include "makergame/breaker.hpp"
#include "makergame/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

namespace makergame {

bool check_s_guarantee(int d, std::int64_t s) {
    if (d < 1) throw Error("check_s_guarantee needs d >= 1");
    if (s < 1) return false;
    for (int t = 2; t <= d; ++t) {
        double base = static_cast<double>(s) / (std::pow(2.0, t) * (t - 1));
        double log_arg = std::log(2.0) + (t - 1) * std::log(static_cast<double>(s));
        double lhs = base - std::sqrt(base * log_arg);
        double rhs = static_cast<double>(s) / (std::pow(2.0, t) * t);
        if (lhs < rhs - 1e-9) return false;
    }
    return true;
}

std::int64_t guarantee_s(int d) {
    for (std::int64_t s = 32; s <= (std::int64_t{1} << 40); s *= 2)
        if (check_s_guarantee(d, s)) return s;
    throw Error("guarantee_s: no power of two passed the threshold");
}

std::int64_t resolve_s(const std::string& mode, int d, std::int64_t custom_value) {
    if (mode == "paper") return paper_s(d);
    if (mode == "guarantee") return guarantee_s(d);
    if (mode == "custom") {
        if (custom_value < 1) throw ConfigError("custom s must be >= 1");
        return custom_value;
    }
    throw ConfigError("unknown s mode: " + mode);
}

int Subgame::board_size() const {
    return t == 1 ? static_cast<int>(claimed1.size()) : game->vertex_count();
}

int Subgame::first_unclaimed() const {
    if (t == 1) {
        auto i = claimed1.first_unset();
        return i == Bitset::npos ? -1 : static_cast<int>(i);
    }
    for (int v = 0; v < game->vertex_count(); ++v)
        if (!game->claimed(v)) return v;
    return -1;
}

bool subgame_win_check(const Subgame& sg, std::int64_t s) {
    if (sg.t == 1) return sg.maker1 >= (s + 1) / 2;
    const std::int64_t denom = static_cast<std::int64_t>(sg.t) << sg.t; // t * 2^t
    if (!sg.game) return false;
    for (int e = 0; e < sg.game->hyperedge_count(); ++e)
        if (static_cast<std::int64_t>(sg.game->maker_count(e)) * denom < s) return false;
    return true;
}

namespace {

// Maker-adjacency of B_u against the B block of `target`: mask[i] over B_u
// positions, for the i-th member of B_target.
std::vector<Bitset> block_masks(const GamePosition& pos, Vertex u, Vertex target) {
    auto bu = pos.b_set(u);
    auto bt = pos.b_set(target);
    std::vector<Bitset> masks(bt.size(), Bitset(bu.size()));
    for (std::size_t i = 0; i < bt.size(); ++i) {
        StarVertex ti{target, bt[i]};
        for (std::size_t p = 0; p < bu.size(); ++p)
            if (pos.maker_has(StarVertex{u, bu[p]}, ti)) masks[i].set(p);
    }
    return masks;
}

// Hyperedge member lists for the (owner, u) pair: one per tuple from the
// upper-set B blocks, in odometer order. Shared by all x* in B_owner.
std::vector<std::vector<int>> tuple_hyperedges(const GamePosition& pos, Vertex owner, Vertex u,
                                               const std::vector<Vertex>& uppers,
                                               std::int64_t s) {
    std::vector<std::vector<Bitset>> per_level;
    per_level.reserve(uppers.size());
    for (Vertex ui : uppers) {
        if (!pos.b_determined(ui))
            throw BUndeterminedError("upper-set B undetermined for vertex " + std::to_string(ui));
        per_level.push_back(block_masks(pos, u, ui));
    }
    const std::size_t bu_size = pos.b_set(u).size();
    const int t = static_cast<int>(uppers.size()) + 1;
    // |e| * 2^(t-1) * (t-1) >= s
    const std::int64_t bound_denom = static_cast<std::int64_t>(t - 1) << (t - 1);

    Bitset full(bu_size);
    for (std::size_t p = 0; p < bu_size; ++p) full.set(p);

    std::vector<std::vector<int>> edges;
    std::vector<std::size_t> choice(per_level.size(), 0);
    std::vector<Bitset> stack(per_level.size() + 1, Bitset(bu_size));
    stack[0] = full;

    std::size_t depth = 0;
    for (;;) {
        stack[depth + 1] = stack[depth] & per_level[depth][choice[depth]];
        if (depth + 1 == per_level.size()) {
            const Bitset& m = stack[depth + 1];
            std::vector<int> members;
            m.for_each_set([&](std::size_t p) { members.push_back(static_cast<int>(p)); });
            if (static_cast<std::int64_t>(members.size()) * bound_denom < s)
                throw HyperedgeTooSmallError(
                    "hyperedge of size " + std::to_string(members.size()) +
                    " below the candidate bound for (owner=" + std::to_string(owner) +
                    ", u=" + std::to_string(u) + ", t=" + std::to_string(t) + ")");
            edges.push_back(std::move(members));
            for (;;) {
                ++choice[depth];
                if (choice[depth] < per_level[depth].size()) break;
                choice[depth] = 0;
                if (depth == 0) return edges;
                --depth;
            }
        } else {
            ++depth;
        }
    }
}

Subgame make_subgame(const GamePosition& pos, Vertex owner, Vertex u, const StarVertex& x,
                     int b_pos, const std::vector<std::vector<int>>* shared_edges) {
    const auto& board = pos.board();
    auto uppers = upper_set(board.graph, board.leveling, u, owner);
    const int t = static_cast<int>(uppers.size()) + 1;
    const int d = std::max(1, board.graph.degree());
    if (t > d) throw Error("subgame arity t exceeds d");
    if (!pos.b_determined(u))
        throw BUndeterminedError("B undetermined for vertex " + std::to_string(u));

    Subgame sg;
    sg.owner = owner;
    sg.u = u;
    sg.b_pos = b_pos;
    sg.x = x;
    sg.t = t;
    const std::size_t bu_size = pos.b_set(u).size();
    if (t == 1) {
        sg.claimed1 = Bitset(bu_size);
    } else {
        const std::int64_t s = board.spec.s();
        if (shared_edges) {
            sg.game = std::make_unique<HypergraphGame>(static_cast<int>(bu_size), *shared_edges);
        } else {
            auto edges = tuple_hyperedges(pos, owner, u, uppers, s);
            sg.game = std::make_unique<HypergraphGame>(static_cast<int>(bu_size), edges);
        }
    }
    return sg;
}

} // namespace

Subgame build_subgame(const GamePosition& pos, Vertex owner, Vertex u, const StarVertex& x) {
    auto bp = pos.b_position(x);
    return make_subgame(pos, owner, u, x, bp.value_or(-1), nullptr);
}

std::vector<std::int64_t> select_b_indices(const GamePosition& pos, Vertex v, std::int64_t s) {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(s));
    const std::int64_t size = pos.board().spec.block_size(v);
    for (std::int64_t idx = 0; idx < size && static_cast<std::int64_t>(out.size()) < s; ++idx)
        if (!pos.touched(StarVertex{v, idx})) out.push_back(idx);
    if (static_cast<std::int64_t>(out.size()) < s)
        throw InvariantViolationError("fewer than s untouched vertices in S_" + std::to_string(v));
    return out;
}

const char* status_name(GameStatus s) {
    switch (s) {
    case GameStatus::MakerWin: return "win";
    case GameStatus::RoundCapExceeded: return "cap";
    case GameStatus::Stuck: return "stuck";
    case GameStatus::InvariantViolation: return "invariant";
    }
    return "?";
}

std::uint64_t default_round_cap(const GameBoard& board) {
    const std::uint64_t d = static_cast<std::uint64_t>(std::max(1, board.graph.degree()));
    const std::uint64_t s = static_cast<std::uint64_t>(board.spec.s());
    std::uint64_t total = 0;
    for (Vertex v = 0; v < board.graph.vertex_count(); ++v) {
        std::uint64_t pv = static_cast<std::uint64_t>(board.dag.p_size[static_cast<std::size_t>(v)]);
        std::uint64_t term = d * s * s;
        term *= (pv + 1);
        std::uint64_t next = total + term;
        if (next < total) return std::numeric_limits<std::uint64_t>::max();
        total = next;
    }
    if (total > std::numeric_limits<std::uint64_t>::max() / 4)
        return std::numeric_limits<std::uint64_t>::max();
    return 4 * total;
}

MakerEngine::MakerEngine(const GameBoard& board, MakerConfig cfg)
    : board_(&board), cfg_(cfg), pos_(board) {
    round_cap_ = cfg_.round_cap ? cfg_.round_cap : default_round_cap(board);
    initialize();
}

void MakerEngine::initialize() {
    const int n = board_->graph.vertex_count();
    owner_games_.resize(static_cast<std::size_t>(n));
    lower_neighbors_.resize(static_cast<std::size_t>(n));
    descent_order_.resize(static_cast<std::size_t>(n));
    breaker_touches_.resize(static_cast<std::size_t>(n));
    ready_round_.assign(static_cast<std::size_t>(n), std::numeric_limits<std::uint64_t>::max());
    completed_round_.assign(static_cast<std::size_t>(n), std::numeric_limits<std::uint64_t>::max());

    const auto& lev = board_->leveling;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : board_->graph.neighbors(v))
            if (lev.level_of(u) < lev.level_of(v))
                lower_neighbors_[static_cast<std::size_t>(v)].push_back(u);
        auto p = board_->dag.descendant_list(v);
        std::sort(p.begin(), p.end(), [&](Vertex a, Vertex b) {
            return lev.level_of(a) != lev.level_of(b) ? lev.level_of(a) < lev.level_of(b) : a < b;
        });
        descent_order_[static_cast<std::size_t>(v)] = std::move(p);
    }

    // out-degree-0 vertices start completed: their lower neighborhood is
    // empty, so every B member is vacuously a candidate
    for (Vertex v = 0; v < n; ++v)
        if (board_->dag.out_degree(v) == 0) {
            pos_.mark_completed(v);
            completed_round_[static_cast<std::size_t>(v)] = 0;
        }
    for (Vertex v = 0; v < n; ++v) {
        bool all_done = true;
        for (Vertex u : board_->dag.out(v))
            if (!pos_.completed(u)) all_done = false;
        if (all_done) {
            pos_.mark_ready(v);
            ready_round_[static_cast<std::size_t>(v)] = 0;
        }
    }
    // two phases: every initially ready vertex needs the B sets of its
    // completed lower neighbors, whose ids may be larger than its own
    for (Vertex v = 0; v < n && !over_; ++v)
        if (pos_.ready(v)) audit_and_select(v);
    for (Vertex v = 0; v < n && !over_; ++v)
        if (pos_.ready(v)) open_subgames_for(v);
}

void MakerEngine::audit_and_select(Vertex v) {
    const std::int64_t s = board_->spec.s();
    ReadinessEvent ev;
    ev.round = round_;
    ev.v = v;
    ev.untouched = pos_.untouched_in(v);
    ev.required = s;
    ev.ok = ev.untouched >= s;
    readiness_.push_back(ev);

    // every pre-readiness touch must be breaker-made and attributed to a
    // descendant, at most d*s^2 per descendant
    const auto& touches = breaker_touches_[static_cast<std::size_t>(v)];
    if (static_cast<std::int64_t>(touches.size()) != pos_.touched_in(v)) attribution_ok_ = false;
    const std::int64_t per_vertex_cap =
        static_cast<std::int64_t>(std::max(1, board_->graph.degree())) * s * s;
    std::unordered_map<Vertex, std::int64_t> per_source;
    for (const auto& [idx, f] : touches) {
        if (f < 0 || !board_->dag.descendants[static_cast<std::size_t>(v)].test(static_cast<std::size_t>(f)))
            attribution_ok_ = false;
        else if (++per_source[f] > per_vertex_cap)
            attribution_ok_ = false;
    }

    if (!ev.ok) {
        invariant_ok_ = false;
        end_game(GameStatus::InvariantViolation,
                 "readiness of v" + std::to_string(v) + " found only " +
                     std::to_string(ev.untouched) + " untouched vertices (need " +
                     std::to_string(s) + ")");
        return;
    }
    pos_.set_b(v, select_b_indices(pos_, v, s));
}

void MakerEngine::open_subgames_for(Vertex v) {
    auto& og = owner_games_[static_cast<std::size_t>(v)];
    auto bv = pos_.b_set(v);
    for (Vertex u : lower_neighbors_[static_cast<std::size_t>(v)]) {
        auto uppers = upper_set(board_->graph, board_->leveling, u, v);
        std::vector<std::vector<int>> shared;
        const bool hyper = !uppers.empty();
        if (hyper) shared = tuple_hyperedges(pos_, v, u, uppers, board_->spec.s());
        for (int bp = 0; bp < static_cast<int>(bv.size()); ++bp) {
            StarVertex x{v, bv[static_cast<std::size_t>(bp)]};
            auto sg = std::make_unique<Subgame>(
                make_subgame(pos_, v, u, x, bp, hyper ? &shared : nullptr));
            og.ids.push_back(static_cast<int>(subgames_.size()));
            og.unfinished++;
            subgames_.push_back(std::move(sg));
        }
    }
    // a later-ready vertex always has lower neighbors, hence subgames
    if (og.ids.empty() && !pos_.completed(v)) complete_owner(v);
}

StarVertex MakerEngine::subgame_board_vertex(const Subgame& sg, int pos) const {
    return {sg.u, pos_.b_set(sg.u)[static_cast<std::size_t>(pos)]};
}

StarEdge MakerEngine::subgame_board_edge(const Subgame& sg, int pos) const {
    return {subgame_board_vertex(sg, pos), sg.x};
}

bool MakerEngine::game_over() const {
    return pos_.completed_count() == board_->graph.vertex_count();
}

int MakerEngine::find_live_subgame(const StarEdge& e) {
    const Vertex v = e.hi.g;
    if (!pos_.ready(v) || !pos_.b_determined(v)) return -1;
    auto bp_hi = pos_.b_position(e.hi);
    if (!bp_hi) return -1;
    auto bp_lo = pos_.b_position(e.lo);
    if (!bp_lo) return -1;
    const auto& lows = lower_neighbors_[static_cast<std::size_t>(v)];
    auto it = std::find(lows.begin(), lows.end(), e.lo.g);
    if (it == lows.end()) return -1;
    const std::size_t u_idx = static_cast<std::size_t>(it - lows.begin());
    const std::size_t s = static_cast<std::size_t>(board_->spec.s());
    const auto& og = owner_games_[static_cast<std::size_t>(v)];
    std::size_t slot = u_idx * s + static_cast<std::size_t>(*bp_hi);
    if (slot >= og.ids.size()) return -1;
    int id = og.ids[slot];
    return subgames_[static_cast<std::size_t>(id)]->finished ? -1 : id;
}

int MakerEngine::first_unfinished_of(Vertex v) {
    auto& og = owner_games_[static_cast<std::size_t>(v)];
    while (og.first_unfinished < static_cast<int>(og.ids.size()) &&
           subgames_[static_cast<std::size_t>(og.ids[static_cast<std::size_t>(og.first_unfinished)])]->finished)
        ++og.first_unfinished;
    if (og.first_unfinished >= static_cast<int>(og.ids.size())) return -1;
    return og.ids[static_cast<std::size_t>(og.first_unfinished)];
}

int MakerEngine::global_first_unfinished() {
    for (Vertex v = 0; v < board_->graph.vertex_count(); ++v) {
        if (!pos_.ready(v) || pos_.completed(v)) continue;
        if (owner_games_[static_cast<std::size_t>(v)].unfinished == 0) continue;
        int id = first_unfinished_of(v);
        if (id >= 0) return id;
    }
    return -1;
}

std::optional<Vertex> MakerEngine::descend(Vertex v) {
    for (Vertex w : descent_order_[static_cast<std::size_t>(v)]) {
        if (!pos_.ready(w) || pos_.completed(w)) continue;
        if (owner_games_[static_cast<std::size_t>(w)].unfinished == 0) continue;
        return w;
    }
    return std::nullopt;
}

MakerEngine::Plan MakerEngine::dispatch(const std::optional<StarEdge>& breaker_edge) {
    Plan plan;
    if (!breaker_edge) {
        plan.dispatch_case = 0;
        plan.subgame_id = global_first_unfinished();
        return plan;
    }
    const Vertex v = breaker_edge->hi.g;
    if (pos_.ready(v) && !pos_.completed(v)) {
        plan.dispatch_case = 1;
        if (int id = find_live_subgame(*breaker_edge); id >= 0) {
            plan.subgame_id = id;
            plan.in_board = true;
            return plan;
        }
        plan.subgame_id = first_unfinished_of(v);
        if (plan.subgame_id < 0) plan.subgame_id = global_first_unfinished();
        return plan;
    }
    if (!pos_.ready(v)) {
        plan.dispatch_case = 2;
        if (auto w = descend(v)) {
            plan.subgame_id = first_unfinished_of(*w);
            return plan;
        }
        plan.subgame_id = global_first_unfinished();
        return plan;
    }
    // v completed
    plan.dispatch_case = 3;
    Vertex w0 = -1;
    for (Vertex w = 0; w < board_->graph.vertex_count(); ++w)
        if (!pos_.completed(w)) {
            w0 = w;
            break;
        }
    if (w0 >= 0) {
        std::optional<Vertex> w = w0;
        if (!pos_.ready(w0) || owner_games_[static_cast<std::size_t>(w0)].unfinished == 0)
            w = descend(w0);
        if (w) {
            plan.subgame_id = first_unfinished_of(*w);
            if (plan.subgame_id >= 0) return plan;
        }
    }
    plan.subgame_id = global_first_unfinished();
    return plan;
}

void MakerEngine::mirror_breaker_claim(Subgame& sg, int pos) {
    ++sg.version;
    ++sg.moves;
    if (sg.t == 1) {
        sg.claimed1.set(static_cast<std::size_t>(pos));
        ++sg.claimed1_count;
        ++sg.breaker1;
        if (sg.claimed1_count == static_cast<int>(sg.claimed1.size())) {
            sg.finished = true;
            sg.won = subgame_win_check(sg, board_->spec.s());
            finalize_subgame(sg);
        }
    } else {
        sg.game->claim(pos, HypergraphGame::Mark::Breaker);
        if (sg.game->all_claimed()) {
            sg.finished = true;
            sg.won = subgame_win_check(sg, board_->spec.s());
            finalize_subgame(sg);
        }
    }
}

int MakerEngine::pick_maker_position(Subgame& sg) const {
    if (sg.t == 1) return sg.first_unclaimed();
    return sg.game->best_maker_move();
}

void MakerEngine::apply_maker_claim(Subgame& sg, int pos) {
    ++sg.version;
    ++sg.moves;
    if (sg.t == 1) {
        sg.claimed1.set(static_cast<std::size_t>(pos));
        ++sg.claimed1_count;
        ++sg.maker1;
        if (subgame_win_check(sg, board_->spec.s())) {
            sg.finished = true;
            sg.won = true;
        } else if (sg.claimed1_count == static_cast<int>(sg.claimed1.size())) {
            sg.finished = true;
            sg.won = false;
        }
    } else {
        sg.game->claim(pos, HypergraphGame::Mark::Maker);
        if (subgame_win_check(sg, board_->spec.s())) {
            sg.finished = true;
            sg.won = true;
        } else if (sg.game->all_claimed()) {
            sg.finished = true;
            sg.won = false;
        }
    }
    if (sg.finished) finalize_subgame(sg);
}

void MakerEngine::finalize_subgame(Subgame& sg) {
    auto& og = owner_games_[static_cast<std::size_t>(sg.owner)];
    --og.unfinished;
    if (sg.won) {
        ++subgames_won_;
    } else {
        ++og.lost;
        ++subgames_lost_;
    }
    // release the heavy state; flags and counters stay for reporting
    sg.game.reset();
    if (og.unfinished == 0 && og.lost == 0 && !pos_.completed(sg.owner)) complete_owner(sg.owner);
}

void MakerEngine::complete_owner(Vertex v) {
    pos_.mark_completed(v);
    completed_round_[static_cast<std::size_t>(v)] = round_;
    for (Vertex w : board_->dag.preds[static_cast<std::size_t>(v)]) {
        if (pos_.ready(w)) continue;
        bool all_done = true;
        for (Vertex u : board_->dag.out(w))
            if (!pos_.completed(u)) all_done = false;
        if (all_done) {
            pos_.mark_ready(w);
            ready_round_[static_cast<std::size_t>(w)] = round_;
            newly_ready_.push_back(w);
        }
    }
}

void MakerEngine::end_game(GameStatus status, std::string error) {
    over_ = true;
    status_ = status;
    error_ = std::move(error);
}

void MakerEngine::finish_round_bookkeeping() {
    std::sort(newly_ready_.begin(), newly_ready_.end());
    newly_ready_.erase(std::unique(newly_ready_.begin(), newly_ready_.end()), newly_ready_.end());
    std::vector<Vertex> batch;
    batch.swap(newly_ready_);
    for (Vertex v : batch) {
        if (over_) break;
        audit_and_select(v);
    }
    for (Vertex v : batch) {
        if (over_) break;
        open_subgames_for(v);
    }
    // later-ready vertices always have lower neighbors, so opening their
    // subgames never completes them; no new readiness events appear here
}

bool MakerEngine::step(BreakerPolicy& breaker) {
    if (over_) return false;
    if (game_over()) {
        end_game(GameStatus::MakerWin);
        return false;
    }
    if (round_ >= round_cap_) {
        end_game(GameStatus::RoundCapExceeded,
                 "round cap " + std::to_string(round_cap_) + " reached");
        return false;
    }
    ++round_;

    std::optional<StarEdge> breaker_edge = breaker.next(*this);
    std::optional<StarVertex> new_touch;
    if (breaker_edge) {
        StarEdge canon = board_->make_edge(breaker_edge->lo, breaker_edge->hi);
        bool was_touched = pos_.touched(canon.hi);
        pos_.claim(Player::Breaker, canon);
        if (!was_touched) new_touch = canon.hi;
        breaker_edge = canon;
        if (cfg_.record_moves) {
            MoveRecord mr;
            mr.round = round_;
            mr.player = Player::Breaker;
            mr.edge = canon;
            moves_.push_back(mr);
        }
    } else if (cfg_.record_moves) {
        MoveRecord mr;
        mr.round = round_;
        mr.player = Player::Breaker;
        mr.pass = true;
        moves_.push_back(mr);
    }

    Plan plan = dispatch(breaker_edge);
    if (plan.subgame_id >= 0 && plan.in_board) {
        Subgame& sg = *subgames_[static_cast<std::size_t>(plan.subgame_id)];
        int bp = pos_.b_position(breaker_edge->lo).value();
        mirror_breaker_claim(sg, bp);
        if (sg.finished) { // breaker exhausted the board; answer elsewhere
            plan.in_board = false;
            plan.subgame_id = first_unfinished_of(sg.owner);
            if (plan.subgame_id < 0) plan.subgame_id = global_first_unfinished();
        }
    }

    if (plan.subgame_id < 0) {
        end_game(GameStatus::Stuck, "no live subgame remains");
        return false;
    }

    Subgame& sg = *subgames_[static_cast<std::size_t>(plan.subgame_id)];
    int mpos = pick_maker_position(sg);
    StarEdge medge = subgame_board_edge(sg, mpos);
    pos_.claim(Player::Maker, medge);
    apply_maker_claim(sg, mpos);
    if (cfg_.record_moves) {
        MoveRecord mr;
        mr.round = round_;
        mr.player = Player::Maker;
        mr.edge = medge;
        mr.dispatch_case = plan.dispatch_case;
        mr.subgame_owner = sg.owner;
        mr.subgame_u = sg.u;
        mr.subgame_x_idx = sg.x.idx;
        mr.in_board = plan.in_board;
        moves_.push_back(mr);
    }
    if (new_touch)
        breaker_touches_[static_cast<std::size_t>(new_touch->g)].push_back(
            {new_touch->idx, sg.owner});

    finish_round_bookkeeping();
    if (!over_ && game_over()) end_game(GameStatus::MakerWin);
    return !over_;
}

Outcome MakerEngine::run(BreakerPolicy& breaker) {
    while (step(breaker)) {
    }
    Outcome out;
    out.status = status_;
    out.maker_win = status_ == GameStatus::MakerWin;
    out.rounds = round_;
    out.round_cap = round_cap_;
    out.completed_vertices = pos_.completed_count();
    out.total_vertices = board_->graph.vertex_count();
    out.moves = std::move(moves_);
    out.readiness = readiness_;
    out.invariant_ok = invariant_ok_;
    out.attribution_ok = attribution_ok_;
    out.subgames_total = static_cast<int>(subgames_.size());
    out.subgames_won = subgames_won_;
    out.subgames_lost = subgames_lost_;
    out.quota_violations = subgames_lost_;
    out.s_guaranteed = check_s_guarantee(std::max(1, board_->graph.degree()), board_->spec.s());
    out.error = error_;
    if (out.maker_win) {
        out.scheme_verified = verify_scheme(pos_);
        if (out.scheme_verified) {
            try {
                out.embedding = extract_embedding(pos_);
                out.embedding_ok = true;
            } catch (const NoValidImageError& e) {
                out.embedding_ok = false;
                out.error = e.what();
            }
        }
    }
    return out;
}

Outcome run_game(const GameBoard& board, BreakerPolicy& breaker, MakerConfig cfg) {
    MakerEngine engine(board, cfg);
    return engine.run(breaker);
}

} // namespace makergame
