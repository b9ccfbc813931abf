#pragma once

#include "makergame/board.hpp"
#include "makergame/candidate.hpp"
#include "makergame/discrepancy.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace makergame {

class BreakerPolicy;

// Eq-(1) chain: true iff for every t in {2..d}
//   s/(2^t(t-1)) - sqrt( s/(2^t(t-1)) * ln(2 s^(t-1)) ) >= s/(2^t t),
// with a 1e-9 comparison margin. Vacuously true for d = 1.
bool check_s_guarantee(int d, std::int64_t s);

// Smallest power of two >= 32 passing check_s_guarantee. 32 for d=1, 128 for
// d=2, 4096 for d=3.
std::int64_t guarantee_s(int d);

// "paper" -> s_d, "guarantee" -> guarantee_s(d), "custom" -> given value
std::int64_t resolve_s(const std::string& mode, int d, std::int64_t custom_value);

// Localized game G_{u,x*}: board is E_H(B_u, {x*}), identified with B_u
// positions. Winning makes x* a candidate with respect to (u, owner).
// For t = 1 play is a pairing over the s board edges; for t >= 2 it is a
// positional game on the hypergraph whose hyperedges are indexed by tuples
// from the upper-set B blocks, membership frozen at creation.
struct Subgame {
    Vertex owner = -1; // v with x* in B_v
    Vertex u = -1;     // lower neighbor
    int b_pos = -1;    // position of x* in B_v
    StarVertex x;
    int t = 1;
    bool finished = false;
    bool won = false;
    std::uint64_t moves = 0;   // claims recorded while live
    std::uint64_t version = 0; // bumped on every recorded claim

    // t == 1 state over B_u positions
    Bitset claimed1;
    int claimed1_count = 0;
    int maker1 = 0;
    int breaker1 = 0;

    // t >= 2 state
    std::unique_ptr<HypergraphGame> game;

    int board_size() const;       // number of board edges (= |B_u|)
    int first_unclaimed() const;  // board position, -1 when exhausted
};

// t=1: Maker holds >= ceil(s/2) of the s edges; t>=2: every hyperedge
// satisfies maker_count * t * 2^t >= s.
bool subgame_win_check(const Subgame& sg, std::int64_t s);

// Builds the subgame for (owner, u, x). Requires owner ready, B sets of u
// and the upper set determined; validates the per-hyperedge size bound
// |e| * 2^(t-1) * (t-1) >= s and throws HyperedgeTooSmallError below it.
Subgame build_subgame(const GamePosition& pos, Vertex owner, Vertex u, const StarVertex& x);

// Deterministic B choice: the s lowest-index untouched vertices of S_v.
// Throws InvariantViolationError when fewer than s are untouched.
std::vector<std::int64_t> select_b_indices(const GamePosition& pos, Vertex v, std::int64_t s);

enum class GameStatus : unsigned char {
    MakerWin,
    RoundCapExceeded,
    Stuck, // no live subgame remains but vertices are incomplete
    InvariantViolation,
};

const char* status_name(GameStatus s);

struct MoveRecord {
    std::uint64_t round = 0;
    Player player = Player::Breaker;
    bool pass = false;
    StarEdge edge;
    // maker-response metadata
    int dispatch_case = 0; // 1..3; 0 for responses to a pass
    Vertex subgame_owner = -1;
    Vertex subgame_u = -1;
    std::int64_t subgame_x_idx = -1;
    bool in_board = false; // response inside the subgame the breaker hit
};

struct ReadinessEvent {
    std::uint64_t round = 0;
    Vertex v = -1;
    std::int64_t untouched = 0;
    std::int64_t required = 0;
    bool ok = false;
};

struct Outcome {
    GameStatus status = GameStatus::Stuck;
    bool maker_win = false;
    std::uint64_t rounds = 0;
    std::uint64_t round_cap = 0;
    int completed_vertices = 0;
    int total_vertices = 0;
    std::vector<MoveRecord> moves;
    std::vector<ReadinessEvent> readiness;
    bool invariant_ok = true;
    bool attribution_ok = true;
    int subgames_total = 0;
    int subgames_won = 0;
    int subgames_lost = 0;
    int quota_violations = 0; // = subgames_lost
    bool scheme_verified = false;
    bool embedding_ok = false;
    std::vector<StarVertex> embedding;
    bool s_guaranteed = false;
    std::string error;
};

struct MakerConfig {
    std::uint64_t round_cap = 0; // 0: 4 * sum_v d s^2 (|P(v)|+1)
    bool record_moves = true;
};

std::uint64_t default_round_cap(const GameBoard& board);

// One game: Breaker moves first each round, Maker dispatches per the case
// analysis and answers inside a subgame. B sets are fixed at the end of the
// round a vertex becomes ready. Single-threaded; one engine per game.
class MakerEngine {
public:
    explicit MakerEngine(const GameBoard& board, MakerConfig cfg = {});

    const GameBoard& board() const { return *board_; }
    const GamePosition& position() const { return pos_; }

    std::size_t subgame_count() const { return subgames_.size(); }
    const Subgame& subgame(std::size_t i) const { return *subgames_[i]; }

    StarVertex subgame_board_vertex(const Subgame& sg, int pos) const;
    StarEdge subgame_board_edge(const Subgame& sg, int pos) const;

    bool game_over() const;
    std::uint64_t rounds_played() const { return round_; }

    // one full round; false when the game ended before or during it
    bool step(BreakerPolicy& breaker);

    Outcome run(BreakerPolicy& breaker);

private:
    struct OwnerGames {
        std::vector<int> ids; // (u ascending, b_pos ascending) order
        int first_unfinished = 0;
        int unfinished = 0;
        int lost = 0;
    };

    struct Plan {
        int dispatch_case = 0;
        int subgame_id = -1;
        bool in_board = false;
    };

    void initialize();
    void finish_round_bookkeeping();
    void audit_and_select(Vertex v);
    void open_subgames_for(Vertex v);
    int find_live_subgame(const StarEdge& e);
    int first_unfinished_of(Vertex v);
    int global_first_unfinished();
    std::optional<Vertex> descend(Vertex v);
    Plan dispatch(const std::optional<StarEdge>& breaker_edge);
    void mirror_breaker_claim(Subgame& sg, int pos);
    int pick_maker_position(Subgame& sg) const;
    void apply_maker_claim(Subgame& sg, int pos);
    void finalize_subgame(Subgame& sg);
    void complete_owner(Vertex v);
    void end_game(GameStatus status, std::string error = {});

    const GameBoard* board_;
    MakerConfig cfg_;
    GamePosition pos_;
    std::uint64_t round_ = 0;
    std::uint64_t round_cap_ = 0;
    bool over_ = false;
    GameStatus status_ = GameStatus::Stuck;
    std::string error_;

    std::vector<std::unique_ptr<Subgame>> subgames_;
    std::vector<OwnerGames> owner_games_;                    // per vertex
    std::vector<std::vector<Vertex>> lower_neighbors_;       // N^-(v), ascending id
    std::vector<std::vector<Vertex>> descent_order_;         // P(v) by (level, id)
    std::vector<Vertex> newly_ready_;                        // queue for end of round
    std::vector<std::vector<std::pair<std::int64_t, Vertex>>> breaker_touches_; // per v: (idx, f)
    std::vector<std::uint64_t> ready_round_, completed_round_;

    std::vector<MoveRecord> moves_;
    std::vector<ReadinessEvent> readiness_;
    bool invariant_ok_ = true;
    bool attribution_ok_ = true;
    int subgames_lost_ = 0;
    int subgames_won_ = 0;
};

Outcome run_game(const GameBoard& board, BreakerPolicy& breaker, MakerConfig cfg = {});

} // namespace makergame
