#pragma once

#include "makergame/blocking.hpp"
#include "makergame/graph.hpp"
#include "makergame/leveling.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace makergame {

using u128 = unsigned __int128;

std::string u128_to_string(u128 v);

// s_d := d^5 * 2^(d+4)
std::int64_t paper_s(int d);

enum class Player : unsigned char { Maker, Breaker };

inline const char* player_name(Player p) { return p == Player::Maker ? "M" : "B"; }

// Vertex of the board H, addressed as (G-vertex, index within its block).
struct StarVertex {
    Vertex g = -1;
    std::int64_t idx = -1;

    bool operator==(const StarVertex&) const = default;
    auto operator<=>(const StarVertex&) const = default;

    std::string to_string() const { return "v" + std::to_string(g) + "#" + std::to_string(idx); }
    static StarVertex parse(std::string_view token);
};

// Board edge with endpoints in canonical order: l(lo) < l(hi).
struct StarEdge {
    StarVertex lo, hi;

    bool operator==(const StarEdge&) const = default;
    std::string to_string() const { return lo.to_string() + " " + hi.to_string(); }
};

// Implicit board H. Blocks S_v have |S_v| = d*s^2*|P(v)| + s; every pair
// (a,b) with a in S_u, b in S_v and (u,v) in E(G) is an edge. Vertices and
// edges are never materialized.
class BoardSpec {
public:
    static BoardSpec build(const TargetGraph& g, const Leveling& l, const BlockingDag& dag,
                           std::int64_t s);

    std::int64_t s() const { return s_; }
    std::int64_t block_size(Vertex v) const { return block_size_[static_cast<std::size_t>(v)]; }
    std::uint64_t block_offset(Vertex v) const { return block_offset_[static_cast<std::size_t>(v)]; }
    std::uint64_t total_star_vertices() const { return total_; }

    std::uint64_t star_id(const StarVertex& x) const {
        return block_offset(x.g) + static_cast<std::uint64_t>(x.idx);
    }

    bool valid_star(const StarVertex& x, int n) const {
        return x.g >= 0 && x.g < n && x.idx >= 0 && x.idx < block_size(x.g);
    }

private:
    std::int64_t s_ = 0;
    std::vector<std::int64_t> block_size_;
    std::vector<std::uint64_t> block_offset_;
    std::uint64_t total_ = 0;
};

struct EdgeCountReport {
    u128 exact = 0;
    u128 paper_bound = 0;
    bool bound_saturated = false; // paper bound exceeds 2^127
    bool exact_le_bound = false;

    std::string exact_str() const { return u128_to_string(exact); }
    std::string bound_str() const { return bound_saturated ? ">=2^127" : u128_to_string(paper_bound); }
};

// Exact sum of |S_u|*|S_v| over G-edges, plus the upper bound
// |E(G)| * (d*s^2*d^(2r) + s)^2 for comparison.
EdgeCountReport edge_count(const BoardSpec& spec, const TargetGraph& g, const Leveling& l);

// Everything immutable a game needs: graph, leveling, blocking DAG, board.
struct GameBoard {
    TargetGraph graph;
    Leveling leveling;
    BlockingDag dag;
    BoardSpec spec;

    static GameBoard build(TargetGraph g, Leveling l, std::int64_t s);

    int level_of_star(const StarVertex& x) const { return leveling.level_of(x.g); }

    bool is_board_edge(const StarVertex& a, const StarVertex& b) const;

    // Canonical edge (lower level first); throws NotABoardEdgeError.
    StarEdge make_edge(const StarVertex& a, const StarVertex& b) const;
};

// Mutable game state: sparse claim ledger, touched flags, B_v selections,
// per-vertex ready/completed flags. Owned by a single game runner.
class GamePosition {
public:
    explicit GamePosition(const GameBoard& board);

    const GameBoard& board() const { return *board_; }

    void claim(Player p, const StarEdge& e);
    std::optional<Player> owner_of(const StarEdge& e) const;
    bool is_claimed(const StarEdge& e) const { return owner_of(e).has_value(); }
    bool maker_has(const StarEdge& e) const;
    bool maker_has(const StarVertex& a, const StarVertex& b) const;

    std::uint64_t maker_edge_count() const { return maker_edges_; }
    std::uint64_t breaker_edge_count() const { return breaker_edges_; }
    std::uint64_t claimed_edge_count() const { return claims_.size(); }

    bool touched(const StarVertex& x) const;
    std::int64_t touched_in(Vertex v) const { return touched_count_[static_cast<std::size_t>(v)]; }
    std::int64_t untouched_in(Vertex v) const;

    // B_v bookkeeping. Indices are positions within S_v, sorted ascending.
    bool b_determined(Vertex v) const { return b_set_[static_cast<std::size_t>(v)]; }
    std::span<const std::int64_t> b_set(Vertex v) const { return b_[static_cast<std::size_t>(v)]; }
    void set_b(Vertex v, std::vector<std::int64_t> indices);
    // position of x within B_{x.g}, if selected
    std::optional<int> b_position(const StarVertex& x) const;

    bool ready(Vertex v) const { return ready_[static_cast<std::size_t>(v)]; }
    bool completed(Vertex v) const { return completed_[static_cast<std::size_t>(v)]; }
    void mark_ready(Vertex v) { ready_[static_cast<std::size_t>(v)] = 1; }
    void mark_completed(Vertex v) { completed_[static_cast<std::size_t>(v)] = 1; }
    int completed_count() const;

private:
    std::uint64_t edge_key(const StarEdge& e) const;

    const GameBoard* board_;
    std::unordered_map<std::uint64_t, Player> claims_;
    std::unordered_set<std::uint64_t> touched_;
    std::vector<std::int64_t> touched_count_;
    std::vector<std::vector<std::int64_t>> b_;
    std::vector<std::unordered_map<std::int64_t, int>> b_pos_;
    std::vector<char> b_set_, ready_, completed_;
    std::uint64_t maker_edges_ = 0, breaker_edges_ = 0;
};

} // namespace makergame
