#pragma once

#include "makergame/board.hpp"

#include <vector>

namespace makergame {

// {w in N+(u) : l(w) < l(v)} sorted by (level, id), for a G-edge (u,v) with
// l(u) < l(v). The subgame arity is t = result size + 1.
std::vector<Vertex> upper_set(const TargetGraph& g, const Leveling& l, Vertex u, Vertex v);

// x* in S_v is a candidate with respect to (u,v) when for every tuple
// (b1,...,b_{t-1}) drawn from the B-sets of the upper set, at least a
// 1/(t*2^t) fraction of B_u is Maker-connected to the whole tuple and to x*.
// Exact integer comparison: count * t * 2^t >= |B_u|.
bool is_candidate_wrt_edge(const GamePosition& pos, const StarVertex& x, Vertex u, Vertex v);

// conjunction over all u in N-(v); vacuously true when N-(v) is empty
bool is_candidate(const GamePosition& pos, const StarVertex& x);

// Level ordering v_1..v_n with l(v_1) <= ... <= l(v_n), ties by id. All B
// sets must be determined.
struct CandidateScheme {
    std::vector<Vertex> order;
};

CandidateScheme make_scheme(const GamePosition& pos);

// True iff every member of every B_v is a candidate. Batched per G-edge with
// cached Maker-adjacency masks between consecutive B blocks.
bool verify_scheme(const GamePosition& pos);

// Constructive content of the scheme property: processes vertices in
// decreasing level order and picks for each u the lowest-index member of B_u
// Maker-connected to the already-chosen images of all upper neighbors. The
// returned map is verified edge-by-edge against the ledger before returning.
// Requires a verified scheme; throws NoValidImageError otherwise.
std::vector<StarVertex> extract_embedding(const GamePosition& pos);

// "g_vertex -> v{v}#{idx}" lines
std::string format_embedding(const std::vector<StarVertex>& embedding);

} // namespace makergame
