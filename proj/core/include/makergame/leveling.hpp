#pragma once

#include "makergame/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace makergame {

// Level labeling l : V(G) -> {1..r}. Valid when same-level vertices are at
// distance >= 3 in G.
struct Leveling {
    std::vector<int> levels; // per vertex, 1-based values
    int r = 0;               // level-range bound used

    int level_of(Vertex v) const { return levels[static_cast<std::size_t>(v)]; }

    // "vertex level" per line
    std::string to_text() const;
    static Leveling from_text(std::string_view text, int n);
};

// ceil(e * d^8)
long long paper_r(int d);

// Uniform random levels in {1..paper_r(d)}, then Moser-Tardos style
// resampling: while some vertex shares its level with another vertex at
// distance <= 2, resample the levels of that vertex's distance-<=2 ball.
// Violating vertices are scanned in ascending id order. Deterministic per
// seed.
Leveling level_lll(const TargetGraph& g, std::uint64_t seed, long long max_resamples = -1);

// Greedy proper coloring of the distance-<=2 closure in vertex-id order.
// Uses at most d^2 + 1 levels.
Leveling level_greedy(const TargetGraph& g);

struct LevelViolation {
    Vertex u, v;
    int distance; // < 3
};

// Empty iff every same-level pair is at distance >= 3.
std::vector<LevelViolation> validate_leveling(const TargetGraph& g, const Leveling& l);

} // namespace makergame
