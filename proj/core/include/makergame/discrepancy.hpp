#pragma once

#include "makergame/bitset.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace makergame {

// x/2 - sqrt(x * ln(2X) / 2). May be negative; callers clamp.
double quota(std::int64_t x, std::int64_t X);

// Positional game on a hypergraph: players alternately claim vertices.
// Maker's exponential-weight rule keeps every hyperedge near balance. The
// weight of a hyperedge is exp(lambda * (breaker_count - maker_count)) with
// lambda = sqrt(2 ln(2X) / x), x the minimum initial hyperedge size.
class HypergraphGame {
public:
    enum class Mark : unsigned char { None, Maker, Breaker };

    HypergraphGame(int vertex_count, const std::vector<std::vector<int>>& hyperedges);

    int vertex_count() const { return nv_; }
    int hyperedge_count() const { return static_cast<int>(edges_.size()); }
    std::int64_t min_initial_edge_size() const { return x_; }
    double lambda() const { return lambda_; }

    bool claimed(int v) const { return marks_[static_cast<std::size_t>(v)] != Mark::None; }
    Mark mark(int v) const { return marks_[static_cast<std::size_t>(v)]; }
    int unclaimed_count() const { return unclaimed_; }
    bool all_claimed() const { return unclaimed_ == 0; }

    int edge_size(int e) const { return edges_[static_cast<std::size_t>(e)].size; }
    int maker_count(int e) const { return edges_[static_cast<std::size_t>(e)].maker; }
    int breaker_count(int e) const { return edges_[static_cast<std::size_t>(e)].breaker; }
    bool edge_contains(int e, int v) const { return edges_[static_cast<std::size_t>(e)].members.test(static_cast<std::size_t>(v)); }

    // lowest-index unclaimed member of hyperedge e, or -1 when fully claimed
    int first_unclaimed_in_edge(int e) const {
        auto i = Bitset::first_and_not(edges_[static_cast<std::size_t>(e)].members, claimed_mask_);
        return i == Bitset::npos ? -1 : static_cast<int>(i);
    }

    // smallest maker count over hyperedges (0 when there are none)
    int min_maker_count() const;
    std::vector<int> maker_counts() const;

    void claim(int v, Mark who);

    // Unclaimed vertex maximizing the sum of weights of hyperedges containing
    // it; ties break to the lowest index. With no hyperedges every vertex
    // weighs zero and the lowest unclaimed index wins.
    int best_maker_move() const;

    // direct recomputation, for audits
    long double potential() const;
    long double weight_of(int e) const { return edges_[static_cast<std::size_t>(e)].weight; }

private:
    struct Edge {
        Bitset members;
        int size = 0;
        int maker = 0;
        int breaker = 0;
        long double weight = 1.0L;
    };

    int nv_ = 0;
    std::int64_t x_ = 0;
    double lambda_ = 0.0;
    std::vector<Edge> edges_;
    std::vector<Mark> marks_;
    Bitset claimed_mask_;
    std::vector<long double> vertex_weight_; // sum of weights of containing edges
    int unclaimed_ = 0;
};

// Breaker side for standalone hypergraph play: returns a vertex index, or -1
// to pass.
using HypergraphBreakerFn = std::function<int(const HypergraphGame&)>;

struct HypergraphPlayResult {
    std::vector<int> maker_counts;
    std::int64_t x = 0;
    std::int64_t X = 0;
    double quota_value = 0.0;
    bool quota_met = false;
    int rounds = 0;
};

// Alternating play until every vertex is claimed. Breaker moves first unless
// maker_first; a pass (or exhausted board on Breaker's turn) still lets the
// other side move.
HypergraphPlayResult play_hypergraph_game(HypergraphGame f, const HypergraphBreakerFn& breaker,
                                          bool maker_first);

// ready-made breakers
HypergraphBreakerFn hypergraph_random_breaker(std::uint64_t seed);
// attacks the unclaimed vertex of the hyperedge with the smallest maker count
HypergraphBreakerFn hypergraph_greedy_breaker();
HypergraphBreakerFn hypergraph_passing_breaker();

} // namespace makergame
