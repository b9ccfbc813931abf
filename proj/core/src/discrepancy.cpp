#include "makergame/discrepancy.hpp"

#include "makergame/errors.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

namespace makergame {

double quota(std::int64_t x, std::int64_t X) {
    if (x < 1 || X < 1) throw Error("quota needs x >= 1 and X >= 1");
    double xd = static_cast<double>(x);
    return xd / 2.0 - std::sqrt(xd * std::log(2.0 * static_cast<double>(X)) / 2.0);
}

HypergraphGame::HypergraphGame(int vertex_count, const std::vector<std::vector<int>>& hyperedges)
    : nv_(vertex_count), marks_(static_cast<std::size_t>(vertex_count), Mark::None),
      claimed_mask_(static_cast<std::size_t>(vertex_count)),
      vertex_weight_(static_cast<std::size_t>(vertex_count), 0.0L), unclaimed_(vertex_count) {
    if (vertex_count < 0) throw Error("negative vertex count");
    edges_.reserve(hyperedges.size());
    x_ = 0;
    for (const auto& members : hyperedges) {
        Edge e;
        e.members = Bitset(static_cast<std::size_t>(nv_));
        for (int v : members) {
            if (v < 0 || v >= nv_) throw Error("hyperedge member out of range");
            if (!e.members.test(static_cast<std::size_t>(v))) {
                e.members.set(static_cast<std::size_t>(v));
                ++e.size;
            }
        }
        if (x_ == 0 || e.size < x_) x_ = e.size;
        edges_.push_back(std::move(e));
    }
    if (edges_.empty() || x_ <= 0) {
        lambda_ = 0.0; // degenerate: play arbitrary vertices
    } else {
        lambda_ = std::sqrt(2.0 * std::log(2.0 * static_cast<double>(edges_.size())) /
                            static_cast<double>(x_));
    }
    for (auto& e : edges_) {
        e.weight = 1.0L;
        e.members.for_each_set([&](std::size_t v) { vertex_weight_[v] += 1.0L; });
    }
}

int HypergraphGame::min_maker_count() const {
    int m = 0;
    bool first = true;
    for (const auto& e : edges_) {
        if (first || e.maker < m) m = e.maker;
        first = false;
    }
    return m;
}

std::vector<int> HypergraphGame::maker_counts() const {
    std::vector<int> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.maker);
    return out;
}

void HypergraphGame::claim(int v, Mark who) {
    if (v < 0 || v >= nv_) throw Error("claim: vertex out of range");
    if (who == Mark::None) throw Error("claim: needs a player");
    auto vi = static_cast<std::size_t>(v);
    if (marks_[vi] != Mark::None) throw Error("claim: vertex already claimed");
    marks_[vi] = who;
    claimed_mask_.set(vi);
    --unclaimed_;
    for (auto& e : edges_) {
        if (!e.members.test(vi)) continue;
        if (who == Mark::Maker)
            ++e.maker;
        else
            ++e.breaker;
        long double neww =
            std::exp(static_cast<long double>(lambda_) * static_cast<long double>(e.breaker - e.maker));
        long double delta = neww - e.weight;
        e.weight = neww;
        e.members.for_each_set([&](std::size_t u) {
            if (marks_[u] == Mark::None) vertex_weight_[u] += delta;
        });
    }
}

int HypergraphGame::best_maker_move() const {
    int best = -1;
    long double best_w = 0.0L;
    for (int v = 0; v < nv_; ++v) {
        if (marks_[static_cast<std::size_t>(v)] != Mark::None) continue;
        long double w = vertex_weight_[static_cast<std::size_t>(v)];
        if (best < 0 || w > best_w) {
            best = v;
            best_w = w;
        }
    }
    if (best < 0) throw Error("best_maker_move: no unclaimed vertex");
    return best;
}

long double HypergraphGame::potential() const {
    long double sum = 0.0L;
    for (const auto& e : edges_)
        sum += std::exp(static_cast<long double>(lambda_) *
                        static_cast<long double>(e.breaker - e.maker));
    return sum;
}

HypergraphPlayResult play_hypergraph_game(HypergraphGame f, const HypergraphBreakerFn& breaker,
                                          bool maker_first) {
    HypergraphPlayResult res;
    res.x = f.min_initial_edge_size();
    res.X = f.hyperedge_count();

    bool makers_turn = maker_first;
    while (!f.all_claimed()) {
        if (makers_turn) {
            f.claim(f.best_maker_move(), HypergraphGame::Mark::Maker);
        } else {
            int v = breaker(f);
            if (v >= 0) f.claim(v, HypergraphGame::Mark::Breaker);
            // a pass leaves the board to Maker
        }
        if (!makers_turn) ++res.rounds;
        makers_turn = !makers_turn;
    }

    res.maker_counts = f.maker_counts();
    if (res.X > 0 && res.x > 0) {
        res.quota_value = quota(res.x, res.X);
        res.quota_met = true;
        for (std::size_t e = 0; e < res.maker_counts.size(); ++e)
            if (static_cast<double>(res.maker_counts[e]) < res.quota_value) res.quota_met = false;
    } else {
        res.quota_value = 0.0;
        res.quota_met = true;
    }
    return res;
}

HypergraphBreakerFn hypergraph_random_breaker(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](const HypergraphGame& g) -> int {
        int un = g.unclaimed_count();
        if (un == 0) return -1;
        std::uniform_int_distribution<int> pick(0, un - 1);
        int k = pick(*rng);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.claimed(v)) continue;
            if (k-- == 0) return v;
        }
        return -1;
    };
}

HypergraphBreakerFn hypergraph_greedy_breaker() {
    return [](const HypergraphGame& g) -> int {
        int best_edge = -1, best_vertex = -1;
        for (int e = 0; e < g.hyperedge_count(); ++e) {
            if (best_edge >= 0 && g.maker_count(e) >= g.maker_count(best_edge)) continue;
            int v = g.first_unclaimed_in_edge(e);
            if (v < 0) continue;
            best_edge = e;
            best_vertex = v;
        }
        if (best_vertex >= 0) return best_vertex;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!g.claimed(v)) return v;
        return -1;
    };
}

HypergraphBreakerFn hypergraph_passing_breaker() {
    return [](const HypergraphGame&) { return -1; };
}

} // namespace makergame
