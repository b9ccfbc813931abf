#pragma once

#include "makergame/maker.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace makergame {

// Adversary for the full game. Returns an unclaimed board edge or nullopt
// for an explicit pass.
class BreakerPolicy {
public:
    virtual ~BreakerPolicy() = default;
    virtual std::optional<StarEdge> next(const MakerEngine& engine) = 0;
    virtual std::string name() const = 0;
};

// Uniform G-edge, then uniform block indices; resamples on collision with a
// claimed edge. Falls back to enumeration on small boards, then to a pass.
class RandomBreaker : public BreakerPolicy {
public:
    explicit RandomBreaker(std::uint64_t seed) : seed_(seed), rng_(seed) {}
    std::optional<StarEdge> next(const MakerEngine& engine) override;
    std::string name() const override { return "random"; }

private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;
    std::vector<std::pair<Vertex, Vertex>> g_edges_;
};

// Attacks the live subgame hyperedge with the smallest Maker count, aiming
// straight at the per-hyperedge quota.
class GreedySubgameBreaker : public BreakerPolicy {
public:
    explicit GreedySubgameBreaker(std::uint64_t seed) : fallback_(seed) {}
    std::optional<StarEdge> next(const MakerEngine& engine) override;
    std::string name() const override { return "greedy"; }

private:
    struct Cache {
        std::uint64_t version = ~std::uint64_t{0};
        int maker_count = 0;
        int pos = -1;
    };
    std::vector<Cache> cache_;
    RandomBreaker fallback_;
};

// Touches untouched vertices in the blocks of not-yet-ready vertices with
// the largest descendant sets, aiming at the untouched-supply invariant.
class ScatterBreaker : public BreakerPolicy {
public:
    explicit ScatterBreaker(std::uint64_t seed) : fallback_(seed) {}
    std::optional<StarEdge> next(const MakerEngine& engine) override;
    std::string name() const override { return "scatter"; }

private:
    std::vector<std::int64_t> cursor_; // per-v low-water mark over S_v indices
    RandomBreaker fallback_;
};

// Replays a recorded move list; passes once the script runs out.
class ScriptedBreaker : public BreakerPolicy {
public:
    explicit ScriptedBreaker(std::vector<std::optional<StarEdge>> script)
        : script_(std::move(script)) {}
    std::optional<StarEdge> next(const MakerEngine& engine) override;
    std::string name() const override { return "scripted"; }

    static std::vector<std::optional<StarEdge>> parse_script(std::string_view text);

private:
    std::vector<std::optional<StarEdge>> script_;
    std::size_t cursor_ = 0;
};

// Terminal loop: "u#i v#j" claims, "show v" prints a block, "pass", "quit".
class InteractiveBreaker : public BreakerPolicy {
public:
    InteractiveBreaker(std::istream& in, std::ostream& out) : in_(in), out_(out) {}
    std::optional<StarEdge> next(const MakerEngine& engine) override;
    std::string name() const override { return "interactive"; }

private:
    void print_summary(const MakerEngine& engine);
    void print_block(const MakerEngine& engine, Vertex v);
    std::istream& in_;
    std::ostream& out_;
};

// kinds: random, greedy, scatter, scripted, interactive
std::unique_ptr<BreakerPolicy> make_breaker(const std::string& kind, std::uint64_t seed,
                                            const std::string& script_text = {});

} // namespace makergame
