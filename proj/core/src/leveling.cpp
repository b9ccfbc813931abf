#include "makergame/leveling.hpp"

#include "makergame/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace makergame {

namespace {

// distance-<=2 ball around v, excluding v itself
std::vector<Vertex> ball2(const TargetGraph& g, Vertex v) {
    std::vector<Vertex> out;
    for (Vertex u : g.neighbors(v)) {
        out.push_back(u);
        for (Vertex w : g.neighbors(u))
            if (w != v) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::string Leveling::to_text() const {
    std::string out;
    for (std::size_t v = 0; v < levels.size(); ++v) {
        out += std::to_string(v);
        out += ' ';
        out += std::to_string(levels[v]);
        out += '\n';
    }
    return out;
}

Leveling Leveling::from_text(std::string_view text, int n) {
    Leveling l;
    l.levels.assign(static_cast<std::size_t>(n), 0);
    std::istringstream in{std::string(text)};
    long v, lev;
    while (in >> v >> lev) {
        if (v < 0 || v >= n) throw ParseError("leveling: vertex out of range");
        if (lev < 1) throw ParseError("leveling: levels are 1-based");
        l.levels[static_cast<std::size_t>(v)] = static_cast<int>(lev);
        l.r = std::max(l.r, static_cast<int>(lev));
    }
    for (std::size_t v2 = 0; v2 < l.levels.size(); ++v2)
        if (l.levels[v2] == 0) throw ParseError("leveling: vertex " + std::to_string(v2) + " unassigned");
    return l;
}

long long paper_r(int d) {
    if (d < 1) throw LevelingError("paper_r needs d >= 1");
    double d8 = std::pow(static_cast<double>(d), 8.0);
    return static_cast<long long>(std::ceil(std::numbers::e * d8));
}

Leveling level_lll(const TargetGraph& g, std::uint64_t seed, long long max_resamples) {
    const int n = g.vertex_count();
    Leveling l;
    l.r = static_cast<int>(std::min<long long>(paper_r(std::max(1, g.degree())),
                                               std::numeric_limits<int>::max()));
    l.levels.assign(static_cast<std::size_t>(n), 1);
    if (n == 0) return l;
    if (max_resamples < 0) max_resamples = 1000 + 100LL * n;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, l.r);
    for (auto& lev : l.levels) lev = pick(rng);

    std::vector<std::vector<Vertex>> balls(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) balls[static_cast<std::size_t>(v)] = ball2(g, v);

    auto violated = [&](Vertex v) {
        for (Vertex w : balls[static_cast<std::size_t>(v)])
            if (l.levels[static_cast<std::size_t>(w)] == l.levels[static_cast<std::size_t>(v)])
                return true;
        return false;
    };

    long long resamples = 0;
    for (;;) {
        Vertex bad = -1;
        for (Vertex v = 0; v < n; ++v)
            if (violated(v)) {
                bad = v;
                break;
            }
        if (bad < 0) break;
        if (++resamples > max_resamples)
            throw LevelingError("level_lll: resample budget exhausted");
        l.levels[static_cast<std::size_t>(bad)] = pick(rng);
        for (Vertex w : balls[static_cast<std::size_t>(bad)])
            l.levels[static_cast<std::size_t>(w)] = pick(rng);
    }
    return l;
}

Leveling level_greedy(const TargetGraph& g) {
    const int n = g.vertex_count();
    Leveling l;
    l.levels.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        std::vector<char> used(static_cast<std::size_t>(n) + 2, 0);
        for (Vertex w : ball2(g, v)) {
            int lw = l.levels[static_cast<std::size_t>(w)];
            if (lw > 0 && lw <= n + 1) used[static_cast<std::size_t>(lw)] = 1;
        }
        int lev = 1;
        while (used[static_cast<std::size_t>(lev)]) ++lev;
        l.levels[static_cast<std::size_t>(v)] = lev;
        l.r = std::max(l.r, lev);
    }
    if (n > 0 && l.r == 0) l.r = 1;
    return l;
}

std::vector<LevelViolation> validate_leveling(const TargetGraph& g, const Leveling& l) {
    const int n = g.vertex_count();
    if (static_cast<int>(l.levels.size()) != n)
        throw LevelingError("leveling does not cover all vertices");
    std::vector<LevelViolation> out;
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : ball2(g, v)) {
            if (w <= v) continue;
            if (l.levels[static_cast<std::size_t>(w)] == l.levels[static_cast<std::size_t>(v)]) {
                int d = g.distance(v, w).value();
                out.push_back({v, w, d});
            }
        }
    }
    return out;
}

} // namespace makergame
