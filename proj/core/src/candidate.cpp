#include "makergame/candidate.hpp"

#include "makergame/errors.hpp"

#include <algorithm>
#include <numeric>

namespace makergame {

std::vector<Vertex> upper_set(const TargetGraph& g, const Leveling& l, Vertex u, Vertex v) {
    if (!g.has_edge(u, v)) throw Error("upper_set: (u,v) is not a G-edge");
    if (l.level_of(u) >= l.level_of(v)) throw Error("upper_set: needs l(u) < l(v)");
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(u))
        if (l.level_of(w) > l.level_of(u) && l.level_of(w) < l.level_of(v)) out.push_back(w);
    std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) {
        return l.level_of(a) != l.level_of(b) ? l.level_of(a) < l.level_of(b) : a < b;
    });
    return out;
}

namespace {

// Maker-adjacency masks over B_u positions: mask[i] = set of positions p such
// that Maker holds the edge (S_u[B_u[p]], target_i).
std::vector<Bitset> maker_masks(const GamePosition& pos, Vertex u,
                                const std::vector<StarVertex>& targets) {
    auto bu = pos.b_set(u);
    std::vector<Bitset> masks;
    masks.reserve(targets.size());
    for (const auto& t : targets) {
        Bitset m(bu.size());
        for (std::size_t p = 0; p < bu.size(); ++p)
            if (pos.maker_has(StarVertex{u, bu[p]}, t)) m.set(p);
        masks.push_back(std::move(m));
    }
    return masks;
}

std::vector<StarVertex> b_stars(const GamePosition& pos, Vertex v) {
    std::vector<StarVertex> out;
    for (auto idx : pos.b_set(v)) out.push_back({v, idx});
    return out;
}

// Enumerates tuples over the upper-set B blocks; calls f with the running
// intersection mask for each complete tuple. Returns false if f ever does.
bool for_each_tuple_mask(const GamePosition& pos, Vertex u, const std::vector<Vertex>& uppers,
                         const auto& f) {
    auto bu_size = pos.b_set(u).size();
    std::vector<std::vector<Bitset>> per_level;
    per_level.reserve(uppers.size());
    for (Vertex ui : uppers) per_level.push_back(maker_masks(pos, u, b_stars(pos, ui)));

    Bitset full(bu_size);
    for (std::size_t p = 0; p < bu_size; ++p) full.set(p);

    std::vector<std::size_t> choice(per_level.size(), 0);
    std::vector<Bitset> stack;
    stack.push_back(full);

    if (per_level.empty()) return f(full);

    std::size_t depth = 0;
    for (;;) {
        while (stack.size() <= depth + 1) stack.push_back(Bitset(bu_size));
        stack[depth + 1] = stack[depth] & per_level[depth][choice[depth]];
        if (depth + 1 == per_level.size()) {
            if (!f(stack[depth + 1])) return false;
            // advance odometer
            for (;;) {
                ++choice[depth];
                if (choice[depth] < per_level[depth].size()) break;
                choice[depth] = 0;
                if (depth == 0) return true;
                --depth;
            }
        } else {
            ++depth;
        }
    }
}

void require_b(const GamePosition& pos, Vertex v) {
    if (!pos.b_determined(v))
        throw BUndeterminedError("B set not determined for vertex " + std::to_string(v));
}

bool candidate_wrt_edge_impl(const GamePosition& pos, const StarVertex& x, Vertex u, Vertex v) {
    const auto& board = pos.board();
    auto uppers = upper_set(board.graph, board.leveling, u, v);
    require_b(pos, u);
    for (Vertex ui : uppers) require_b(pos, ui);

    const std::size_t t = uppers.size() + 1;
    const std::int64_t denom = static_cast<std::int64_t>(t) << t; // t * 2^t
    const std::int64_t bu_size = static_cast<std::int64_t>(pos.b_set(u).size());

    auto x_mask_vec = maker_masks(pos, u, {x});
    const Bitset& to_x = x_mask_vec.front();

    return for_each_tuple_mask(pos, u, uppers, [&](const Bitset& tuple_mask) {
        std::int64_t count = static_cast<std::int64_t>(Bitset::and_count(tuple_mask, to_x));
        return count * denom >= bu_size;
    });
}

} // namespace

bool is_candidate_wrt_edge(const GamePosition& pos, const StarVertex& x, Vertex u, Vertex v) {
    const auto& board = pos.board();
    if (x.g != v) throw Error("is_candidate_wrt_edge: x must lie in S_v");
    if (!board.spec.valid_star(x, board.graph.vertex_count()))
        throw Error("is_candidate_wrt_edge: bad star vertex");
    return candidate_wrt_edge_impl(pos, x, u, v);
}

bool is_candidate(const GamePosition& pos, const StarVertex& x) {
    const auto& board = pos.board();
    const Vertex v = x.g;
    for (Vertex u : board.graph.neighbors(v)) {
        if (board.leveling.level_of(u) >= board.leveling.level_of(v)) continue;
        if (!candidate_wrt_edge_impl(pos, x, u, v)) return false;
    }
    return true;
}

CandidateScheme make_scheme(const GamePosition& pos) {
    const auto& board = pos.board();
    const int n = board.graph.vertex_count();
    for (Vertex v = 0; v < n; ++v) require_b(pos, v);
    CandidateScheme s;
    s.order.resize(static_cast<std::size_t>(n));
    std::iota(s.order.begin(), s.order.end(), 0);
    std::sort(s.order.begin(), s.order.end(), [&](Vertex a, Vertex b) {
        int la = board.leveling.level_of(a), lb = board.leveling.level_of(b);
        return la != lb ? la < lb : a < b;
    });
    return s;
}

bool verify_scheme(const GamePosition& pos) {
    const auto& board = pos.board();
    const int n = board.graph.vertex_count();
    for (Vertex v = 0; v < n; ++v) require_b(pos, v);

    // per G-edge (u,v) with l(u) < l(v): check all of B_v at once, sharing
    // the tuple-intersection masks
    for (auto [a, b] : board.graph.edges()) {
        Vertex u = a, v = b;
        if (board.leveling.level_of(u) > board.leveling.level_of(v)) std::swap(u, v);
        auto uppers = upper_set(board.graph, board.leveling, u, v);
        const std::size_t t = uppers.size() + 1;
        const std::int64_t denom = static_cast<std::int64_t>(t) << t;
        const std::int64_t bu_size = static_cast<std::int64_t>(pos.b_set(u).size());

        auto x_masks = maker_masks(pos, u, b_stars(pos, v));
        bool ok = for_each_tuple_mask(pos, u, uppers, [&](const Bitset& tuple_mask) {
            for (const auto& xm : x_masks) {
                std::int64_t count = static_cast<std::int64_t>(Bitset::and_count(tuple_mask, xm));
                if (count * denom < bu_size) return false;
            }
            return true;
        });
        if (!ok) return false;
    }
    return true;
}

std::vector<StarVertex> extract_embedding(const GamePosition& pos) {
    const auto& board = pos.board();
    const int n = board.graph.vertex_count();
    for (Vertex v = 0; v < n; ++v) require_b(pos, v);

    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        int la = board.leveling.level_of(a), lb = board.leveling.level_of(b);
        return la != lb ? la > lb : a < b; // decreasing level, ties by id
    });

    std::vector<StarVertex> image(static_cast<std::size_t>(n), StarVertex{});
    std::vector<char> chosen(static_cast<std::size_t>(n), 0);
    for (Vertex u : order) {
        std::vector<StarVertex> needed;
        for (Vertex w : board.graph.neighbors(u))
            if (board.leveling.level_of(w) > board.leveling.level_of(u)) {
                if (!chosen[static_cast<std::size_t>(w)])
                    throw NoValidImageError("extraction order broke: upper neighbor unchosen");
                needed.push_back(image[static_cast<std::size_t>(w)]);
            }
        auto bu = pos.b_set(u);
        std::int64_t pick = -1;
        for (auto idx : bu) {
            StarVertex cand{u, idx};
            bool ok = true;
            for (const auto& y : needed)
                if (!pos.maker_has(cand, y)) {
                    ok = false;
                    break;
                }
            if (ok) {
                pick = idx;
                break;
            }
        }
        if (pick < 0)
            throw NoValidImageError("no admissible image in B_" + std::to_string(u) +
                                    "; scheme verification must have been wrong");
        image[static_cast<std::size_t>(u)] = {u, pick};
        chosen[static_cast<std::size_t>(u)] = 1;
    }

    // injectivity is automatic (blocks are disjoint); check edges against the ledger
    for (auto [a, b] : board.graph.edges())
        if (!pos.maker_has(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]))
            throw NoValidImageError("extracted map misses the G-edge " + std::to_string(a) + "-" +
                                    std::to_string(b));
    return image;
}

std::string format_embedding(const std::vector<StarVertex>& embedding) {
    std::string out;
    for (std::size_t v = 0; v < embedding.size(); ++v) {
        out += std::to_string(v);
        out += " -> ";
        out += embedding[v].to_string();
        out += '\n';
    }
    return out;
}

} // namespace makergame
