#include "makergame/board.hpp"

#include "makergame/errors.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace makergame {

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out += static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::int64_t paper_s(int d) {
    if (d < 1) throw BoardError("paper_s needs d >= 1");
    if (d > 50) throw BoardError("paper_s overflows for d > 50");
    std::int64_t d5 = 1;
    for (int i = 0; i < 5; ++i) d5 *= d;
    return d5 << (d + 4);
}

StarVertex StarVertex::parse(std::string_view token) {
    if (!token.empty() && token.front() == 'v') token.remove_prefix(1);
    auto hash = token.find('#');
    if (hash == std::string_view::npos) throw ParseError("bad star vertex: expected v{g}#{idx}");
    long g = -1;
    long long idx = -1;
    auto a = token.substr(0, hash);
    auto b = token.substr(hash + 1);
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), g);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), idx);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} || r1.ptr != a.data() + a.size() ||
        r2.ptr != b.data() + b.size())
        throw ParseError("bad star vertex token: " + std::string(token));
    return {static_cast<Vertex>(g), idx};
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw BoardError("block size arithmetic overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) throw BoardError("block size arithmetic overflow");
    return out;
}

} // namespace

BoardSpec BoardSpec::build(const TargetGraph& g, const Leveling& l, const BlockingDag& dag,
                           std::int64_t s) {
    if (s < 1) throw BoardError("block parameter s must be >= 1");
    const int n = g.vertex_count();
    if (static_cast<int>(l.levels.size()) != n || static_cast<int>(dag.p_size.size()) != n)
        throw BoardError("leveling/dag size mismatch");
    BoardSpec spec;
    spec.s_ = s;
    spec.block_size_.resize(static_cast<std::size_t>(n));
    spec.block_offset_.resize(static_cast<std::size_t>(n));
    const std::int64_t d = std::max(1, g.degree());
    const std::int64_t ds2 = checked_mul(checked_mul(d, s), s);
    std::uint64_t offset = 0;
    for (Vertex v = 0; v < n; ++v) {
        std::int64_t size = checked_add(checked_mul(ds2, dag.p_size[static_cast<std::size_t>(v)]), s);
        spec.block_size_[static_cast<std::size_t>(v)] = size;
        spec.block_offset_[static_cast<std::size_t>(v)] = offset;
        std::uint64_t next = offset + static_cast<std::uint64_t>(size);
        if (next < offset) throw BoardError("star vertex index overflow");
        offset = next;
    }
    spec.total_ = offset;
    return spec;
}

namespace {

const u128 U128_MAX = ~static_cast<u128>(0);

u128 mul_sat(u128 a, u128 b, bool& saturated) {
    if (a != 0 && b > U128_MAX / a) {
        saturated = true;
        return U128_MAX;
    }
    return a * b;
}

u128 add_sat(u128 a, u128 b, bool& saturated) {
    if (U128_MAX - a < b) {
        saturated = true;
        return U128_MAX;
    }
    return a + b;
}

} // namespace

EdgeCountReport edge_count(const BoardSpec& spec, const TargetGraph& g, const Leveling& l) {
    EdgeCountReport rep;
    bool exact_overflow = false;
    for (auto [u, v] : g.edges()) {
        u128 prod = mul_sat(static_cast<u128>(spec.block_size(u)),
                            static_cast<u128>(spec.block_size(v)), exact_overflow);
        rep.exact = add_sat(rep.exact, prod, exact_overflow);
    }
    if (exact_overflow) throw BoardError("exact edge count exceeds 128 bits");

    // |E(G)| * (d*s^2*d^(2r) + s)^2
    const u128 d = static_cast<u128>(std::max(1, g.degree()));
    const u128 s = static_cast<u128>(spec.s());
    bool sat = false;
    u128 dpow = 1;
    for (long long i = 0; i < 2LL * l.r && !sat; ++i) dpow = mul_sat(dpow, d, sat);
    u128 inner = mul_sat(mul_sat(mul_sat(d, s, sat), s, sat), dpow, sat);
    inner = add_sat(inner, s, sat);
    u128 bound = mul_sat(inner, inner, sat);
    bound = mul_sat(bound, static_cast<u128>(g.edge_count()), sat);
    rep.paper_bound = bound;
    rep.bound_saturated = sat;
    rep.exact_le_bound = sat || rep.exact <= rep.paper_bound;
    return rep;
}

GameBoard GameBoard::build(TargetGraph g, Leveling l, std::int64_t s) {
    GameBoard b{std::move(g), std::move(l), {}, {}};
    b.dag = build_blocking_dag(b.graph, b.leveling);
    b.spec = BoardSpec::build(b.graph, b.leveling, b.dag, s);
    return b;
}

bool GameBoard::is_board_edge(const StarVertex& a, const StarVertex& b) const {
    const int n = graph.vertex_count();
    if (!spec.valid_star(a, n) || !spec.valid_star(b, n)) return false;
    return graph.has_edge(a.g, b.g);
}

StarEdge GameBoard::make_edge(const StarVertex& a, const StarVertex& b) const {
    if (!is_board_edge(a, b))
        throw NotABoardEdgeError("not a board edge: " + a.to_string() + " " + b.to_string());
    // adjacent G-vertices never share a level, so the order is well defined
    if (level_of_star(a) < level_of_star(b)) return {a, b};
    return {b, a};
}

GamePosition::GamePosition(const GameBoard& board) : board_(&board) {
    const int n = board.graph.vertex_count();
    if (board.spec.total_star_vertices() >> 32)
        throw BoardError("board too large for game play (star ids exceed 32 bits)");
    touched_count_.assign(static_cast<std::size_t>(n), 0);
    b_.assign(static_cast<std::size_t>(n), {});
    b_pos_.assign(static_cast<std::size_t>(n), {});
    b_set_.assign(static_cast<std::size_t>(n), 0);
    ready_.assign(static_cast<std::size_t>(n), 0);
    completed_.assign(static_cast<std::size_t>(n), 0);
}

std::uint64_t GamePosition::edge_key(const StarEdge& e) const {
    return (board_->spec.star_id(e.lo) << 32) | board_->spec.star_id(e.hi);
}

void GamePosition::claim(Player p, const StarEdge& e) {
    StarEdge canon = board_->make_edge(e.lo, e.hi);
    std::uint64_t key = edge_key(canon);
    auto [it, inserted] = claims_.emplace(key, p);
    if (!inserted) throw AlreadyClaimedError("edge already claimed: " + canon.to_string());
    if (p == Player::Maker)
        ++maker_edges_;
    else
        ++breaker_edges_;
    // the higher-level endpoint becomes touched
    std::uint64_t hid = board_->spec.star_id(canon.hi);
    if (touched_.insert(hid).second) ++touched_count_[static_cast<std::size_t>(canon.hi.g)];
}

std::optional<Player> GamePosition::owner_of(const StarEdge& e) const {
    StarEdge canon = board_->make_edge(e.lo, e.hi);
    auto it = claims_.find(edge_key(canon));
    if (it == claims_.end()) return std::nullopt;
    return it->second;
}

bool GamePosition::maker_has(const StarEdge& e) const {
    auto o = owner_of(e);
    return o && *o == Player::Maker;
}

bool GamePosition::maker_has(const StarVertex& a, const StarVertex& b) const {
    return maker_has(board_->make_edge(a, b));
}

bool GamePosition::touched(const StarVertex& x) const {
    return touched_.contains(board_->spec.star_id(x));
}

std::int64_t GamePosition::untouched_in(Vertex v) const {
    return board_->spec.block_size(v) - touched_count_[static_cast<std::size_t>(v)];
}

void GamePosition::set_b(Vertex v, std::vector<std::int64_t> indices) {
    auto vi = static_cast<std::size_t>(v);
    if (b_set_[vi]) throw BoardError("B already determined for vertex " + std::to_string(v));
    std::sort(indices.begin(), indices.end());
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0 || indices[i] >= board_->spec.block_size(v))
            throw BoardError("B index out of range");
        if (i > 0 && indices[i] == indices[i - 1]) throw BoardError("duplicate B index");
        b_pos_[vi].emplace(indices[i], static_cast<int>(i));
    }
    b_[vi] = std::move(indices);
    b_set_[vi] = 1;
}

std::optional<int> GamePosition::b_position(const StarVertex& x) const {
    auto vi = static_cast<std::size_t>(x.g);
    if (!b_set_[vi]) return std::nullopt;
    auto it = b_pos_[vi].find(x.idx);
    if (it == b_pos_[vi].end()) return std::nullopt;
    return it->second;
}

int GamePosition::completed_count() const {
    int c = 0;
    for (char f : completed_) c += f;
    return c;
}

} // namespace makergame
