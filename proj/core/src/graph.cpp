#include "makergame/graph.hpp"

#include "makergame/errors.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace makergame {

TargetGraph TargetGraph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                    bool require_regular) {
    if (n < 0) throw GraphError("vertex count must be non-negative");
    TargetGraph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw GraphError("duplicate edge " + std::to_string(key.first) + " " +
                             std::to_string(key.second));
        g.adj_[static_cast<std::size_t>(u)].push_back(v);
        g.adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    g.edge_count_ = static_cast<int>(seen.size());
    int dmax = 0, dmin = n;
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        dmax = std::max(dmax, static_cast<int>(nb.size()));
        dmin = std::min(dmin, static_cast<int>(nb.size()));
    }
    if (n == 0) dmin = 0;
    g.d_ = dmax;
    g.regular_ = (dmin == dmax);
    if (require_regular && !g.regular_)
        throw GraphError("graph is not regular (degrees range from " + std::to_string(dmin) +
                         " to " + std::to_string(dmax) + ")");
    return g;
}

TargetGraph TargetGraph::parse(std::string_view edge_list_text, bool require_regular) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    int max_id = -1;
    std::istringstream in{std::string(edge_list_text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long u, v;
        if (!(ls >> u)) continue; // blank line
        if (!(ls >> v)) throw ParseError("line " + std::to_string(lineno) + ": expected two ids");
        std::string rest;
        if (ls >> rest) throw ParseError("line " + std::to_string(lineno) + ": trailing tokens");
        if (u < 0 || v < 0) throw ParseError("line " + std::to_string(lineno) + ": negative id");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
    }
    return from_edges(max_id + 1, edges, require_regular);
}

TargetGraph TargetGraph::cycle(int n) {
    if (n < 3) throw GraphError("cycle needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edges(n, edges);
}

TargetGraph TargetGraph::complete(int n) {
    if (n < 2) throw GraphError("complete graph needs n >= 2");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return from_edges(n, edges);
}

TargetGraph TargetGraph::petersen() {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer pentagon
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
        edges.emplace_back(i, 5 + i);               // spokes
    }
    return from_edges(10, edges);
}

TargetGraph TargetGraph::single_edge() { return from_edges(2, {{0, 1}}); }

TargetGraph TargetGraph::named(std::string_view name) {
    if (name == "petersen") return petersen();
    if (name == "edge") return single_edge();
    auto parse_count = [&](std::string_view digits) -> int {
        int value = 0;
        auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size())
            throw GraphError("unknown graph name: " + std::string(name));
        return value;
    };
    if (name.size() > 1 && name[0] == 'c') return cycle(parse_count(name.substr(1)));
    if (name.size() > 1 && name[0] == 'k') return complete(parse_count(name.substr(1)));
    throw GraphError("unknown graph name: " + std::string(name));
}

TargetGraph TargetGraph::random_regular(int n, int d, std::uint64_t seed, int max_attempts) {
    if (d < 0 || n < 0) throw GraphError("negative parameters");
    if (d >= n) throw GraphError("need d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0) throw GraphError("n*d must be even");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs[static_cast<std::size_t>(v) * d + k] = v;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<std::pair<int, int>> seen;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || !seen.insert(std::minmax(u, v)).second) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        std::vector<std::pair<Vertex, Vertex>> edges(seen.begin(), seen.end());
        return from_edges(n, edges);
    }
    throw GraphError("random_regular: rejection budget exhausted (n=" + std::to_string(n) +
                     ", d=" + std::to_string(d) + ")");
}

std::span<const Vertex> TargetGraph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

bool TargetGraph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> TargetGraph::distance(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return 0;
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    dist[static_cast<std::size_t>(u)] = 0;
    std::queue<Vertex> q;
    q.push(u);
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y : adj_[static_cast<std::size_t>(x)]) {
            if (dist[static_cast<std::size_t>(y)] >= 0) continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            if (y == v) return dist[static_cast<std::size_t>(y)];
            q.push(y);
        }
    }
    return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> TargetGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string TargetGraph::to_edge_list() const {
    std::string out;
    for (auto [u, v] : edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

void TargetGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw GraphError("vertex id out of range: " + std::to_string(v));
}

} // namespace makergame
