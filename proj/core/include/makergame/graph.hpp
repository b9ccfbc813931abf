#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace makergame {

using Vertex = int;

// Undirected target graph with sorted adjacency lists. `degree()` is the
// maximum degree; for regular graphs it is the common degree. Immutable
// after construction.
class TargetGraph {
public:
    static TargetGraph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                  bool require_regular = false);

    // Whitespace-separated 0-based vertex-id pairs, one edge per line.
    // Vertex count is 1 + max id. Comment lines starting with '#' are skipped.
    static TargetGraph parse(std::string_view edge_list_text, bool require_regular = false);

    static TargetGraph cycle(int n);
    static TargetGraph complete(int n);
    static TargetGraph petersen();
    static TargetGraph single_edge();

    // "c{n}", "petersen", "k4", "k{n}", "edge"
    static TargetGraph named(std::string_view name);

    // Pairing-model sampling with rejection of loops and parallel edges.
    // Deterministic per seed; throws GraphError when the retry budget runs out.
    static TargetGraph random_regular(int n, int d, std::uint64_t seed, int max_attempts = 1000);

    int vertex_count() const { return n_; }
    int degree() const { return d_; }
    bool is_regular() const { return regular_; }
    int edge_count() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;

    // Number of edges on a shortest u-v path; nullopt when disconnected.
    std::optional<int> distance(Vertex u, Vertex v) const;

    // Edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    std::string to_edge_list() const;

    void check_vertex(Vertex v) const;

private:
    int n_ = 0;
    int d_ = 0;
    bool regular_ = true;
    int edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

} // namespace makergame
