#include "makergame/blocking.hpp"

#include "makergame/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace makergame {

std::vector<Vertex> BlockingDag::descendant_list(Vertex v) const {
    std::vector<Vertex> out;
    descendants[static_cast<std::size_t>(v)].for_each_set(
        [&](std::size_t u) { out.push_back(static_cast<Vertex>(u)); });
    return out;
}

std::string BlockingDag::to_arc_list() const {
    std::string out;
    for (std::size_t v = 0; v < arcs.size(); ++v)
        for (Vertex u : arcs[v]) {
            out += std::to_string(v);
            out += ' ';
            out += std::to_string(u);
            out += '\n';
        }
    return out;
}

BlockingDag build_blocking_dag(const TargetGraph& g, const Leveling& l) {
    const int n = g.vertex_count();
    if (!validate_leveling(g, l).empty())
        throw LevelingError("build_blocking_dag: leveling violates the distance-3 property");

    BlockingDag dag;
    dag.arcs.assign(static_cast<std::size_t>(n), {});
    dag.preds.assign(static_cast<std::size_t>(n), {});

    auto lev = [&](Vertex v) { return l.level_of(v); };

    // rule (i): G-edges, arc from the higher level to the lower
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v))
            if (lev(u) < lev(v)) dag.arcs[static_cast<std::size_t>(v)].push_back(u);

    // rule (ii): common lower neighbor w with l(w) < l(u) < l(v)
    for (Vertex w = 0; w < n; ++w) {
        auto nb = g.neighbors(w);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                Vertex u = nb[i], v = nb[j];
                if (lev(u) > lev(v)) std::swap(u, v);
                if (lev(w) < lev(u) && lev(u) < lev(v))
                    dag.arcs[static_cast<std::size_t>(v)].push_back(u);
            }
    }

    for (std::size_t v = 0; v < dag.arcs.size(); ++v) {
        auto& a = dag.arcs[v];
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        for (Vertex u : a) dag.preds[static_cast<std::size_t>(u)].push_back(static_cast<Vertex>(v));
    }
    for (auto& p : dag.preds) std::sort(p.begin(), p.end());

    // descendants by increasing level: P(v) = union over arcs of {u} + P(u)
    dag.descendants.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    dag.p_size.assign(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Vertex a, Vertex b) { return lev(a) != lev(b) ? lev(a) < lev(b) : a < b; });
    for (Vertex v : order) {
        auto& pv = dag.descendants[static_cast<std::size_t>(v)];
        for (Vertex u : dag.arcs[static_cast<std::size_t>(v)]) {
            pv.set(static_cast<std::size_t>(u));
            pv |= dag.descendants[static_cast<std::size_t>(u)];
        }
        dag.p_size[static_cast<std::size_t>(v)] = static_cast<int>(pv.count());
    }
    return dag;
}

namespace {

// (d^2)^r saturated at uint64 max
unsigned long long pow_sat(unsigned long long base, long long exp, bool& saturated) {
    saturated = false;
    unsigned long long result = 1;
    const unsigned long long cap = std::numeric_limits<unsigned long long>::max();
    for (long long i = 0; i < exp; ++i) {
        if (base != 0 && result > cap / base) {
            saturated = true;
            return cap;
        }
        result *= base;
    }
    return result;
}

} // namespace

DagBoundsReport check_dag_bounds(const BlockingDag& dag, const TargetGraph& g, const Leveling& l) {
    DagBoundsReport rep;
    const int d = std::max(1, g.degree());
    rep.out_degree_bound = static_cast<long long>(d) * d;
    for (std::size_t v = 0; v < dag.arcs.size(); ++v)
        rep.max_out_degree = std::max(rep.max_out_degree, static_cast<int>(dag.arcs[v].size()));
    rep.out_degree_ok = rep.max_out_degree <= rep.out_degree_bound;

    for (int p : dag.p_size) rep.max_descendants = std::max(rep.max_descendants, p);
    rep.descendant_bound =
        pow_sat(static_cast<unsigned long long>(rep.out_degree_bound), l.r, rep.descendant_bound_saturated);
    rep.descendants_ok = rep.descendant_bound_saturated ||
                         static_cast<unsigned long long>(rep.max_descendants) <= rep.descendant_bound;

    rep.arcs_level_decreasing = true;
    for (std::size_t v = 0; v < dag.arcs.size(); ++v)
        for (Vertex u : dag.arcs[v])
            if (l.level_of(static_cast<Vertex>(v)) <= l.level_of(u)) rep.arcs_level_decreasing = false;
    return rep;
}

std::string DagBoundsReport::to_text() const {
    std::string out;
    out += "max_out_degree=" + std::to_string(max_out_degree) +
           " bound=" + std::to_string(out_degree_bound) + (out_degree_ok ? " ok" : " FAIL") + "\n";
    out += "max_descendants=" + std::to_string(max_descendants) + " bound=";
    out += descendant_bound_saturated ? ">=2^64" : std::to_string(descendant_bound);
    out += descendants_ok ? " ok" : " FAIL";
    out += "\n";
    out += std::string("arcs_level_decreasing=") + (arcs_level_decreasing ? "yes" : "NO") + "\n";
    return out;
}

} // namespace makergame
