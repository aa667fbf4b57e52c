#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "toplink/simplicial_complex.hpp"

namespace toplink {

struct SearchBudgetExceeded : std::runtime_error {
    SearchBudgetExceeded() : std::runtime_error("pattern search: step budget exceeded") {}
};

struct SearchLimits {
    std::size_t max_pattern_vertices = 12;
    std::uint64_t max_steps = 100'000'000;
};

/// Injective vertex map (pattern index -> host index) sending every pattern
/// facet to a simplex of the host.
struct IsoWitness {
    std::vector<int> vertex_map;
};

/// Independent validity check for a claimed witness.
inline bool iso_witness_valid(const SimplicialComplex& host,
                              const SimplicialComplex& pattern,
                              const std::vector<int>& vertex_map) {
    if (vertex_map.size() != pattern.vertex_count()) return false;
    std::vector<int> sorted = vertex_map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int x : vertex_map)
        if (x < 0 || x >= static_cast<int>(host.vertex_count())) return false;
    for (const auto& f : pattern.facets()) {
        Simplex image;
        image.reserve(f.size());
        for (int u : f) image.push_back(vertex_map[u]);
        std::sort(image.begin(), image.end());
        if (!host.contains(image)) return false;
    }
    return true;
}

namespace detail {

// Per-vertex count of incident closure simplices of each dimension; an
// injective simplexwise map can only decrease none of these.
inline std::vector<std::vector<std::size_t>> dim_degree_table(
    const SimplicialComplex& K, int up_to_dim) {
    std::vector<std::vector<std::size_t>> deg(
        K.vertex_count(), std::vector<std::size_t>(up_to_dim + 1, 0));
    for (int k = 0; k <= up_to_dim; ++k)
        for (const auto& s : K.simplices_of_dim(k))
            for (int v : s) ++deg[v][k];
    return deg;
}

} // namespace detail

/// Searches for an injective vertex map under which every facet of `pattern`
/// lands on a simplex of `host` (then so does every face, by closure).
/// Exhaustive backtracking: std::nullopt is a proof of absence, not a guess.
inline std::optional<IsoWitness> contains_subcomplex_isomorphic(
    const SimplicialComplex& host, const SimplicialComplex& pattern,
    const SearchLimits& limits = {}) {
    const std::size_t np = pattern.vertex_count();
    const std::size_t nh = host.vertex_count();
    if (np > limits.max_pattern_vertices)
        throw std::invalid_argument("contains_subcomplex_isomorphic: pattern too large");
    if (np > nh) return std::nullopt;

    const int pdim = pattern.dimension();
    if (pdim < 0) {
        // No facets: the empty map extended by any injection works.
        IsoWitness w;
        w.vertex_map.resize(np);
        std::iota(w.vertex_map.begin(), w.vertex_map.end(), 0);
        return w;
    }
    if (host.dimension() < pdim) return std::nullopt;

    const auto pdeg = detail::dim_degree_table(pattern, pdim);
    const auto hdeg = detail::dim_degree_table(host, pdim);

    // Most constrained pattern vertices first: large incident facets, then
    // high simplex degrees.
    std::vector<std::size_t> max_facet(np, 0);
    for (const auto& f : pattern.facets())
        for (int u : f) max_facet[u] = std::max(max_facet[u], f.size());
    std::vector<int> order(np);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (max_facet[a] != max_facet[b]) return max_facet[a] > max_facet[b];
        return pdeg[a] > pdeg[b];
    });

    std::vector<int> map(np, -1);
    std::vector<char> used(nh, 0);
    std::uint64_t steps = 0;

    const auto candidate_ok = [&](int u, int x) {
        for (int k = 0; k <= pdim; ++k)
            if (hdeg[x][k] < pdeg[u][k]) return false;
        return true;
    };

    // After placing u -> x, every pattern facet through u whose assigned part
    // is now nonempty must map into some host facet.
    const auto partial_ok = [&](int u) {
        for (const auto& f : pattern.facets()) {
            if (std::find(f.begin(), f.end(), u) == f.end()) continue;
            Simplex image;
            image.reserve(f.size());
            for (int w : f)
                if (map[w] >= 0) image.push_back(map[w]);
            std::sort(image.begin(), image.end());
            if (!host.contains(image)) return false;
        }
        return true;
    };

    const auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == np) return true;
        if (++steps > limits.max_steps) throw SearchBudgetExceeded();
        const int u = order[depth];
        for (std::size_t x = 0; x < nh; ++x) {
            if (used[x] || !candidate_ok(u, static_cast<int>(x))) continue;
            map[u] = static_cast<int>(x);
            used[x] = 1;
            if (partial_ok(u) && self(self, depth + 1)) return true;
            used[x] = 0;
            map[u] = -1;
        }
        return false;
    };

    if (!rec(rec, 0)) return std::nullopt;
    IsoWitness w;
    w.vertex_map = map;
    return w;
}

/// Paths realizing the edges of a subdivision of `pattern` inside a graph.
struct SubdivisionWitness {
    std::vector<int> branch_map;              // pattern vertex -> host vertex
    std::vector<std::vector<int>> edge_paths; // host paths, one per pattern edge
};

inline bool subdivision_witness_valid(const SimplicialComplex& host,
                                      const SimplicialComplex& pattern,
                                      const SubdivisionWitness& w) {
    const auto adj = graph_adjacency(host);
    const auto edges = pattern.simplices_of_dim(1);
    if (w.branch_map.size() != pattern.vertex_count()) return false;
    if (w.edge_paths.size() != edges.size()) return false;

    std::vector<int> sorted = w.branch_map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    std::vector<char> interior_used(host.vertex_count(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& path = w.edge_paths[i];
        if (path.size() < 2) return false;
        if (path.front() != w.branch_map[edges[i][0]] ||
            path.back() != w.branch_map[edges[i][1]]) return false;
        for (std::size_t j = 0; j + 1 < path.size(); ++j)
            if (!std::binary_search(adj[path[j]].begin(), adj[path[j]].end(), path[j + 1]))
                return false;
        for (std::size_t j = 1; j + 1 < path.size(); ++j) {
            const int v = path[j];
            if (interior_used[v]) return false;
            if (std::find(w.branch_map.begin(), w.branch_map.end(), v) !=
                w.branch_map.end()) return false;
            interior_used[v] = 1;
        }
    }
    return true;
}

/// Decides whether the graph `host` contains a subdivision of the graph
/// `pattern`: an injective placement of the pattern vertices plus
/// internally disjoint host paths realizing the pattern edges.
inline std::optional<SubdivisionWitness> contains_graph_homeomorph(
    const SimplicialComplex& host, const SimplicialComplex& pattern,
    const SearchLimits& limits = {}) {
    if (host.dimension() > 1 || pattern.dimension() > 1)
        throw std::invalid_argument("contains_graph_homeomorph: inputs must be graphs");
    const std::size_t np = pattern.vertex_count();
    if (np > limits.max_pattern_vertices)
        throw std::invalid_argument("contains_graph_homeomorph: pattern too large");
    if (np > host.vertex_count()) return std::nullopt;

    const auto hadj = graph_adjacency(host);
    const auto padj = graph_adjacency(pattern);
    const auto edges = pattern.simplices_of_dim(1);

    std::vector<int> branch(np, -1);
    std::vector<char> used(host.vertex_count(), 0);
    std::vector<std::vector<int>> paths(edges.size());
    std::uint64_t steps = 0;
    const auto tick = [&] {
        if (++steps > limits.max_steps) throw SearchBudgetExceeded();
    };

    // Inner backtracking over edges: for edge e, enumerate host paths between
    // the branch images whose interior avoids every used vertex.
    const auto route = [&](auto&& self, std::size_t e) -> bool {
        if (e == edges.size()) return true;
        const int from = branch[edges[e][0]];
        const int to = branch[edges[e][1]];
        std::vector<int> path{from};

        const auto dfs = [&](auto&& go, int v) -> bool {
            tick();
            for (int nb : hadj[v]) {
                if (nb == to) {
                    // interior vertices are already flagged by the walk below
                    // and stay flagged while the remaining edges are routed
                    path.push_back(to);
                    paths[e] = path;
                    if (self(self, e + 1)) return true;
                    path.pop_back();
                    continue;
                }
                if (used[nb]) continue;
                used[nb] = 1;
                path.push_back(nb);
                if (go(go, nb)) return true;
                path.pop_back();
                used[nb] = 0;
            }
            return false;
        };
        return dfs(dfs, from);
    };

    const auto place = [&](auto&& self, std::size_t u) -> bool {
        if (u == np) return route(route, 0);
        tick();
        for (std::size_t x = 0; x < hadj.size(); ++x) {
            if (used[x]) continue;
            if (hadj[x].size() < padj[u].size()) continue;
            branch[u] = static_cast<int>(x);
            used[x] = 1;
            if (self(self, u + 1)) return true;
            used[x] = 0;
            branch[u] = -1;
        }
        return false;
    };

    if (!place(place, 0)) return std::nullopt;
    SubdivisionWitness w;
    w.branch_map = branch;
    w.edge_paths = paths;
    return w;
}

} // namespace toplink
