#pragma once

// Shared generators and independent oracles. Oracles here deliberately use a
// different representation (std::set, plain loops) than the library so the
// two sides cannot share a bug.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "toplink/curve.hpp"
#include "toplink/linking.hpp"
#include "toplink/set_system.hpp"
#include "toplink/simplicial_complex.hpp"

namespace testutil {

using namespace toplink;

using Rng = std::mt19937_64;

// ---- set system oracles ------------------------------------------------------

inline std::vector<std::set<std::size_t>> as_sets(const SetSystem& sys) {
    std::vector<std::set<std::size_t>> out;
    for (const auto& s : sys.subsets) {
        std::set<std::size_t> t;
        for (std::size_t e : s.to_indices()) t.insert(e);
        out.push_back(std::move(t));
    }
    return out;
}

inline std::uint64_t oracle_total(const SetSystem& sys) {
    std::uint64_t t = 0;
    for (const auto& s : as_sets(sys)) t += s.size();
    return t;
}

inline std::set<std::size_t> set_intersect(const std::set<std::size_t>& a,
                                           const std::set<std::size_t>& b) {
    std::set<std::size_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.begin()));
    return out;
}

/// Max |S_{j_1} ∩ ... ∩ S_{j_r}| over unordered index r-subsets, by explicit
/// enumeration of index combinations.
inline std::uint64_t oracle_max_r_intersection(const SetSystem& sys, unsigned r) {
    const auto sets = as_sets(sys);
    const std::size_t m = sets.size();
    if (m < r) return 0;
    std::vector<std::size_t> idx(r);
    std::uint64_t best = 0;
    const auto rec = [&](auto&& self, std::size_t start, unsigned depth) -> void {
        if (depth == r) {
            std::set<std::size_t> acc = sets[idx[0]];
            for (unsigned i = 1; i < r; ++i) acc = set_intersect(acc, sets[idx[i]]);
            best = std::max<std::uint64_t>(best, acc.size());
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            idx[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return best;
}

/// Σ over ordered r-tuples (repeats allowed) of the intersection size, by a
/// plain odometer over [m]^r.
inline Int oracle_ordered_sum(const SetSystem& sys, unsigned r) {
    const auto sets = as_sets(sys);
    const std::size_t m = sets.size();
    if (m == 0) return 0;
    std::vector<std::size_t> tup(r, 0);
    Int acc = 0;
    while (true) {
        std::set<std::size_t> cur = sets[tup[0]];
        for (unsigned i = 1; i < r; ++i) cur = set_intersect(cur, sets[tup[i]]);
        acc += cur.size();
        unsigned pos = 0;
        while (pos < r && ++tup[pos] == m) tup[pos++] = 0;
        if (pos == r) break;
    }
    return acc;
}

/// Σ over unordered index r-subsets of the intersection size.
inline Int oracle_unordered_sum(const SetSystem& sys, unsigned r) {
    const auto sets = as_sets(sys);
    const std::size_t m = sets.size();
    if (m < r) return 0;
    std::vector<std::size_t> idx(r);
    Int acc = 0;
    const auto rec = [&](auto&& self, std::size_t start, unsigned depth) -> void {
        if (depth == r) {
            std::set<std::size_t> cur = sets[idx[0]];
            for (unsigned i = 1; i < r; ++i) cur = set_intersect(cur, sets[idx[i]]);
            acc += cur.size();
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            idx[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return acc;
}

inline SetSystem random_system(Rng& rng, unsigned m_max = 6, unsigned a_max = 12) {
    const auto m = static_cast<std::size_t>(rng() % (m_max + 1));
    const auto a = static_cast<std::size_t>(rng() % (a_max + 1));
    SetSystem sys;
    sys.ground_size = a;
    sys.subsets.assign(m, Bitmask(a));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t q = 0; q < a; ++q)
            if (rng() & 1) sys.subsets[j].set(q);
    return sys;
}

// ---- complex oracles ----------------------------------------------------------

/// Full downward closure by brute force: every nonempty subset of every facet.
inline std::set<Simplex> closure_oracle(const SimplicialComplex& K) {
    std::set<Simplex> out;
    for (const auto& f : K.facets()) {
        const std::size_t n = f.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < n; ++i)
                if ((mask >> i) & 1) s.push_back(f[i]);
            out.insert(std::move(s));
        }
    }
    return out;
}

inline std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

inline SimplicialComplex complete_graph(int n) {
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return SimplicialComplex(numbered_labels(n), edges);
}

inline SimplicialComplex complete_bipartite(int a, int b) {
    std::vector<Simplex> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
    return SimplicialComplex(numbered_labels(a + b), edges);
}

inline SimplicialComplex cycle_graph(int n) {
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n),
                                                 std::max(i, (i + 1) % n)});
    return SimplicialComplex(numbered_labels(n), edges);
}

/// Boundary of the d-simplex: all d-subsets of {0, ..., d}.
inline SimplicialComplex simplex_boundary(int d) {
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= d; ++skip) {
        Simplex s;
        for (int v = 0; v <= d; ++v)
            if (v != skip) s.push_back(v);
        facets.push_back(std::move(s));
    }
    return SimplicialComplex(numbered_labels(d + 1), facets);
}

/// Random complex with facets of size <= max_facet_size over n vertices.
inline SimplicialComplex random_complex(Rng& rng, int n_max = 10, int facets_max = 12,
                                        int max_facet_size = 4) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(n_max));
    const int nf = 1 + static_cast<int>(rng() % static_cast<unsigned>(facets_max));
    std::vector<Simplex> facets;
    for (int i = 0; i < nf; ++i) {
        const int sz =
            1 + static_cast<int>(rng() % static_cast<unsigned>(
                                     std::min(n, max_facet_size)));
        std::set<int> pick;
        while (static_cast<int>(pick.size()) < sz)
            pick.insert(static_cast<int>(rng() % static_cast<unsigned>(n)));
        facets.emplace_back(pick.begin(), pick.end());
    }
    return SimplicialComplex(numbered_labels(n), facets);
}

/// Random complex guaranteed to contain at least one 2-face.
inline SimplicialComplex random_two_complex(Rng& rng, int n_max = 9) {
    while (true) {
        SimplicialComplex K = random_complex(rng, n_max, 10, 4);
        if (K.dimension() >= 2) return K;
    }
}

// ---- geometry generators --------------------------------------------------------

/// 2D convex hull (monotone chain, strict turns: no three collinear output
/// points). Returns counterclockwise order.
inline std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return {};
    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orient2d(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && orient2d(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

/// Simple closed lattice curve: a planar convex polygon pushed into space by
/// an integer frame. At most `max_vertices` corners.
inline PolygonalCurve random_convex_curve(Rng& rng, int max_vertices = 12,
                                          const Vec3& center = {}) {
    while (true) {
        std::vector<Vec2> pts;
        const int draws = 4 + static_cast<int>(rng() % 9);
        for (int i = 0; i < draws; ++i)
            pts.push_back({Rat(static_cast<int>(rng() % 17) - 8),
                           Rat(static_cast<int>(rng() % 17) - 8)});
        auto hull = convex_hull(std::move(pts));
        if (hull.size() < 3 || static_cast<int>(hull.size()) > max_vertices) continue;

        const auto small = [&]() { return Rat(static_cast<int>(rng() % 7) - 3); };
        const Vec3 u{small(), small(), small()};
        const Vec3 v{small(), small(), small()};
        if (is_zero(cross(u, v))) continue; // frame degenerate
        std::vector<Vec3> verts;
        for (const auto& p : hull) verts.push_back(center + p.x * u + p.y * v);
        try {
            return PolygonalCurve(std::move(verts));
        } catch (const std::invalid_argument&) {
            continue; // frame collapsed two corners; redraw
        }
    }
}

/// A pair of disjoint closed curves near each other (so linking is possible).
inline std::pair<PolygonalCurve, PolygonalCurve> random_disjoint_pair(Rng& rng,
                                                                      int max_vertices = 12) {
    while (true) {
        const auto off = [&]() { return Rat(static_cast<int>(rng() % 9) - 4); };
        PolygonalCurve f = random_convex_curve(rng, max_vertices);
        PolygonalCurve g = random_convex_curve(rng, max_vertices, {off(), off(), off()});
        if (curves_disjoint(f, g)) return {std::move(f), std::move(g)};
    }
}

/// Straight-line embedding on the moment curve t -> (t, t^2, t^3), t = 1..n.
/// No four such points are coplanar and no three collinear, so any graph
/// embeds this way.
inline SpatialEmbedding moment_embedding(SimplicialComplex graph) {
    std::vector<Vec3> coords;
    const auto n = static_cast<int>(graph.vertex_count());
    for (int t = 1; t <= n; ++t)
        coords.push_back({Rat(t), Rat(t) * Rat(t), Rat(t) * Rat(t) * Rat(t)});
    return SpatialEmbedding(std::move(graph), std::move(coords));
}

/// Random integer-coordinate embedding; redraws until the validator accepts.
inline SpatialEmbedding random_embedding(SimplicialComplex graph, Rng& rng, int box = 9) {
    const std::size_t n = graph.vertex_count();
    while (true) {
        std::vector<Vec3> coords;
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = [&]() {
                return Rat(static_cast<int>(rng() % static_cast<unsigned>(2 * box + 1)) -
                           box);
            };
            coords.push_back({c(), c(), c()});
        }
        try {
            return SpatialEmbedding(graph, std::move(coords));
        } catch (const std::invalid_argument&) {
            continue;
        }
    }
}

/// Three vertex-disjoint triangles drawn with straight edges in the plane
/// z = 0, hung on a convex parabola so no vertex is collinear with any edge.
/// Connected into one graph by two bridge edges.
inline SpatialEmbedding coplanar_triangles_embedding() {
    std::vector<Simplex> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                               {6, 7}, {7, 8}, {6, 8}, {2, 3}, {5, 6}};
    SimplicialComplex G(numbered_labels(9), edges);
    std::vector<Vec3> coords;
    for (int x = 0; x < 9; ++x) coords.push_back({Rat(x), Rat(x) * Rat(x), Rat(0)});
    return SpatialEmbedding(std::move(G), std::move(coords));
}

// ---- frozen linked pairs ---------------------------------------------------------

/// Triangle in z = 0 spanning the origin, counterclockwise seen from +z.
inline PolygonalCurve hopf_first() {
    return PolygonalCurve({{Rat(2), Rat(0), Rat(0)},
                           {Rat(-1), Rat(2), Rat(0)},
                           {Rat(-1), Rat(-2), Rat(0)}});
}

/// Triangle threading hopf_first once, descending through its interior.
inline PolygonalCurve hopf_second() {
    return PolygonalCurve({{Rat(1), Rat(0), Rat(1)},
                           {Rat(1), Rat(0), Rat(-1)},
                           {Rat(4), Rat(0), Rat(0)}});
}

/// Square in z = 0, counterclockwise seen from +z.
inline PolygonalCurve clasp_square() {
    return PolygonalCurve({{Rat(5), Rat(-5), Rat(0)},
                           {Rat(5), Rat(5), Rat(0)},
                           {Rat(-5), Rat(5), Rat(0)},
                           {Rat(-5), Rat(-5), Rat(0)}});
}

/// Closed curve descending twice through the square's disk, both passages in
/// the same direction; winds twice around the square's boundary.
inline PolygonalCurve clasp_doubled() {
    const auto P = [](int x, int y, int z) { return Vec3{Rat(x), Rat(y), Rat(z)}; };
    return PolygonalCurve({P(1, 1, 1), P(1, 1, -1), P(7, 1, -1), P(7, 1, 1),
                           P(-1, -1, 1), P(-1, -1, -1), P(-7, -1, -1), P(-7, -1, 1)});
}

} // namespace testutil
