#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toplink/curve.hpp"
#include "toplink/geometry.hpp"
#include "toplink/simplicial_complex.hpp"

namespace toplink {

/// No admissible apex or projection direction was found within the retry
/// budget. The computation never returns a wrong answer instead.
class GeneralPositionError : public std::runtime_error {
  public:
    explicit GeneralPositionError(const std::string& what) : std::runtime_error(what) {}
};

/// The two curves share a point, so their linking number is undefined.
class CurvesIntersectError : public std::runtime_error {
  public:
    CurvesIntersectError() : std::runtime_error("curves intersect") {}
};

struct LinkingOptions {
    int retry_budget = 64; // candidate apexes / projection directions tried
};

namespace detail {

// Both algorithms walk a deterministic family of candidates, (1, t, t^2) for
// t = 1, 2, ...; each degeneracy is a polynomial condition in t with finitely
// many roots, so honest inputs succeed after a handful of tries.

/// Signed count of crossings of g through the cone over f with apex p, or
/// nullopt when the configuration is not generic for this apex.
inline std::optional<long long> cone_attempt(const PolygonalCurve& f,
                                             const PolygonalCurve& g, const Vec3& p) {
    long long total = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const auto [fa, fb] = f.segment(i);
        if (is_zero(cross(fa - p, fb - p))) return std::nullopt; // flat triangle
        for (std::size_t j = 0; j < g.size(); ++j) {
            const auto [ga, gb] = g.segment(j);
            const int oa = orient3d(p, fa, fb, ga);
            const int ob = orient3d(p, fa, fb, gb);
            if (oa * ob > 0) continue;        // segment clear of the plane
            if (oa == 0 || ob == 0) return std::nullopt;
            // Segment pierces the plane of triangle (p, fa, fb). Locate the
            // piercing point against the triangle edges.
            const int s1 = orient3d(ga, gb, p, fa);
            const int s2 = orient3d(ga, gb, fa, fb);
            const int s3 = orient3d(ga, gb, fb, p);
            const bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
            const bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
            if (has_pos && has_neg) continue; // strictly outside the triangle
            if (s1 == 0 || s2 == 0 || s3 == 0) return std::nullopt; // boundary hit
            total += ob; // +1 along the cone normal (fa - p) x (fb - p)
        }
    }
    return total;
}

struct Diagram2D {
    std::vector<Vec2> pf, pg; // projected vertices
    std::vector<Rat> hf, hg;  // heights along the viewing direction
};

/// Projected double count of signed inter-curve crossings, or nullopt when
/// the projection direction w = (1, t, t^2) is not generic.
inline std::optional<long long> crossings_attempt(const PolygonalCurve& f,
                                                  const PolygonalCurve& g, const Rat& t) {
    // Right-handed frame (u, v, w) with w the viewing direction.
    const Vec3 w{Rat(1), t, t * t};
    const Vec3 u{Rat(0), t * t, Rat(0) - t};
    const Vec3 v{Rat(0) - t * t, Rat(0), Rat(1)};

    Diagram2D d;
    const auto project = [&](const PolygonalCurve& c, std::vector<Vec2>& pts,
                             std::vector<Rat>& hts) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            pts.push_back({dot(u, c.vertex(i)), dot(v, c.vertex(i))});
            hts.push_back(dot(w, c.vertex(i)));
        }
    };
    project(f, d.pf, d.hf);
    project(g, d.pg, d.hg);

    const auto curve_ok = [](const std::vector<Vec2>& p) {
        const std::size_t n = p.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (p[i] == p[(i + 1) % n]) return false; // segment became a point
            const Vec2& a = p[(i + n - 1) % n];
            const Vec2& b = p[i];
            const Vec2& c = p[(i + 1) % n];
            // A fold in the projection overlays two adjacent segments.
            if (orient2d(a, b, c) == 0 && (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) < 0)
                return false;
        }
        return true;
    };
    if (!curve_ok(d.pf) || !curve_ok(d.pg)) return std::nullopt;

    // classify one projected segment pair: 0 = disjoint, 1 = proper crossing,
    // -1 = degenerate touch (forces a retry)
    const auto classify = [](const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& e) {
        const int o1 = orient2d(c, e, a);
        const int o2 = orient2d(c, e, b);
        const int o3 = orient2d(a, b, c);
        const int o4 = orient2d(a, b, e);
        if (o1 == 0 && o2 == 0 && o3 == 0 && o4 == 0) {
            // Segments on a common line never cross; a retry only helps when
            // the intervals overlap. Collinear triples survive every
            // projection (subdivided edges), so disjoint ones must pass.
            return point_on_segment_2d(c, a, b) || point_on_segment_2d(e, a, b) ||
                           point_on_segment_2d(a, c, e)
                       ? -1
                       : 0;
        }
        if (o1 * o2 > 0 || o3 * o4 > 0) return 0;
        if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return 1;
        return -1;
    };

    const auto crossing_point = [](const Vec2& a, const Vec2& b, const Vec2& c,
                                   const Vec2& e) -> Vec2 {
        const Rat denom = cross2(b - a, e - c);
        const Rat s = cross2(c - a, e - c) / denom;
        return {a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
    };

    std::vector<Vec2> hits; // every crossing point, for the triple point check

    // Self-crossings only need to exist cleanly; they carry no sign here.
    const auto self_ok = [&](const std::vector<Vec2>& p) {
        const std::size_t n = p.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                if (j == i + 1 || (i == 0 && j == n - 1)) continue;
                const int cls = classify(p[i], p[(i + 1) % n], p[j], p[(j + 1) % n]);
                if (cls < 0) return false;
                if (cls == 1)
                    hits.push_back(crossing_point(p[i], p[(i + 1) % n], p[j], p[(j + 1) % n]));
            }
        return true;
    };
    if (!self_ok(d.pf) || !self_ok(d.pg)) return std::nullopt;

    long long eps_sum = 0;
    const std::size_t nf = d.pf.size(), ng = d.pg.size();
    for (std::size_t i = 0; i < nf; ++i) {
        const Vec2& a = d.pf[i];
        const Vec2& b = d.pf[(i + 1) % nf];
        for (std::size_t j = 0; j < ng; ++j) {
            const Vec2& c = d.pg[j];
            const Vec2& e = d.pg[(j + 1) % ng];
            const int cls = classify(a, b, c, e);
            if (cls < 0) return std::nullopt;
            if (cls == 0) continue;
            const Rat denom = cross2(b - a, e - c);
            const Rat s = cross2(c - a, e - c) / denom;
            const Rat r = cross2(c - a, b - a) / denom;
            const Rat hf = d.hf[i] + s * (d.hf[(i + 1) % nf] - d.hf[i]);
            const Rat hg = d.hg[j] + r * (d.hg[(j + 1) % ng] - d.hg[j]);
            if (hf == hg) return std::nullopt; // cannot happen for disjoint curves
            hits.push_back({a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)});
            // epsilon = sign of det(direction over, direction under)
            const Vec2 df = b - a, dg = e - c;
            const int eps = hf > hg ? sgn(cross2(df, dg)) : sgn(cross2(dg, df));
            eps_sum += eps;
        }
    }

    std::sort(hits.begin(), hits.end());
    if (std::adjacent_find(hits.begin(), hits.end()) != hits.end())
        return std::nullopt; // triple point in the diagram
    return eps_sum;
}

} // namespace detail

/// Linking number via a cone over the first curve: sum of signed passages of
/// the second curve through triangles (apex, f_i, f_{i+1}).
inline long long linking_number_cone(const PolygonalCurve& f, const PolygonalCurve& g,
                                     const LinkingOptions& opts = {}) {
    if (!curves_disjoint(f, g)) throw CurvesIntersectError();
    for (int t = 1; t <= opts.retry_budget; ++t) {
        const Vec3 apex{Rat(1), Rat(t), Rat(t) * Rat(t)};
        if (auto r = detail::cone_attempt(f, g, apex)) return *r;
    }
    throw GeneralPositionError("no admissible cone apex within retry budget");
}

/// Linking number via signed crossings in a generic planar projection:
/// half the sum of crossing signs between the two projected curves.
inline long long linking_number_crossings(const PolygonalCurve& f, const PolygonalCurve& g,
                                          const LinkingOptions& opts = {}) {
    if (!curves_disjoint(f, g)) throw CurvesIntersectError();
    for (int t = 1; t <= opts.retry_budget; ++t) {
        if (auto r = detail::crossings_attempt(f, g, Rat(t))) {
            if (*r % 2 != 0)
                throw GeneralPositionError("odd crossing sum; diagram inconsistent");
            return *r / 2;
        }
    }
    throw GeneralPositionError("no admissible projection within retry budget");
}

inline long long linking_number(const PolygonalCurve& f, const PolygonalCurve& g,
                                const LinkingOptions& opts = {}) {
    return linking_number_cone(f, g, opts);
}

/// All simple cycles of a graph, each listed once: the smallest vertex is
/// first and its smaller neighbour second, so neither rotations nor the
/// reversal reappear.
inline std::vector<std::vector<int>> simple_cycles(const SimplicialComplex& graph) {
    const auto adj = graph_adjacency(graph);
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    const auto dfs = [&](auto&& self, int root, int cur) -> void {
        for (int nxt : adj[static_cast<std::size_t>(cur)]) {
            if (nxt == root && path.size() >= 3) {
                if (path[1] < path.back()) cycles.push_back(path);
                continue;
            }
            if (nxt <= root || used[static_cast<std::size_t>(nxt)]) continue;
            used[static_cast<std::size_t>(nxt)] = 1;
            path.push_back(nxt);
            self(self, root, nxt);
            path.pop_back();
            used[static_cast<std::size_t>(nxt)] = 0;
        }
    };

    for (int root = 0; root < n; ++root) {
        path.assign(1, root);
        used.assign(static_cast<std::size_t>(n), 0);
        used[static_cast<std::size_t>(root)] = 1;
        dfs(dfs, root, root);
    }
    return cycles;
}

struct CyclePairs {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    bool truncated = false;
};

/// Unordered pairs of vertex-disjoint simple cycles, up to max_pairs.
inline CyclePairs disjoint_cycle_pairs(const SimplicialComplex& graph,
                                       std::size_t max_pairs = 1u << 20) {
    const auto cycles = simple_cycles(graph);
    std::vector<std::set<int>> vsets;
    vsets.reserve(cycles.size());
    for (const auto& c : cycles) vsets.emplace_back(c.begin(), c.end());

    CyclePairs out;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            const auto& a = vsets[i];
            const auto& b = vsets[j];
            const bool disjoint = std::none_of(a.begin(), a.end(),
                                               [&](int v) { return b.count(v) > 0; });
            if (!disjoint) continue;
            if (out.pairs.size() >= max_pairs) {
                out.truncated = true;
                return out;
            }
            out.pairs.emplace_back(cycles[i], cycles[j]);
        }
    }
    return out;
}

enum class LinklessStatus { all_zero, witness_found, inconclusive };

struct LinklessReport {
    LinklessStatus status = LinklessStatus::all_zero;
    std::vector<int> witness_cycle_a, witness_cycle_b;
    long long witness_linking = 0;
    std::size_t pairs_checked = 0;
    bool truncated = false;
};

struct LinklessOptions {
    LinkingOptions linking;
    std::size_t max_pairs = 1u << 20;
    bool use_crossings = false; // cone method unless asked otherwise
};

/// Checks every pair of vertex-disjoint cycles of the embedded graph. A
/// nonzero linking number is a witness that the embedding is linked; all
/// zeros certify it linkless (up to truncation of the pair list).
inline LinklessReport is_linkless(const SpatialEmbedding& emb,
                                  const LinklessOptions& opts = {}) {
    const auto cp = disjoint_cycle_pairs(emb.complex(), opts.max_pairs);
    LinklessReport rep;
    rep.truncated = cp.truncated;
    for (const auto& [ca, cb] : cp.pairs) {
        const PolygonalCurve fa = emb.curve_for_cycle(ca);
        const PolygonalCurve fb = emb.curve_for_cycle(cb);
        const long long lk = opts.use_crossings
                                 ? linking_number_crossings(fa, fb, opts.linking)
                                 : linking_number_cone(fa, fb, opts.linking);
        ++rep.pairs_checked;
        if (lk != 0) {
            rep.status = LinklessStatus::witness_found;
            rep.witness_cycle_a = ca;
            rep.witness_cycle_b = cb;
            rep.witness_linking = lk;
            return rep;
        }
    }
    rep.status = cp.truncated ? LinklessStatus::inconclusive : LinklessStatus::all_zero;
    return rep;
}

} // namespace toplink
