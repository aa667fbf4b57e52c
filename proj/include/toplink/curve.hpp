#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "toplink/geometry.hpp"
#include "toplink/simplicial_complex.hpp"

namespace toplink {

/// Closed polygonal curve in space, stored as the cyclic vertex list.
/// Construction enforces simplicity: vertices are pairwise distinct, no
/// corner folds back onto the incoming segment, and non-adjacent segments
/// are disjoint. Every check is exact.
class PolygonalCurve {
  public:
    explicit PolygonalCurve(std::vector<Vec3> vertices) : verts_(std::move(vertices)) {
        validate();
    }

    std::size_t size() const { return verts_.size(); }
    const Vec3& vertex(std::size_t i) const { return verts_[i]; }
    const std::vector<Vec3>& vertices() const { return verts_; }

    /// Segment i runs from vertex i to vertex i+1 (mod size).
    std::pair<Vec3, Vec3> segment(std::size_t i) const {
        return {verts_[i], verts_[(i + 1) % verts_.size()]};
    }

    PolygonalCurve reversed() const {
        return PolygonalCurve(std::vector<Vec3>(verts_.rbegin(), verts_.rend()));
    }

    PolygonalCurve rotated(std::size_t k) const {
        const std::size_t n = verts_.size();
        std::vector<Vec3> out;
        out.reserve(n);
        for (std::size_t i = 0; i < n; ++i) out.push_back(verts_[(i + k) % n]);
        return PolygonalCurve(std::move(out));
    }

    /// Inserts the midpoint of every segment; the image is unchanged.
    PolygonalCurve subdivided() const {
        std::vector<Vec3> out;
        out.reserve(2 * verts_.size());
        const Rat half(1, 2);
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            const auto [p, q] = segment(i);
            out.push_back(p);
            out.push_back(half * (p + q));
        }
        return PolygonalCurve(std::move(out));
    }

    PolygonalCurve translated(const Vec3& t) const {
        return mapped([&](const Vec3& p) { return p + t; });
    }

    /// Applies an arbitrary point transform and revalidates.
    template <class F> PolygonalCurve mapped(F&& f) const {
        std::vector<Vec3> out;
        out.reserve(verts_.size());
        for (const auto& p : verts_) out.push_back(f(p));
        return PolygonalCurve(std::move(out));
    }

  private:
    void validate() const {
        const std::size_t n = verts_.size();
        if (n < 3) throw std::invalid_argument("closed curve needs at least 3 vertices");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (verts_[i] == verts_[j])
                    throw std::invalid_argument("curve vertices must be pairwise distinct");
        // Adjacent segments share exactly their common endpoint. They overlap
        // beyond it only when collinear with reversed direction.
        for (std::size_t i = 0; i < n; ++i) {
            const Vec3& a = verts_[(i + n - 1) % n];
            const Vec3& b = verts_[i];
            const Vec3& c = verts_[(i + 1) % n];
            if (collinear(a, b, c) && dot(b - a, c - b) < 0)
                throw std::invalid_argument("curve folds back onto itself");
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (j == i + 1 || (i == 0 && j == n - 1)) continue; // adjacent
                const auto [a, b] = segment(i);
                const auto [c, d] = segment(j);
                if (segments_intersect_3d(a, b, c, d))
                    throw std::invalid_argument("curve segments cross");
            }
        }
    }

    std::vector<Vec3> verts_;
};

/// Two closed curves with disjoint images (checked exactly segment by
/// segment).
inline bool curves_disjoint(const PolygonalCurve& f, const PolygonalCurve& g) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) {
            const auto [a, b] = f.segment(i);
            const auto [c, d] = g.segment(j);
            if (segments_intersect_3d(a, b, c, d)) return false;
        }
    return true;
}

/// Straight-line embedding of a graph in space. Validation rejects anything
/// that is not an embedding of the underlying complex: repeated coordinates,
/// a vertex in the interior of an edge, or two independent edges that meet.
class SpatialEmbedding {
  public:
    SpatialEmbedding(SimplicialComplex graph, std::vector<Vec3> coords)
        : complex_(std::move(graph)), coords_(std::move(coords)) {
        validate();
    }

    const SimplicialComplex& complex() const { return complex_; }
    const std::vector<Vec3>& coords() const { return coords_; }
    const Vec3& coord(int v) const { return coords_[static_cast<std::size_t>(v)]; }

    /// The closed curve traced by a cycle of vertices. Each consecutive pair
    /// (and the wrap-around pair) must be an edge of the complex.
    PolygonalCurve curve_for_cycle(const std::vector<int>& cycle) const {
        if (cycle.size() < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
        const std::size_t n = cycle.size();
        std::vector<Vec3> pts;
        pts.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            int u = cycle[i];
            int v = cycle[(i + 1) % n];
            Simplex e{std::min(u, v), std::max(u, v)};
            if (u == v || !complex_.contains(e))
                throw std::invalid_argument("cycle uses a missing edge");
            pts.push_back(coord(u));
        }
        return PolygonalCurve(std::move(pts));
    }

  private:
    void validate() const {
        if (complex_.dimension() > 1)
            throw std::invalid_argument("embedding requires a graph (dimension <= 1)");
        const std::size_t n = complex_.vertex_count();
        if (coords_.size() != n)
            throw std::invalid_argument("coordinate count must match vertex count");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (coords_[i] == coords_[j])
                    throw std::invalid_argument("vertices must map to distinct points");

        const auto& edges = complex_.simplices_of_dim(1);
        // A vertex inside an edge also covers overlap of edges sharing an
        // endpoint: such an overlap would put the nearer endpoint inside the
        // longer edge.
        for (const auto& e : edges) {
            const Vec3& a = coords_[static_cast<std::size_t>(e[0])];
            const Vec3& b = coords_[static_cast<std::size_t>(e[1])];
            for (std::size_t w = 0; w < n; ++w) {
                if (static_cast<int>(w) == e[0] || static_cast<int>(w) == e[1]) continue;
                if (point_on_segment(coords_[w], a, b))
                    throw std::invalid_argument("edge passes through a vertex");
            }
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const auto& e = edges[i];
                const auto& f = edges[j];
                if (e[0] == f[0] || e[0] == f[1] || e[1] == f[0] || e[1] == f[1]) continue;
                if (segments_intersect_3d(coords_[static_cast<std::size_t>(e[0])],
                                          coords_[static_cast<std::size_t>(e[1])],
                                          coords_[static_cast<std::size_t>(f[0])],
                                          coords_[static_cast<std::size_t>(f[1])]))
                    throw std::invalid_argument("independent edges intersect");
            }
        }
    }

    SimplicialComplex complex_;
    std::vector<Vec3> coords_;
};

} // namespace toplink
