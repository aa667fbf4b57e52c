#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "toplink/geometry.hpp"

using namespace toplink;
using testutil::Rng;

namespace {

// Independent oracle: solve a + t(b-a) = c + u(d-c) exactly over the
// rationals and test 0 <= t, u <= 1. Requires a != b and c != d; the library
// route (orientation predicates plus projection) is never consulted.
bool oracle_intersect_3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    const Vec3 d1 = b - a, d2 = d - c, w = c - a;
    const Vec3 cr = cross(d1, d2);
    if (is_zero(cr)) {
        if (!is_zero(cross(d1, w))) return false; // parallel, different lines
        const Rat len = dot(d1, d1);
        Rat lo = dot(w, d1), hi = dot(d - a, d1);
        if (lo > hi) std::swap(lo, hi);
        return !(hi < 0 || len < lo);
    }
    // Cramer on a coordinate pair whose 2x2 determinant (a component of the
    // cross product) is nonzero, then verify the full 3D equality.
    Rat t, u;
    if (cr.z != 0) {
        const Rat det = d1.x * (Rat(0) - d2.y) + d2.x * d1.y;
        t = (w.x * (Rat(0) - d2.y) + d2.x * w.y) / det;
        u = (d1.x * w.y - w.x * d1.y) / det;
    } else if (cr.y != 0) {
        const Rat det = d1.x * (Rat(0) - d2.z) + d2.x * d1.z;
        t = (w.x * (Rat(0) - d2.z) + d2.x * w.z) / det;
        u = (d1.x * w.z - w.x * d1.z) / det;
    } else {
        const Rat det = d1.y * (Rat(0) - d2.z) + d2.y * d1.z;
        t = (w.y * (Rat(0) - d2.z) + d2.y * w.z) / det;
        u = (d1.y * w.z - w.y * d1.z) / det;
    }
    if (t < 0 || t > 1 || u < 0 || u > 1) return false;
    return a + t * d1 == c + u * d2; // third coordinate may still disagree
}

Vec3 random_point(Rng& rng, int box) {
    const auto c = [&]() {
        return Rat(static_cast<int>(rng() % static_cast<unsigned>(2 * box + 1)) - box);
    };
    return {c(), c(), c()};
}

Vec3 P(int x, int y, int z) { return {Rat(x), Rat(y), Rat(z)}; }
Vec2 Q(int x, int y) { return {Rat(x), Rat(y)}; }

} // namespace

TEST_CASE("vector arithmetic", "[geometry]") {
    REQUIRE(P(1, 2, 3) + P(4, 5, 6) == P(5, 7, 9));
    REQUIRE(P(4, 5, 6) - P(1, 2, 3) == P(3, 3, 3));
    REQUIRE(Rat(1, 2) * P(2, 4, 6) == P(1, 2, 3));
    REQUIRE(dot(P(1, 2, 3), P(4, -5, 6)) == 12);
    REQUIRE(cross(P(1, 0, 0), P(0, 1, 0)) == P(0, 0, 1));
    REQUIRE(is_zero(cross(P(2, 4, 6), P(1, 2, 3))));
}

TEST_CASE("orientation signs", "[geometry]") {
    const Vec3 a = P(0, 0, 0), b = P(1, 0, 0), c = P(0, 1, 0);
    REQUIRE(orient3d(a, b, c, P(0, 0, 1)) == 1);
    REQUIRE(orient3d(a, b, c, P(0, 0, -1)) == -1);
    REQUIRE(orient3d(a, c, b, P(0, 0, 1)) == -1);
    REQUIRE(orient3d(a, b, c, {Rat(1, 3), Rat(1, 4), Rat(0)}) == 0);

    REQUIRE(orient2d(Q(0, 0), Q(1, 0), Q(0, 1)) == 1);
    REQUIRE(orient2d(Q(0, 0), Q(0, 1), Q(1, 0)) == -1);
    REQUIRE(orient2d(Q(0, 0), Q(2, 2), Q(5, 5)) == 0);
}

TEST_CASE("collinearity and segment membership", "[geometry]") {
    REQUIRE(collinear(P(0, 0, 0), P(2, 4, 6), P(1, 2, 3)));
    REQUIRE_FALSE(collinear(P(0, 0, 0), P(2, 4, 6), P(1, 2, 4)));

    const Vec3 a = P(0, 0, 0), b = P(2, 4, 6);
    REQUIRE(point_on_segment(P(1, 2, 3), a, b));
    REQUIRE(point_on_segment({Rat(1, 2), Rat(1), Rat(3, 2)}, a, b));
    REQUIRE(point_on_segment(a, a, b));
    REQUIRE(point_on_segment(b, a, b));
    REQUIRE_FALSE(point_on_segment(P(3, 6, 9), a, b));    // on the line, past b
    REQUIRE_FALSE(point_on_segment(P(-1, -2, -3), a, b)); // on the line, before a
    REQUIRE_FALSE(point_on_segment(P(1, 2, 4), a, b));    // off the line

    // degenerate segment is a point test
    REQUIRE(point_on_segment(a, a, a));
    REQUIRE_FALSE(point_on_segment(b, a, a));

    REQUIRE(point_on_segment_2d(Q(1, 1), Q(0, 0), Q(2, 2)));
    REQUIRE(point_on_segment_2d(Q(0, 0), Q(0, 0), Q(2, 2)));
    REQUIRE_FALSE(point_on_segment_2d(Q(3, 3), Q(0, 0), Q(2, 2)));
    REQUIRE_FALSE(point_on_segment_2d(Q(1, 0), Q(0, 0), Q(2, 2)));
}

TEST_CASE("planar segment intersection cases", "[geometry]") {
    // proper crossing at (1/2, 1/2)
    REQUIRE(segments_intersect_2d(Q(0, 0), Q(1, 1), Q(0, 1), Q(1, 0)));
    // T-touch: endpoint of one in the interior of the other
    REQUIRE(segments_intersect_2d(Q(0, 0), Q(2, 0), Q(1, 0), Q(1, 3)));
    // shared endpoint only
    REQUIRE(segments_intersect_2d(Q(0, 0), Q(1, 1), Q(1, 1), Q(5, 0)));
    // collinear overlap and collinear gap
    REQUIRE(segments_intersect_2d(Q(0, 0), Q(4, 0), Q(2, 0), Q(6, 0)));
    REQUIRE_FALSE(segments_intersect_2d(Q(0, 0), Q(1, 0), Q(2, 0), Q(3, 0)));
    // collinear single-point touch
    REQUIRE(segments_intersect_2d(Q(0, 0), Q(2, 0), Q(2, 0), Q(5, 0)));
    // parallel offset
    REQUIRE_FALSE(segments_intersect_2d(Q(0, 0), Q(3, 0), Q(0, 1), Q(3, 1)));
    // lines cross outside both segments
    REQUIRE_FALSE(segments_intersect_2d(Q(0, 0), Q(1, 0), Q(2, 1), Q(2, -1)));
}

TEST_CASE("spatial segment intersection cases", "[geometry]") {
    // proper coplanar crossing at (1/2, 1/2, 0)
    REQUIRE(segments_intersect_3d(P(0, 0, 0), P(1, 1, 0), P(0, 1, 0), P(1, 0, 0)));
    // crossing in a tilted plane, rational crossing point
    REQUIRE(segments_intersect_3d(P(0, 0, 0), P(2, 2, 2), P(0, 2, 2), P(2, 0, 0)));
    // shared endpoint only
    REQUIRE(segments_intersect_3d(P(0, 0, 0), P(1, 1, 1), P(1, 1, 1), P(2, 0, 5)));
    // T-touch: endpoint c lies inside [a, b]
    REQUIRE(segments_intersect_3d(P(0, 0, 0), P(2, 0, 0), P(1, 0, 0), P(1, 5, 7)));
    // collinear overlap, touch, and gap
    REQUIRE(segments_intersect_3d(P(0, 0, 0), P(4, 4, 4), P(2, 2, 2), P(6, 6, 6)));
    REQUIRE(segments_intersect_3d(P(0, 0, 0), P(2, 2, 2), P(2, 2, 2), P(5, 5, 5)));
    REQUIRE_FALSE(segments_intersect_3d(P(0, 0, 0), P(1, 1, 1), P(2, 2, 2), P(3, 3, 3)));
    // skew pair
    REQUIRE_FALSE(segments_intersect_3d(P(0, 0, 0), P(1, 0, 0), P(0, 1, 1), P(1, -1, 1)));
    // parallel offset (coplanar)
    REQUIRE_FALSE(segments_intersect_3d(P(0, 0, 0), P(3, 0, 0), P(0, 1, 0), P(3, 1, 0)));
    // coplanar, lines meet outside the segments
    REQUIRE_FALSE(segments_intersect_3d(P(0, 0, 0), P(1, 0, 0), P(2, 1, 0), P(2, -1, 0)));
    // endpoint on line(a, b) but outside [a, b], rest of [c, d] off the line
    REQUIRE_FALSE(segments_intersect_3d(P(0, 0, 0), P(1, 0, 0), P(3, 0, 0), P(3, 5, 5)));
    // same, but the on-line endpoint is inside [a, b]
    REQUIRE(segments_intersect_3d(P(0, 0, 0), P(4, 0, 0), P(3, 0, 0), P(3, 5, 5)));

    // point-segment degenerations
    REQUIRE(segments_intersect_3d(P(1, 1, 1), P(1, 1, 1), P(0, 0, 0), P(2, 2, 2)));
    REQUIRE_FALSE(segments_intersect_3d(P(1, 1, 2), P(1, 1, 2), P(0, 0, 0), P(2, 2, 2)));
    REQUIRE(segments_intersect_3d(P(0, 0, 0), P(2, 2, 2), P(1, 1, 1), P(1, 1, 1)));
    REQUIRE(segments_intersect_3d(P(3, 3, 3), P(3, 3, 3), P(3, 3, 3), P(3, 3, 3)));
    REQUIRE_FALSE(segments_intersect_3d(P(3, 3, 3), P(3, 3, 3), P(4, 4, 4), P(4, 4, 4)));
}

TEST_CASE("segment intersection agrees with the parametric solve", "[geometry]") {
    Rng rng(2024);
    const auto draw_segment = [&](int box) {
        while (true) {
            Vec3 a = random_point(rng, box), b = random_point(rng, box);
            if (!(a == b)) return std::pair{a, b};
        }
    };
    // Small box: touching, collinear, and shared-endpoint configurations occur
    // with fair probability.
    for (int trial = 0; trial < 2000; ++trial) {
        const auto [a, b] = draw_segment(3);
        const auto [c, d] = draw_segment(3);
        REQUIRE(segments_intersect_3d(a, b, c, d) == oracle_intersect_3d(a, b, c, d));
    }
    for (int trial = 0; trial < 500; ++trial) {
        const auto [a, b] = draw_segment(8);
        const auto [c, d] = draw_segment(8);
        REQUIRE(segments_intersect_3d(a, b, c, d) == oracle_intersect_3d(a, b, c, d));
    }
}

TEST_CASE("segments built through a common point intersect", "[geometry]") {
    Rng rng(515);
    for (int trial = 0; trial < 400; ++trial) {
        Vec3 a = random_point(rng, 6), b = random_point(rng, 6);
        while (a == b) b = random_point(rng, 6);
        // interior rational point of [a, b]
        const int n = 2 + static_cast<int>(rng() % 4);
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        const Vec3 x = a + Rat(k, n) * (b - a);
        Vec3 w = random_point(rng, 3);
        while (is_zero(w)) w = random_point(rng, 3);
        const Vec3 c = x - Rat(1 + static_cast<int>(rng() % 3), 2) * w;
        const Vec3 d = x + Rat(1 + static_cast<int>(rng() % 3), 3) * w;
        REQUIRE(segments_intersect_3d(a, b, c, d));
        REQUIRE(oracle_intersect_3d(a, b, c, d));
    }
}

TEST_CASE("segments separated by a plane never intersect", "[geometry]") {
    Rng rng(909);
    const auto in_slab = [&](int zlo, int zhi) {
        const auto c = [&]() { return Rat(static_cast<int>(rng() % 11) - 5); };
        return Vec3{c(), c(), Rat(zlo + static_cast<int>(rng() % static_cast<unsigned>(
                                            zhi - zlo + 1)))};
    };
    for (int trial = 0; trial < 400; ++trial) {
        Vec3 a = in_slab(-5, -1), b = in_slab(-5, -1);
        while (a == b) b = in_slab(-5, -1);
        Vec3 c = in_slab(1, 5), d = in_slab(1, 5);
        while (c == d) d = in_slab(1, 5);
        REQUIRE_FALSE(segments_intersect_3d(a, b, c, d));
        REQUIRE_FALSE(oracle_intersect_3d(a, b, c, d));
    }
}

TEST_CASE("planar tests survive an affine embedding into space", "[geometry]") {
    Rng rng(333);
    // injective affine map: the plane spanned by u, v through o
    const Vec3 o = P(7, -2, 5), u = P(1, 2, 0), v = P(0, 1, 3);
    REQUIRE_FALSE(is_zero(cross(u, v)));
    const auto lift = [&](const Vec2& p) { return o + p.x * u + p.y * v; };
    const auto draw = [&]() {
        while (true) {
            Vec2 p{Rat(static_cast<int>(rng() % 9) - 4), Rat(static_cast<int>(rng() % 9) - 4)};
            Vec2 q{Rat(static_cast<int>(rng() % 9) - 4), Rat(static_cast<int>(rng() % 9) - 4)};
            if (!(p == q)) return std::pair{p, q};
        }
    };
    for (int trial = 0; trial < 1200; ++trial) {
        const auto [p, q] = draw();
        const auto [r, s] = draw();
        const bool flat = segments_intersect_2d(p, q, r, s);
        // 2D route vs the independent solver on the trivial embedding
        REQUIRE(flat == oracle_intersect_3d({p.x, p.y, Rat(0)}, {q.x, q.y, Rat(0)},
                                            {r.x, r.y, Rat(0)}, {s.x, s.y, Rat(0)}));
        // and vs the full 3D route through a tilted plane
        REQUIRE(flat == segments_intersect_3d(lift(p), lift(q), lift(r), lift(s)));
    }
}

TEST_CASE("projected point ordering is total", "[geometry]") {
    std::vector<Vec2> pts{Q(2, 1), Q(0, 5), Q(2, -3), Q(0, 5), Q(-1, 0)};
    std::sort(pts.begin(), pts.end());
    REQUIRE(pts.front() == Q(-1, 0));
    REQUIRE(pts.back() == Q(2, 1));
    REQUIRE(std::adjacent_find(pts.begin(), pts.end()) != pts.end()); // the duplicate
}
