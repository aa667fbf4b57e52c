#pragma once

#include <array>
#include <stdexcept>

#include "toplink/numbers.hpp"

namespace toplink {

// Exact rational points; every predicate below returns a sign or a bool
// computed without rounding.

struct Vec3 {
    Rat x, y, z;

    Vec3() : x(0), y(0), z(0) {}
    Vec3(Rat px, Rat py, Rat pz) : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}

    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Vec3& o) const { return !(*this == o); }
};

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Vec3 operator*(const Rat& s, const Vec3& a) {
    return {s * a.x, s * a.y, s * a.z};
}

inline Rat dot(const Vec3& a, const Vec3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline bool is_zero(const Vec3& v) { return v.x == 0 && v.y == 0 && v.z == 0; }

/// Sign of det[b-a, c-a, d-a]: +1 when d lies on the side of plane (a,b,c)
/// pointed to by (b-a) x (c-a).
inline int orient3d(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
    return sgn(dot(cross(b - a, c - a), d - a));
}

inline bool collinear(const Vec3& a, const Vec3& b, const Vec3& c) {
    return is_zero(cross(b - a, c - a));
}

/// p on the closed segment [a, b] (a == b degenerates to a point test).
inline bool point_on_segment(const Vec3& p, const Vec3& a, const Vec3& b) {
    if (!collinear(a, b, p)) return false;
    const auto within = [](const Rat& v, const Rat& lo, const Rat& hi) {
        return (lo <= v && v <= hi) || (hi <= v && v <= lo);
    };
    return within(p.x, a.x, b.x) && within(p.y, a.y, b.y) && within(p.z, a.z, b.z);
}

struct Vec2 {
    Rat x, y;
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator<(const Vec2& o) const { // for sorting crossing points
        if (x != o.x) return x < o.x;
        return y < o.y;
    }
};

inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }

inline Rat cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Sign of the turn a -> b -> c; +1 is counterclockwise.
inline int orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
    return sgn(cross2(b - a, c - a));
}

/// p on the closed segment [a, b] in the plane.
inline bool point_on_segment_2d(const Vec2& p, const Vec2& a, const Vec2& b) {
    if (orient2d(a, b, p) != 0) return false;
    const auto within = [](const Rat& v, const Rat& lo, const Rat& hi) {
        return (lo <= v && v <= hi) || (hi <= v && v <= lo);
    };
    return within(p.x, a.x, b.x) && within(p.y, a.y, b.y);
}

/// Closed segments [a,b] and [c,d] share at least one point.
inline bool segments_intersect_2d(const Vec2& a, const Vec2& b, const Vec2& c,
                                  const Vec2& d) {
    const int d1 = orient2d(c, d, a);
    const int d2 = orient2d(c, d, b);
    const int d3 = orient2d(a, b, c);
    const int d4 = orient2d(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && point_on_segment_2d(a, c, d)) return true;
    if (d2 == 0 && point_on_segment_2d(b, c, d)) return true;
    if (d3 == 0 && point_on_segment_2d(c, a, b)) return true;
    if (d4 == 0 && point_on_segment_2d(d, a, b)) return true;
    return false;
}

/// Closed segments [a,b] and [c,d] in space share at least one point.
/// Intersecting segments are coplanar, so a nonzero orientation settles the
/// generic case; the rest reduces to an exact planar or collinear test.
inline bool segments_intersect_3d(const Vec3& a, const Vec3& b, const Vec3& c,
                                  const Vec3& d) {
    if (a == b) return point_on_segment(a, c, d);
    if (c == d) return point_on_segment(c, a, b);
    if (orient3d(a, b, c, d) != 0) return false;

    const bool c_on_ab = collinear(a, b, c);
    const bool d_on_ab = collinear(a, b, d);
    if (c_on_ab && d_on_ab) {
        // All four on one line: compare parameter intervals along it.
        const Vec3 dir = b - a;
        const auto param = [&](const Vec3& p) { return dot(p - a, dir); };
        Rat lo1(0), hi1 = dot(dir, dir);
        Rat lo2 = param(c), hi2 = param(d);
        if (lo2 > hi2) std::swap(lo2, hi2);
        return !(hi2 < lo1 || hi1 < lo2);
    }
    // A line meets a second, different line in at most one point; when only
    // one endpoint of [c,d] sits on line(a,b) that endpoint is the sole
    // candidate (and symmetrically).
    if (c_on_ab) return point_on_segment(c, a, b);
    if (d_on_ab) return point_on_segment(d, a, b);

    // Proper coplanar case: project out an axis the normal does not kill.
    const Vec3 n = cross(b - a, c - a);
    const auto project = [&](const Vec3& p) -> Vec2 {
        if (n.x != 0) return {p.y, p.z};
        if (n.y != 0) return {p.x, p.z};
        return {p.x, p.y};
    };
    return segments_intersect_2d(project(a), project(b), project(c), project(d));
}

} // namespace toplink
