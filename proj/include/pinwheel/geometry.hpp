#pragma once

// Exact plane geometry over Gaussian rationals: points, direct isometries
// (with a reflection flag kept only for chirality bookkeeping), the pinwheel
// reference triangle, and canonical encodings of patches up to direct
// isometry.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pinwheel/rational.hpp"

namespace pin {

// The Gaussian rational x + iy.
struct Point {
    Rat x, y;

    Point() = default;
    Point(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
    Point(long px, long py) : x(px), y(py) {}

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point cmul(const Point& a, const Point& b);  // complex multiplication
Point conj(const Point& a);
Rat norm2(const Point& a);  // |a|^2
bool lex_less(const Point& a, const Point& b);

// Unit-modulus rotation c + is with c^2 + s^2 = 1.
struct UnitRotation {
    Rat c, s;

    UnitRotation() : c(1), s(0) {}
    UnitRotation(Rat rc, Rat rs) : c(std::move(rc)), s(std::move(rs)) {}

    bool operator==(const UnitRotation& o) const { return c == o.c && s == o.s; }
    bool is_unit() const { return c * c + s * s == 1; }
    Point as_point() const { return Point(c, s); }
};

UnitRotation operator*(const UnitRotation& a, const UnitRotation& b);
UnitRotation conj(const UnitRotation& a);  // inverse for unit rotations
Point rotate(const UnitRotation& r, const Point& p);

// z -> rot*z + trans, or rot*conj(z) + trans when reflect is set.
// Reflections never occur as tiling symmetries; the flag exists so mirror
// bookkeeping composes through the same type.
struct Isometry {
    bool reflect = false;
    UnitRotation rot;
    Point trans;
};

Point apply(const Isometry& g, const Point& p);
Isometry compose(const Isometry& a, const Isometry& b);  // a after b
Isometry inverse(const Isometry& g);
Isometry identity_isometry();

// Chirality of a tile: +1 for the reference triangle, -1 for its mirror.
using Chirality = int8_t;

// Reference positive tile: vertices 0, 2, 2+i listed (long-end, right-angle,
// short-end); side lengths squared (5, 4, 1), signed area +1. The mirror
// reference is the conjugate triple.
inline const std::array<Point, 3>& reference_triangle() {
    static const std::array<Point, 3> v = {Point(0, 0), Point(2, 0), Point(2, 1)};
    return v;
}

// A tile as chirality + direct isometry against the reference triangle:
// vertices = rot * V^chir + trans.
struct TilePose {
    Chirality chir = +1;
    UnitRotation rot;
    Point trans;

    bool operator==(const TilePose& o) const {
        return chir == o.chir && rot == o.rot && trans == o.trans;
    }
};

std::array<Point, 3> tile_vertices(const TilePose& t);
TilePose mirror(const TilePose& t);
// Applies a direct isometry to a pose (g.reflect must be false).
TilePose transform(const Isometry& g, const TilePose& t);
bool pose_less(const TilePose& a, const TilePose& b);

using Patch = std::vector<TilePose>;
Patch mirror(const Patch& p);

// --- exact predicates (closed sets, no epsilons) ---

// Sign of the cross product (a-o) x (b-o): +1 CCW, -1 CW, 0 collinear.
int orient(const Point& o, const Point& a, const Point& b);
// Twice the signed area of the ordered triple.
Rat signed_area2(const std::array<Point, 3>& tri);
bool point_on_segment(const Point& p, const Point& a, const Point& b);
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);
bool point_in_triangle(const Point& p, const std::array<Point, 3>& tri);
bool triangles_intersect(const std::array<Point, 3>& ta, const std::array<Point, 3>& tb);
// True iff the interiors overlap (shared edges/vertices do not count).
bool triangles_overlap(const std::array<Point, 3>& ta, const std::array<Point, 3>& tb);

bool tiles_intersect(const TilePose& a, const TilePose& b);

// --- canonical encodings ---

// The direct isometry moving tile t to pose (t.chir, 1, 0).
Isometry anchor_normalizer(const TilePose& t);

// Unique encoding of p up to direct isometry, anchored at tile `anchor`:
// normalize so the anchor sits at (chir, 1, 0), then serialize all poses
// sorted by (chirality, rot.c, rot.s, trans.x, trans.y). Throws
// std::out_of_range for a bad anchor index.
std::string canonical_key(const Patch& p, size_t anchor);

// Min over all anchor choices; class key of the patch itself.
std::string patch_class_key(const Patch& p);

}  // namespace pin
