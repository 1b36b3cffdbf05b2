#include "pinwheel/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace pin {

Point operator+(const Point& a, const Point& b) { return Point(a.x + b.x, a.y + b.y); }
Point operator-(const Point& a, const Point& b) { return Point(a.x - b.x, a.y - b.y); }

Point cmul(const Point& a, const Point& b) {
    return Point(a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x);
}

Point conj(const Point& a) { return Point(a.x, -a.y); }

Rat norm2(const Point& a) { return a.x * a.x + a.y * a.y; }

bool lex_less(const Point& a, const Point& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return a.y < b.y;
}

UnitRotation operator*(const UnitRotation& a, const UnitRotation& b) {
    return UnitRotation(a.c * b.c - a.s * b.s, a.c * b.s + a.s * b.c);
}

UnitRotation conj(const UnitRotation& a) { return UnitRotation(a.c, -a.s); }

Point rotate(const UnitRotation& r, const Point& p) {
    return Point(r.c * p.x - r.s * p.y, r.c * p.y + r.s * p.x);
}

Point apply(const Isometry& g, const Point& p) {
    return rotate(g.rot, g.reflect ? conj(p) : p) + g.trans;
}

Isometry compose(const Isometry& a, const Isometry& b) {
    // (a o b)(z) = a(b(z))
    Isometry out;
    out.reflect = a.reflect != b.reflect;
    if (a.reflect) {
        out.rot = a.rot * conj(b.rot);
        out.trans = rotate(a.rot, conj(b.trans)) + a.trans;
    } else {
        out.rot = a.rot * b.rot;
        out.trans = rotate(a.rot, b.trans) + a.trans;
    }
    return out;
}

Isometry inverse(const Isometry& g) {
    Isometry out;
    out.reflect = g.reflect;
    if (g.reflect) {
        // g(z) = r conj(z) + t; g^-1(z) = conj(r^-1 (z - t)) = conj(r^-1) conj(z) - conj(r^-1 t)
        UnitRotation rinv = conj(g.rot);
        out.rot = conj(rinv);
        out.trans = conj(Point(0, 0) - rotate(rinv, g.trans));
    } else {
        out.rot = conj(g.rot);
        out.trans = Point(0, 0) - rotate(out.rot, g.trans);
    }
    return out;
}

Isometry identity_isometry() { return Isometry{}; }

std::array<Point, 3> tile_vertices(const TilePose& t) {
    std::array<Point, 3> out;
    const auto& ref = reference_triangle();
    for (int i = 0; i < 3; ++i) {
        Point v = t.chir > 0 ? ref[i] : conj(ref[i]);
        out[i] = rotate(t.rot, v) + t.trans;
    }
    return out;
}

TilePose mirror(const TilePose& t) {
    return TilePose{static_cast<Chirality>(-t.chir), conj(t.rot), conj(t.trans)};
}

TilePose transform(const Isometry& g, const TilePose& t) {
    if (g.reflect) throw std::invalid_argument("transform: reflections do not act on poses");
    return TilePose{t.chir, g.rot * t.rot, rotate(g.rot, t.trans) + g.trans};
}

bool pose_less(const TilePose& a, const TilePose& b) {
    if (a.chir != b.chir) return a.chir < b.chir;
    int c = cmp(a.rot.c, b.rot.c);
    if (c != 0) return c < 0;
    c = cmp(a.rot.s, b.rot.s);
    if (c != 0) return c < 0;
    c = cmp(a.trans.x, b.trans.x);
    if (c != 0) return c < 0;
    return a.trans.y < b.trans.y;
}

Patch mirror(const Patch& p) {
    Patch out;
    out.reserve(p.size());
    for (const auto& t : p) out.push_back(mirror(t));
    return out;
}

int orient(const Point& o, const Point& a, const Point& b) {
    Rat d = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    return sgn(d);
}

Rat signed_area2(const std::array<Point, 3>& tri) {
    return (tri[1].x - tri[0].x) * (tri[2].y - tri[0].y) -
           (tri[1].y - tri[0].y) * (tri[2].x - tri[0].x);
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient(a, b, p) != 0) return false;
    if (cmp(p.x, std::min(a.x, b.x)) < 0 || cmp(p.x, std::max(a.x, b.x)) > 0) return false;
    if (cmp(p.y, std::min(a.y, b.y)) < 0 || cmp(p.y, std::max(a.y, b.y)) > 0) return false;
    return true;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int d1 = orient(c, d, a);
    int d2 = orient(c, d, b);
    int d3 = orient(a, b, c);
    int d4 = orient(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && point_on_segment(a, c, d)) return true;
    if (d2 == 0 && point_on_segment(b, c, d)) return true;
    if (d3 == 0 && point_on_segment(c, a, b)) return true;
    if (d4 == 0 && point_on_segment(d, a, b)) return true;
    return false;
}

bool point_in_triangle(const Point& p, const std::array<Point, 3>& tri) {
    int s = sgn(signed_area2(tri));
    for (int i = 0; i < 3; ++i)
        if (s * orient(tri[i], tri[(i + 1) % 3], p) < 0) return false;
    return true;
}

bool triangles_intersect(const std::array<Point, 3>& ta, const std::array<Point, 3>& tb) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (segments_intersect(ta[i], ta[(i + 1) % 3], tb[j], tb[(j + 1) % 3]))
                return true;
    return point_in_triangle(ta[0], tb) || point_in_triangle(tb[0], ta);
}

namespace {

bool strictly_inside(const Point& p, const std::array<Point, 3>& tri, int s) {
    for (int i = 0; i < 3; ++i)
        if (s * orient(tri[i], tri[(i + 1) % 3], p) <= 0) return false;
    return true;
}

}  // namespace

bool triangles_overlap(const std::array<Point, 3>& ta, const std::array<Point, 3>& tb) {
    // Interiors meet iff two edges properly cross or one triangle holds a
    // vertex of the other strictly inside.
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Point &a = ta[i], &b = ta[(i + 1) % 3];
            const Point &c = tb[j], &d = tb[(j + 1) % 3];
            int d1 = orient(c, d, a), d2 = orient(c, d, b);
            int d3 = orient(a, b, c), d4 = orient(a, b, d);
            if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
                ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
                return true;
        }
    }
    int sa = sgn(signed_area2(ta));
    int sb = sgn(signed_area2(tb));
    for (int i = 0; i < 3; ++i) {
        if (strictly_inside(ta[i], tb, sb)) return true;
        if (strictly_inside(tb[i], ta, sa)) return true;
    }
    return false;
}

bool tiles_intersect(const TilePose& a, const TilePose& b) {
    return triangles_intersect(tile_vertices(a), tile_vertices(b));
}

Isometry anchor_normalizer(const TilePose& t) {
    Isometry g;
    g.rot = conj(t.rot);
    g.trans = Point(0, 0) - rotate(g.rot, t.trans);
    return g;
}

std::string canonical_key(const Patch& p, size_t anchor) {
    if (anchor >= p.size()) throw std::out_of_range("canonical_key: anchor out of range");
    Isometry g = anchor_normalizer(p[anchor]);
    std::vector<TilePose> normalized;
    normalized.reserve(p.size());
    for (const auto& t : p) normalized.push_back(transform(g, t));
    std::sort(normalized.begin(), normalized.end(), pose_less);

    std::string key;
    append_key(key, Int(static_cast<long>(p.size())));
    for (const auto& t : normalized) {
        key.push_back(t.chir > 0 ? '+' : '-');
        append_key(key, t.rot.c);
        append_key(key, t.rot.s);
        append_key(key, t.trans.x);
        append_key(key, t.trans.y);
    }
    return key;
}

std::string patch_class_key(const Patch& p) {
    std::string best;
    for (size_t i = 0; i < p.size(); ++i) {
        std::string k = canonical_key(p, i);
        if (best.empty() || k < best) best = std::move(k);
    }
    return best;
}

}  // namespace pin
