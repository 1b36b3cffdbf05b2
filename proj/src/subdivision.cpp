#include "pinwheel/subdivision.hpp"

#include <map>
#include <sstream>

#include "pinwheel/errors.hpp"

namespace pin {

namespace {

SubdivisionRef build_reference() {
    SubdivisionRef r;
    r.verts = {
        Point(0, 0),                        // 0 long-end corner
        Point(rat(1, 2), Rat(0)),           // 1 long leg 1/4
        Point(1, 0),                        // 2 long leg 1/2
        Point(rat(3, 2), Rat(0)),           // 3 long leg 3/4
        Point(2, 0),                        // 4 right angle
        Point(Rat(2), rat(1, 2)),           // 5 short leg midpoint
        Point(2, 1),                        // 6 short-end corner
        Point(rat(3, 2), rat(3, 4)),        // 7 hypotenuse 3/4
        Point(1, rat(1, 2)),                // 8 hypotenuse 1/2
        Point(rat(1, 2), rat(1, 4)),        // 9 hypotenuse 1/4
    };
    r.tris = {{{0, 1, 9},
               {1, 8, 9},
               {1, 2, 8},
               {2, 7, 8},
               {2, 3, 7},
               {3, 6, 7},
               {3, 5, 6},
               {3, 4, 5}}};
    r.edges = {{{0, 1},
                {1, 2},
                {2, 3},
                {3, 4},
                {4, 5},
                {5, 6},
                {6, 7},
                {7, 8},
                {8, 9},
                {0, 9},
                {1, 9},
                {1, 8},
                {2, 8},
                {2, 7},
                {3, 7},
                {3, 6},
                {3, 5}}};
    std::map<std::pair<int, int>, int> lookup;
    for (int e = 0; e < kSubEdges; ++e) lookup[r.edges[e]] = e;
    for (int t = 0; t < kSubTris; ++t) {
        for (int s = 0; s < 3; ++s) {
            int a = r.tris[t][s], b = r.tris[t][(s + 1) % 3];
            int dir = a < b ? +1 : -1;
            auto it = lookup.find(dir > 0 ? std::make_pair(a, b) : std::make_pair(b, a));
            r.tri_edges[t][s] = {it->second, dir};
        }
    }
    return r;
}

}  // namespace

const SubdivisionRef& SubdivisionRef::instance() {
    static const SubdivisionRef ref = build_reference();
    return ref;
}

TileSubdivision subdivide(const TilePose& t) {
    const auto& ref = SubdivisionRef::instance();
    TileSubdivision out;
    for (int i = 0; i < kSubVerts; ++i) {
        Point v = t.chir > 0 ? ref.verts[i] : conj(ref.verts[i]);
        out.verts[i] = rotate(t.rot, v) + t.trans;
    }
    const Rat third = rat(1, 3);
    for (int k = 0; k < kSubTris; ++k) {
        for (int s = 0; s < 3; ++s) out.triangles[k][s] = out.verts[ref.tris[k][s]];
        Point sum = out.triangles[k][0] + out.triangles[k][1] + out.triangles[k][2];
        out.barycenters[k] = Point(sum.x * third, sum.y * third);
    }
    return out;
}

std::pair<size_t, size_t> check_patch_simplicial(const LeveledPatch& p) {
    // Count, for every edge segment of the union subdivision, how many
    // triangles it bounds; collect all vertices along the way.
    struct PtLess {
        bool operator()(const Point& a, const Point& b) const { return lex_less(a, b); }
    };
    std::map<Point, int, PtLess> vertex_ids;
    std::vector<Point> vertex_pts;
    auto vid = [&vertex_ids, &vertex_pts](const Point& pt) {
        auto [it, fresh] = vertex_ids.emplace(pt, static_cast<int>(vertex_ids.size()));
        if (fresh) vertex_pts.push_back(pt);
        return it->second;
    };

    struct EdgeUse {
        int count = 0;
        Point a, b;
    };
    std::map<std::pair<int, int>, EdgeUse> edges;

    for (const auto& tile : p.tiles) {
        TileSubdivision sub = subdivide(tile);
        for (const auto& tri : sub.triangles) {
            for (int s = 0; s < 3; ++s) {
                const Point& a = tri[s];
                const Point& b = tri[(s + 1) % 3];
                int ia = vid(a), ib = vid(b);
                auto key = ia < ib ? std::make_pair(ia, ib) : std::make_pair(ib, ia);
                auto& use = edges[key];
                if (use.count == 0) {
                    use.a = a;
                    use.b = b;
                }
                use.count += 1;
            }
        }
    }

    size_t interior = 0, boundary = 0;
    for (const auto& [key, use] : edges) {
        (void)key;
        if (use.count == 2)
            ++interior;
        else if (use.count == 1)
            ++boundary;
        else {
            std::ostringstream os;
            os << "edge in " << use.count << " triangles";
            throw NonSimplicialAdjacency(os.str());
        }
    }

    // No vertex may sit in the interior of an edge.
    for (const auto& [key, use] : edges) {
        (void)key;
        for (const auto& v : vertex_pts) {
            if (v == use.a || v == use.b) continue;
            if (point_on_segment(v, use.a, use.b))
                throw NonSimplicialAdjacency("vertex lies in the interior of an edge");
        }
    }
    return {interior, boundary};
}

}  // namespace pin
