#pragma once

// The 8-triangle oriented simplicial subdivision of a tile: 3 corners,
// quarter points on the long leg and the hypotenuse, the short-leg
// midpoint. All ten vertices sit on the tile boundary; the 8 triangles
// zigzag from the long-leg corner towards the right angle.

#include <array>
#include <utility>

#include "pinwheel/geometry.hpp"

namespace pin {

inline constexpr int kSubVerts = 10;
inline constexpr int kSubEdges = 17;
inline constexpr int kSubTris = 8;
inline constexpr int kSubBoundaryEdges = 10;  // edge ids 0..9 lie on the tile boundary

struct SubdivisionRef {
    std::array<Point, kSubVerts> verts;  // reference (+) coordinates
    std::array<std::array<int, 3>, kSubTris> tris;  // CCW on the + reference
    std::array<std::pair<int, int>, kSubEdges> edges;  // (lo, hi) local vertex ids
    // per triangle: (edge id, +1 if traversed lo->hi)
    std::array<std::array<std::pair<int, int>, 3>, kSubTris> tri_edges;

    static const SubdivisionRef& instance();
};

struct TileSubdivision {
    std::array<Point, kSubVerts> verts;
    std::array<std::array<Point, 3>, kSubTris> triangles;
    std::array<Point, kSubTris> barycenters;
};

TileSubdivision subdivide(const TilePose& t);

// Throws NonSimplicialAdjacency unless the union subdivision of the whole
// patch is simplicial: every edge segment bounds exactly 2 triangles
// (interior) or 1 (patch boundary), and no vertex lies in an edge interior.
// Returns (interior_edges, boundary_edges).
std::pair<size_t, size_t> check_patch_simplicial(const LeveledPatch& p);

}  // namespace pin
