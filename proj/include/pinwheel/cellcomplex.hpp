#pragma once

// The glued approximant complex B^c_l: one subdivided (collared) l-supertile
// per class, cells identified across every adjacency occurrence found in
// certified patches, merged by a parity-tracking union-find.

#include <cstdint>
#include <vector>

#include "pinwheel/corona.hpp"
#include "pinwheel/intmatrix.hpp"
#include "pinwheel/subdivision.hpp"

namespace pin {

struct CellComplex {
    int grouping_level = 0;     // l; cells live on collared l-supertiles
    size_t n_classes = 0;       // collared classes
    size_t tiles_per_class = 1; // 5^l constituent tiles per supertile
    int scan_level = -1;        // patch level whose adjacencies were scanned

    // local slot layout: (class c, tile t, local id) with strides below
    std::vector<int32_t> vertex_class;  // n_classes * tiles_per_class * 10
    std::vector<int32_t> edge_class;    // n_classes * tiles_per_class * 17
    std::vector<int8_t> edge_dir;       // +1 iff local lo->hi agrees with the class direction
    size_t n_vertices = 0, n_edges = 0, n_faces = 0;

    SparseIntMatrix boundary1;  // vertices x edges
    SparseIntMatrix boundary2;  // edges x faces
    bool connected = false;

    size_t vertex_slot(size_t c, size_t t, int lv) const {
        return (c * tiles_per_class + t) * kSubVerts + lv;
    }
    size_t edge_slot(size_t c, size_t t, int le) const {
        return (c * tiles_per_class + t) * kSubEdges + le;
    }
    size_t face_index(size_t c, size_t t, int k) const {
        return (c * tiles_per_class + t) * kSubTris + k;
    }

    // Poses of the constituent tiles of one class supertile, slot order.
    std::vector<TilePose> class_tiles(size_t c, const Enumeration& e,
                                      const SubstitutionRule& r) const;
};

struct ComplexBuildOptions {
    int grouping_level = 0;
    // Patch level whose (supertile) adjacencies are scanned; -1 picks the
    // first level at which the full class set is certified.
    int scan_level = -1;
    // Re-scan one level deeper and require the identical cell partition.
    bool verify_stable = true;
    bool parallel = true;
};

CellComplex build_complex(const Enumeration& e, const SubstitutionRule& r,
                          const ComplexBuildOptions& opt = {});

}  // namespace pin
