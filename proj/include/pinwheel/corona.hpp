#pragma once

// First coronas and the enumeration of collared prototiles up to direct
// isometry, with the stabilization + substitution-closure certificate.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pinwheel/substitution.hpp"

namespace pin {

struct Corona {
    TilePose center;
    Patch neighbors;  // every tile of the ambient patch meeting the center
    std::string key;  // canonical key of {center} + neighbors anchored at the center

    Patch as_patch() const;  // center first
};

struct CollaredClass {
    int id = -1;
    Chirality chir = +1;
    Corona rep;          // anchor-normalized: center at (chir, 1, 0)
    int mirror_id = -1;  // partner under reflection
};

// Corona of tile `tile_index` inside p. The corona is certified complete
// only if every corona tile (center included) keeps exact distance > 0 from
// the patch region boundary; otherwise BoundaryUncertain is thrown.
Corona first_corona(const LeveledPatch& p, size_t tile_index);

struct EnumerationOptions {
    int scan_level_start = 3;
    int max_level = 9;
    bool collared = true;  // false: class tiles by bare pose (corona ignored)
    bool parallel = true;
};

struct Enumeration {
    std::vector<CollaredClass> classes;  // ids assigned by sorted canonical key
    bool collared = true;
    int stabilized_level = -1;  // first level whose class set equals the previous one
    bool closure_certified = false;
    std::vector<std::pair<int, size_t>> level_history;  // (level, classes seen)

    int id_of_key(const std::string& key) const;  // -1 if unknown
    const std::map<std::string, int>& key_index() const;

   private:
    mutable std::map<std::string, int> key_index_;
};

// Scan patches of increasing level; stop when (a) two consecutive levels
// yield the same class-key set and (b) substituting every representative
// stays inside the set. Throws NonStabilized past max_level.
Enumeration enumerate_collared(const SubstitutionRule& r, const EnumerationOptions& opt = {});

// Collared classes of the 5 children of c's representative, in child-table
// slot order. Total by the corona-growth property; throws
// IncompleteEnumeration if a child's class is missing from e.
std::array<int, 5> collared_children(const CollaredClass& c, const Enumeration& e,
                                     const SubstitutionRule& r);

// Per-tile classification of a whole patch (used by the complex gluing scan
// and the empirical frequency check).
struct PatchClassification {
    std::vector<int> class_of_tile;              // -1 where the corona is uncertified
    std::vector<std::vector<int32_t>> neighbors; // ascending tile indices per tile
    size_t certified = 0;
};

PatchClassification classify_patch(const LeveledPatch& p, const Enumeration& e,
                                   bool parallel = true);

// Classify one tile of an arbitrary finite patch with no boundary
// certificate (caller guarantees the patch already contains the full
// corona). Returns the canonical corona key.
std::string corona_key_in(const Patch& tiles, size_t tile_index, bool collared = true);

}  // namespace pin
