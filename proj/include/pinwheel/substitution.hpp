#pragma once

// The pinwheel inflation rule as data plus the exact patch generator.
// Patches are generated at the inflated scale: patch(n) holds 5^n unit tiles
// tiling phi^n(T). Downstream combinatorics are scale-invariant; only the
// SVG writer ever rescales.

#include <array>
#include <string>
#include <vector>

#include "pinwheel/geometry.hpp"

namespace pin {

// Similarity phi(z) = mult*z + trans with trans pinned by the convention
// that the fixed point of phi is the prototile puncture.
struct SubstitutionRule {
    std::string name;
    Point expansion;              // the multiplier (2 - i for pinwheel)
    std::vector<TilePose> children;  // split of phi(T+); mirror table is the conjugate
};

// Puncture of the positive reference tile: intersection of the perpendicular
// bisector of the short leg with the median from the short-leg/hypotenuse
// vertex. Equals (3/2, 1/2).
Point prototile_puncture();

Point expansion_translation(const SubstitutionRule& r);
Point apply_expansion(const SubstitutionRule& r, const Point& z);

SubstitutionRule pinwheel_rule();

// Children of one tile: the reference table (conjugated for mirror tiles)
// transported through the pose of the inflated tile.
std::vector<TilePose> tile_children(const SubstitutionRule& r, const TilePose& t);

struct RuleCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RuleReport {
    std::vector<RuleCheck> checks;
    bool all_pass() const;
};

// Exact verification of every rule invariant; failures come back in the
// report, never as exceptions.
RuleReport validate_rule(const SubstitutionRule& r);

struct LeveledPatch {
    int level = 0;
    Patch tiles;
    std::array<Point, 3> region;  // phi^level(T)
};

LeveledPatch level0_patch(const SubstitutionRule& r);

// One inflation step; output tiles sorted canonically. The parent of output
// tile k*i+j is input tile i (k = children per tile) *before* sorting; use
// expand_with_parents when the hierarchy is needed.
LeveledPatch expand(const LeveledPatch& p, const SubstitutionRule& r);
LeveledPatch expand_serial(const LeveledPatch& p, const SubstitutionRule& r);

// Unsorted expansion keeping the child order: tile 5i+s is child s of tile i.
LeveledPatch expand_with_parents(const LeveledPatch& p, const SubstitutionRule& r);

// Iterated expansion from level 0. Throws ResourceLimit past max_level.
LeveledPatch make_patch(int n, const SubstitutionRule& r, int max_level = 9);

// Rough allocation estimate for the CLI's pre-generation printout.
size_t patch_memory_estimate(int level, const SubstitutionRule& r);

}  // namespace pin
