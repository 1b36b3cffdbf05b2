#include "pinwheel/substitution.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pinwheel/errors.hpp"

namespace pin {

Point prototile_puncture() { return Point(rat(3, 2), rat(1, 2)); }

Point expansion_translation(const SubstitutionRule& r) {
    // trans = punct * (1 - mult) so that phi fixes the puncture.
    Point one(1, 0);
    return cmul(prototile_puncture(), one - r.expansion);
}

Point apply_expansion(const SubstitutionRule& r, const Point& z) {
    return cmul(r.expansion, z) + expansion_translation(r);
}

SubstitutionRule pinwheel_rule() {
    SubstitutionRule r;
    r.name = "pinwheel";
    r.expansion = Point(2, -1);
    const UnitRotation one(Rat(1), Rat(0));
    const UnitRotation minus_one(Rat(-1), Rat(0));
    const UnitRotation i_rot(Rat(0), Rat(1));
    r.children = {
        TilePose{+1, one, Point(0, 0)},        // central tile
        TilePose{-1, one, Point(-2, 1)},
        TilePose{+1, minus_one, Point(2, 1)},
        TilePose{-1, one, Point(0, 0)},
        TilePose{-1, i_rot, Point(2, -1)},
    };
    return r;
}

std::vector<TilePose> tile_children(const SubstitutionRule& r, const TilePose& t) {
    const Point m = r.expansion;
    const Point tau = expansion_translation(r);
    const Point one(1, 0);

    Isometry w;  // phi(t) = w . Phi^chir
    if (t.chir > 0) {
        w.rot = t.rot;
        w.trans = cmul(m, t.trans) + cmul(tau, one - t.rot.as_point());
    } else {
        // u = rot * m / conj(m) = rot * m^2 / |m|^2
        Rat n2 = norm2(m);
        Point m2 = cmul(m, m);
        Point u = cmul(t.rot.as_point(), Point(m2.x / n2, m2.y / n2));
        w.rot = UnitRotation(u.x, u.y);
        w.trans = cmul(m, t.trans) + tau - cmul(u, conj(tau));
    }

    std::vector<TilePose> out;
    out.reserve(r.children.size());
    for (const auto& c : r.children) {
        TilePose ref = t.chir > 0 ? c : mirror(c);
        out.push_back(transform(w, ref));
    }
    return out;
}

bool RuleReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

RuleReport validate_rule(const SubstitutionRule& r) {
    RuleReport rep;
    auto add = [&rep](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back(RuleCheck{name, pass, detail});
    };

    Rat area_factor = norm2(r.expansion);
    {
        std::ostringstream os;
        os << "|mult|^2 = " << area_factor.get_str() << ", children = " << r.children.size();
        add("expansion-area-factor", area_factor == Rat(static_cast<long>(r.children.size())),
            os.str());
    }

    bool units = true, congruent = true, chir_ok = true;
    for (const auto& c : r.children) {
        if (!c.rot.is_unit()) units = false;
        auto v = tile_vertices(c);
        Rat s01 = norm2(v[1] - v[0]);
        Rat s12 = norm2(v[2] - v[1]);
        Rat s20 = norm2(v[0] - v[2]);
        if (!(s01 == 4 && s12 == 1 && s20 == 5)) congruent = false;
        Rat a2 = signed_area2(v);
        if (sgn(a2) != c.chir || abs(a2.get_num()) != 2 || a2.get_den() != 1) chir_ok = false;
    }
    add("children-unit-rotations", units);
    add("children-congruent", congruent, "side lengths^2 (5,4,1) per child");
    add("children-chirality", chir_ok, "signed area sign matches chirality");

    bool disjoint = true;
    for (size_t i = 0; i < r.children.size() && disjoint; ++i)
        for (size_t j = i + 1; j < r.children.size() && disjoint; ++j)
            if (triangles_overlap(tile_vertices(r.children[i]), tile_vertices(r.children[j])))
                disjoint = false;
    add("children-disjoint-interiors", disjoint);

    // Union = phi(T+): exact area count plus containment of every child.
    std::array<Point, 3> big;
    for (int i = 0; i < 3; ++i) big[i] = apply_expansion(r, reference_triangle()[i]);
    Rat big_area2 = abs(signed_area2(big));
    Rat child_area2(0);
    bool contained = true;
    for (const auto& c : r.children) {
        auto v = tile_vertices(c);
        child_area2 += abs(signed_area2(v));
        for (const auto& p : v)
            if (!point_in_triangle(p, big)) contained = false;
    }
    add("children-area-sum", disjoint && child_area2 == big_area2,
        "sum of child areas = area of inflated tile");
    add("children-inside-inflated-tile", contained);

    bool has_identity = false;
    for (const auto& c : r.children)
        if (c.chir > 0 && c.rot == UnitRotation(Rat(1), Rat(0)) && c.trans == Point(0, 0))
            has_identity = true;
    add("identity-child-present", has_identity, "required for patch nesting");

    return rep;
}

LeveledPatch level0_patch(const SubstitutionRule& r) {
    (void)r;
    LeveledPatch p;
    p.level = 0;
    p.tiles = {TilePose{+1, UnitRotation(Rat(1), Rat(0)), Point(0, 0)}};
    p.region = reference_triangle();
    return p;
}

namespace {

LeveledPatch expand_impl(const LeveledPatch& p, const SubstitutionRule& r, bool parallel,
                         bool sorted) {
    const size_t k = r.children.size();
    LeveledPatch out;
    out.level = p.level + 1;
    out.tiles.resize(p.tiles.size() * k);
    for (int i = 0; i < 3; ++i) out.region[i] = apply_expansion(r, p.region[i]);

    const long n = static_cast<long>(p.tiles.size());
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (long i = 0; i < n; ++i) {
            auto ch = tile_children(r, p.tiles[i]);
            for (size_t s = 0; s < k; ++s) out.tiles[i * k + s] = std::move(ch[s]);
        }
    } else {
        for (long i = 0; i < n; ++i) {
            auto ch = tile_children(r, p.tiles[i]);
            for (size_t s = 0; s < k; ++s) out.tiles[i * k + s] = std::move(ch[s]);
        }
    }
    if (sorted) std::sort(out.tiles.begin(), out.tiles.end(), pose_less);
    return out;
}

}  // namespace

LeveledPatch expand(const LeveledPatch& p, const SubstitutionRule& r) {
    return expand_impl(p, r, true, true);
}

LeveledPatch expand_serial(const LeveledPatch& p, const SubstitutionRule& r) {
    return expand_impl(p, r, false, true);
}

LeveledPatch expand_with_parents(const LeveledPatch& p, const SubstitutionRule& r) {
    return expand_impl(p, r, true, false);
}

LeveledPatch make_patch(int n, const SubstitutionRule& r, int max_level) {
    if (n < 0) throw ResourceLimit("make_patch: negative level");
    if (n > max_level) {
        std::ostringstream os;
        os << "make_patch: level " << n << " exceeds configured maximum " << max_level;
        throw ResourceLimit(os.str());
    }
    LeveledPatch p = level0_patch(r);
    for (int i = 0; i < n; ++i) p = expand(p, r);
    return p;
}

size_t patch_memory_estimate(int level, const SubstitutionRule& r) {
    double tiles = 1;
    for (int i = 0; i < level; ++i) tiles *= static_cast<double>(r.children.size());
    // pose = chirality + four rationals; GMP limbs dominate
    return static_cast<size_t>(tiles * 200.0);
}

}  // namespace pin
