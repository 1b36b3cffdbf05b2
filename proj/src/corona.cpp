#include "pinwheel/corona.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <unordered_map>

#include <omp.h>

#include "pinwheel/errors.hpp"

namespace pin {

namespace {

// ---- integer-scaled geometry for the patch scans ----
// Patch coordinates have a common denominator (5^n for the built-in rule);
// clearing it lets every predicate run on int64 with __int128 products.

using i64 = int64_t;
using i128 = __int128;

struct IPt {
    i64 x, y;
    bool operator==(const IPt& o) const { return x == o.x && y == o.y; }
};

inline i128 icross(const IPt& o, const IPt& a, const IPt& b) {
    return i128(a.x - o.x) * (b.y - o.y) - i128(a.y - o.y) * (b.x - o.x);
}

inline bool on_segment(const IPt& p, const IPt& a, const IPt& b) {
    if (icross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

inline bool seg_intersect(const IPt& a, const IPt& b, const IPt& c, const IPt& d) {
    i128 d1 = icross(c, d, a), d2 = icross(c, d, b);
    i128 d3 = icross(a, b, c), d4 = icross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && on_segment(a, c, d)) return true;
    if (d2 == 0 && on_segment(b, c, d)) return true;
    if (d3 == 0 && on_segment(c, a, b)) return true;
    if (d4 == 0 && on_segment(d, a, b)) return true;
    return false;
}

using ITri = std::array<IPt, 3>;

inline bool point_in(const IPt& p, const ITri& t, int sgn_area) {
    for (int i = 0; i < 3; ++i) {
        i128 c = icross(t[i], t[(i + 1) % 3], p);
        if (sgn_area > 0 ? c < 0 : c > 0) return false;
    }
    return true;
}

inline bool tri_intersect(const ITri& a, int sa, const ITri& b, int sb) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (seg_intersect(a[i], a[(i + 1) % 3], b[j], b[(j + 1) % 3])) return true;
    return point_in(a[0], b, sb) || point_in(b[0], a, sa);
}

struct IBox {
    i64 x0, y0, x1, y1;
    bool disjoint(const IBox& o) const {
        return o.x0 > x1 || o.x1 < x0 || o.y0 > y1 || o.y1 < y0;
    }
};

i64 to_scaled(const Rat& q, const Int& scale) {
    if (!mpz_divisible_p(scale.get_mpz_t(), den(q).get_mpz_t()))
        throw ResourceLimit("scale does not clear a denominator");
    Int v = num(q) * (scale / den(q));
    if (!v.fits_slong_p()) throw ResourceLimit("scaled coordinate exceeds 64 bits");
    long out = v.get_si();
    return out;
}

struct ScaledPatch {
    Int scale;
    std::vector<ITri> tri;
    std::vector<int> sgn_area;
    std::vector<IBox> box;
    std::array<IPt, 3> region;
    i64 cell = 1;
    std::unordered_map<uint64_t, std::vector<int32_t>> grid;

    static uint64_t gkey(i64 gx, i64 gy) {
        return (static_cast<uint64_t>(gx) << 32) ^ (static_cast<uint64_t>(gy) & 0xffffffffu);
    }

    explicit ScaledPatch(const LeveledPatch& p) {
        scale = 1;
        auto fold = [this](const Rat& q) {
            Int d = den(q);
            Int g;
            mpz_lcm(g.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
            scale = g;
        };
        std::vector<std::array<Point, 3>> verts(p.tiles.size());
        for (size_t i = 0; i < p.tiles.size(); ++i) {
            verts[i] = tile_vertices(p.tiles[i]);
            for (const auto& v : verts[i]) {
                fold(v.x);
                fold(v.y);
            }
        }
        for (const auto& v : p.region) {
            fold(v.x);
            fold(v.y);
        }

        tri.resize(p.tiles.size());
        sgn_area.resize(p.tiles.size());
        box.resize(p.tiles.size());
        for (size_t i = 0; i < p.tiles.size(); ++i) {
            for (int k = 0; k < 3; ++k)
                tri[i][k] = IPt{to_scaled(verts[i][k].x, scale), to_scaled(verts[i][k].y, scale)};
            sgn_area[i] = p.tiles[i].chir;
            box[i] = IBox{std::min({tri[i][0].x, tri[i][1].x, tri[i][2].x}),
                          std::min({tri[i][0].y, tri[i][1].y, tri[i][2].y}),
                          std::max({tri[i][0].x, tri[i][1].x, tri[i][2].x}),
                          std::max({tri[i][0].y, tri[i][1].y, tri[i][2].y})};
        }
        for (int k = 0; k < 3; ++k)
            region[k] = IPt{to_scaled(p.region[k].x, scale), to_scaled(p.region[k].y, scale)};

        // Tiles have diameter sqrt(5); cells of 4 units keep buckets small.
        Int c4 = scale * 4;
        cell = c4.fits_slong_p() ? c4.get_si() : std::numeric_limits<i64>::max() / 4;
        for (size_t i = 0; i < tri.size(); ++i) {
            for (i64 gx = floordiv(box[i].x0); gx <= floordiv(box[i].x1); ++gx)
                for (i64 gy = floordiv_y(box[i].y0); gy <= floordiv_y(box[i].y1); ++gy)
                    grid[gkey(gx, gy)].push_back(static_cast<int32_t>(i));
        }
    }

    i64 floordiv(i64 v) const { return v >= 0 ? v / cell : -((-v + cell - 1) / cell); }
    i64 floordiv_y(i64 v) const { return floordiv(v); }

    std::vector<int32_t> neighbors_of(size_t i) const {
        std::vector<int32_t> out;
        for (i64 gx = floordiv(box[i].x0); gx <= floordiv(box[i].x1); ++gx) {
            for (i64 gy = floordiv(box[i].y0); gy <= floordiv(box[i].y1); ++gy) {
                auto it = grid.find(gkey(gx, gy));
                if (it == grid.end()) continue;
                for (int32_t j : it->second) {
                    if (j == static_cast<int32_t>(i)) continue;
                    if (box[i].disjoint(box[j])) continue;
                    out.push_back(j);
                }
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        std::vector<int32_t> hits;
        for (int32_t j : out)
            if (tri_intersect(tri[i], sgn_area[i], tri[j], sgn_area[j])) hits.push_back(j);
        return hits;
    }

    bool touches_region_boundary(size_t i) const {
        for (const auto& v : tri[i])
            for (int k = 0; k < 3; ++k)
                if (on_segment(v, region[k], region[(k + 1) % 3])) return true;
        return false;
    }
};

Corona make_normalized_corona(const Patch& tiles, size_t center,
                              const std::vector<int32_t>& neighbor_idx) {
    Isometry g = anchor_normalizer(tiles[center]);
    Corona c;
    c.center = transform(g, tiles[center]);
    c.neighbors.reserve(neighbor_idx.size());
    for (int32_t j : neighbor_idx) c.neighbors.push_back(transform(g, tiles[j]));
    std::sort(c.neighbors.begin(), c.neighbors.end(), pose_less);
    Patch whole = c.as_patch();
    c.key = canonical_key(whole, 0);
    return c;
}

}  // namespace

Patch Corona::as_patch() const {
    Patch p;
    p.reserve(neighbors.size() + 1);
    p.push_back(center);
    for (const auto& t : neighbors) p.push_back(t);
    return p;
}

Corona first_corona(const LeveledPatch& p, size_t tile_index) {
    if (tile_index >= p.tiles.size()) throw std::out_of_range("first_corona: bad tile index");
    ScaledPatch sp(p);
    auto nb = sp.neighbors_of(tile_index);
    if (sp.touches_region_boundary(tile_index))
        throw BoundaryUncertain("first_corona: center tile touches the region boundary");
    for (int32_t j : nb)
        if (sp.touches_region_boundary(j))
            throw BoundaryUncertain("first_corona: corona tile touches the region boundary");
    return make_normalized_corona(p.tiles, tile_index, nb);
}

int Enumeration::id_of_key(const std::string& key) const {
    const auto& idx = key_index();
    auto it = idx.find(key);
    return it == idx.end() ? -1 : it->second;
}

const std::map<std::string, int>& Enumeration::key_index() const {
    if (key_index_.empty() && !classes.empty())
        for (const auto& c : classes) key_index_[c.rep.key] = c.id;
    return key_index_;
}

namespace {

std::map<std::string, Corona> scan_level(const LeveledPatch& p, bool collared, bool parallel,
                                         size_t* certified_out) {
    ScaledPatch sp(p);
    const long n = static_cast<long>(p.tiles.size());
    size_t certified = 0;

    std::map<std::string, Corona> found;
    int threads = parallel ? omp_get_max_threads() : 1;
    std::vector<std::map<std::string, Corona>> local(threads);
    std::vector<size_t> local_cert(threads, 0);

#pragma omp parallel for schedule(dynamic, 64) num_threads(threads) if (parallel)
    for (long i = 0; i < n; ++i) {
        int tid = omp_get_thread_num();
        auto nb = sp.neighbors_of(i);
        bool ok = !sp.touches_region_boundary(i);
        if (ok)
            for (int32_t j : nb)
                if (sp.touches_region_boundary(j)) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        ++local_cert[tid];
        Corona c = collared ? make_normalized_corona(p.tiles, i, nb)
                            : make_normalized_corona(p.tiles, i, {});
        local[tid].emplace(c.key, std::move(c));
    }

    for (int t = 0; t < threads; ++t) {
        certified += local_cert[t];
        for (auto& [k, c] : local[t]) found.emplace(k, std::move(c));
    }
    if (certified_out) *certified_out = certified;
    return found;
}

// Children of the representative center, classified inside the expanded
// corona patch. The substituted corona contains the full corona of every
// child of the center, so no boundary certificate is needed.
std::vector<std::string> child_corona_keys(const Corona& rep, const SubstitutionRule& r,
                                           bool collared) {
    Patch base = rep.as_patch();
    Patch expanded;
    expanded.reserve(base.size() * r.children.size());
    for (const auto& t : base) {
        auto ch = tile_children(r, t);
        expanded.insert(expanded.end(), ch.begin(), ch.end());
    }
    // children of the center occupy the first table-order slots
    std::vector<std::string> keys;
    for (size_t s = 0; s < r.children.size(); ++s)
        keys.push_back(corona_key_in(expanded, s, collared));
    return keys;
}

bool closure_holds(const std::map<std::string, Corona>& classes, const SubstitutionRule& r,
                   bool collared) {
    for (const auto& [key, rep] : classes)
        for (const auto& ck : child_corona_keys(rep, r, collared))
            if (!classes.count(ck)) return false;
    return true;
}

}  // namespace

std::string corona_key_in(const Patch& tiles, size_t tile_index, bool collared) {
    std::vector<int32_t> nb;
    if (collared) {
        auto vi = tile_vertices(tiles[tile_index]);
        for (size_t j = 0; j < tiles.size(); ++j) {
            if (j == tile_index) continue;
            if (triangles_intersect(vi, tile_vertices(tiles[j])))
                nb.push_back(static_cast<int32_t>(j));
        }
    }
    return make_normalized_corona(tiles, tile_index, nb).key;
}

Enumeration enumerate_collared(const SubstitutionRule& r, const EnumerationOptions& opt) {
    Enumeration out;
    out.collared = opt.collared;

    std::map<std::string, Corona> prev, cur;
    LeveledPatch patch = make_patch(std::max(opt.scan_level_start - 1, 0), r, opt.max_level);
    if (patch.level >= 1) prev = scan_level(patch, opt.collared, opt.parallel, nullptr);

    for (int n = opt.scan_level_start; n <= opt.max_level; ++n) {
        while (patch.level < n) patch = expand(patch, r);
        size_t cert = 0;
        cur = scan_level(patch, opt.collared, opt.parallel, &cert);
        out.level_history.emplace_back(n, cur.size());

        bool same_keys = cur.size() == prev.size() && !cur.empty();
        if (same_keys)
            for (auto a = cur.begin(), b = prev.begin(); a != cur.end(); ++a, ++b)
                if (a->first != b->first) {
                    same_keys = false;
                    break;
                }

        if (same_keys && closure_holds(cur, r, opt.collared)) {
            out.stabilized_level = n;
            out.closure_certified = true;
            break;
        }
        prev = std::move(cur);
        cur.clear();
    }

    if (!out.closure_certified) {
        std::ostringstream os;
        os << "enumerate_collared: no stabilization+closure by level " << opt.max_level;
        throw NonStabilized(os.str());
    }

    int id = 0;
    for (auto& [key, rep] : cur) {
        CollaredClass c;
        c.id = id++;
        c.chir = rep.center.chir;
        c.rep = rep;
        out.classes.push_back(std::move(c));
    }

    // mirror pairing: reflect the representative and look its key up
    for (auto& c : out.classes) {
        Patch m = mirror(c.rep.as_patch());
        std::string mkey = canonical_key(m, 0);
        c.mirror_id = out.id_of_key(mkey);
        if (c.mirror_id < 0)
            throw IncompleteEnumeration("mirror class missing from enumeration");
    }
    for (const auto& c : out.classes) {
        if (out.classes[c.mirror_id].mirror_id != c.id)
            throw IncompleteEnumeration("mirror pairing is not an involution");
        if (opt.collared && c.mirror_id == c.id)
            throw IncompleteEnumeration("self-mirrored collared class");
    }
    return out;
}

std::array<int, 5> collared_children(const CollaredClass& c, const Enumeration& e,
                                     const SubstitutionRule& r) {
    if (r.children.size() != 5)
        throw std::invalid_argument("collared_children: rule must have 5 children");
    auto keys = child_corona_keys(c.rep, r, e.collared);
    std::array<int, 5> out{};
    for (size_t s = 0; s < 5; ++s) {
        int id = e.id_of_key(keys[s]);
        if (id < 0) {
            std::ostringstream os;
            os << "collared_children: child " << s << " of class " << c.id
               << " falls outside the enumerated set";
            throw IncompleteEnumeration(os.str());
        }
        out[s] = id;
    }
    return out;
}

PatchClassification classify_patch(const LeveledPatch& p, const Enumeration& e, bool parallel) {
    ScaledPatch sp(p);
    const auto& index = e.key_index();  // built before the parallel region
    const long n = static_cast<long>(p.tiles.size());
    PatchClassification out;
    out.class_of_tile.assign(n, -1);
    out.neighbors.resize(n);
    size_t certified = 0;
    bool unknown_class = false;

#pragma omp parallel for schedule(dynamic, 64) reduction(+ : certified) \
    reduction(|| : unknown_class) if (parallel)
    for (long i = 0; i < n; ++i) {
        auto nb = sp.neighbors_of(i);
        out.neighbors[i] = nb;
        bool ok = !sp.touches_region_boundary(i);
        if (ok)
            for (int32_t j : nb)
                if (sp.touches_region_boundary(j)) {
                    ok = false;
                    break;
                }
        if (!ok) continue;
        Corona c = e.collared ? make_normalized_corona(p.tiles, i, nb)
                              : make_normalized_corona(p.tiles, i, {});
        auto it = index.find(c.key);
        if (it == index.end()) {
            unknown_class = true;
            continue;
        }
        out.class_of_tile[i] = it->second;
        ++certified;
    }
    if (unknown_class)
        throw IncompleteEnumeration("classify_patch: certified corona outside the enumerated set");
    out.certified = certified;
    return out;
}

}  // namespace pin
