#include "pinwheel/cellcomplex.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include <omp.h>

#include "pinwheel/errors.hpp"

namespace pin {

namespace {

using i64 = int64_t;
using i128 = __int128;

struct IPt {
    i64 x, y;
    bool operator==(const IPt& o) const { return x == o.x && y == o.y; }
};

inline bool ipt_less(const IPt& a, const IPt& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
}

inline i128 icross(const IPt& o, const IPt& a, const IPt& b) {
    return i128(a.x - o.x) * (b.y - o.y) - i128(a.y - o.y) * (b.x - o.x);
}

inline bool strictly_inside_segment(const IPt& p, const IPt& a, const IPt& b) {
    if (p == a || p == b) return false;
    if (icross(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Union-find with an orientation parity bit on each link.
struct ParityUF {
    std::vector<int32_t> parent;
    std::vector<int8_t> par;  // parity of node relative to its parent
    bool contradiction = false;

    explicit ParityUF(size_t n) : parent(n), par(n, 0) {
        for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int32_t>(i);
    }

    int32_t find(int32_t x, int8_t& parity_out) {
        int8_t acc = 0;
        int32_t r = x;
        while (parent[r] != r) {
            acc ^= par[r];
            r = parent[r];
        }
        // path compression
        int32_t cur = x;
        int8_t cur_par = acc;
        while (parent[cur] != cur) {
            int32_t next = parent[cur];
            int8_t next_par = cur_par ^ par[cur];
            parent[cur] = r;
            par[cur] = cur_par;
            cur = next;
            cur_par = next_par;
        }
        parity_out = acc;
        return r;
    }

    // rel = 0: same orientation, 1: flipped
    void unite(int32_t a, int32_t b, int8_t rel) {
        int8_t pa, pb;
        int32_t ra = find(a, pa), rb = find(b, pb);
        if (ra == rb) {
            if ((pa ^ pb) != rel) contradiction = true;
            return;
        }
        parent[ra] = rb;
        par[ra] = pa ^ pb ^ rel;
    }

    int8_t parity_between(int32_t a, int32_t b) {
        int8_t pa, pb;
        int32_t ra = find(a, pa), rb = find(b, pb);
        (void)ra;
        (void)rb;
        return pa ^ pb;
    }
};

// Scaled integer geometry of one supertile occurrence: the constituent
// tiles' subdivision boundary data.
struct SlotGeom {
    IPt tile_verts[3];
    IPt sub[kSubVerts];
    i64 x0, y0, x1, y1;
};

i64 scaled_coord(const Rat& q, const Int& scale) {
    if (!mpz_divisible_p(scale.get_mpz_t(), den(q).get_mpz_t()))
        throw ResourceLimit("cell scan: scale does not clear a denominator");
    Int v = num(q) * (scale / den(q));
    if (!v.fits_slong_p()) throw ResourceLimit("cell scan: scaled coordinate exceeds 64 bits");
    return v.get_si();
}

// Subdivision vertices as integer affine combinations of the scaled corner
// vertices; scale must be divisible by 4.
void fill_subdivision(SlotGeom& g) {
    const IPt A = g.tile_verts[0], B = g.tile_verts[1], S = g.tile_verts[2];
    auto mix = [&](int leg_quarters, int short_quarters) {
        // point = A + (leg_quarters/4)(B-A) + (short_quarters/4)(S-B)
        return IPt{A.x + ((B.x - A.x) * leg_quarters + (S.x - B.x) * short_quarters) / 4,
                   A.y + ((B.y - A.y) * leg_quarters + (S.y - B.y) * short_quarters) / 4};
    };
    g.sub[0] = A;
    g.sub[1] = mix(1, 0);
    g.sub[2] = mix(2, 0);
    g.sub[3] = mix(3, 0);
    g.sub[4] = B;
    g.sub[5] = mix(4, 2);
    g.sub[6] = S;
    g.sub[7] = mix(3, 3);
    g.sub[8] = mix(2, 2);
    g.sub[9] = mix(1, 1);
    g.x0 = std::min({A.x, B.x, S.x});
    g.y0 = std::min({A.y, B.y, S.y});
    g.x1 = std::max({A.x, B.x, S.x});
    g.y1 = std::max({A.y, B.y, S.y});
}

SlotGeom make_slot_geom(const TilePose& pose, const Int& scale) {
    SlotGeom g;
    auto v = tile_vertices(pose);
    for (int k = 0; k < 3; ++k)
        g.tile_verts[k] = IPt{scaled_coord(v[k].x, scale), scaled_coord(v[k].y, scale)};
    fill_subdivision(g);
    return g;
}

// The relation stream produced by the scans, deduplicated per thread.
struct Relations {
    std::unordered_set<uint64_t> seen_v, seen_e;
    std::vector<std::pair<int32_t, int32_t>> vrel;
    std::vector<std::tuple<int32_t, int32_t, int8_t>> erel;

    static uint64_t pack(int32_t a, int32_t b) {
        if (a > b) std::swap(a, b);
        return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
               static_cast<uint32_t>(b);
    }

    void vertex(int32_t a, int32_t b) {
        if (a == b) return;
        if (seen_v.insert(pack(a, b)).second) vrel.emplace_back(a, b);
    }
    void edge(int32_t a, int32_t b, int8_t rel) {
        // parity is determined by geometry; dedup on the pair alone
        if (seen_e.insert(pack(a, b)).second) erel.emplace_back(a, b, rel);
    }
};

// Match coinciding boundary cells of two subdivided tiles; also guards
// simpliciality (no vertex strictly inside a boundary edge).
void match_cells(const SlotGeom& a, int32_t a_vbase, int32_t a_ebase, const SlotGeom& b,
                 int32_t b_vbase, int32_t b_ebase, Relations& rel, bool& simplicial_ok) {
    const auto& ref = SubdivisionRef::instance();
    for (int u = 0; u < kSubVerts; ++u)
        for (int w = 0; w < kSubVerts; ++w)
            if (a.sub[u] == b.sub[w]) rel.vertex(a_vbase + u, b_vbase + w);

    for (int ea = 0; ea < kSubBoundaryEdges; ++ea) {
        const IPt& pa = a.sub[ref.edges[ea].first];
        const IPt& qa = a.sub[ref.edges[ea].second];
        for (int eb = 0; eb < kSubBoundaryEdges; ++eb) {
            const IPt& pb = b.sub[ref.edges[eb].first];
            const IPt& qb = b.sub[ref.edges[eb].second];
            if (pa == pb && qa == qb)
                rel.edge(a_ebase + ea, b_ebase + eb, 0);
            else if (pa == qb && qa == pb)
                rel.edge(a_ebase + ea, b_ebase + eb, 1);
        }
    }

    // T-junction guard at subdivision scale.
    for (int u = 0; u < kSubVerts; ++u) {
        for (int eb = 0; eb < kSubBoundaryEdges; ++eb) {
            const IPt& pb = b.sub[ref.edges[eb].first];
            const IPt& qb = b.sub[ref.edges[eb].second];
            if (strictly_inside_segment(a.sub[u], pb, qb)) simplicial_ok = false;
        }
        for (int ea = 0; ea < kSubBoundaryEdges; ++ea) {
            const IPt& pa = a.sub[ref.edges[ea].first];
            const IPt& qa = a.sub[ref.edges[ea].second];
            if (strictly_inside_segment(b.sub[u], pa, qa)) simplicial_ok = false;
        }
    }
}

struct Partition {
    std::vector<int32_t> vertex_class;
    std::vector<int32_t> edge_class;
    std::vector<int8_t> edge_dir;
    size_t n_vertices = 0, n_edges = 0;
};

// One full gluing pass at parent level m. Returns the canonical partition.
Partition glue_pass(const Enumeration& e, const SubstitutionRule& r, int grouping_level,
                    int scan_level, bool parallel) {
    const size_t n_classes = e.classes.size();
    size_t tiles_per_class = 1;
    for (int i = 0; i < grouping_level; ++i) tiles_per_class *= r.children.size();

    const size_t n_v_slots = n_classes * tiles_per_class * kSubVerts;
    const size_t n_e_slots = n_classes * tiles_per_class * kSubEdges;

    // Per-class local geometry (the supertile of the class representative),
    // used for the intra-supertile identifications.
    const Int local_scale = [&] {
        Int s = 4;
        Rat e2 = norm2(r.expansion);
        for (int i = 0; i < grouping_level; ++i) s *= num(e2) * den(e2);
        return s;
    }();

    ParityUF vuf(n_v_slots), euf(n_e_slots);
    bool simplicial_ok = true;

    auto vbase = [&](size_t c, size_t t) {
        return static_cast<int32_t>((c * tiles_per_class + t) * kSubVerts);
    };
    auto ebase = [&](size_t c, size_t t) {
        return static_cast<int32_t>((c * tiles_per_class + t) * kSubEdges);
    };

    {
        Relations rel;
        for (size_t c = 0; c < n_classes; ++c) {
            std::vector<TilePose> tiles = {e.classes[c].rep.center};
            for (int step = 0; step < grouping_level; ++step) {
                std::vector<TilePose> next;
                next.reserve(tiles.size() * r.children.size());
                for (const auto& t : tiles) {
                    auto ch = tile_children(r, t);
                    next.insert(next.end(), ch.begin(), ch.end());
                }
                tiles = std::move(next);
            }
            std::vector<SlotGeom> geo(tiles.size());
            for (size_t t = 0; t < tiles.size(); ++t) geo[t] = make_slot_geom(tiles[t], local_scale);
            for (size_t t1 = 0; t1 < tiles.size(); ++t1)
                for (size_t t2 = t1 + 1; t2 < tiles.size(); ++t2) {
                    if (geo[t1].x1 < geo[t2].x0 || geo[t2].x1 < geo[t1].x0 ||
                        geo[t1].y1 < geo[t2].y0 || geo[t2].y1 < geo[t1].y0)
                        continue;
                    match_cells(geo[t1], vbase(c, t1), ebase(c, t1), geo[t2], vbase(c, t2),
                                ebase(c, t2), rel, simplicial_ok);
                }
        }
        for (const auto& [a, b] : rel.vrel) vuf.unite(a, b, 0);
        for (const auto& [a, b, p] : rel.erel) euf.unite(a, b, p);
    }

    // Occurrence scan: adjacent certified parents at level scan_level.
    LeveledPatch parents = make_patch(scan_level, r, std::max(scan_level, 9));
    PatchClassification cls = classify_patch(parents, e, parallel);

    // Scaled frame shared by every descendant: parent denominators times the
    // per-level growth bound, times 4 for the subdivision.
    Int scan_scale = 4;
    {
        Int lcm_parent = 1;
        for (const auto& t : parents.tiles) {
            for (const auto& q : {t.rot.c, t.rot.s, t.trans.x, t.trans.y})
                mpz_lcm(lcm_parent.get_mpz_t(), lcm_parent.get_mpz_t(), den(q).get_mpz_t());
        }
        Int growth = 1;
        Rat e2 = norm2(r.expansion);
        Int per_level = num(e2) * den(e2) * den(r.expansion.x) * den(r.expansion.y);
        for (int i = 0; i < grouping_level; ++i) growth *= per_level;
        scan_scale *= lcm_parent * growth;
    }

    // Descendant geometry per certified parent.
    const long n_parents = static_cast<long>(parents.tiles.size());
    std::vector<std::vector<SlotGeom>> desc(parents.tiles.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (long i = 0; i < n_parents; ++i) {
        if (cls.class_of_tile[i] < 0) continue;
        std::vector<TilePose> tiles = {parents.tiles[i]};
        for (int step = 0; step < grouping_level; ++step) {
            std::vector<TilePose> next;
            next.reserve(tiles.size() * r.children.size());
            for (const auto& t : tiles) {
                auto ch = tile_children(r, t);
                next.insert(next.end(), ch.begin(), ch.end());
            }
            tiles = std::move(next);
        }
        auto& out = desc[i];
        out.resize(tiles.size());
        for (size_t t = 0; t < tiles.size(); ++t) out[t] = make_slot_geom(tiles[t], scan_scale);
    }

    const int threads = parallel ? omp_get_max_threads() : 1;
    std::vector<Relations> rels(threads);
    bool simp_ok_shared = simplicial_ok;

#pragma omp parallel for schedule(dynamic, 32) num_threads(threads) \
    reduction(&& : simp_ok_shared) if (parallel)
    for (long i = 0; i < n_parents; ++i) {
        if (cls.class_of_tile[i] < 0) continue;
        int tid = omp_get_thread_num();
        const size_t ci = cls.class_of_tile[i];
        for (int32_t j : cls.neighbors[i]) {
            if (j <= i || cls.class_of_tile[j] < 0) continue;
            const size_t cj = cls.class_of_tile[j];
            bool ok = true;
            for (size_t ta = 0; ta < desc[i].size(); ++ta) {
                const auto& ga = desc[i][ta];
                for (size_t tb = 0; tb < desc[j].size(); ++tb) {
                    const auto& gb = desc[j][tb];
                    if (ga.x1 < gb.x0 || gb.x1 < ga.x0 || ga.y1 < gb.y0 || gb.y1 < ga.y0)
                        continue;
                    match_cells(ga, vbase(ci, ta), ebase(ci, ta), gb, vbase(cj, tb),
                                ebase(cj, tb), rels[tid], ok);
                }
            }
            simp_ok_shared = simp_ok_shared && ok;
        }
    }

    if (!simp_ok_shared)
        throw NonSimplicialAdjacency("cell scan found a vertex inside an edge interior");

    for (const auto& rel : rels) {
        for (const auto& [a, b] : rel.vrel) vuf.unite(a, b, 0);
        for (const auto& [a, b, p] : rel.erel) euf.unite(a, b, p);
    }
    if (euf.contradiction)
        throw NonSimplicialAdjacency("edge glued to itself with reversed orientation");

    // Canonical ids: classes numbered by their smallest member slot.
    Partition part;
    part.vertex_class.assign(n_v_slots, -1);
    part.edge_class.assign(n_e_slots, -1);
    part.edge_dir.assign(n_e_slots, 0);

    std::vector<int32_t> root_to_id(n_v_slots, -1);
    int32_t next_id = 0;
    int8_t par;
    for (size_t s = 0; s < n_v_slots; ++s) {
        int32_t rt = vuf.find(static_cast<int32_t>(s), par);
        if (root_to_id[rt] < 0) root_to_id[rt] = next_id++;
        part.vertex_class[s] = root_to_id[rt];
    }
    part.n_vertices = next_id;

    std::vector<int32_t> eroot_to_id(n_e_slots, -1);
    std::vector<int32_t> eclass_rep;  // canonical representative slot per class
    next_id = 0;
    for (size_t s = 0; s < n_e_slots; ++s) {
        int32_t rt = euf.find(static_cast<int32_t>(s), par);
        if (eroot_to_id[rt] < 0) {
            eroot_to_id[rt] = next_id++;
            eclass_rep.push_back(static_cast<int32_t>(s));
        }
        part.edge_class[s] = eroot_to_id[rt];
    }
    part.n_edges = next_id;

    // Class direction: from the smaller endpoint vertex class to the larger,
    // read off the canonical representative; representative order for loops.
    const auto& ref = SubdivisionRef::instance();
    std::vector<int8_t> rep_flip(part.n_edges, 0);  // 1 if class dir = rep hi->lo
    for (size_t ec = 0; ec < part.n_edges; ++ec) {
        int32_t rep = eclass_rep[ec];
        int le = rep % kSubEdges;
        int32_t base = rep - le;
        int32_t vbase_of_rep = (base / kSubEdges) * kSubVerts;
        int32_t u = part.vertex_class[vbase_of_rep + ref.edges[le].first];
        int32_t w = part.vertex_class[vbase_of_rep + ref.edges[le].second];
        rep_flip[ec] = (u > w) ? 1 : 0;
    }
    for (size_t s = 0; s < n_e_slots; ++s) {
        int32_t ec = part.edge_class[s];
        int8_t p = euf.parity_between(static_cast<int32_t>(s), eclass_rep[ec]);
        part.edge_dir[s] = ((p ^ rep_flip[ec]) == 0) ? +1 : -1;
    }
    return part;
}

}  // namespace

std::vector<TilePose> CellComplex::class_tiles(size_t c, const Enumeration& e,
                                               const SubstitutionRule& r) const {
    std::vector<TilePose> tiles = {e.classes[c].rep.center};
    for (int step = 0; step < grouping_level; ++step) {
        std::vector<TilePose> next;
        next.reserve(tiles.size() * r.children.size());
        for (const auto& t : tiles) {
            auto ch = tile_children(r, t);
            next.insert(next.end(), ch.begin(), ch.end());
        }
        tiles = std::move(next);
    }
    return tiles;
}

CellComplex build_complex(const Enumeration& e, const SubstitutionRule& r,
                          const ComplexBuildOptions& opt) {
    int scan_level = opt.scan_level;
    if (scan_level < 0) {
        // first level at which the complete class set was certified
        for (const auto& [lvl, count] : e.level_history)
            if (count == e.classes.size()) {
                scan_level = lvl;
                break;
            }
        if (scan_level < 0) throw IncompleteEnumeration("build_complex: enumeration incomplete");
    }

    Partition part = glue_pass(e, r, opt.grouping_level, scan_level, opt.parallel);
    if (opt.verify_stable) {
        Partition deeper = glue_pass(e, r, opt.grouping_level, scan_level + 1, opt.parallel);
        if (deeper.vertex_class != part.vertex_class || deeper.edge_class != part.edge_class ||
            deeper.edge_dir != part.edge_dir) {
            std::ostringstream os;
            os << "cell partition not stable between scan levels " << scan_level << " and "
               << scan_level + 1;
            throw NonSimplicialAdjacency(os.str());
        }
    }

    CellComplex c;
    c.grouping_level = opt.grouping_level;
    c.n_classes = e.classes.size();
    c.tiles_per_class = 1;
    for (int i = 0; i < opt.grouping_level; ++i) c.tiles_per_class *= r.children.size();
    c.scan_level = scan_level;
    c.vertex_class = std::move(part.vertex_class);
    c.edge_class = std::move(part.edge_class);
    c.edge_dir = std::move(part.edge_dir);
    c.n_vertices = part.n_vertices;
    c.n_edges = part.n_edges;
    c.n_faces = c.n_classes * c.tiles_per_class * kSubTris;

    const auto& ref = SubdivisionRef::instance();

    // boundary of an edge class, read off its first slot
    c.boundary1.rows = c.n_vertices;
    c.boundary1.cols = c.n_edges;
    {
        std::vector<bool> seen(c.n_edges, false);
        for (size_t s = 0; s < c.edge_class.size(); ++s) {
            int32_t ec = c.edge_class[s];
            if (seen[ec]) continue;
            seen[ec] = true;
            int le = static_cast<int>(s % kSubEdges);
            size_t vb = (s / kSubEdges) * kSubVerts;
            int32_t u = c.vertex_class[vb + ref.edges[le].first];
            int32_t w = c.vertex_class[vb + ref.edges[le].second];
            if (c.edge_dir[s] < 0) std::swap(u, w);  // class dir: u -> w
            c.boundary1.add(w, ec, +1);
            c.boundary1.add(u, ec, -1);
        }
        c.boundary1.coalesce();
    }

    c.boundary2.rows = c.n_edges;
    c.boundary2.cols = c.n_faces;
    for (size_t cc = 0; cc < c.n_classes; ++cc) {
        for (size_t t = 0; t < c.tiles_per_class; ++t) {
            for (int k = 0; k < kSubTris; ++k) {
                size_t face = c.face_index(cc, t, k);
                for (const auto& [le, trav] : ref.tri_edges[k]) {
                    size_t slot = c.edge_slot(cc, t, le);
                    c.boundary2.add(c.edge_class[slot], static_cast<int32_t>(face),
                                    trav * c.edge_dir[slot]);
                }
            }
        }
    }
    c.boundary2.coalesce();

    if (!is_zero(mul(c.boundary1, c.boundary2)))
        throw NonCellular("boundary1 * boundary2 != 0");

    // connectivity via the 1-skeleton
    {
        std::vector<int32_t> uf(c.n_vertices);
        for (size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int32_t>(i);
        std::function<int32_t(int32_t)> find = [&](int32_t x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        std::vector<std::pair<int32_t, int32_t>> ends(c.n_edges, {-1, -1});
        for (const auto& en : c.boundary1.entries) {
            if (en.val > 0)
                ends[en.col].first = en.row;
            else
                ends[en.col].second = en.row;
        }
        for (size_t s = 0; s < c.edge_class.size(); ++s) {
            // loops have cancelled boundary entries; connect via slot endpoints
            int le = static_cast<int>(s % kSubEdges);
            size_t vb = (s / kSubEdges) * kSubVerts;
            int32_t u = c.vertex_class[vb + ref.edges[le].first];
            int32_t w = c.vertex_class[vb + ref.edges[le].second];
            int32_t ru = find(u), rw = find(w);
            if (ru != rw) uf[ru] = rw;
        }
        size_t comps = 0;
        for (size_t i = 0; i < uf.size(); ++i)
            if (find(static_cast<int32_t>(i)) == static_cast<int32_t>(i)) ++comps;
        c.connected = comps == 1;
    }
    return c;
}

}  // namespace pin
