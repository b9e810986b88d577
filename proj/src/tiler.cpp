#include "rectile/tiler.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace rectile {

std::vector<Rect> Tiling::sorted_tiles() const {
    std::vector<Rect> ts = tiles;
    std::sort(ts.begin(), ts.end(), [](const Rect& a, const Rect& b) {
        if (a.x0 != b.x0) return a.x0 < b.x0;
        if (a.y0 != b.y0) return a.y0 < b.y0;
        if (a.x1 != b.x1) return a.x1 < b.x1;
        return a.y1 < b.y1;
    });
    return ts;
}

uint64_t Tiling::hash() const {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= '|';
        h *= 1099511628211ull;
    };
    for (const Rect& r : sorted_tiles()) {
        mix(r.x0.str());
        mix(r.y0.str());
        mix(r.x1.str());
        mix(r.y1.str());
    }
    return h;
}

std::string reason_text(UntileableReason r) {
    switch (r) {
        case UntileableReason::NullBoundaryFails: return "null-boundary fails";
        case UntileableReason::HeightMismatchOnCut: return "height mismatch on cut";
        case UntileableReason::MaxEdgeNotInteger: return "max edge not integer";
    }
    return "?";
}

namespace {

struct InwardInfo {
    Axis perp;     // axis of the inward step letter
    int sign;      // inward direction sign along perp
    Rat fixed;     // coordinate of the line containing s
    Rat lo, hi;    // span of s along its own axis
};

InwardInfo inward_of(const Edge& s) {
    InwardInfo w;
    w.perp = other(s.axis);
    if (s.axis == Axis::H) {
        w.fixed = s.a.y;
        w.lo = rat_min(s.a.x, s.b.x);
        w.hi = rat_max(s.a.x, s.b.x);
        w.sign = s.delta.is_positive() ? 1 : -1; // interior is on the left
    } else {
        w.fixed = s.a.x;
        w.lo = rat_min(s.a.y, s.b.y);
        w.hi = rat_max(s.a.y, s.b.y);
        w.sign = s.delta.is_positive() ? -1 : 1;
    }
    return w;
}

Rect rect_from_edge(const Edge& s, const Rat& r) {
    InwardInfo w = inward_of(s);
    Rat near = w.fixed, far = w.fixed + Rat(w.sign) * r;
    Rat p0 = rat_min(near, far), p1 = rat_max(near, far);
    if (s.axis == Axis::H) return Rect{w.lo, p0, w.hi, p1};
    return Rect{p0, w.lo, p1, w.hi};
}

// First inward offset at which a boundary edge parallel to s overlaps the
// open span of s (the obstruction rule).
Rat obstruction_distance(const RectilinearPolygon& comp, const Edge& s) {
    InwardInfo w = inward_of(s);
    std::optional<Rat> best;
    for (const Edge& e : comp.edges()) {
        if (e.axis != s.axis) continue;
        Rat efixed = s.axis == Axis::H ? e.a.y : e.a.x;
        Rat elo = s.axis == Axis::H ? rat_min(e.a.x, e.b.x) : rat_min(e.a.y, e.b.y);
        Rat ehi = s.axis == Axis::H ? rat_max(e.a.x, e.b.x) : rat_max(e.a.y, e.b.y);
        Rat off = (efixed - w.fixed) * Rat(w.sign);
        if (!off.is_positive()) continue;
        if (elo < w.hi && ehi > w.lo) {
            if (!best || off < *best) best = off;
        }
    }
    if (!best) throw RectileError("Internal", "no obstruction found for swept strip");
    return *best;
}

} // namespace

PlacementStep place_max_edge_rect(const RectilinearPolygon& comp, const GroupWord& bp_prefix,
                                  const BoundaryHeights& bh, const HeightContext& ctx) {
    std::optional<size_t> chosen;
    for (size_t i : bh.argmax_edges) {
        if (comp.edge(i).length().is_integer()) {
            chosen = i;
            break;
        }
    }
    if (!chosen)
        throw RectileError("MaxEdgeNotInteger", "no maximal-height edge has integral length");

    size_t s_idx = *chosen;
    Edge s = comp.edge(s_idx);
    InwardInfo w = inward_of(s);
    Rat r2 = obstruction_distance(comp, s);

    GroupWord prefix_s = concat(bp_prefix, comp.prefix_at(s_idx, Rat(0)));
    // prefix_at with offset 0 appends a zero letter; equal to the vertex word.
    long M = bh.max_height;

    // Smallest r on the refined grid for which every point of the opposite
    // edge s' sits strictly below the maximum. Heights on s' depend on r
    // only through its residue class, so verdicts are memoized per class.
    const long twoL = 2 * ctx.L;
    std::map<long, bool> class_ok;
    std::optional<Rat> r1;
    for (long j = 1;; ++j) {
        Rat cand(j, twoL);
        if (cand > r2) break;
        long cls = j % twoL;
        auto it = class_ok.find(cls);
        bool ok;
        if (it != class_ok.end()) {
            ok = it->second;
        } else {
            GroupWord start = prefix_s.appended(w.perp, Rat(w.sign) * cand);
            long corner = point_height(start, ctx);
            EdgeProfile prof = edge_profile(start, s.axis, s.delta, ctx);
            ok = corner < M && prof.generic_height < M;
            class_ok[cls] = ok;
        }
        if (ok) {
            r1 = cand;
            break;
        }
    }

    PlacementStep step;
    step.edge_index = s_idx;
    step.edge_length = s.length();
    if (r1 && *r1 <= r2) {
        step.r = *r1;
        step.rule = 1;
    } else {
        step.r = r2;
        step.rule = 2;
        Edge sprime{s.a, s.b, s.axis, s.delta};
        Point a = s.a, b = s.b;
        if (w.perp == Axis::H) {
            a.x += Rat(w.sign) * r2;
            b.x += Rat(w.sign) * r2;
        } else {
            a.y += Rat(w.sign) * r2;
            b.y += Rat(w.sign) * r2;
        }
        Rat contact = comp.boundary_overlap_length(a, b);
        step.contact_integer = contact.is_integer() && contact.is_positive();
    }
    step.rect = rect_from_edge(s, step.r);
    return step;
}

Tiling trivial_tile(const RectilinearPolygon& p) {
    for (const Edge& e : p.edges())
        if (!e.length().is_integer())
            throw RectileError("NonIntegerEdge", "trivial_tile requires integral edge lengths");

    Rat x0, y0, x1, y1;
    p.bbox(x0, y0, x1, y1);
    Tiling t;
    t.region = p;
    for (Rat level = y0; level < y1; level += Rat(1)) {
        Rat mid = level + Rat(1, 2);
        std::vector<Rat> xs;
        for (const Edge& e : p.edges()) {
            if (e.axis != Axis::V) continue;
            Rat lo = rat_min(e.a.y, e.b.y), hi = rat_max(e.a.y, e.b.y);
            if (lo < mid && mid < hi) xs.push_back(e.a.x);
        }
        std::sort(xs.begin(), xs.end(), [](const Rat& a, const Rat& b) { return a < b; });
        if (xs.size() % 2 != 0) throw RectileError("Internal", "odd crossing count in slab cut");
        for (size_t i = 0; i + 1 < xs.size(); i += 2)
            t.tiles.push_back(Rect{xs[i], level, xs[i + 1], level + Rat(1)});
    }
    return t;
}

VerifyResult verify_tiling(const Tiling& t) {
    VerifyResult res;
    auto bad = [&](const std::string& d) {
        res.ok = false;
        res.diagnostic = d;
        return res;
    };
    Rat total;
    for (size_t i = 0; i < t.tiles.size(); ++i) {
        const Rect& a = t.tiles[i];
        if (!(a.x0 < a.x1 && a.y0 < a.y1)) return bad("tile " + std::to_string(i) + " is degenerate");
        if (!t.region.contains_rect(a)) return bad("tile " + std::to_string(i) + " leaves the region");
        Rat ws = a.width() / t.scale, hs = a.height() / t.scale;
        if (!ws.is_integer() && !hs.is_integer())
            return bad("tile " + std::to_string(i) + " has no side in the lattice");
        Rect scaled{a.x0 / t.scale, a.y0 / t.scale, a.x1 / t.scale, a.y1 / t.scale};
        if (!scaled.boundary_word().is_identity())
            return bad("tile " + std::to_string(i) + " boundary word is nontrivial after scaling");
        for (size_t j = i + 1; j < t.tiles.size(); ++j) {
            const Rect& b = t.tiles[j];
            if (a.x0 < b.x1 && b.x0 < a.x1 && a.y0 < b.y1 && b.y0 < a.y1)
                return bad("tiles " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
        }
        total += a.area();
    }
    if (total != t.region.area()) return bad("tile areas do not sum to the region area");
    return res;
}

RectilinearPolygon scale_polygon(const RectilinearPolygon& p, const Rat& sx, const Rat& sy) {
    if (!sx.is_positive() || !sy.is_positive())
        throw RectileError("Internal", "scale factors must be positive");
    std::vector<Point> pts;
    pts.reserve(p.vertices().size());
    for (const Point& v : p.vertices()) pts.push_back(Point{v.x * sx, v.y * sy});
    return RectilinearPolygon::normalized(pts);
}

namespace {

// Word of a path from the start vertex of s around the placed rectangle to a
// point q on its boundary. Any route works: the rectangle's word is trivial.
std::optional<GroupWord> rect_path_word(const GroupWord& prefix_s_start, const Edge& s,
                                        const Rat& r, const Rect& rect, const Point& q) {
    InwardInfo w = inward_of(s);
    // Walk: inward from s.a, then parallel to s, then back outward.
    Point corner_a = s.a, corner_b = s.b;
    if (w.perp == Axis::H) {
        corner_a.x += Rat(w.sign) * r;
        corner_b.x += Rat(w.sign) * r;
    } else {
        corner_a.y += Rat(w.sign) * r;
        corner_b.y += Rat(w.sign) * r;
    }
    (void)rect;
    auto on_segment = [&](const Point& a, const Point& b) -> std::optional<Rat> {
        if (a.x == b.x) {
            if (q.x != a.x) return std::nullopt;
            Rat lo = rat_min(a.y, b.y), hi = rat_max(a.y, b.y);
            if (q.y < lo || q.y > hi) return std::nullopt;
            return q.y - a.y;
        }
        if (q.y != a.y) return std::nullopt;
        Rat lo = rat_min(a.x, b.x), hi = rat_max(a.x, b.x);
        if (q.x < lo || q.x > hi) return std::nullopt;
        return q.x - a.x;
    };

    // Leg 1: s.a -> corner_a.
    if (auto d = on_segment(s.a, corner_a)) {
        return prefix_s_start.appended(w.perp, *d);
    }
    // Leg 2: corner_a -> corner_b (parallel to s).
    if (auto d = on_segment(corner_a, corner_b)) {
        GroupWord g = prefix_s_start.appended(w.perp, Rat(w.sign) * r);
        return g.appended(s.axis, *d);
    }
    // Leg 3: corner_b -> s.b.
    if (auto d = on_segment(corner_b, s.b)) {
        GroupWord g = prefix_s_start.appended(w.perp, Rat(w.sign) * r);
        g = g.appended(s.axis, s.delta);
        return g.appended(w.perp, *d);
    }
    return std::nullopt;
}

} // namespace

TileOutcome tile(const RectilinearPolygon& p, TileMode mode, const HeightConfig& cfg,
                 const Rat& scale) {
    TileOutcome out;
    if (!scale.is_positive()) throw RectileError("UnsupportedLattice", "scale must be positive");

    RectilinearPolygon work = scale == Rat(1) ? p : scale_polygon(p, scale.reciprocal(), scale.reciprocal());

    if (!work.boundary_word().is_identity()) {
        out.tiled = false;
        out.reason = UntileableReason::NullBoundaryFails;
        return out;
    }

    HeightContext ctx = resolve_heights(cfg, work);
    std::deque<ComponentTask> queue{{work, GroupWord{}}};
    std::vector<Rect> tiles;
    size_t component_id = 0;
    size_t guard = 0;

    while (!queue.empty()) {
        ComponentTask task = queue.front();
        queue.pop_front();
        const RectilinearPolygon& comp = task.polygon;

        GroupWord loop = comp.boundary_word();
        if (!loop.is_identity()) {
            out.tiled = false;
            out.reason = UntileableReason::HeightMismatchOnCut;
            out.mismatch_witness = comp.vertices()[0];
            return out;
        }

        BoundaryHeights bh = boundary_heights(comp, task.bp_prefix, ctx);
        if (mode == TileMode::Fast && bh.max_height - bh.min_height <= 1) {
            Tiling part = trivial_tile(comp);
            tiles.insert(tiles.end(), part.tiles.begin(), part.tiles.end());
            continue;
        }

        PlacementStep step;
        try {
            step = place_max_edge_rect(comp, task.bp_prefix, bh, ctx);
        } catch (const RectileError& e) {
            if (e.code() == "MaxEdgeNotInteger") {
                out.tiled = false;
                out.reason = UntileableReason::MaxEdgeNotInteger;
                return out;
            }
            throw;
        }
        step.component_id = component_id++;
        tiles.push_back(step.rect);
        out.plan.push_back(PlanStep{task, step});

        Edge s = comp.edge(step.edge_index);
        GroupWord prefix_s_start = concat(task.bp_prefix, comp.prefix_at(step.edge_index, Rat(0)));

        for (RectilinearPolygon& child : subtract_rect(comp, step.rect)) {
            const Point& b = child.vertices()[0];
            GroupWord bp;
            if (auto loc = comp.locate_on_boundary(b)) {
                bp = concat(task.bp_prefix, comp.prefix_at(loc->first, loc->second));
            } else if (auto via = rect_path_word(prefix_s_start, s, step.r, step.rect, b)) {
                bp = *via;
            } else {
                throw RectileError("Internal", "component basepoint not on parent or rect boundary");
            }
            queue.push_back(ComponentTask{std::move(child), std::move(bp)});
        }

        if (++guard > 200000) throw RectileError("Internal", "placement loop exceeded budget");
    }

    Tiling result;
    result.region = p;
    result.scale = scale;
    if (scale == Rat(1)) {
        result.tiles = std::move(tiles);
    } else {
        for (const Rect& r : tiles)
            result.tiles.push_back(Rect{r.x0 * scale, r.y0 * scale, r.x1 * scale, r.y1 * scale});
    }
    VerifyResult v = verify_tiling(result);
    if (!v.ok) throw RectileError("Internal", "constructed tiling fails verification: " + v.diagnostic);
    out.tiled = true;
    out.tiling = std::move(result);
    return out;
}

TileOutcome tile_bars(const RectilinearPolygon& polyomino, long n, long m,
                      const HeightConfig& cfg, TileMode mode) {
    if (n < 1 || m < 1) throw RectileError("UnsupportedLattice", "bar lengths must be positive integers");
    for (const Point& v : polyomino.vertices())
        if (!v.x.is_integer() || !v.y.is_integer())
            throw RectileError("NotRectilinear", "bar tiling requires integer coordinates");

    RectilinearPolygon scaled = scale_polygon(polyomino, Rat(1, n), Rat(1, m));
    TileOutcome inner = tile(scaled, mode, cfg);
    if (!inner.tiled) {
        TileOutcome out;
        out.tiled = false;
        out.reason = inner.reason;
        out.mismatch_witness = inner.mismatch_witness;
        return out;
    }

    TileOutcome out;
    out.tiled = true;
    out.plan = std::move(inner.plan);
    out.tiling.region = polyomino;
    out.tiling.scale = Rat(1);
    for (const Rect& t : inner.tiling.tiles) {
        Rect big{t.x0 * Rat(n), t.y0 * Rat(m), t.x1 * Rat(n), t.y1 * Rat(m)};
        Rat W = big.width(), H = big.height();
        bool vertical_bars = (t.y1 - t.y0).is_integer(); // scaled height integral -> H in mZ
        if (vertical_bars) {
            if (!W.is_integer() || !(H / Rat(m)).is_integer())
                throw RectileError("Internal", "bar post-split: unexpected tile dimensions");
            for (Rat x = big.x0; x < big.x1; x += Rat(1))
                for (Rat y = big.y0; y < big.y1; y += Rat(m))
                    out.tiling.tiles.push_back(Rect{x, y, x + Rat(1), y + Rat(m)});
        } else {
            if (!H.is_integer() || !(W / Rat(n)).is_integer())
                throw RectileError("Internal", "bar post-split: unexpected tile dimensions");
            for (Rat x = big.x0; x < big.x1; x += Rat(n))
                for (Rat y = big.y0; y < big.y1; y += Rat(1))
                    out.tiling.tiles.push_back(Rect{x, y, x + Rat(n), y + Rat(1)});
        }
    }
    VerifyResult v = verify_tiling(out.tiling);
    if (!v.ok) throw RectileError("Internal", "bar tiling fails verification: " + v.diagnostic);
    for (const Rect& t : out.tiling.tiles) {
        bool is_bar = (t.width() == Rat(n) && t.height() == Rat(1)) ||
                      (t.width() == Rat(1) && t.height() == Rat(m));
        if (!is_bar) throw RectileError("Internal", "bar post-split produced a non-bar tile");
    }
    return out;
}

} // namespace rectile
