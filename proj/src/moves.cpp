#include "rectile/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace rectile {

namespace {

[[noreturn]] void illegal(const std::string& why) { throw RectileError("IllegalMove", why); }

size_t index_of(const std::vector<Rect>& sorted_tiles, const Rect& r) {
    for (size_t i = 0; i < sorted_tiles.size(); ++i)
        if (sorted_tiles[i] == r) return i;
    throw RectileError("Internal", "tile not present in tiling");
}

bool has_lattice_side(const Rect& r, const Rat& scale) {
    return (r.width() / scale).is_integer() || (r.height() / scale).is_integer();
}

} // namespace

Tiling apply_move(const Tiling& t, const Move& mv) {
    Tiling out;
    out.region = t.region;
    out.scale = t.scale;
    std::vector<Rect> ts = t.sorted_tiles();

    if (mv.kind == Move::Kind::Split) {
        if (mv.tile >= ts.size()) illegal("tile index out of range");
        Rect r = ts[mv.tile];
        Rect p, q;
        if (mv.axis == Axis::H) {
            if (!(mv.offset.is_positive() && mv.offset < r.height())) illegal("cut offset outside tile");
            Rat y = r.y0 + mv.offset;
            p = Rect{r.x0, r.y0, r.x1, y};
            q = Rect{r.x0, y, r.x1, r.y1};
        } else {
            if (!(mv.offset.is_positive() && mv.offset < r.width())) illegal("cut offset outside tile");
            Rat x = r.x0 + mv.offset;
            p = Rect{r.x0, r.y0, x, r.y1};
            q = Rect{x, r.y0, r.x1, r.y1};
        }
        if (!has_lattice_side(p, t.scale) || !has_lattice_side(q, t.scale))
            illegal("split piece has no side in the lattice");
        ts.erase(ts.begin() + static_cast<long>(mv.tile));
        ts.push_back(p);
        ts.push_back(q);
    } else {
        if (mv.a >= ts.size() || mv.b >= ts.size() || mv.a == mv.b) illegal("merge indices invalid");
        Rect a = ts[mv.a], b = ts[mv.b];
        Rect u;
        if (a.x0 == b.x0 && a.x1 == b.x1 && (a.y1 == b.y0 || b.y1 == a.y0)) {
            u = Rect{a.x0, rat_min(a.y0, b.y0), a.x1, rat_max(a.y1, b.y1)};
        } else if (a.y0 == b.y0 && a.y1 == b.y1 && (a.x1 == b.x0 || b.x1 == a.x0)) {
            u = Rect{rat_min(a.x0, b.x0), a.y0, rat_max(a.x1, b.x1), a.y1};
        } else {
            illegal("union of tiles is not a rectangle");
        }
        if (!has_lattice_side(u, t.scale)) illegal("merged tile has no side in the lattice");
        size_t hi = std::max(mv.a, mv.b), lo = std::min(mv.a, mv.b);
        ts.erase(ts.begin() + static_cast<long>(hi));
        ts.erase(ts.begin() + static_cast<long>(lo));
        ts.push_back(u);
    }
    out.tiles = std::move(ts);
    out.tiles = out.sorted_tiles();
    return out;
}

Tiling replay(const Tiling& start, const std::vector<Move>& moves, bool verify_each) {
    Tiling cur = start;
    cur.tiles = cur.sorted_tiles();
    for (const Move& m : moves) {
        cur = apply_move(cur, m);
        if (verify_each) {
            VerifyResult v = verify_tiling(cur);
            if (!v.ok) throw RectileError("IllegalMove", "intermediate state invalid: " + v.diagnostic);
        }
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Tiling path graph

TilingPaths::TilingPaths(const RectilinearPolygon& region, const std::vector<Rect>& tiles,
                         const GroupWord& bp_prefix, const Rat& scale) {
    // Every tile must stand for a trivial loop in G; otherwise path words are
    // not well-defined.
    for (const Rect& r : tiles) {
        Rect scaled{r.x0 / scale, r.y0 / scale, r.x1 / scale, r.y1 / scale};
        if (!scaled.boundary_word().is_identity())
            throw RectileError("PathInconsistent", "tile boundary word is nontrivial");
    }

    struct PKey {
        Rat x, y;
        bool operator<(const PKey& o) const {
            if (x != o.x) return x < o.x;
            return y < o.y;
        }
    };
    std::set<PKey> corners;
    for (const Rect& r : tiles) {
        corners.insert({r.x0, r.y0});
        corners.insert({r.x0, r.y1});
        corners.insert({r.x1, r.y0});
        corners.insert({r.x1, r.y1});
    }
    for (const Point& v : region.vertices()) corners.insert({v.x, v.y});

    std::map<Rat, std::vector<Rat>> on_vline, on_hline;
    for (const PKey& c : corners) {
        on_vline[c.x].push_back(c.y);
        on_hline[c.y].push_back(c.x);
    }
    for (auto& [x, ys] : on_vline) std::sort(ys.begin(), ys.end(), [](const Rat& a, const Rat& b) { return a < b; });
    for (auto& [y, xs] : on_hline) std::sort(xs.begin(), xs.end(), [](const Rat& a, const Rat& b) { return a < b; });

    auto tile_covering = [&](const Point& m, int side, Axis line_axis) -> bool {
        // side -1: below/left of the line, +1: above/right.
        for (const Rect& r : tiles) {
            if (line_axis == Axis::V) {
                if (side < 0 ? r.x1 == m.x : r.x0 == m.x) {
                    if (r.y0 < m.y && m.y < r.y1) return true;
                }
            } else {
                if (side < 0 ? r.y1 == m.y : r.y0 == m.y) {
                    if (r.x0 < m.x && m.x < r.x1) return true;
                }
            }
        }
        return false;
    };

    for (const auto& [x, ys] : on_vline) {
        for (size_t i = 0; i + 1 < ys.size(); ++i) {
            Point mid{x, (ys[i] + ys[i + 1]) / Rat(2)};
            bool left = tile_covering(mid, -1, Axis::V);
            bool right = tile_covering(mid, +1, Axis::V);
            if (!left && !right) continue;
            Piece p;
            p.a = Point{x, ys[i]};
            p.b = Point{x, ys[i + 1]};
            p.axis = Axis::V;
            p.delta = ys[i + 1] - ys[i];
            p.interior = left && right;
            pieces_.push_back(p);
        }
    }
    for (const auto& [y, xs] : on_hline) {
        for (size_t i = 0; i + 1 < xs.size(); ++i) {
            Point mid{(xs[i] + xs[i + 1]) / Rat(2), y};
            bool below = tile_covering(mid, -1, Axis::H);
            bool above = tile_covering(mid, +1, Axis::H);
            if (!below && !above) continue;
            Piece p;
            p.a = Point{xs[i], y};
            p.b = Point{xs[i + 1], y};
            p.axis = Axis::H;
            p.delta = xs[i + 1] - xs[i];
            p.interior = below && above;
            pieces_.push_back(p);
        }
    }

    // Breadth-first word assignment from the region basepoint; non-tree
    // pieces must agree, otherwise some loop of the structure is nontrivial.
    std::map<PKey, GroupWord> words;
    std::map<PKey, std::vector<std::pair<size_t, int>>> adj; // piece idx, direction
    for (size_t i = 0; i < pieces_.size(); ++i) {
        adj[{pieces_[i].a.x, pieces_[i].a.y}].push_back({i, +1});
        adj[{pieces_[i].b.x, pieces_[i].b.y}].push_back({i, -1});
    }
    const Point& bp = region.vertices()[0];
    PKey root{bp.x, bp.y};
    if (!adj.count(root)) throw RectileError("PathInconsistent", "basepoint is not a tiling vertex");
    words[root] = bp_prefix;
    std::deque<PKey> queue{root};
    while (!queue.empty()) {
        PKey u = queue.front();
        queue.pop_front();
        GroupWord wu = words[u];
        for (auto [pi, dir] : adj[u]) {
            const Piece& p = pieces_[pi];
            PKey v = dir > 0 ? PKey{p.b.x, p.b.y} : PKey{p.a.x, p.a.y};
            GroupWord wv = wu.appended(p.axis, dir > 0 ? p.delta : -p.delta);
            auto it = words.find(v);
            if (it == words.end()) {
                words[v] = wv;
                queue.push_back(v);
            } else if (!(it->second == wv)) {
                throw RectileError("PathInconsistent", "two paths give different words");
            }
        }
    }
    for (Piece& p : pieces_) {
        auto it = words.find({p.a.x, p.a.y});
        if (it == words.end()) throw RectileError("PathInconsistent", "edge piece unreachable from basepoint");
        p.word_at_a = it->second;
    }
}

std::vector<TilingPaths::InteriorRun> TilingPaths::interior_runs(const HeightContext& ctx) const {
    struct LineKey {
        Axis axis;
        Rat fixed;
        bool operator<(const LineKey& o) const {
            if (axis != o.axis) return axis < o.axis;
            return fixed < o.fixed;
        }
    };
    std::map<LineKey, std::vector<const Piece*>> lines;
    for (const Piece& p : pieces_) {
        if (!p.interior) continue;
        Rat fixed = p.axis == Axis::V ? p.a.x : p.a.y;
        lines[{p.axis, fixed}].push_back(&p);
    }
    std::vector<InteriorRun> runs;
    for (auto& [key, ps] : lines) {
        auto span_lo = [&](const Piece* p) { return key.axis == Axis::V ? rat_min(p->a.y, p->b.y) : rat_min(p->a.x, p->b.x); };
        std::sort(ps.begin(), ps.end(), [&](const Piece* a, const Piece* b) { return span_lo(a) < span_lo(b); });
        size_t i = 0;
        while (i < ps.size()) {
            const Piece* first = ps[i];
            Rat lo = span_lo(first);
            Rat hi = lo + first->delta.abs();
            GroupWord w_lo = first->delta.is_positive() ? first->word_at_a
                                                        : first->word_at_a.appended(first->axis, first->delta);
            size_t j = i + 1;
            while (j < ps.size() && span_lo(ps[j]) == hi) {
                hi += ps[j]->delta.abs();
                ++j;
            }
            InteriorRun run;
            run.axis = key.axis;
            run.fixed = key.fixed;
            run.lo = lo;
            run.hi = hi;
            run.word_at_lo = w_lo;
            run.generic_height = edge_profile(w_lo, key.axis, hi - lo, ctx).generic_height;
            runs.push_back(run);
            i = j;
        }
    }
    return runs;
}

std::optional<GroupWord> TilingPaths::prefix_of_point(const Point& q) const {
    for (const Piece& p : pieces_) {
        if (p.axis == Axis::V) {
            if (q.x != p.a.x) continue;
            Rat lo = rat_min(p.a.y, p.b.y), hi = rat_max(p.a.y, p.b.y);
            if (q.y < lo || q.y > hi) continue;
            return p.word_at_a.appended(Axis::V, q.y - p.a.y);
        }
        if (q.y != p.a.y) continue;
        Rat lo = rat_min(p.a.x, p.b.x), hi = rat_max(p.a.x, p.b.x);
        if (q.x < lo || q.x > hi) continue;
        return p.word_at_a.appended(Axis::H, q.x - p.a.x);
    }
    return std::nullopt;
}

long interior_point_height(const GroupWord& tiling_path_prefix, const HeightContext& ctx) {
    return point_height(tiling_path_prefix, ctx);
}

// ---------------------------------------------------------------------------
// Interior-maximum surgery

namespace {

struct Worker {
    Tiling cur;
    std::vector<Move> moves;

    explicit Worker(const Tiling& t) : cur(t) { cur.tiles = cur.sorted_tiles(); }

    void split(const Rect& target, Axis cut_axis, const Rat& offset) {
        Move m = Move::split(index_of(cur.tiles, target), cut_axis, offset);
        cur = apply_move(cur, m);
        moves.push_back(m);
    }
    void merge(const Rect& a, const Rect& b) {
        Move m = Move::merge(index_of(cur.tiles, a), index_of(cur.tiles, b));
        cur = apply_move(cur, m);
        moves.push_back(m);
    }
};

// Remove one interior run: slice every adjacent tile at the run's attachment
// levels, then merge the aligned pairs across it.
void remove_run(Worker& work, const std::vector<Rect>& scoped_tiles,
                const TilingPaths::InteriorRun& z) {
    bool vertical = z.axis == Axis::V;
    auto near_side = [&](const Rect& r) { return vertical ? r.x1 : r.y1; };
    auto far_side = [&](const Rect& r) { return vertical ? r.x0 : r.y0; };
    auto span0 = [&](const Rect& r) { return vertical ? r.y0 : r.x0; };
    auto span1 = [&](const Rect& r) { return vertical ? r.y1 : r.x1; };

    std::vector<Rect> before, after; // tiles on the two sides of the run
    for (const Rect& r : scoped_tiles) {
        if (near_side(r) == z.fixed && span0(r) < z.hi && span1(r) > z.lo) before.push_back(r);
        if (far_side(r) == z.fixed && span0(r) < z.hi && span1(r) > z.lo) after.push_back(r);
    }
    if (before.empty() || after.empty())
        throw RectileError("Internal", "interior run lost its neighbors");

    std::set<Rat> levels{z.lo, z.hi};
    for (const Rect& r : before) {
        if (span0(r) > z.lo) levels.insert(span0(r));
        if (span1(r) < z.hi) levels.insert(span1(r));
    }
    for (const Rect& r : after) {
        if (span0(r) > z.lo) levels.insert(span0(r));
        if (span1(r) < z.hi) levels.insert(span1(r));
    }
    for (const Rat& l : levels)
        if (!(l - z.lo).is_integer())
            throw RectileError("Internal", "attachment levels of a maximal run are not integral");

    auto slice = [&](const Rect& tile) {
        Rect cur = tile;
        for (const Rat& l : levels) {
            if (!(span0(cur) < l && l < span1(cur))) continue;
            Rat off = l - span0(cur);
            work.split(cur, vertical ? Axis::H : Axis::V, off);
            if (vertical) cur = Rect{cur.x0, l, cur.x1, cur.y1};
            else cur = Rect{l, cur.y0, cur.x1, cur.y1};
        }
    };
    for (const Rect& r : before) slice(r);
    for (const Rect& r : after) slice(r);

    std::vector<Rat> ladder(levels.begin(), levels.end());
    for (size_t i = 0; i + 1 < ladder.size(); ++i) {
        Rat la = ladder[i], lb = ladder[i + 1];
        if (la < z.lo || lb > z.hi) continue;
        std::optional<Rect> left, right;
        for (const Rect& r : work.cur.tiles) {
            if (span0(r) == la && span1(r) == lb) {
                if (near_side(r) == z.fixed) left = r;
                if (far_side(r) == z.fixed) right = r;
            }
        }
        if (!left || !right)
            throw RectileError("Internal", "run removal: aligned pieces missing");
        work.merge(*left, *right);
    }
}

struct RunPick {
    TilingPaths::InteriorRun run;
    long height;
};

std::optional<RunPick> highest_run(const std::vector<TilingPaths::InteriorRun>& runs) {
    std::optional<RunPick> best;
    for (const auto& r : runs) {
        bool take = !best || r.generic_height > best->height;
        if (best && r.generic_height == best->height) {
            take = std::tie(r.axis, r.fixed, r.lo) <
                   std::tie(best->run.axis, best->run.fixed, best->run.lo);
        }
        if (take) best = RunPick{r, r.generic_height};
    }
    return best;
}

} // namespace

std::pair<Tiling, MoveTrace> lower_interior_max(const Tiling& t, const HeightConfig& cfg) {
    VerifyResult v = verify_tiling(t);
    if (!v.ok) throw RectileError("IllegalMove", "input tiling invalid: " + v.diagnostic);
    RectilinearPolygon region = t.region;
    Rat s = t.scale;
    Tiling work_t = t;
    if (s != Rat(1)) {
        work_t.region = scale_polygon(region, s.reciprocal(), s.reciprocal());
        work_t.scale = Rat(1);
        work_t.tiles.clear();
        for (const Rect& r : t.tiles)
            work_t.tiles.push_back(Rect{r.x0 / s, r.y0 / s, r.x1 / s, r.y1 / s});
    }

    HeightContext ctx = resolve_heights(cfg, work_t.region);
    TilingPaths paths(work_t.region, work_t.tiles, GroupWord{}, Rat(1));
    auto runs = paths.interior_runs(ctx);
    long M = boundary_heights(work_t.region, ctx).max_height;
    auto best = highest_run(runs);
    if (!best || best->height < M)
        throw RectileError("NoInteriorMax", "no interior edge attains the global maximum");

    Worker worker(work_t);
    remove_run(worker, worker.cur.tiles, best->run);

    MoveTrace trace;
    trace.start_hash = work_t.hash();
    trace.end_hash = worker.cur.hash();
    trace.moves = worker.moves;

    Tiling out = worker.cur;
    if (s != Rat(1)) {
        out.region = region;
        out.scale = s;
        for (Rect& r : out.tiles) r = Rect{r.x0 * s, r.y0 * s, r.x1 * s, r.y1 * s};
        for (Move& m : trace.moves)
            if (m.kind == Move::Kind::Split) m.offset *= s;
        trace.start_hash = t.hash();
        trace.end_hash = out.hash();
    }
    return {out, trace};
}

// ---------------------------------------------------------------------------
// Normalization to the canonical tiling

namespace {

std::vector<Rect> tiles_in(const std::vector<Rect>& tiles, const RectilinearPolygon& comp) {
    std::vector<Rect> out;
    Rat area;
    for (const Rect& r : tiles) {
        Point c{(r.x0 + r.x1) / Rat(2), (r.y0 + r.y1) / Rat(2)};
        if (comp.side_of(c) == 2) {
            out.push_back(r);
            area += r.area();
        }
    }
    if (area != comp.area())
        throw RectileError("Internal", "component is not exactly covered by tiles");
    return out;
}

void lower_component(Worker& work, const ComponentTask& task, const HeightContext& ctx) {
    long M = boundary_heights(task.polygon, task.bp_prefix, ctx).max_height;
    for (size_t iter = 0;; ++iter) {
        if (iter > 20000) throw RectileError("Internal", "interior lowering did not terminate");
        std::vector<Rect> scoped = tiles_in(work.cur.tiles, task.polygon);
        TilingPaths paths(task.polygon, scoped, task.bp_prefix, Rat(1));
        auto best = highest_run(paths.interior_runs(ctx));
        if (!best || best->height < M) return;
        remove_run(work, scoped, best->run);
    }
}

void carve_rect(Worker& work, const ComponentTask& task, const PlacementStep& step) {
    const RectilinearPolygon& comp = task.polygon;
    Edge s = comp.edge(step.edge_index);
    bool vertical = s.axis == Axis::V; // cut travels horizontally
    Rat f = vertical ? s.a.x : s.a.y;
    Rat lo = vertical ? rat_min(s.a.y, s.b.y) : rat_min(s.a.x, s.b.x);
    Rat hi = vertical ? rat_max(s.a.y, s.b.y) : rat_max(s.a.x, s.b.x);
    int sign;
    if (vertical) sign = s.delta.is_positive() ? -1 : 1;
    else sign = s.delta.is_positive() ? 1 : -1;

    std::vector<Rect> scoped = tiles_in(work.cur.tiles, comp);
    std::vector<Rect> against;
    for (const Rect& r : scoped) {
        Rat near = vertical ? (sign > 0 ? r.x0 : r.x1) : (sign > 0 ? r.y0 : r.y1);
        Rat s0 = vertical ? r.y0 : r.x0;
        Rat s1 = vertical ? r.y1 : r.x1;
        if (near == f && s0 < hi && s1 > lo) against.push_back(r);
    }
    std::sort(against.begin(), against.end(), [&](const Rect& a, const Rect& b) {
        return (vertical ? a.y0 : a.x0) < (vertical ? b.y0 : b.x0);
    });
    // The tiles against s must stack exactly along it with depth >= r.
    Rat cursor = lo;
    for (const Rect& r : against) {
        Rat s0 = vertical ? r.y0 : r.x0;
        Rat s1 = vertical ? r.y1 : r.x1;
        if (s0 != cursor)
            throw RectileError("Internal", "tiles against the max edge do not stack cleanly");
        cursor = s1;
        Rat depth = vertical ? r.width() : r.height();
        if (depth < step.r)
            throw RectileError("Internal", "tile against the max edge is shallower than r");
        if (depth > step.r) {
            Rat off;
            if (vertical) off = sign > 0 ? step.r : r.width() - step.r;
            else off = sign > 0 ? step.r : r.height() - step.r;
            work.split(r, vertical ? Axis::V : Axis::H, off);
        }
    }
    if (cursor != hi)
        throw RectileError("Internal", "tiles against the max edge do not cover it");

    // Merge the strip pieces into the placed rectangle.
    std::vector<Rect> inside;
    for (const Rect& r : work.cur.tiles) {
        if (r.x0 >= step.rect.x0 && r.x1 <= step.rect.x1 && r.y0 >= step.rect.y0 &&
            r.y1 <= step.rect.y1)
            inside.push_back(r);
    }
    std::sort(inside.begin(), inside.end(), [&](const Rect& a, const Rect& b) {
        return (vertical ? a.y0 : a.x0) < (vertical ? b.y0 : b.x0);
    });
    if (inside.empty()) throw RectileError("Internal", "carve: no pieces in the placed rectangle");
    Rect acc = inside[0];
    for (size_t i = 1; i < inside.size(); ++i) {
        Rect nxt = inside[i];
        work.merge(acc, nxt);
        acc = Rect{rat_min(acc.x0, nxt.x0), rat_min(acc.y0, nxt.y0), rat_max(acc.x1, nxt.x1),
                   rat_max(acc.y1, nxt.y1)};
    }
    if (!(acc == step.rect)) throw RectileError("Internal", "carve did not produce the placed rectangle");
}

} // namespace

std::pair<Tiling, MoveTrace> normalize(const Tiling& t, const HeightConfig& cfg,
                                       const TileOutcome& canonical_plan) {
    VerifyResult v = verify_tiling(t);
    if (!v.ok) throw RectileError("IllegalMove", "input tiling invalid: " + v.diagnostic);

    Rat s = t.scale;
    Tiling work_t = t;
    if (s != Rat(1)) {
        work_t.region = scale_polygon(t.region, s.reciprocal(), s.reciprocal());
        work_t.scale = Rat(1);
        work_t.tiles.clear();
        for (const Rect& r : t.tiles)
            work_t.tiles.push_back(Rect{r.x0 / s, r.y0 / s, r.x1 / s, r.y1 / s});
    }

    if (!canonical_plan.tiled)
        throw RectileError("Internal", "normalize: canonical plan says untileable, but a tiling exists");

    // The plan must be the canonical outcome for the descaled region, so all
    // of its coordinates live in the same frame as work_t.
    HeightContext ctx = resolve_heights(cfg, work_t.region);
    Worker worker(work_t);
    for (const PlanStep& ps : canonical_plan.plan) {
        lower_component(worker, ps.component, ctx);
        carve_rect(worker, ps.component, ps.placement);
    }

    if (!(worker.cur.sorted_tiles() == canonical_plan.tiling.sorted_tiles()))
        throw RectileError("Internal", "normalization did not reach the canonical tiling");

    MoveTrace trace;
    trace.moves = worker.moves;
    Tiling out = worker.cur;
    if (s != Rat(1)) {
        out.region = t.region;
        out.scale = s;
        for (Rect& r : out.tiles) r = Rect{r.x0 * s, r.y0 * s, r.x1 * s, r.y1 * s};
        for (Move& m : trace.moves)
            if (m.kind == Move::Kind::Split) m.offset *= s;
    }
    trace.start_hash = t.hash();
    trace.end_hash = out.hash();
    return {out, trace};
}

std::pair<Tiling, MoveTrace> normalize(const Tiling& t, const HeightConfig& cfg) {
    Rat s = t.scale;
    RectilinearPolygon region = s == Rat(1)
        ? t.region
        : scale_polygon(t.region, s.reciprocal(), s.reciprocal());
    TileOutcome plan = tile(region, TileMode::Canonical, cfg);
    return normalize(t, cfg, plan);
}

MoveTrace invert_trace(const Tiling& start, const MoveTrace& trace) {
    std::vector<Tiling> states{start};
    states[0].tiles = states[0].sorted_tiles();
    for (const Move& m : trace.moves) states.push_back(apply_move(states.back(), m));

    MoveTrace inv;
    inv.start_hash = trace.end_hash;
    inv.end_hash = trace.start_hash;
    for (size_t i = trace.moves.size(); i-- > 0;) {
        const Move& m = trace.moves[i];
        const Tiling& before = states[i];
        const Tiling& after = states[i + 1];
        if (m.kind == Move::Kind::Split) {
            Rect r = before.tiles[m.tile];
            Rect p, q;
            if (m.axis == Axis::H) {
                Rat y = r.y0 + m.offset;
                p = Rect{r.x0, r.y0, r.x1, y};
                q = Rect{r.x0, y, r.x1, r.y1};
            } else {
                Rat x = r.x0 + m.offset;
                p = Rect{r.x0, r.y0, x, r.y1};
                q = Rect{x, r.y0, r.x1, r.y1};
            }
            inv.moves.push_back(Move::merge(index_of(after.tiles, p), index_of(after.tiles, q)));
        } else {
            Rect a = before.tiles[m.a], b = before.tiles[m.b];
            Rect u{rat_min(a.x0, b.x0), rat_min(a.y0, b.y0), rat_max(a.x1, b.x1), rat_max(a.y1, b.y1)};
            size_t ui = index_of(after.tiles, u);
            if (a.x0 == b.x0) {
                Rat shared = rat_max(a.y0, b.y0);
                inv.moves.push_back(Move::split(ui, Axis::H, shared - u.y0));
            } else {
                Rat shared = rat_max(a.x0, b.x0);
                inv.moves.push_back(Move::split(ui, Axis::V, shared - u.x0));
            }
        }
    }
    return inv;
}

MoveTrace connect(const Tiling& t1, const Tiling& t2, const HeightConfig& cfg,
                  const TileOutcome& canonical_plan) {
    if (!(t1.region == t2.region) || t1.scale != t2.scale)
        throw RectileError("DifferentRegions", "tilings are of different regions");
    MoveTrace trace;
    trace.start_hash = t1.hash();
    trace.end_hash = t2.hash();
    if (trace.start_hash == trace.end_hash && t1.sorted_tiles() == t2.sorted_tiles())
        return trace;
    auto [n1, tr1] = normalize(t1, cfg, canonical_plan);
    auto [n2, tr2] = normalize(t2, cfg, canonical_plan);
    MoveTrace back = invert_trace(t2, tr2);
    trace.moves = tr1.moves;
    trace.moves.insert(trace.moves.end(), back.moves.begin(), back.moves.end());
    return trace;
}

MoveTrace connect(const Tiling& t1, const Tiling& t2, const HeightConfig& cfg) {
    if (!(t1.region == t2.region) || t1.scale != t2.scale)
        throw RectileError("DifferentRegions", "tilings are of different regions");
    Rat s = t1.scale;
    RectilinearPolygon region = s == Rat(1)
        ? t1.region
        : scale_polygon(t1.region, s.reciprocal(), s.reciprocal());
    TileOutcome plan = tile(region, TileMode::Canonical, cfg);
    return connect(t1, t2, cfg, plan);
}

// ---------------------------------------------------------------------------
// Lassos

RawWord Lasso::raw() const {
    RawWord w = conjugator;
    Rat width = tile.width(), height = tile.height();
    w.emplace_back(Axis::H, -width);
    w.emplace_back(Axis::V, -height);
    w.emplace_back(Axis::H, width);
    w.emplace_back(Axis::V, height);
    for (auto it = conjugator.rbegin(); it != conjugator.rend(); ++it)
        w.emplace_back(it->first, -it->second);
    return w;
}

GroupWord Lasso::reduced() const { return GroupWord::reduce(raw()); }

std::vector<Lasso> lasso_decomposition(const Tiling& t) {
    VerifyResult v = verify_tiling(t);
    if (!v.ok) throw RectileError("IllegalMove", "input tiling invalid: " + v.diagnostic);

    std::vector<Point> walk = t.region.vertices();
    std::vector<Rect> remaining = t.sorted_tiles();
    std::vector<Lasso> lassos;

    // Free reduction of the walk polyline: drop repeated points and any
    // vertex whose two incident segments are collinear (straight runs merge
    // and backtracking spurs cancel to their net displacement). Index 0, the
    // root of all conjugators, is pinned.
    auto dedupe = [](std::vector<Point>& w) {
        bool changed = true;
        while (changed && w.size() > 2) {
            changed = false;
            for (size_t i = 1; i < w.size(); ++i) {
                const Point& prev = w[i - 1];
                const Point& cur = w[i];
                const Point& nxt = w[(i + 1) % w.size()];
                bool drop = cur == prev || cur == nxt ||
                            (prev.y == cur.y && cur.y == nxt.y) ||
                            (prev.x == cur.x && cur.x == nxt.x);
                if (drop) {
                    w.erase(w.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
            }
            while (w.size() > 1 && w.front() == w.back()) {
                w.pop_back();
                changed = true;
            }
        }
    };

    while (!remaining.empty()) {
        // Ceiling tile: topmost, then leftmost.
        size_t best = 0;
        for (size_t i = 1; i < remaining.size(); ++i) {
            if (remaining[i].y1 > remaining[best].y1 ||
                (remaining[i].y1 == remaining[best].y1 && remaining[i].x0 < remaining[best].x0))
                best = i;
        }
        Rect T = remaining[best];
        remaining.erase(remaining.begin() + static_cast<long>(best));

        // Find the leftward ceiling pass covering T's top side.
        size_t n = walk.size();
        std::optional<size_t> seg;
        for (size_t i = 0; i < n; ++i) {
            const Point& a = walk[i];
            const Point& b = walk[(i + 1) % n];
            if (a.y == T.y1 && b.y == T.y1 && a.x >= T.x1 && b.x <= T.x0) {
                seg = i;
                break;
            }
        }
        if (!seg) throw RectileError("Internal", "lasso peel: ceiling segment not on walk");

        RawWord conj;
        for (size_t i = 0; i < *seg; ++i) {
            const Point& a = walk[i];
            const Point& b = walk[i + 1];
            if (a.y == b.y) conj.emplace_back(Axis::H, b.x - a.x);
            else conj.emplace_back(Axis::V, b.y - a.y);
        }
        if (walk[*seg].x != T.x1) conj.emplace_back(Axis::H, T.x1 - walk[*seg].x);

        Lasso l;
        l.conjugator = conj;
        l.tile = T;
        lassos.push_back(l);

        // Splice: replace the pass over T's top with the route under T.
        std::vector<Point> next(walk.begin(), walk.begin() + static_cast<long>(*seg) + 1);
        next.push_back(Point{T.x1, T.y1});
        next.push_back(Point{T.x1, T.y0});
        next.push_back(Point{T.x0, T.y0});
        next.push_back(Point{T.x0, T.y1});
        for (size_t i = *seg + 1; i < n; ++i) next.push_back(walk[i]);
        dedupe(next);
        walk = std::move(next);
        if (walk.size() < 2 && !remaining.empty())
            throw RectileError("Internal", "lasso peel: walk collapsed early");
    }
    return lassos;
}

} // namespace rectile
