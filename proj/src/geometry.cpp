#include "rectile/geometry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace rectile {

GroupWord Rect::boundary_word() const {
    RawWord raw{{Axis::H, width()}, {Axis::V, height()}, {Axis::H, -width()}, {Axis::V, -height()}};
    return GroupWord::reduce(raw);
}

Point Edge::at(const Rat& offset) const {
    Rat v = letter_value(offset);
    if (axis == Axis::H) return Point{a.x + v, a.y};
    return Point{a.x, a.y + v};
}

namespace {

[[noreturn]] void fail(const char* code, const std::string& msg) {
    throw RectileError(code, msg);
}

Rat twice_signed_area(const std::vector<Point>& vs) {
    Rat s;
    for (size_t i = 0; i < vs.size(); ++i) {
        const Point& p = vs[i];
        const Point& q = vs[(i + 1) % vs.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return s;
}

struct Seg {
    Axis axis;
    Rat fixed;    // the constant coordinate
    Rat lo, hi;   // span along the axis, lo < hi
};

Seg seg_of(const Point& a, const Point& b) {
    if (a.y == b.y) {
        return Seg{Axis::H, a.y, rat_min(a.x, b.x), rat_max(a.x, b.x)};
    }
    return Seg{Axis::V, a.x, rat_min(a.y, b.y), rat_max(a.y, b.y)};
}

// Exact intersection test for two axis-parallel closed segments.
bool segments_touch(const Seg& s, const Seg& t) {
    if (s.axis == t.axis) {
        if (s.fixed != t.fixed) return false;
        return !(s.hi < t.lo || t.hi < s.lo);
    }
    const Seg& h = s.axis == Axis::H ? s : t;
    const Seg& v = s.axis == Axis::H ? t : s;
    return v.fixed >= h.lo && v.fixed <= h.hi && h.fixed >= v.lo && h.fixed <= v.hi;
}

std::vector<Point> normalize_loop(const std::vector<Point>& input) {
    if (input.size() < 4) fail("NotRectilinear", "polygon needs at least 4 vertices");
    std::vector<Point> vs = input;

    for (size_t i = 0; i < vs.size(); ++i) {
        const Point& p = vs[i];
        const Point& q = vs[(i + 1) % vs.size()];
        if (p == q) fail("ZeroLengthEdge", "consecutive vertices coincide");
        if (p.x != q.x && p.y != q.y) fail("NotRectilinear", "edge is not axis-parallel");
    }

    // Merge collinear runs (same axis, same direction). A same-axis reversal
    // is a backtracking boundary and is rejected.
    bool changed = true;
    while (changed && vs.size() > 2) {
        changed = false;
        for (size_t i = 0; i < vs.size(); ++i) {
            size_t n = vs.size();
            const Point& a = vs[(i + n - 1) % n];
            const Point& b = vs[i];
            const Point& c = vs[(i + 1) % n];
            Axis ab = a.y == b.y ? Axis::H : Axis::V;
            Axis bc = b.y == c.y ? Axis::H : Axis::V;
            if (ab != bc) continue;
            Rat d1 = ab == Axis::H ? b.x - a.x : b.y - a.y;
            Rat d2 = ab == Axis::H ? c.x - b.x : c.y - b.y;
            if (d1.sign() != d2.sign()) fail("NotSimple", "boundary backtracks on itself");
            vs.erase(vs.begin() + static_cast<long>(i));
            changed = true;
            break;
        }
    }
    if (vs.size() < 4) fail("NotRectilinear", "degenerate polygon");
    return vs;
}

void check_simple(const std::vector<Point>& vs) {
    size_t n = vs.size();
    std::vector<Seg> segs;
    segs.reserve(n);
    for (size_t i = 0; i < n; ++i) segs.push_back(seg_of(vs[i], vs[(i + 1) % n]));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (!segments_touch(segs[i], segs[j])) continue;
            if (!adjacent) fail("NotSimple", "non-adjacent edges touch");
            // Adjacent edges are perpendicular after normalization; the only
            // allowed contact is the shared vertex.
            const Point& shared = (j == i + 1) ? vs[j] : vs[0];
            const Seg& h = segs[i].axis == Axis::H ? segs[i] : segs[j];
            const Seg& v = segs[i].axis == Axis::H ? segs[j] : segs[i];
            Point cross{v.fixed, h.fixed};
            if (!(cross == shared)) fail("NotSimple", "adjacent edges cross");
        }
    }
}

} // namespace

RectilinearPolygon RectilinearPolygon::normalized(const std::vector<Point>& pts) {
    RectilinearPolygon p;
    p.vs_ = normalize_loop(pts);
    if (twice_signed_area(p.vs_).is_negative())
        std::reverse(p.vs_.begin() + 1, p.vs_.end());
    check_simple(p.vs_);
    return p;
}

RectilinearPolygon RectilinearPolygon::validate(const std::vector<Point>& pts) {
    RectilinearPolygon p = normalized(pts);
    return p.translated(-p.vs_[0].x, -p.vs_[0].y);
}

RectilinearPolygon RectilinearPolygon::translated(const Rat& dx, const Rat& dy) const {
    RectilinearPolygon p = *this;
    for (Point& v : p.vs_) {
        v.x += dx;
        v.y += dy;
    }
    return p;
}

RectilinearPolygon RectilinearPolygon::rebased(size_t i) const {
    RectilinearPolygon p = *this;
    std::rotate(p.vs_.begin(), p.vs_.begin() + static_cast<long>(i % vs_.size()), p.vs_.end());
    return p;
}

Edge RectilinearPolygon::edge(size_t i) const {
    const Point& a = vs_[i];
    const Point& b = vs_[(i + 1) % vs_.size()];
    if (a.y == b.y) return Edge{a, b, Axis::H, b.x - a.x};
    return Edge{a, b, Axis::V, b.y - a.y};
}

std::vector<Edge> RectilinearPolygon::edges() const {
    std::vector<Edge> out;
    out.reserve(vs_.size());
    for (size_t i = 0; i < vs_.size(); ++i) out.push_back(edge(i));
    return out;
}

GroupWord RectilinearPolygon::boundary_word() const {
    GroupWord w;
    for (size_t i = 0; i < vs_.size(); ++i) {
        Edge e = edge(i);
        w = w.appended(e.axis, e.delta);
    }
    return w;
}

std::vector<GroupWord> RectilinearPolygon::prefix_words() const {
    std::vector<GroupWord> out;
    out.reserve(vs_.size() + 1);
    GroupWord w;
    out.push_back(w);
    for (size_t i = 0; i < vs_.size(); ++i) {
        Edge e = edge(i);
        w = w.appended(e.axis, e.delta);
        out.push_back(w);
    }
    return out;
}

GroupWord RectilinearPolygon::prefix_at(size_t edge_index, const Rat& offset) const {
    GroupWord w;
    for (size_t i = 0; i < edge_index; ++i) {
        Edge e = edge(i);
        w = w.appended(e.axis, e.delta);
    }
    Edge e = edge(edge_index);
    return w.appended(e.axis, e.letter_value(offset));
}

Rat RectilinearPolygon::area() const {
    Rat t = twice_signed_area(vs_);
    return t / Rat(2);
}

void RectilinearPolygon::bbox(Rat& x0, Rat& y0, Rat& x1, Rat& y1) const {
    x0 = x1 = vs_[0].x;
    y0 = y1 = vs_[0].y;
    for (const Point& v : vs_) {
        x0 = rat_min(x0, v.x);
        x1 = rat_max(x1, v.x);
        y0 = rat_min(y0, v.y);
        y1 = rat_max(y1, v.y);
    }
}

int RectilinearPolygon::side_of(const Point& q) const {
    size_t n = vs_.size();
    for (size_t i = 0; i < n; ++i) {
        Seg s = seg_of(vs_[i], vs_[(i + 1) % n]);
        if (s.axis == Axis::H) {
            if (q.y == s.fixed && q.x >= s.lo && q.x <= s.hi) return 1;
        } else {
            if (q.x == s.fixed && q.y >= s.lo && q.y <= s.hi) return 1;
        }
    }
    // Parity of crossings of the ray +x with vertical edges. Half-open spans
    // make vertex crossings count once.
    int crossings = 0;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = vs_[i];
        const Point& b = vs_[(i + 1) % n];
        if (a.x != b.x) continue;
        Rat ylo = rat_min(a.y, b.y), yhi = rat_max(a.y, b.y);
        if (a.x > q.x && q.y >= ylo && q.y < yhi) ++crossings;
    }
    return (crossings % 2) ? 2 : 0;
}

bool RectilinearPolygon::contains_rect(const Rect& r) const {
    // The closed rectangle lies in the closed region iff its interior does
    // not meet the boundary and its center is not outside.
    size_t n = vs_.size();
    for (size_t i = 0; i < n; ++i) {
        Seg s = seg_of(vs_[i], vs_[(i + 1) % n]);
        if (s.axis == Axis::H) {
            if (s.fixed > r.y0 && s.fixed < r.y1 && s.hi > r.x0 && s.lo < r.x1)
                return false;
        } else {
            if (s.fixed > r.x0 && s.fixed < r.x1 && s.hi > r.y0 && s.lo < r.y1)
                return false;
        }
    }
    Point center{(r.x0 + r.x1) / Rat(2), (r.y0 + r.y1) / Rat(2)};
    return side_of(center) != 0;
}

std::optional<std::pair<size_t, Rat>> RectilinearPolygon::locate_on_boundary(const Point& q) const {
    for (size_t i = 0; i < vs_.size(); ++i) {
        Edge e = edge(i);
        if (e.axis == Axis::H) {
            if (q.y != e.a.y) continue;
            Rat off = e.delta.is_negative() ? e.a.x - q.x : q.x - e.a.x;
            if (!off.is_negative() && off <= e.length()) return std::make_pair(i, off);
        } else {
            if (q.x != e.a.x) continue;
            Rat off = e.delta.is_negative() ? e.a.y - q.y : q.y - e.a.y;
            if (!off.is_negative() && off <= e.length()) return std::make_pair(i, off);
        }
    }
    return std::nullopt;
}

Rat RectilinearPolygon::boundary_overlap_length(const Point& a, const Point& b) const {
    Seg s = seg_of(a, b);
    Rat total;
    for (size_t i = 0; i < vs_.size(); ++i) {
        Seg t = seg_of(vs_[i], vs_[(i + 1) % vs_.size()]);
        if (t.axis != s.axis || t.fixed != s.fixed) continue;
        Rat lo = rat_max(s.lo, t.lo), hi = rat_min(s.hi, t.hi);
        if (lo < hi) total += hi - lo;
    }
    return total;
}

bool paths_equal_in_G(const RawWord& a, const RawWord& b) {
    return GroupWord::reduce(a) == GroupWord::reduce(b);
}

long grid_unit(const RectilinearPolygon& p) {
    mpz_class l(2);
    for (const Point& v : p.vertices()) {
        l = lcm_den(l, v.x);
        l = lcm_den(l, v.y);
    }
    if (!l.fits_slong_p() || l.get_si() > 1000000)
        fail("Internal", "grid unit too large");
    return l.get_si();
}

// ---------------------------------------------------------------------------
// Cell decomposition

namespace {

struct GridIndex {
    std::vector<Rat> xs, ys;
    size_t nx() const { return xs.size() - 1; }
    size_t ny() const { return ys.size() - 1; }
};

// Directed boundary walk of one cell component, interior kept on the left.
// Vertices are grid-index pairs; collinear runs are merged afterwards.
std::vector<Point> trace_component(const GridIndex& g,
                                   const std::function<bool(size_t, size_t)>& in_comp) {
    using VKey = std::pair<size_t, size_t>; // (xi, yi) grid corner
    struct DirEdge {
        VKey to;
        int dir; // 0=right,1=up,2=left,3=down
    };
    std::map<VKey, std::vector<DirEdge>> out;
    size_t edge_total = 0;
    for (size_t i = 0; i < g.nx(); ++i) {
        for (size_t j = 0; j < g.ny(); ++j) {
            if (!in_comp(i, j)) continue;
            bool left = i > 0 && in_comp(i - 1, j);
            bool right = i + 1 < g.nx() && in_comp(i + 1, j);
            bool down = j > 0 && in_comp(i, j - 1);
            bool up = j + 1 < g.ny() && in_comp(i, j + 1);
            if (!left) { out[{i, j + 1}].push_back({{i, j}, 3}); ++edge_total; }
            if (!right) { out[{i + 1, j}].push_back({{i + 1, j + 1}, 1}); ++edge_total; }
            if (!down) { out[{i, j}].push_back({{i + 1, j}, 0}); ++edge_total; }
            if (!up) { out[{i + 1, j + 1}].push_back({{i, j + 1}, 2}); ++edge_total; }
        }
    }
    if (out.empty()) fail("Internal", "empty component");

    VKey start = out.begin()->first;
    std::vector<VKey> loop{start};
    VKey cur = start;
    int in_dir = -1;
    size_t used = 0;
    while (true) {
        auto it = out.find(cur);
        if (it == out.end() || it->second.empty())
            fail("Internal", "boundary walk broke");
        size_t pick = 0;
        if (it->second.size() > 1) {
            // Pinch vertex: take the sharpest left turn to stay on this loop.
            int best = -5;
            for (size_t k = 0; k < it->second.size(); ++k) {
                int turn = in_dir < 0 ? 0 : ((it->second[k].dir - in_dir + 5) % 4) - 1;
                if (turn > best) { best = turn; pick = k; }
            }
        }
        DirEdge e = it->second[pick];
        it->second.erase(it->second.begin() + static_cast<long>(pick));
        if (it->second.empty()) out.erase(it);
        loop.push_back(e.to);
        ++used;
        in_dir = e.dir;
        cur = e.to;
        if (cur == start) break;
        if (used > edge_total) fail("Internal", "boundary walk did not close");
    }
    if (!out.empty()) fail("NotSimple", "component boundary is not a single loop");

    loop.pop_back(); // drop repeated start
    std::vector<Point> pts;
    pts.reserve(loop.size());
    for (const VKey& k : loop) pts.push_back(Point{g.xs[k.first], g.ys[k.second]});
    return pts;
}

size_t lex_min_vertex(const std::vector<Point>& vs) {
    size_t best = 0;
    for (size_t i = 1; i < vs.size(); ++i) {
        if (vs[i].y < vs[best].y || (vs[i].y == vs[best].y && vs[i].x < vs[best].x))
            best = i;
    }
    return best;
}

} // namespace

std::vector<RectilinearPolygon> components_from_cells(
    const std::vector<Rat>& xs, const std::vector<Rat>& ys,
    const std::function<bool(size_t, size_t)>& inside) {
    GridIndex g{xs, ys};
    size_t nx = g.nx(), ny = g.ny();
    std::vector<int> comp(nx * ny, -1);
    auto idx = [&](size_t i, size_t j) { return j * nx + i; };
    int ncomp = 0;
    for (size_t i = 0; i < nx; ++i) {
        for (size_t j = 0; j < ny; ++j) {
            if (!inside(i, j) || comp[idx(i, j)] >= 0) continue;
            std::deque<std::pair<size_t, size_t>> q{{i, j}};
            comp[idx(i, j)] = ncomp;
            while (!q.empty()) {
                auto [a, b] = q.front();
                q.pop_front();
                auto push = [&](size_t c, size_t d) {
                    if (inside(c, d) && comp[idx(c, d)] < 0) {
                        comp[idx(c, d)] = ncomp;
                        q.emplace_back(c, d);
                    }
                };
                if (a > 0) push(a - 1, b);
                if (a + 1 < nx) push(a + 1, b);
                if (b > 0) push(a, b - 1);
                if (b + 1 < ny) push(a, b + 1);
            }
            ++ncomp;
        }
    }

    std::vector<RectilinearPolygon> result;
    for (int c = 0; c < ncomp; ++c) {
        auto in_comp = [&](size_t i, size_t j) { return comp[idx(i, j)] == c; };
        std::vector<Point> pts = trace_component(g, in_comp);
        RectilinearPolygon poly = RectilinearPolygon::normalized(pts);
        result.push_back(poly.rebased(lex_min_vertex(poly.vertices())));
    }
    // Deterministic order: by basepoint, lexicographically (y, then x).
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        const Point& p = a.vertices()[0];
        const Point& q = b.vertices()[0];
        if (p.y != q.y) return p.y < q.y;
        return p.x < q.x;
    });
    return result;
}

std::vector<RectilinearPolygon> subtract_rect(const RectilinearPolygon& p, const Rect& r) {
    if (!p.contains_rect(r)) fail("RectNotInside", "rectangle is not inside the region");

    // One full side of r must lie on the boundary of p.
    bool attached = false;
    const Point bl{r.x0, r.y0}, br{r.x1, r.y0}, tl{r.x0, r.y1}, tr{r.x1, r.y1};
    struct SideRef { Point a, b; Rat len; };
    for (const SideRef& s : {SideRef{bl, br, r.width()}, SideRef{tl, tr, r.width()},
                             SideRef{bl, tl, r.height()}, SideRef{br, tr, r.height()}}) {
        if (p.boundary_overlap_length(s.a, s.b) == s.len) { attached = true; break; }
    }
    if (!attached) fail("RectNotBoundaryAttached", "no side of the rectangle lies on the boundary");

    std::set<Rat> xcut, ycut;
    for (const Point& v : p.vertices()) {
        xcut.insert(v.x);
        ycut.insert(v.y);
    }
    xcut.insert(r.x0); xcut.insert(r.x1);
    ycut.insert(r.y0); ycut.insert(r.y1);
    std::vector<Rat> xs(xcut.begin(), xcut.end()), ys(ycut.begin(), ycut.end());

    size_t nx = xs.size() - 1, ny = ys.size() - 1;
    std::vector<uint8_t> keep(nx * ny, 0);
    for (size_t i = 0; i < nx; ++i) {
        for (size_t j = 0; j < ny; ++j) {
            Point c{(xs[i] + xs[i + 1]) / Rat(2), (ys[j] + ys[j + 1]) / Rat(2)};
            bool inside_p = p.side_of(c) == 2;
            bool in_r = c.x > r.x0 && c.x < r.x1 && c.y > r.y0 && c.y < r.y1;
            keep[j * nx + i] = inside_p && !in_r;
        }
    }
    return components_from_cells(xs, ys, [&](size_t i, size_t j) { return keep[j * nx + i] != 0; });
}

std::vector<Point> parse_polygon_text(const std::string& text) {
    std::vector<Point> pts;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string xs, ys;
        if (!(ls >> xs)) continue; // blank line
        if (!(ls >> ys)) fail("IrrationalCoordinate", "line " + std::to_string(lineno) + ": expected two coordinates");
        std::string extra;
        if (ls >> extra) fail("IrrationalCoordinate", "line " + std::to_string(lineno) + ": trailing tokens");
        auto x = Rat::parse(xs), y = Rat::parse(ys);
        if (!x || !y)
            fail("IrrationalCoordinate", "line " + std::to_string(lineno) + ": not a rational p/q");
        pts.push_back(Point{*x, *y});
    }
    return pts;
}

std::string polygon_to_text(const RectilinearPolygon& p) {
    std::string out;
    for (const Point& v : p.vertices()) {
        out += v.x.str();
        out += ' ';
        out += v.y.str();
        out += '\n';
    }
    return out;
}

} // namespace rectile
