#pragma once

#include "rectile/geometry.hpp"
#include "rectile/word.hpp"

#include <random>
#include <vector>

namespace rectile::fixtures {

inline Rat Q(long n, long d = 1) { return Rat(n, d); }
inline Point P(const Rat& x, const Rat& y) { return Point{x, y}; }

inline RectilinearPolygon square(long side = 1) {
    return RectilinearPolygon::validate(
        {P(Q(0), Q(0)), P(Q(side), Q(0)), P(Q(side), Q(side)), P(Q(0), Q(side))});
}

inline RectilinearPolygon rectangle(const Rat& w, const Rat& h) {
    return RectilinearPolygon::validate({P(Q(0), Q(0)), P(w, Q(0)), P(w, h), P(Q(0), h)});
}

/// The polygon of the worked example, reconstructed from its two boundary
/// path words (counterclockwise and clockwise from the basepoint to the far
/// vertex y).
inline RawWord example_ccw_path() {
    return *parse_raw_word("h(1) v(1/2) h(1/3) v(1/2) h(1/4) v(1/4) h(1/4) v(1)");
}
inline RawWord example_cw_path() {
    return *parse_raw_word("v(3/2) h(1/3) v(1/2) h(1/4) v(1/4) h(5/4)");
}

inline RectilinearPolygon example_polygon() {
    std::vector<Point> pts{P(Q(0), Q(0))};
    for (const auto& [axis, d] : example_ccw_path()) {
        Point last = pts.back();
        if (axis == Axis::H) last.x += d;
        else last.y += d;
        pts.push_back(last);
    }
    RawWord back = example_cw_path(); // basepoint -> y the other way round
    std::vector<Point> tail{P(Q(0), Q(0))};
    for (const auto& [axis, d] : back) {
        Point last = tail.back();
        if (axis == Axis::H) last.x += d;
        else last.y += d;
        tail.push_back(last);
    }
    // ccw loop: forward path to y, then the reversed clockwise path back.
    pts.pop_back(); // y is tail.back()
    for (size_t i = tail.size(); i-- > 1;) pts.push_back(tail[i]);
    return RectilinearPolygon::validate(pts);
}

/// The untileable octagon whose boundary word is trivial.
inline RectilinearPolygon octagon() {
    std::vector<Point> pts{P(Q(0), Q(0))};
    RawWord loop = *parse_raw_word("h(2/3) v(1/3) h(-1/3) v(1) h(-2/3) v(-1/3) h(1/3)");
    for (const auto& [axis, d] : loop) {
        Point last = pts.back();
        if (axis == Axis::H) last.x += d;
        else last.y += d;
        pts.push_back(last);
    }
    return RectilinearPolygon::validate(pts);
}

/// Simply connected unions of cells over a uniform grid, as polygons.
/// Returns nullopt when the subset is empty, disconnected, has a hole, or
/// its boundary is not a simple loop.
inline std::optional<RectilinearPolygon> polygon_from_cell_mask(
    const std::vector<uint8_t>& mask, size_t nx, size_t ny, const Rat& cell) {
    size_t count = 0;
    for (uint8_t cval : mask) count += cval != 0;
    if (count == 0) return std::nullopt;

    // Connectivity over cells.
    std::vector<uint8_t> seen(mask.size(), 0);
    size_t start = 0;
    while (!mask[start]) ++start;
    std::vector<size_t> stack{start};
    seen[start] = 1;
    size_t reached = 1;
    while (!stack.empty()) {
        size_t c = stack.back();
        stack.pop_back();
        size_t i = c % nx, j = c / nx;
        auto push = [&](size_t a, size_t b) {
            size_t k = b * nx + a;
            if (mask[k] && !seen[k]) {
                seen[k] = 1;
                ++reached;
                stack.push_back(k);
            }
        };
        if (i > 0) push(i - 1, j);
        if (i + 1 < nx) push(i + 1, j);
        if (j > 0) push(i, j - 1);
        if (j + 1 < ny) push(i, j + 1);
    }
    if (reached != count) return std::nullopt;

    // Hole check: the complement (padded by one ring) must be connected.
    size_t px = nx + 2, py = ny + 2;
    std::vector<uint8_t> outside(px * py, 0);
    auto in_mask = [&](size_t i, size_t j) {
        if (i == 0 || j == 0 || i > nx || j > ny) return false;
        return mask[(j - 1) * nx + (i - 1)] != 0;
    };
    std::vector<size_t> st2{0};
    outside[0] = 1;
    size_t out_count = 1;
    while (!st2.empty()) {
        size_t c = st2.back();
        st2.pop_back();
        size_t i = c % px, j = c / px;
        auto push = [&](size_t a, size_t b) {
            size_t k = b * px + a;
            if (!outside[k] && !in_mask(a, b)) {
                outside[k] = 1;
                ++out_count;
                st2.push_back(k);
            }
        };
        if (i > 0) push(i - 1, j);
        if (i + 1 < px) push(i + 1, j);
        if (j > 0) push(i, j - 1);
        if (j + 1 < py) push(i, j + 1);
    }
    if (out_count != px * py - count) return std::nullopt;

    std::vector<Rat> xs, ys;
    for (size_t i = 0; i <= nx; ++i) xs.push_back(cell * Rat(static_cast<long>(i)));
    for (size_t j = 0; j <= ny; ++j) ys.push_back(cell * Rat(static_cast<long>(j)));
    try {
        auto comps = components_from_cells(xs, ys, [&](size_t i, size_t j) {
            return mask[j * nx + i] != 0;
        });
        if (comps.size() != 1) return std::nullopt;
        return comps[0];
    } catch (const RectileError&) {
        return std::nullopt; // pinched boundary
    }
}

/// Random polygon that is a union of interior-disjoint rectangles each with
/// an integral side, so its boundary word is trivial and it is tileable by
/// construction. Coordinates in (1/4)Z. Returns the polygon and the witness
/// tiling rectangles.
struct RandomRegion {
    RectilinearPolygon polygon;
    std::vector<Rect> witness;
};

inline std::optional<RandomRegion> random_rect_union(std::mt19937& rng, size_t max_edges) {
    const Rat cell(1, 4);
    const size_t nx = 16, ny = 16;
    std::vector<uint8_t> mask(nx * ny, 0);
    std::vector<Rect> rects;
    std::uniform_int_distribution<int> nrects(1, 3);
    int want = nrects(rng);
    for (int t = 0; t < want; ++t) {
        // Integral side: one dimension a multiple of 4 cells.
        std::uniform_int_distribution<int> d_int(1, 2), d_frac(1, 8), d_pos(0, 11);
        bool wide = rng() & 1;
        int w = wide ? 4 * d_int(rng) : d_frac(rng);
        int h = wide ? d_frac(rng) : 4 * d_int(rng);
        int x = d_pos(rng), y = d_pos(rng);
        if (x + w > static_cast<int>(nx) || y + h > static_cast<int>(ny)) {
            --t;
            continue;
        }
        bool overlap = false;
        for (int j = y; j < y + h && !overlap; ++j)
            for (int i = x; i < x + w && !overlap; ++i)
                if (mask[j * nx + i]) overlap = true;
        bool touches = rects.empty();
        if (!touches) {
            for (int j = y - 1; j <= y + h && !touches; ++j) {
                for (int i = x - 1; i <= x + w && !touches; ++i) {
                    if (i < 0 || j < 0 || i >= static_cast<int>(nx) || j >= static_cast<int>(ny)) continue;
                    bool inside_new = i >= x && i < x + w && j >= y && j < y + h;
                    bool edge_adjacent =
                        (i >= x && i < x + w && (j == y - 1 || j == y + h)) ||
                        (j >= y && j < y + h && (i == x - 1 || i == x + w));
                    if (!inside_new && edge_adjacent && mask[j * nx + i]) touches = true;
                }
            }
        }
        if (overlap || !touches) continue;
        for (int j = y; j < y + h; ++j)
            for (int i = x; i < x + w; ++i) mask[j * nx + i] = 1;
        rects.push_back(Rect{cell * Rat(x), cell * Rat(y), cell * Rat(x + w), cell * Rat(y + h)});
    }
    if (rects.empty()) return std::nullopt;
    auto poly = polygon_from_cell_mask(mask, nx, ny, cell);
    if (!poly || poly->edge_count() > max_edges) return std::nullopt;
    return RandomRegion{*poly, rects};
}

} // namespace rectile::fixtures
