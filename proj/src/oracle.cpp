#include "rectile/oracle.hpp"

#include <array>

namespace rectile {

GridRegion GridRegion::rasterize(const RectilinearPolygon& p) {
    GridRegion g;
    long L = grid_unit(p);
    g.unit = 2 * L;
    g.pitch = Rat(1, g.unit);
    Rat x0, y0, x1, y1;
    p.bbox(x0, y0, x1, y1);
    g.origin_x = x0;
    g.origin_y = y0;
    Rat w = (x1 - x0) / g.pitch, h = (y1 - y0) / g.pitch;
    if (!w.is_integer() || !h.is_integer())
        throw RectileError("Internal", "polygon does not align with its refined grid");
    g.nx = static_cast<long>(w.num().get_si());
    g.ny = static_cast<long>(h.num().get_si());
    if (g.nx <= 0 || g.ny <= 0 || g.nx * g.ny > 4000000)
        throw RectileError("BudgetExceeded", "grid too large to rasterize");
    g.inside.assign(static_cast<size_t>(g.nx * g.ny), 0);
    for (long j = 0; j < g.ny; ++j) {
        for (long i = 0; i < g.nx; ++i) {
            Point c{g.origin_x + g.pitch * Rat(2 * i + 1, 2), g.origin_y + g.pitch * Rat(2 * j + 1, 2)};
            g.inside[static_cast<size_t>(j) * g.nx + i] = p.side_of(c) == 2;
        }
    }
    return g;
}

namespace {

struct Searcher {
    const GridRegion& g;
    const RectilinearPolygon& region;
    uint64_t budget;
    OracleStats stats;
    std::vector<uint8_t> covered;
    std::vector<std::array<long, 4>> placed; // i0, j0, w, h in cells
    std::vector<Tiling>* sink = nullptr;     // enumerate mode
    size_t cap = 1;
    bool done = false;

    Searcher(const GridRegion& g_, const RectilinearPolygon& r) : g(g_), region(r) {
        covered.assign(g.inside.size(), 0);
    }

    bool free_cell(long i, long j) const {
        size_t k = static_cast<size_t>(j) * g.nx + i;
        return g.inside[k] && !covered[k];
    }

    bool find_anchor(long& ai, long& aj) const {
        for (long j = 0; j < g.ny; ++j)
            for (long i = 0; i < g.nx; ++i)
                if (free_cell(i, j)) { ai = i; aj = j; return true; }
        return false;
    }

    void mark(long i0, long j0, long w, long h, uint8_t v) {
        for (long j = j0; j < j0 + h; ++j)
            for (long i = i0; i < i0 + w; ++i)
                covered[static_cast<size_t>(j) * g.nx + i] = v;
    }

    bool fits(long i0, long j0, long w, long h) const {
        if (i0 + w > g.nx || j0 + h > g.ny) return false;
        for (long j = j0; j < j0 + h; ++j)
            for (long i = i0; i < i0 + w; ++i)
                if (!free_cell(i, j)) return false;
        return true;
    }

    Tiling snapshot() const {
        Tiling t;
        t.region = region;
        for (const auto& r : placed) {
            Rat x0 = g.origin_x + g.pitch * Rat(r[0]);
            Rat y0 = g.origin_y + g.pitch * Rat(r[1]);
            t.tiles.push_back(Rect{x0, y0, x0 + g.pitch * Rat(r[2]), y0 + g.pitch * Rat(r[3])});
        }
        return t;
    }

    void search() {
        if (done) return;
        if (++stats.nodes > budget) {
            stats.budget_exceeded = true;
            throw RectileError("BudgetExceeded", "oracle node budget exhausted");
        }
        long ai, aj;
        if (!find_anchor(ai, aj)) {
            if (sink) {
                sink->push_back(snapshot());
                if (sink->size() >= cap) {
                    stats.cap_exceeded = true;
                    done = true;
                }
            } else {
                done = true;
            }
            return;
        }
        long max_w = 0;
        while (fits(ai, aj, max_w + 1, 1)) ++max_w;
        for (long w = 1; w <= max_w && !done; ++w) {
            long max_h = 0;
            while (fits(ai, aj, w, max_h + 1)) ++max_h;
            for (long h = 1; h <= max_h && !done; ++h) {
                bool admissible = (w % g.unit == 0) || (h % g.unit == 0);
                if (!admissible) continue;
                mark(ai, aj, w, h, 1);
                placed.push_back({ai, aj, w, h});
                search();
                placed.pop_back();
                mark(ai, aj, w, h, 0);
            }
        }
    }
};

} // namespace

std::optional<Tiling> brute_force(const RectilinearPolygon& p, uint64_t budget, OracleStats* stats) {
    GridRegion g = GridRegion::rasterize(p);
    Searcher s(g, p);
    s.budget = budget;
    std::vector<Tiling> sols;
    s.sink = &sols;
    s.cap = 1;
    s.search();
    if (stats) {
        *stats = s.stats;
        stats->cap_exceeded = false;
    }
    if (sols.empty()) return std::nullopt;
    return sols[0];
}

std::vector<Tiling> enumerate_tilings(const RectilinearPolygon& p, size_t cap, uint64_t budget,
                                      OracleStats* stats) {
    GridRegion g = GridRegion::rasterize(p);
    Searcher s(g, p);
    s.budget = budget;
    std::vector<Tiling> sols;
    s.sink = &sols;
    s.cap = cap;
    s.search();
    if (stats) *stats = s.stats;
    return sols;
}

} // namespace rectile
