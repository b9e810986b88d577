#pragma once

#include "rectile/tiler.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace rectile {

/// Exact rasterization of a polygon onto the refined grid (1/(2L))Z x
/// (1/(2L))Z: a cell is inside iff its closed square lies in the polygon.
struct GridRegion {
    Rat origin_x, origin_y;
    Rat pitch;      // 1/(2L)
    long nx = 0, ny = 0;
    long unit = 0;  // cells per unit length (= 2L)
    std::vector<uint8_t> inside; // ny rows of nx

    static GridRegion rasterize(const RectilinearPolygon& p);
    bool cell(long i, long j) const { return inside[static_cast<size_t>(j) * nx + i] != 0; }
};

struct OracleStats {
    uint64_t nodes = 0;
    bool budget_exceeded = false;
    bool cap_exceeded = false;
};

/// Backtracking search for one grid-aligned tiling with every tile having an
/// integral side: anchors at the lexicographically first uncovered cell
/// (row-major, min y then min x) and tries rectangles by growing width then
/// height. Throws BudgetExceeded when the node budget runs out.
std::optional<Tiling> brute_force(const RectilinearPolygon& p, uint64_t budget,
                                  OracleStats* stats = nullptr);

/// All distinct grid-aligned tilings in deterministic search order, up to
/// `cap` (the partial list is returned with cap_exceeded set).
std::vector<Tiling> enumerate_tilings(const RectilinearPolygon& p, size_t cap, uint64_t budget,
                                      OracleStats* stats = nullptr);

} // namespace rectile
