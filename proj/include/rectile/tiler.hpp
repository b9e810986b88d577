#pragma once

#include "rectile/geometry.hpp"
#include "rectile/heights.hpp"
#include "rectile/word.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rectile {

enum class TileMode { Fast, Canonical };

/// A tiling of a region by axis-parallel rectangles, each having a side in
/// the lattice scale*Z.
struct Tiling {
    RectilinearPolygon region;
    std::vector<Rect> tiles;
    Rat scale = Rat(1);

    std::vector<Rect> sorted_tiles() const;
    uint64_t hash() const;
};

enum class UntileableReason { NullBoundaryFails, HeightMismatchOnCut, MaxEdgeNotInteger };

std::string reason_text(UntileableReason r);

struct PlacementStep {
    size_t component_id = 0;
    size_t edge_index = 0; // the chosen max edge s, within the component
    Rat edge_length;
    Rat r;
    int rule = 0;               // 1: opposite edge drops below max; 2: obstruction
    bool contact_integer = true; // rule-2 diagnostic: |s' ∩ boundary| integral
    Rect rect;
};

/// One work item of the placement loop: a region piece plus the word of a
/// path from the global origin to its basepoint vertex (heights on pieces
/// are inherited from the parent region, not recomputed from scratch).
struct ComponentTask {
    RectilinearPolygon polygon;
    GroupWord bp_prefix;
};

struct PlanStep {
    ComponentTask component;
    PlacementStep placement;
};

struct TileOutcome {
    bool tiled = false;
    UntileableReason reason = UntileableReason::NullBoundaryFails;
    std::optional<Point> mismatch_witness;
    Tiling tiling;                // valid when tiled
    std::vector<PlanStep> plan;   // placements in execution order
};

/// Decide tileability of p by rectangles with a side in scale*Z and build a
/// tiling. Fast mode finishes integral components with the slab decomposition;
/// canonical mode keeps placing max-edge rectangles until nothing is left
/// (the normal form targeted by the move calculus).
TileOutcome tile(const RectilinearPolygon& p, TileMode mode, const HeightConfig& cfg,
                 const Rat& scale = Rat(1));

/// One placement: pick the lowest-index integral-length edge among the edges
/// of maximal height, then r = min over the two stopping rules. Throws
/// MaxEdgeNotInteger when no maximal edge has integral length.
PlacementStep place_max_edge_rect(const RectilinearPolygon& component, const GroupWord& bp_prefix,
                                  const BoundaryHeights& bh, const HeightContext& ctx);

/// Slab decomposition of a polygon all of whose edges have integral length:
/// one height-1 strip piece per tile. Throws NonIntegerEdge otherwise.
Tiling trivial_tile(const RectilinearPolygon& p);

struct VerifyResult {
    bool ok = true;
    std::string diagnostic;
};

/// Exact partition check plus the lattice side condition per tile.
VerifyResult verify_tiling(const Tiling& t);

RectilinearPolygon scale_polygon(const RectilinearPolygon& p, const Rat& sx, const Rat& sy);

/// Bar tilings of an integer polyomino: rectangles n wide by 1 tall or
/// 1 wide by m tall, via the anisotropic rescale (1/n, 1/m).
TileOutcome tile_bars(const RectilinearPolygon& polyomino, long n, long m,
                      const HeightConfig& cfg, TileMode mode = TileMode::Fast);

} // namespace rectile
