#pragma once

#include "rectile/heights.hpp"
#include "rectile/tiler.hpp"

#include <optional>
#include <vector>

namespace rectile {

/// Split a tile in two, or coalesce two tiles whose union is a rectangle.
/// A move is legal when every rectangle it produces has a side in the
/// tiling's lattice (the condition that keeps all intermediate states valid
/// tilings). Tile ids index the sorted tile order of the state the move is
/// applied to.
struct Move {
    enum class Kind { Split, Merge };
    Kind kind = Kind::Split;
    size_t tile = 0;
    Axis axis = Axis::H; // orientation of the cut segment (Split)
    Rat offset;          // distance of the cut from the tile's lower/left side
    size_t a = 0, b = 0; // Merge operands

    static Move split(size_t tile, Axis axis, const Rat& offset) {
        Move m;
        m.kind = Kind::Split;
        m.tile = tile;
        m.axis = axis;
        m.offset = offset;
        return m;
    }
    static Move merge(size_t a, size_t b) {
        Move m;
        m.kind = Kind::Merge;
        m.a = a;
        m.b = b;
        return m;
    }
};

struct MoveTrace {
    uint64_t start_hash = 0;
    uint64_t end_hash = 0;
    std::vector<Move> moves;
};

/// Apply one move; throws IllegalMove. The result stores tiles sorted.
Tiling apply_move(const Tiling& t, const Move& mv);

/// Replay a move list from `start`; every intermediate state is verified
/// when `verify_each` is set. Returns the final tiling.
Tiling replay(const Tiling& start, const std::vector<Move>& moves, bool verify_each = false);

/// Path words along the edges of a tiling (region boundary plus interior
/// tile edges), rooted at the region basepoint. Construction checks path
/// independence and throws PathInconsistent for invalid tilings.
class TilingPaths {
public:
    TilingPaths(const RectilinearPolygon& region, const std::vector<Rect>& tiles,
                const GroupWord& bp_prefix, const Rat& scale);

    struct Piece {
        Point a, b;   // a -> b, axis-parallel
        Axis axis;
        Rat delta;    // signed, b = a + delta
        bool interior; // tiles on both sides (not on the region boundary)
        GroupWord word_at_a;
    };
    const std::vector<Piece>& pieces() const { return pieces_; }

    /// Maximal straight run of interior pieces, with its exact height profile.
    struct InteriorRun {
        Axis axis;
        Rat fixed;   // line coordinate
        Rat lo, hi;  // span
        long generic_height = 0;
        GroupWord word_at_lo;
    };
    std::vector<InteriorRun> interior_runs(const HeightContext& ctx) const;

    /// Word of the path to a point on some tiling edge, if the point lies
    /// on one.
    std::optional<GroupWord> prefix_of_point(const Point& q) const;

private:
    std::vector<Piece> pieces_;
};

/// Height of a point on an interior tiling edge via its path prefix.
long interior_point_height(const GroupWord& tiling_path_prefix, const HeightContext& ctx);

/// One round of the interior-maximum surgery: pick the highest interior run
/// (it must reach the global maximum, else NoInteriorMax), slice the
/// adjacent tiles at the run's attachment levels and remove the run by
/// merging across it. Returns the new tiling and the moves performed.
std::pair<Tiling, MoveTrace> lower_interior_max(const Tiling& t, const HeightConfig& cfg);

/// Transform t into the canonical tiling (the one the placement algorithm
/// constructs in canonical mode) by a sequence of legal moves.
std::pair<Tiling, MoveTrace> normalize(const Tiling& t, const HeightConfig& cfg);
std::pair<Tiling, MoveTrace> normalize(const Tiling& t, const HeightConfig& cfg,
                                       const TileOutcome& canonical_plan);

/// Move sequence from t1 to t2 (normalize t1, then undo the normalization
/// of t2). Throws DifferentRegions when the regions differ.
MoveTrace connect(const Tiling& t1, const Tiling& t2, const HeightConfig& cfg);
MoveTrace connect(const Tiling& t1, const Tiling& t2, const HeightConfig& cfg,
                  const TileOutcome& canonical_plan);

/// Inverse of a trace: replays it to compute the exact inverse move of each
/// step, in reverse order.
MoveTrace invert_trace(const Tiling& start, const MoveTrace& trace);

/// One lasso per tile from the inductive boundary peeling: a conjugated
/// rectangle word x (h v h v) x^-1, recorded unreduced so that cancellation
/// can be tracked over R itself.
struct Lasso {
    RawWord conjugator;
    Rect tile;
    RawWord raw() const;       // conjugator + rectangle loop + conjugator^-1
    GroupWord reduced() const; // image in G
};

std::vector<Lasso> lasso_decomposition(const Tiling& t);

} // namespace rectile
