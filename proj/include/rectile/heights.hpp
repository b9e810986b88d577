#pragma once

#include "rectile/geometry.hpp"
#include "rectile/word.hpp"

#include <vector>

namespace rectile {

/// User-facing height options (CLI --beta / --k map onto this).
struct HeightConfig {
    long k = 0;                // 0 = auto (edge count + 2)
    bool generic_beta = false; // false: beta = 1/2 as in the source basepoint
    bool normalize = true;     // report h - 2k instead of raw h
};

/// Resolved per-region height parameters.
struct HeightContext {
    size_t k = 0;
    Residue beta;   // nonzero; 1/2 or the region's generic residue 1/(6L)
    bool normalize = true;
    long L = 2;     // grid unit of the root region
};

HeightContext resolve_heights(const HeightConfig& cfg, const RectilinearPolygon& root);

/// Number of letters of the suffix of w that cancels exactly against the
/// head of x0^-1 = (v(beta) h(beta))^k, i.e. the longest suffix of the form
/// ... h(-beta) v(-beta).
size_t cancel_depth(const GroupWord& w, const Residue& beta);

/// Height of the point whose boundary path word is `prefix`:
/// len(prefix) + 2k - 2 * cancel_depth, normalized by -2k when requested.
long point_height(const GroupWord& prefix, const HeightContext& ctx);
/// Normalized height, independent of k.
long height_norm(const GroupWord& prefix, const Residue& beta);

/// Height profile of one directed edge. Almost all points share
/// generic_height; drop_offsets lists the exceptional offsets in
/// (0, length] together with their depths below the generic value.
struct EdgeProfile {
    size_t edge_index = 0;
    Rat length;
    long generic_height = 0;
    std::vector<Rat> drop_offsets;
    std::vector<long> drop_depths; // parallel to drop_offsets, all >= 1

    long height_at_offset_sampled(const Rat& offset) const;
    long min_height() const;
};

/// Exact profile via sampling the refined grid (1/(2L))Z over one unit
/// window plus one certified generic offset; the profile is 1-periodic.
EdgeProfile edge_profile(const GroupWord& prefix_at_start, Axis axis,
                         const Rat& signed_length, const HeightContext& ctx);

struct BoundaryHeights {
    std::vector<EdgeProfile> profiles;
    std::vector<long> vertex_heights;
    long max_height = 0;
    long min_height = 0;
    std::vector<size_t> argmax_edges; // edges whose generic height == max
};

/// Heights along the whole boundary of p, paths prefixed by bp_prefix (the
/// word of a path from the global origin to p's basepoint vertex). Requires
/// the boundary word of p to be trivial (code BoundaryWordNotTrivial);
/// also cross-checks every vertex height via the clockwise path.
BoundaryHeights boundary_heights(const RectilinearPolygon& p, const GroupWord& bp_prefix,
                                 const HeightContext& ctx);

inline BoundaryHeights boundary_heights(const RectilinearPolygon& p, const HeightContext& ctx) {
    return boundary_heights(p, GroupWord{}, ctx);
}

} // namespace rectile
