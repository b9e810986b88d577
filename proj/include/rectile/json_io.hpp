#pragma once

#include "rectile/heights.hpp"
#include "rectile/moves.hpp"
#include "rectile/tiler.hpp"

#include <string>

namespace rectile {

/// Rationals are serialized as "p/q" strings so files round-trip exactly.
std::string tiling_to_json(const Tiling& t, const std::string& mode, long k,
                           const std::string& beta);
Tiling tiling_from_json(const std::string& text);

std::string trace_to_json(const MoveTrace& trace);
std::string heights_to_json(const RectilinearPolygon& p, const BoundaryHeights& bh);

} // namespace rectile
