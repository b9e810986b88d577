#pragma once

#include "rectile/heights.hpp"
#include "rectile/tiler.hpp"

#include <optional>
#include <string>

namespace rectile {

struct RenderSpec {
    double scale = 80.0; // pixels per unit
    bool show_heights = false;
    bool show_grid = false;
    bool label_tiles = false;
};

/// SVG 1.1 drawing of the region, optionally with tiles and boundary height
/// labels. Coordinates are decimal for layout; each element carries the
/// exact rationals in a comment.
std::string render_svg(const RectilinearPolygon& region, const std::vector<Rect>* tiles,
                       const BoundaryHeights* heights, const RenderSpec& spec);

} // namespace rectile
