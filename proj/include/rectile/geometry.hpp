#pragma once

#include "rectile/rat.hpp"
#include "rectile/word.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rectile {

/// Error with a stable machine-readable code (used for CLI "ERROR:<code>:").
class RectileError : public std::runtime_error {
public:
    RectileError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

struct Point {
    Rat x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

struct Rect {
    Rat x0, y0, x1, y1; // x0 < x1, y0 < y1

    Rat width() const { return x1 - x0; }
    Rat height() const { return y1 - y0; }
    Rat area() const { return width() * height(); }
    bool operator==(const Rect& o) const {
        return x0 == o.x0 && y0 == o.y0 && x1 == o.x1 && y1 == o.y1;
    }
    /// h(w) v(h) h(-w) v(-h), the counterclockwise boundary word.
    GroupWord boundary_word() const;
};

struct Edge {
    Point a, b;
    Axis axis;
    Rat delta; // signed displacement along axis; b = a + delta

    Rat length() const { return delta.abs(); }
    /// Letter value for the sub-path of the first `offset` units of the edge.
    Rat letter_value(const Rat& offset) const {
        return delta.is_negative() ? -offset : offset;
    }
    Point at(const Rat& offset) const;
};

/// Simple axis-parallel polygon, counterclockwise, vertices are the corners
/// (no collinear vertices). Vertex 0 is the basepoint of boundary words.
class RectilinearPolygon {
public:
    RectilinearPolygon() = default; // empty placeholder; build via validate()

    /// Normalizes (merges collinear runs, fixes orientation), checks
    /// simplicity, translates so the basepoint lands on the origin.
    /// Throws RectileError with code NotRectilinear / NotSimple /
    /// ZeroLengthEdge.
    static RectilinearPolygon validate(const std::vector<Point>& pts);

    /// Same normalization and checks but no translation; used for regions
    /// produced during subtraction, which must stay in the parent frame.
    static RectilinearPolygon normalized(const std::vector<Point>& pts);

    const std::vector<Point>& vertices() const { return vs_; }
    size_t edge_count() const { return vs_.size(); }
    Edge edge(size_t i) const;
    std::vector<Edge> edges() const;

    GroupWord boundary_word() const;
    /// prefix_words()[i] = reduced word of the ccw path from the basepoint to
    /// vertex i; entry edge_count() is the full loop word.
    std::vector<GroupWord> prefix_words() const;
    /// Reduced word of the path to the point at `offset` along edge i.
    GroupWord prefix_at(size_t edge_index, const Rat& offset) const;

    Rat area() const; // positive (ccw)
    void bbox(Rat& x0, Rat& y0, Rat& x1, Rat& y1) const;

    /// 0 = outside, 1 = on boundary, 2 = interior.
    int side_of(const Point& q) const;
    bool contains_rect(const Rect& r) const;

    /// Locate q on the boundary as (edge index, offset from edge start).
    std::optional<std::pair<size_t, Rat>> locate_on_boundary(const Point& q) const;

    /// Total length of overlap of the segment [a,b] (axis-parallel) with the
    /// boundary edges collinear to it.
    Rat boundary_overlap_length(const Point& a, const Point& b) const;

    RectilinearPolygon translated(const Rat& dx, const Rat& dy) const;
    /// Cyclic rotation of the vertex list so vertex `i` becomes the basepoint.
    RectilinearPolygon rebased(size_t i) const;

    bool operator==(const RectilinearPolygon& o) const { return vs_ == o.vs_; }

private:
    std::vector<Point> vs_;
};

bool paths_equal_in_G(const RawWord& a, const RawWord& b);

/// Smallest even L with every coordinate of p in (1/L)Z.
long grid_unit(const RectilinearPolygon& p);

/// Closures of the connected components of p minus r. Requires r inside p
/// with one full side of r on the boundary of p (codes RectNotInside,
/// RectNotBoundaryAttached). Components keep the parent coordinate frame;
/// each component's basepoint is its lexicographically smallest vertex
/// (min y, then min x).
std::vector<RectilinearPolygon> subtract_rect(const RectilinearPolygon& p, const Rect& r);

/// Polygon text format: one "x y" pair per line, '#' comments, first vertex
/// is the basepoint. Throws RectileError (IrrationalCoordinate) on bad input.
std::vector<Point> parse_polygon_text(const std::string& text);
std::string polygon_to_text(const RectilinearPolygon& p);

/// Cell-decomposition helper shared by subtraction, the oracle and tests:
/// given sorted cut coordinates and an inside predicate per cell, return the
/// boundary polygons of the connected components (4-adjacency).
std::vector<RectilinearPolygon> components_from_cells(
    const std::vector<Rat>& xs, const std::vector<Rat>& ys,
    const std::function<bool(size_t, size_t)>& inside);

} // namespace rectile
