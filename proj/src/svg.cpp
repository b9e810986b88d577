#include "rectile/svg.hpp"

#include <cstdio>
#include <sstream>

namespace rectile {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

const char* kTileFill[] = {"#cfe8ff", "#ffe3c2", "#d9f2d0", "#f2d3e8", "#f6f0bf", "#d9d3f2"};

} // namespace

std::string render_svg(const RectilinearPolygon& region, const std::vector<Rect>* tiles,
                       const BoundaryHeights* heights, const RenderSpec& spec) {
    Rat rx0, ry0, rx1, ry1;
    region.bbox(rx0, ry0, rx1, ry1);
    double pad = 24.0;
    double s = spec.scale;
    double w = (rx1 - rx0).to_double() * s + 2 * pad;
    double h = (ry1 - ry0).to_double() * s + 2 * pad;
    auto X = [&](const Rat& x) { return pad + (x - rx0).to_double() * s; };
    auto Y = [&](const Rat& y) { return h - pad - (y - ry0).to_double() * s; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w)
        << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h) << "\">\n";

    if (spec.show_grid) {
        out << "  <g stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
        for (Rat gx = rx0; gx <= rx1; gx += Rat(1))
            out << "    <line x1=\"" << fmt(X(gx)) << "\" y1=\"" << fmt(Y(ry0)) << "\" x2=\""
                << fmt(X(gx)) << "\" y2=\"" << fmt(Y(ry1)) << "\"/>\n";
        for (Rat gy = ry0; gy <= ry1; gy += Rat(1))
            out << "    <line x1=\"" << fmt(X(rx0)) << "\" y1=\"" << fmt(Y(gy)) << "\" x2=\""
                << fmt(X(rx1)) << "\" y2=\"" << fmt(Y(gy)) << "\"/>\n";
        out << "  </g>\n";
    }

    if (tiles) {
        out << "  <g stroke=\"#555555\" stroke-width=\"1\">\n";
        for (size_t i = 0; i < tiles->size(); ++i) {
            const Rect& r = (*tiles)[i];
            out << "    <!-- exact: x0=" << r.x0.str() << " y0=" << r.y0.str() << " x1="
                << r.x1.str() << " y1=" << r.y1.str() << " -->\n";
            out << "    <rect x=\"" << fmt(X(r.x0)) << "\" y=\"" << fmt(Y(r.y1)) << "\" width=\""
                << fmt((r.x1 - r.x0).to_double() * s) << "\" height=\""
                << fmt((r.y1 - r.y0).to_double() * s) << "\" fill=\"" << kTileFill[i % 6]
                << "\"/>\n";
            if (spec.label_tiles) {
                double cx = (X(r.x0) + X(r.x1)) / 2, cy = (Y(r.y0) + Y(r.y1)) / 2;
                out << "    <text x=\"" << fmt(cx) << "\" y=\"" << fmt(cy)
                    << "\" font-size=\"10\" text-anchor=\"middle\" fill=\"#333333\">" << i
                    << "</text>\n";
            }
        }
        out << "  </g>\n";
    }

    out << "  <polygon fill=\"none\" stroke=\"#000000\" stroke-width=\"2\" points=\"";
    for (const Point& v : region.vertices()) out << fmt(X(v.x)) << ',' << fmt(Y(v.y)) << ' ';
    out << "\"/>\n";
    out << "  <!-- exact region:";
    for (const Point& v : region.vertices()) out << ' ' << v.x.str() << ',' << v.y.str();
    out << " -->\n";

    if (heights) {
        out << "  <g font-size=\"11\" fill=\"#b00000\" text-anchor=\"middle\">\n";
        for (const EdgeProfile& prof : heights->profiles) {
            Edge e = region.edge(prof.edge_index);
            Point mid = e.at(e.length() / Rat(2));
            double dx = e.axis == Axis::H ? 0 : 10;
            double dy = e.axis == Axis::H ? -5 : 3;
            out << "    <text x=\"" << fmt(X(mid.x) + dx) << "\" y=\"" << fmt(Y(mid.y) + dy)
                << "\">" << prof.generic_height << "</text>\n";
        }
        out << "  </g>\n";
    }

    out << "</svg>\n";
    return out.str();
}

} // namespace rectile
