#include "rectile/json_io.hpp"

#include <json.hpp>

namespace rectile {

using nlohmann::json;

namespace {

Rat rat_field(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) {
        auto r = Rat::parse(j.get<std::string>());
        if (r) return *r;
    }
    throw RectileError("IrrationalCoordinate", "expected a rational \"p/q\" string");
}

} // namespace

std::string tiling_to_json(const Tiling& t, const std::string& mode, long k,
                           const std::string& beta) {
    json j;
    j["region"] = json::array();
    for (const Point& v : t.region.vertices()) j["region"].push_back({v.x.str(), v.y.str()});
    j["basepoint_index"] = 0;
    j["tiles"] = json::array();
    for (const Rect& r : t.tiles)
        j["tiles"].push_back({r.x0.str(), r.y0.str(), r.x1.str(), r.y1.str()});
    j["scale"] = t.scale.str();
    j["mode"] = mode;
    if (k > 0) j["k"] = k;
    else j["k"] = "auto";
    j["beta"] = beta;
    return j.dump(2) + "\n";
}

Tiling tiling_from_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw RectileError("ParseError", "invalid JSON");
    Tiling t;
    std::vector<Point> pts;
    for (const auto& v : j.at("region")) pts.push_back(Point{rat_field(v.at(0)), rat_field(v.at(1))});
    t.region = RectilinearPolygon::normalized(pts);
    for (const auto& r : j.at("tiles"))
        t.tiles.push_back(Rect{rat_field(r.at(0)), rat_field(r.at(1)), rat_field(r.at(2)), rat_field(r.at(3))});
    if (j.contains("scale")) t.scale = rat_field(j.at("scale"));
    return t;
}

std::string trace_to_json(const MoveTrace& trace) {
    json arr = json::array();
    for (const Move& m : trace.moves) {
        json j;
        if (m.kind == Move::Kind::Split) {
            j["op"] = "split";
            j["tile"] = m.tile;
            j["axis"] = m.axis == Axis::H ? "H" : "V";
            j["offset"] = m.offset.str();
        } else {
            j["op"] = "merge";
            j["a"] = m.a;
            j["b"] = m.b;
        }
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string heights_to_json(const RectilinearPolygon& p, const BoundaryHeights& bh) {
    json j;
    j["max"] = bh.max_height;
    j["min"] = bh.min_height;
    j["edges"] = json::array();
    for (const EdgeProfile& prof : bh.profiles) {
        Edge e = p.edge(prof.edge_index);
        json je;
        je["edge"] = prof.edge_index;
        je["start"] = {e.a.x.str(), e.a.y.str()};
        je["axis"] = e.axis == Axis::H ? "H" : "V";
        je["length"] = e.length().str();
        je["generic_height"] = prof.generic_height;
        je["drops"] = json::array();
        for (size_t i = 0; i < prof.drop_offsets.size(); ++i)
            je["drops"].push_back({{"offset", prof.drop_offsets[i].str()},
                                   {"depth", prof.drop_depths[i]}});
        j["edges"].push_back(je);
    }
    return j.dump(2) + "\n";
}

} // namespace rectile
