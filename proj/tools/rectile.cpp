#include "rectile/json_io.hpp"
#include "rectile/moves.hpp"
#include "rectile/oracle.hpp"
#include "rectile/svg.hpp"
#include "rectile/tiler.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace rectile;

constexpr int kExitOk = 0;
constexpr int kExitUntileable = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RectileError("ParseError", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw RectileError("ParseError", "cannot write " + path);
    out << text;
}

RectilinearPolygon load_polygon(const std::string& path) {
    return RectilinearPolygon::validate(parse_polygon_text(read_file(path)));
}

struct GlobalOpts {
    std::string beta = "paper";
    std::string k = "auto";

    HeightConfig height_config() const {
        HeightConfig cfg;
        cfg.generic_beta = beta == "generic";
        if (k != "auto") cfg.k = std::stol(k);
        return cfg;
    }
};

int classify_error(const RectileError& e) {
    const std::string& c = e.code();
    if (c == "MaxEdgeNotInteger" || c == "ContactNotInteger" || c == "Internal" ||
        c == "NonIntegerEdge" || c == "PathInconsistent")
        return kExitInternal;
    return kExitInput;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tileability of rectilinear polygons by integer-sided rectangles"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--beta", g.beta, "basepoint residue: paper (1/2) or generic")
        ->check(CLI::IsMember({"paper", "generic"}));
    app.add_option("--k", g.k, "basepoint depth: auto or a positive integer");

    std::string file, file_b, out_svg, out_json, scale_str = "1";
    std::string mode = "fast";
    long bar_n = 1, bar_m = 1;
    size_t enum_cap = 0;
    uint64_t budget = 20000000;
    bool as_json = false, raw_heights = false;
    RenderSpec spec;

    auto* c_check = app.add_subcommand("check", "test whether the boundary word is trivial");
    c_check->add_option("file", file)->required();

    auto* c_heights = app.add_subcommand("heights", "boundary height profiles");
    c_heights->add_option("file", file)->required();
    c_heights->add_flag("--json", as_json);
    c_heights->add_flag("--raw", raw_heights, "report unnormalized heights");

    auto* c_tile = app.add_subcommand("tile", "decide tileability and construct a tiling");
    c_tile->add_option("file", file)->required();
    c_tile->add_option("--mode", mode)->check(CLI::IsMember({"fast", "canonical"}));
    c_tile->add_option("--scale", scale_str, "lattice scale s (tiles need a side in sZ)");
    c_tile->add_option("--svg", out_svg);
    c_tile->add_flag("--json", as_json);

    auto* c_bars = app.add_subcommand("bars", "tile an integer polyomino with 1xm and nx1 bars");
    c_bars->add_option("file", file)->required();
    c_bars->add_option("--n", bar_n, "horizontal bar length")->required();
    c_bars->add_option("--m", bar_m, "vertical bar length")->required();
    c_bars->add_flag("--json", as_json);

    auto* c_norm = app.add_subcommand("normalize", "move sequence to the canonical tiling");
    c_norm->add_option("tiling", file)->required();

    auto* c_conn = app.add_subcommand("connect", "move sequence between two tilings");
    c_conn->add_option("a", file)->required();
    c_conn->add_option("b", file_b)->required();

    auto* c_oracle = app.add_subcommand("oracle", "brute-force grid search");
    c_oracle->add_option("file", file)->required();
    c_oracle->add_option("--enumerate", enum_cap, "enumerate up to N tilings");
    c_oracle->add_option("--budget", budget, "search node budget");

    auto* c_render = app.add_subcommand("render", "SVG drawing of a polygon or tiling");
    c_render->add_option("file", file)->required();
    c_render->add_option("--out", out_json, "output SVG path (default stdout)");
    c_render->add_flag("--heights", spec.show_heights);
    c_render->add_flag("--grid", spec.show_grid);
    c_render->add_flag("--labels", spec.label_tiles);

    CLI11_PARSE(app, argc, argv);

    try {
        HeightConfig cfg = g.height_config();

        if (*c_check) {
            RectilinearPolygon p = load_polygon(file);
            GroupWord w = p.boundary_word();
            if (w.is_identity()) {
                std::cout << "alpha=e\n";
                return kExitOk;
            }
            std::cout << "alpha=" << w.str() << "\n";
            return kExitUntileable;
        }

        if (*c_heights) {
            RectilinearPolygon p = load_polygon(file);
            cfg.normalize = !raw_heights;
            HeightContext ctx = resolve_heights(cfg, p);
            BoundaryHeights bh = boundary_heights(p, ctx);
            if (as_json) {
                std::cout << heights_to_json(p, bh);
            } else {
                std::cout << "edge\tstart\taxis\tlength\tgeneric\tdrops\n";
                for (const EdgeProfile& prof : bh.profiles) {
                    Edge e = p.edge(prof.edge_index);
                    std::cout << prof.edge_index << "\t(" << e.a.x.str() << ',' << e.a.y.str()
                              << ")\t" << (e.axis == Axis::H ? 'H' : 'V') << '\t'
                              << e.length().str() << '\t' << prof.generic_height << '\t';
                    for (size_t i = 0; i < prof.drop_offsets.size(); ++i) {
                        if (i) std::cout << ',';
                        std::cout << prof.drop_offsets[i].str() << ":-" << prof.drop_depths[i];
                    }
                    std::cout << '\n';
                }
                std::cout << "max\t" << bh.max_height << "\nmin\t" << bh.min_height << '\n';
            }
            return kExitOk;
        }

        if (*c_tile) {
            RectilinearPolygon p = load_polygon(file);
            auto scale = Rat::parse(scale_str);
            if (!scale || !scale->is_positive())
                throw RectileError("UnsupportedLattice", "scale must be a positive rational");
            TileMode tm = mode == "fast" ? TileMode::Fast : TileMode::Canonical;
            TileOutcome out = tile(p, tm, cfg, *scale);
            if (!out.tiled) {
                std::cout << "untileable: " << reason_text(out.reason) << "\n";
                return out.reason == UntileableReason::MaxEdgeNotInteger ? kExitInternal
                                                                        : kExitUntileable;
            }
            std::cout << "tiled: " << out.tiling.tiles.size() << " tiles\n";
            if (as_json)
                std::cout << tiling_to_json(out.tiling, mode, cfg.k, g.beta);
            if (!out_svg.empty()) {
                RenderSpec rs;
                write_file(out_svg, render_svg(out.tiling.region, &out.tiling.tiles, nullptr, rs));
            }
            return kExitOk;
        }

        if (*c_bars) {
            RectilinearPolygon p = load_polygon(file);
            TileOutcome out = tile_bars(p, bar_n, bar_m, cfg);
            if (!out.tiled) {
                std::cout << "untileable: " << reason_text(out.reason) << "\n";
                return out.reason == UntileableReason::MaxEdgeNotInteger ? kExitInternal
                                                                        : kExitUntileable;
            }
            std::cout << "tiled: " << out.tiling.tiles.size() << " bars\n";
            if (as_json) std::cout << tiling_to_json(out.tiling, "bars", cfg.k, g.beta);
            return kExitOk;
        }

        if (*c_norm) {
            Tiling t = tiling_from_json(read_file(file));
            auto [t0, trace] = normalize(t, cfg);
            std::cout << trace_to_json(trace);
            return kExitOk;
        }

        if (*c_conn) {
            Tiling a = tiling_from_json(read_file(file));
            Tiling b = tiling_from_json(read_file(file_b));
            MoveTrace trace = connect(a, b, cfg);
            std::cout << trace_to_json(trace);
            return kExitOk;
        }

        if (*c_oracle) {
            RectilinearPolygon p = load_polygon(file);
            if (enum_cap > 0) {
                OracleStats st;
                std::vector<Tiling> ts = enumerate_tilings(p, enum_cap, budget, &st);
                std::cout << "tilings: " << ts.size() << (st.cap_exceeded ? " (cap reached)" : "")
                          << "\n";
                return kExitOk;
            }
            auto t = brute_force(p, budget);
            if (t) {
                std::cout << "tiled: " << t->tiles.size() << " tiles\n";
                return kExitOk;
            }
            std::cout << "untileable: exhaustive grid search\n";
            return kExitOk;
        }

        if (*c_render) {
            std::string text = read_file(file);
            std::string svg;
            if (!text.empty() && text.find_first_not_of(" \t\r\n") != std::string::npos &&
                text[text.find_first_not_of(" \t\r\n")] == '{') {
                Tiling t = tiling_from_json(text);
                BoundaryHeights bh;
                HeightContext ctx = resolve_heights(cfg, t.region);
                if (spec.show_heights) bh = boundary_heights(t.region, ctx);
                svg = render_svg(t.region, &t.tiles, spec.show_heights ? &bh : nullptr, spec);
            } else {
                RectilinearPolygon p = RectilinearPolygon::validate(parse_polygon_text(text));
                BoundaryHeights bh;
                HeightContext ctx = resolve_heights(cfg, p);
                if (spec.show_heights) bh = boundary_heights(p, ctx);
                svg = render_svg(p, nullptr, spec.show_heights ? &bh : nullptr, spec);
            }
            if (out_json.empty()) std::cout << svg;
            else write_file(out_json, svg);
            return kExitOk;
        }
    } catch (const RectileError& e) {
        std::cerr << "ERROR:" << e.code() << ": " << e.what() << "\n";
        return classify_error(e);
    } catch (const std::exception& e) {
        std::cerr << "ERROR:Internal: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}
