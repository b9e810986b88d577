#include "rectile/tiler.hpp"

#include "rectile/oracle.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <random>

using namespace rectile;
using fixtures::P;
using fixtures::Q;

namespace {

const HeightConfig kPaper{};

Rat at_max_length(const RectilinearPolygon& p, const GroupWord& bp, const HeightContext& ctx,
                  long level) {
    BoundaryHeights bh = boundary_heights(p, bp, ctx);
    Rat total;
    for (const EdgeProfile& prof : bh.profiles)
        if (prof.generic_height == level) total += prof.length;
    return total;
}

} // namespace

TEST_CASE("tile: unit square") {
    TileOutcome out = tile(fixtures::square(), TileMode::Fast, kPaper);
    REQUIRE(out.tiled);
    CHECK(out.tiling.tiles.size() == 1);
    CHECK(verify_tiling(out.tiling).ok);
}

TEST_CASE("tile: the trivial-word octagon is untileable") {
    auto oct = fixtures::octagon();
    CHECK(oct.boundary_word().is_identity());
    TileOutcome out = tile(oct, TileMode::Fast, kPaper);
    REQUIRE_FALSE(out.tiled);
    CHECK(out.reason == UntileableReason::HeightMismatchOnCut);
}

TEST_CASE("tile: rectangles need an integral side") {
    const Rat sides[] = {Q(1, 3), Q(1, 2), Q(2, 3), Q(1), Q(4, 3), Q(3, 2), Q(2)};
    for (const Rat& a : sides) {
        for (const Rat& b : sides) {
            TileOutcome out = tile(fixtures::rectangle(a, b), TileMode::Fast, kPaper);
            bool expect = a.is_integer() || b.is_integer();
            CHECK(out.tiled == expect);
            if (out.tiled) CHECK(verify_tiling(out.tiling).ok);
        }
    }
}

TEST_CASE("tile: worked example constructs its canonical tiling") {
    auto p = fixtures::example_polygon();
    TileOutcome fast = tile(p, TileMode::Fast, kPaper);
    TileOutcome canon = tile(p, TileMode::Canonical, kPaper);
    REQUIRE(fast.tiled);
    REQUIRE(canon.tiled);
    CHECK(verify_tiling(fast.tiling).ok);
    CHECK(verify_tiling(canon.tiling).ok);

    std::vector<Rect> expect{
        {Q(0), Q(0), Q(1), Q(1)},          {Q(0), Q(1), Q(1), Q(3, 2)},
        {Q(1, 3), Q(3, 2), Q(4, 3), Q(2)}, {Q(7, 12), Q(2), Q(19, 12), Q(9, 4)},
        {Q(1), Q(1, 2), Q(4, 3), Q(3, 2)}, {Q(4, 3), Q(1), Q(19, 12), Q(2)},
        {Q(19, 12), Q(5, 4), Q(11, 6), Q(9, 4)}};
    CHECK(canon.tiling.sorted_tiles() == expect);
    CHECK(fast.tiling.sorted_tiles() == expect);

    // First placement: the integral max edge (index 7, the v(1) wall), case 1
    // with width 1/4.
    REQUIRE_FALSE(canon.plan.empty());
    const PlacementStep& first = canon.plan[0].placement;
    CHECK(first.edge_index == 7);
    CHECK(first.r == Q(1, 4));
    CHECK(first.rule == 1);
    CHECK(first.rect == Rect{Q(19, 12), Q(5, 4), Q(11, 6), Q(9, 4)});
}

TEST_CASE("place_max_edge_rect: 2x2 square in canonical mode") {
    auto p = fixtures::square(2);
    HeightContext ctx = resolve_heights(kPaper, p);
    BoundaryHeights bh = boundary_heights(p, ctx);
    PlacementStep step = place_max_edge_rect(p, GroupWord{}, bh, ctx);
    CHECK(step.rule == 2);
    CHECK(step.r == Q(2));
    CHECK(step.rect == Rect{Q(0), Q(0), Q(2), Q(2)});
    TileOutcome out = tile(p, TileMode::Canonical, kPaper);
    REQUIRE(out.tiled);
    CHECK(out.tiling.tiles.size() == 1);
}

TEST_CASE("place_max_edge_rect: 1 x 5/2 places full-width slabs") {
    auto p = fixtures::rectangle(Q(1), Q(5, 2));
    TileOutcome out = tile(p, TileMode::Fast, kPaper);
    REQUIRE(out.tiled);
    for (const Rect& t : out.tiling.tiles) CHECK(t.width() == Q(1));
    // Cross-check existence against the exhaustive grid search.
    auto oracle = brute_force(p, 2000000);
    REQUIRE(oracle);
    CHECK(verify_tiling(*oracle).ok);
}

TEST_CASE("trivial_tile") {
    Tiling t = trivial_tile(fixtures::rectangle(Q(3), Q(2)));
    CHECK(t.tiles.size() == 2);
    for (const Rect& r : t.tiles) {
        CHECK(r.width() == Q(3));
        CHECK(r.height() == Q(1));
    }
    CHECK(verify_tiling(t).ok);

    // L-shaped hexomino: 2x2 block plus a 1x2 leg.
    RectilinearPolygon ell = RectilinearPolygon::validate(
        {P(Q(0), Q(0)), P(Q(3), Q(0)), P(Q(3), Q(1)), P(Q(2), Q(1)), P(Q(2), Q(2)), P(Q(0), Q(2))});
    Tiling lt = trivial_tile(ell);
    CHECK(verify_tiling(lt).ok);
    CHECK(lt.tiles.size() == 2);

    CHECK(trivial_tile(fixtures::square()).tiles.size() == 1);
    CHECK_THROWS_WITH_AS(trivial_tile(fixtures::rectangle(Q(3, 2), Q(1))),
                         doctest::Contains("integral"), RectileError);
}

TEST_CASE("verify_tiling diagnostics") {
    Tiling ok;
    ok.region = fixtures::square();
    ok.tiles = {Rect{Q(0), Q(0), Q(1), Q(1, 2)}, Rect{Q(0), Q(1, 2), Q(1), Q(1)}};
    CHECK(verify_tiling(ok).ok); // both pieces have width 1

    Tiling bad_side;
    bad_side.region = fixtures::square();
    bad_side.tiles = {Rect{Q(0), Q(0), Q(1, 2), Q(3, 4)}, Rect{Q(1, 2), Q(0), Q(1), Q(3, 4)},
                      Rect{Q(0), Q(3, 4), Q(1), Q(1)}};
    VerifyResult v = verify_tiling(bad_side);
    CHECK_FALSE(v.ok);
    CHECK(v.diagnostic.find("lattice") != std::string::npos);

    Tiling overlap;
    overlap.region = fixtures::square();
    overlap.tiles = {Rect{Q(0), Q(0), Q(1), Q(1)}, Rect{Q(0), Q(0), Q(1), Q(1)}};
    v = verify_tiling(overlap);
    CHECK_FALSE(v.ok);
    CHECK(v.diagnostic.find("overlap") != std::string::npos);

    Tiling gap;
    gap.region = fixtures::square();
    gap.tiles = {Rect{Q(0), Q(0), Q(1), Q(1, 2)}};
    CHECK_FALSE(verify_tiling(gap).ok);
}

TEST_CASE("scale_polygon") {
    auto sq = fixtures::square();
    RectilinearPolygon scaled = scale_polygon(sq, Q(1, 2), Q(1, 3));
    CHECK(scaled.vertices()[2] == P(Q(1, 2), Q(1, 3)));
    RectilinearPolygon back = scale_polygon(scaled, Q(2), Q(3));
    CHECK(back.vertices() == sq.vertices());
}

TEST_CASE("lattice scale: tiles need a side in sZ") {
    auto p = fixtures::rectangle(Q(1, 2), Q(1, 3));
    // With s = 1/6 both sides are in the lattice.
    TileOutcome out = tile(p, TileMode::Fast, kPaper, Q(1, 6));
    REQUIRE(out.tiled);
    CHECK(out.tiling.scale == Q(1, 6));
    CHECK(verify_tiling(out.tiling).ok);
    // The 1/2 side itself lies in (1/2)Z, so scale 1/2 still works.
    CHECK(tile(p, TileMode::Fast, kPaper, Q(1, 2)).tiled);
    // Neither 1/3 nor 1/5 is in (1/2)Z.
    TileOutcome bad = tile(fixtures::rectangle(Q(1, 3), Q(1, 5)), TileMode::Fast, kPaper, Q(1, 2));
    CHECK_FALSE(bad.tiled);
}

TEST_CASE("tile_bars") {
    TileOutcome dominoes = tile_bars(fixtures::rectangle(Q(2), Q(3)), 2, 2, kPaper);
    REQUIRE(dominoes.tiled);
    CHECK(verify_tiling(dominoes.tiling).ok);
    for (const Rect& t : dominoes.tiling.tiles)
        CHECK(((t.width() == Q(2) && t.height() == Q(1)) ||
               (t.width() == Q(1) && t.height() == Q(2))));

    TileOutcome odd = tile_bars(fixtures::square(3), 2, 2, kPaper);
    CHECK_FALSE(odd.tiled);

    // Mutilated 8x8 board: opposite corner cells removed.
    RectilinearPolygon mutil = RectilinearPolygon::validate(
        {P(Q(1), Q(0)), P(Q(8), Q(0)), P(Q(8), Q(7)), P(Q(7), Q(7)), P(Q(7), Q(8)),
         P(Q(0), Q(8)), P(Q(0), Q(1)), P(Q(1), Q(1))});
    TileOutcome m = tile_bars(mutil, 2, 2, kPaper);
    REQUIRE_FALSE(m.tiled);
    CHECK(m.reason == UntileableReason::NullBoundaryFails);

    // Mixed bars on a 3x2 box.
    TileOutcome mixed = tile_bars(fixtures::rectangle(Q(3), Q(2)), 3, 2, kPaper);
    REQUIRE(mixed.tiled);
    CHECK(verify_tiling(mixed.tiling).ok);
}

TEST_CASE("soundness on random trivially-tileable regions") {
    std::mt19937 rng(53);
    size_t tested = 0;
    for (int trial = 0; trial < 300 && tested < 40; ++trial) {
        auto region = fixtures::random_rect_union(rng, 12);
        if (!region) continue;
        ++tested;
        for (TileMode mode : {TileMode::Fast, TileMode::Canonical}) {
            TileOutcome out = tile(region->polygon, mode, kPaper);
            REQUIRE(out.tiled);
            CHECK(verify_tiling(out.tiling).ok);
        }
    }
    CHECK(tested >= 25);
}

TEST_CASE("tile corners stay on the refined lattice") {
    auto p = fixtures::example_polygon();
    long L = grid_unit(p);
    for (TileMode mode : {TileMode::Fast, TileMode::Canonical}) {
        TileOutcome out = tile(p, mode, kPaper);
        REQUIRE(out.tiled);
        for (const Rect& r : out.tiling.tiles) {
            for (const Rat& c : {r.x0, r.y0, r.x1, r.y1})
                CHECK((c * Rat(2 * L)).is_integer());
        }
    }
}

TEST_CASE("progress: boundary length at the maximum drops by a positive integer") {
    auto p = fixtures::example_polygon();
    TileOutcome out = tile(p, TileMode::Canonical, kPaper);
    REQUIRE(out.tiled);
    HeightContext ctx = resolve_heights(kPaper, p);
    // In canonical mode every nonempty component shows up as a later step, so
    // children can be looked up with their inherited prefixes.
    auto find_task = [&](const RectilinearPolygon& poly) -> const ComponentTask* {
        for (const PlanStep& ps : out.plan)
            if (ps.component.polygon == poly) return &ps.component;
        return nullptr;
    };
    for (const PlanStep& ps : out.plan) {
        const RectilinearPolygon& comp = ps.component.polygon;
        BoundaryHeights bh = boundary_heights(comp, ps.component.bp_prefix, ctx);
        long M = bh.max_height;
        Rat before = at_max_length(comp, ps.component.bp_prefix, ctx, M);
        Rat after;
        for (const RectilinearPolygon& child : subtract_rect(comp, ps.placement.rect)) {
            const ComponentTask* task = find_task(child);
            REQUIRE(task);
            BoundaryHeights cb = boundary_heights(child, task->bp_prefix, ctx);
            for (const EdgeProfile& prof : cb.profiles)
                if (prof.generic_height == M) after += prof.length;
        }
        Rat drop = before - after;
        CHECK(drop.is_positive());
        CHECK(drop.is_integer());
    }
}

TEST_CASE("canonical termination stays within the area bound") {
    auto p = fixtures::example_polygon();
    TileOutcome out = tile(p, TileMode::Canonical, kPaper);
    REQUIRE(out.tiled);
    long L = grid_unit(p);
    Rat bound = p.area() * Rat(2 * L) * Rat(2 * L);
    CHECK(Rat(static_cast<long>(out.tiling.tiles.size())) <= bound);
    CHECK(out.tiling.tiles.size() <= 50);
}
