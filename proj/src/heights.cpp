#include "rectile/heights.hpp"

#include <algorithm>

namespace rectile {

HeightContext resolve_heights(const HeightConfig& cfg, const RectilinearPolygon& root) {
    HeightContext ctx;
    ctx.L = grid_unit(root);
    ctx.beta = cfg.generic_beta ? Residue(Rat(1, 6 * ctx.L)) : Residue(Rat(1, 2));
    ctx.k = cfg.k > 0 ? static_cast<size_t>(cfg.k) : root.edge_count() + 2;
    ctx.normalize = cfg.normalize;
    return ctx;
}

size_t cancel_depth(const GroupWord& w, const Residue& beta) {
    const Residue target = -beta; // cancels against +beta letters of x0^-1
    const auto& ls = w.letters();
    size_t c = 0;
    Axis expected = Axis::V; // x0^-1 starts with v(beta)
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        if (it->axis != expected || it->res != target) break;
        ++c;
        expected = other(expected);
    }
    return c;
}

long height_norm(const GroupWord& prefix, const Residue& beta) {
    return static_cast<long>(prefix.length()) - 2 * static_cast<long>(cancel_depth(prefix, beta));
}

long point_height(const GroupWord& prefix, const HeightContext& ctx) {
    long h = height_norm(prefix, ctx.beta);
    return ctx.normalize ? h : h + 2 * static_cast<long>(ctx.k);
}

long EdgeProfile::height_at_offset_sampled(const Rat& offset) const {
    for (size_t i = 0; i < drop_offsets.size(); ++i)
        if (drop_offsets[i] == offset) return generic_height - drop_depths[i];
    return generic_height;
}

long EdgeProfile::min_height() const {
    long m = generic_height;
    for (long d : drop_depths) m = std::min(m, generic_height - d);
    return m;
}

EdgeProfile edge_profile(const GroupWord& prefix_at_start, Axis axis,
                         const Rat& signed_length, const HeightContext& ctx) {
    EdgeProfile prof;
    prof.length = signed_length.abs();
    if (prof.length.is_zero())
        throw RectileError("Internal", "edge_profile: zero length");
    int dir = signed_length.sign();

    auto height_at = [&](const Rat& offset) {
        Rat value = dir > 0 ? offset : -offset;
        return point_height(prefix_at_start.appended(axis, value), ctx);
    };

    // Generic height: the value taken on all but a measure-zero set of
    // offsets. An offset is exceptional only when the edge letter vanishes
    // or lands on the basepoint residue, and both lower the height, so the
    // generic value is the maximum over candidates with distinct residues
    // (at most two residues are exceptional; 1/(10L) in particular collides
    // with neither the refined grid nor either basepoint residue).
    std::vector<Rat> candidates{Rat(1, 10 * ctx.L), Rat(1, 6 * ctx.L), Rat(1, 14 * ctx.L),
                                prof.length / Rat(7), prof.length * Rat(2, 7),
                                prof.length * Rat(3, 7)};
    bool have = false;
    for (const Rat& g : candidates) {
        if (!g.is_positive() || g > prof.length) continue;
        long h = height_at(g);
        if (!have || h > prof.generic_height) prof.generic_height = h;
        have = true;
    }
    if (!have) throw RectileError("Internal", "edge_profile: no generic sample");

    // One unit window of the refined grid; the pattern repeats with period 1.
    const long twoL = 2 * ctx.L;
    for (long j = 1; j <= twoL; ++j) {
        Rat base(j, twoL);
        if (base > prof.length) break;
        long h = height_at(base);
        if (h >= prof.generic_height) continue;
        for (Rat o = base; o <= prof.length; o += Rat(1)) {
            prof.drop_offsets.push_back(o);
            prof.drop_depths.push_back(prof.generic_height - h);
        }
    }
    // Offsets ascending.
    std::vector<size_t> order(prof.drop_offsets.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return prof.drop_offsets[a] < prof.drop_offsets[b];
    });
    EdgeProfile sorted = prof;
    for (size_t i = 0; i < order.size(); ++i) {
        sorted.drop_offsets[i] = prof.drop_offsets[order[i]];
        sorted.drop_depths[i] = prof.drop_depths[order[i]];
    }
    return sorted;
}

BoundaryHeights boundary_heights(const RectilinearPolygon& p, const GroupWord& bp_prefix,
                                 const HeightContext& ctx) {
    if (!p.boundary_word().is_identity())
        throw RectileError("BoundaryWordNotTrivial", "boundary word does not reduce to e");

    BoundaryHeights bh;
    size_t n = p.edge_count();
    std::vector<GroupWord> prefixes = p.prefix_words();

    // Two-sided consistency: the clockwise path to each vertex must give the
    // same height as the counterclockwise one.
    for (size_t i = 0; i <= n; ++i) {
        GroupWord ccw = concat(bp_prefix, prefixes[i]);
        GroupWord cw_path = concat(prefixes[n], prefixes[i].inverted()).inverted();
        GroupWord cw = concat(bp_prefix, cw_path);
        if (point_height(ccw, ctx) != point_height(cw, ctx))
            throw RectileError("BoundaryWordNotTrivial", "ccw/cw heights disagree");
        if (i < n) bh.vertex_heights.push_back(point_height(ccw, ctx));
    }

    for (size_t i = 0; i < n; ++i) {
        Edge e = p.edge(i);
        EdgeProfile prof = edge_profile(concat(bp_prefix, prefixes[i]), e.axis, e.delta, ctx);
        prof.edge_index = i;
        bh.profiles.push_back(std::move(prof));
    }

    bh.max_height = bh.profiles[0].generic_height;
    bh.min_height = bh.vertex_heights[0];
    for (size_t i = 0; i < n; ++i) {
        bh.max_height = std::max(bh.max_height, bh.profiles[i].generic_height);
        bh.min_height = std::min(bh.min_height, std::min(bh.profiles[i].min_height(), bh.vertex_heights[i]));
    }
    for (size_t i = 0; i < n; ++i)
        if (bh.profiles[i].generic_height == bh.max_height) bh.argmax_edges.push_back(i);
    return bh;
}

} // namespace rectile
