#pragma once

#include "rectile/rat.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rectile {

enum class Axis : uint8_t { H, V };

inline Axis other(Axis a) { return a == Axis::H ? Axis::V : Axis::H; }
inline char axis_char(Axis a) { return a == Axis::H ? 'h' : 'v'; }

/// A value in R/Z, stored as a rational in [0, 1).
class Residue {
public:
    Residue() = default;
    explicit Residue(const Rat& r) : v_(r.frac()) {}

    const Rat& value() const { return v_; }
    bool is_zero() const { return v_.is_zero(); }

    Residue operator+(const Residue& o) const { return Residue(v_ + o.v_); }
    Residue operator-() const { return Residue(-v_); }
    bool operator==(const Residue& o) const { return v_ == o.v_; }
    bool operator!=(const Residue& o) const { return v_ != o.v_; }

private:
    Rat v_; // in [0, 1)
};

/// One letter h(t) or v(t) of the quotient group G = S^1 * S^1.
/// Stored letters always have nonzero residue.
struct Letter {
    Axis axis;
    Residue res;

    bool operator==(const Letter& o) const { return axis == o.axis && res == o.res; }
};

using RawLetter = std::pair<Axis, Rat>;
using RawWord = std::vector<RawLetter>;

/// A reduced word of G: adjacent letters alternate in axis, no letter has
/// residue zero. The empty word is the identity. Immutable value semantics;
/// construction goes through reduce()/concat()/append-style helpers.
class GroupWord {
public:
    GroupWord() = default;

    static GroupWord reduce(const RawWord& raw);

    /// Reduced product; amortized linear in len(b).
    friend GroupWord concat(const GroupWord& a, const GroupWord& b);
    friend GroupWord concat(const GroupWord& a, const RawWord& b);

    /// Reverse the letters and negate each residue.
    GroupWord inverted() const;

    /// Word appended with a single raw letter (reduces incrementally).
    GroupWord appended(Axis axis, const Rat& value) const;

    size_t length() const { return letters_.size(); }
    bool is_identity() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& back() const { return letters_.back(); }

    bool operator==(const GroupWord& o) const { return letters_ == o.letters_; }
    bool operator!=(const GroupWord& o) const { return letters_ != o.letters_; }

    /// Text form, e.g. "h(1/3) v(5/6)"; identity prints "e".
    std::string str() const;
    static std::optional<GroupWord> parse(std::string_view text);

private:
    void push(Axis axis, const Rat& value); // incremental reduction step
    std::vector<Letter> letters_;
};

size_t word_length(const GroupWord& w);

/// Word metric d(x, y) = |x y^-1| on G.
size_t distance(const GroupWord& x, const GroupWord& y);

/// Base point (h(-beta) v(-beta))^k. beta must be a nonzero residue.
GroupWord basepoint(size_t k, const Residue& beta);
GroupWord basepoint(size_t k); // beta = 1/2

/// Reduction in the free product R * R (no mod-1 identification): adjacent
/// same-axis letters merge by exact addition, zero letters vanish. Used by
/// the lasso machinery, where cancellation must be tracked over R itself.
RawWord free_reduce(const RawWord& raw);

/// Parse a whitespace-separated raw letter sequence like "h(1/3) v(-1/2)".
std::optional<RawWord> parse_raw_word(std::string_view text);

} // namespace rectile
