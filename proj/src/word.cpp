#include "rectile/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace rectile {

void GroupWord::push(Axis axis, const Rat& value) {
    Residue r(value);
    if (r.is_zero()) return;
    if (!letters_.empty() && letters_.back().axis == axis) {
        Residue merged = letters_.back().res + r;
        if (merged.is_zero()) {
            letters_.pop_back();
        } else {
            letters_.back().res = merged;
        }
        return;
    }
    letters_.push_back(Letter{axis, r});
}

GroupWord GroupWord::reduce(const RawWord& raw) {
    GroupWord w;
    for (const auto& [axis, value] : raw) w.push(axis, value);
    return w;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
    GroupWord w = a;
    for (const Letter& l : b.letters_) w.push(l.axis, l.res.value());
    return w;
}

GroupWord concat(const GroupWord& a, const RawWord& b) {
    GroupWord w = a;
    for (const auto& [axis, value] : b) w.push(axis, value);
    return w;
}

GroupWord GroupWord::inverted() const {
    GroupWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back(Letter{it->axis, -it->res});
    return w;
}

GroupWord GroupWord::appended(Axis axis, const Rat& value) const {
    GroupWord w = *this;
    w.push(axis, value);
    return w;
}

size_t word_length(const GroupWord& w) { return w.length(); }

size_t distance(const GroupWord& x, const GroupWord& y) {
    return concat(x, y.inverted()).length();
}

GroupWord basepoint(size_t k, const Residue& beta) {
    if (beta.is_zero()) throw std::invalid_argument("basepoint: beta must be nonzero");
    GroupWord w;
    Rat neg = (-beta).value();
    for (size_t i = 0; i < k; ++i) {
        w = w.appended(Axis::H, neg);
        w = w.appended(Axis::V, neg);
    }
    return w;
}

GroupWord basepoint(size_t k) { return basepoint(k, Residue(Rat(1, 2))); }

std::string GroupWord::str() const {
    if (letters_.empty()) return "e";
    std::string out;
    for (size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += axis_char(letters_[i].axis);
        out += '(';
        out += letters_[i].res.value().str();
        out += ')';
    }
    return out;
}

namespace {

std::optional<RawWord> parse_letters(std::string_view text) {
    RawWord raw;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (text.substr(i) == "e") return raw;
    while (i < text.size()) {
        char c = text[i];
        Axis axis;
        if (c == 'h' || c == 'H') axis = Axis::H;
        else if (c == 'v' || c == 'V') axis = Axis::V;
        else return std::nullopt;
        ++i;
        if (i >= text.size() || text[i] != '(') return std::nullopt;
        ++i;
        size_t close = text.find(')', i);
        if (close == std::string_view::npos) return std::nullopt;
        auto val = Rat::parse(text.substr(i, close - i));
        if (!val) return std::nullopt;
        raw.emplace_back(axis, *val);
        i = close + 1;
        skip_ws();
    }
    return raw;
}

} // namespace

std::optional<GroupWord> GroupWord::parse(std::string_view text) {
    auto raw = parse_letters(text);
    if (!raw) return std::nullopt;
    return reduce(*raw);
}

std::optional<RawWord> parse_raw_word(std::string_view text) { return parse_letters(text); }

RawWord free_reduce(const RawWord& raw) {
    RawWord out;
    for (const auto& [axis, value] : raw) {
        if (value.is_zero()) continue;
        if (!out.empty() && out.back().first == axis) {
            Rat merged = out.back().second + value;
            if (merged.is_zero()) out.pop_back();
            else out.back().second = merged;
            continue;
        }
        out.emplace_back(axis, value);
    }
    return out;
}

} // namespace rectile
