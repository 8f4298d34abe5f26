#pragma once

/// @file geometry.hpp
/// Lattice locations, offsets and bounding regions.

#include <cstdint>
#include <functional>
#include <ostream>
#include <tuple>

namespace solochess {

/// A board location. Coordinates are signed 64-bit: instance generators
/// emit coordinates far outside any 8x8 board.
struct Location {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Location& a, const Location& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Location& a, const Location& b) { return !(a == b); }
    /// Lexicographic (x, then y). Used everywhere determinism matters.
    friend bool operator<(const Location& a, const Location& b) {
        return std::tie(a.x, a.y) < std::tie(b.x, b.y);
    }
    friend std::ostream& operator<<(std::ostream& os, const Location& l) {
        return os << "(" << l.x << "," << l.y << ")";
    }
};

struct Offset {
    std::int64_t dx = 0;
    std::int64_t dy = 0;
};

inline Location operator+(const Location& l, const Offset& o) {
    return Location{l.x + o.dx, l.y + o.dy};
}

inline std::int64_t chebyshev(const Location& a, const Location& b) {
    std::int64_t dx = a.x > b.x ? a.x - b.x : b.x - a.x;
    std::int64_t dy = a.y > b.y ? a.y - b.y : b.y - a.y;
    return dx > dy ? dx : dy;
}

/// Inclusive bounding rectangle.
struct Region {
    std::int64_t min_x = 0, min_y = 0, max_x = -1, max_y = -1;

    bool empty() const { return max_x < min_x || max_y < min_y; }
    bool contains(const Location& l) const {
        return l.x >= min_x && l.x <= max_x && l.y >= min_y && l.y <= max_y;
    }
    std::int64_t width() const { return empty() ? 0 : max_x - min_x + 1; }
    std::int64_t height() const { return empty() ? 0 : max_y - min_y + 1; }

    void expand(const Location& l) {
        if (empty()) {
            min_x = max_x = l.x;
            min_y = max_y = l.y;
        } else {
            if (l.x < min_x) min_x = l.x;
            if (l.x > max_x) max_x = l.x;
            if (l.y < min_y) min_y = l.y;
            if (l.y > max_y) max_y = l.y;
        }
    }
};

struct LocationHash {
    std::size_t operator()(const Location& l) const {
        std::uint64_t h = static_cast<std::uint64_t>(l.x) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<std::uint64_t>(l.y) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace solochess
