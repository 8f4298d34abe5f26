#pragma once

/// @file piece.hpp
/// Piece types as move sets: every move is a location sequence, every
/// piece type is closed under contiguous submoves.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "solochess/geometry.hpp"

namespace solochess {

/// A move: an ordered sequence of at least two pairwise-distinct locations.
/// The first entry is the mover's square, the last is the capture square,
/// everything between must be empty for the move to be valid.
using MoveSeq = std::vector<Location>;

enum class PieceKind : std::uint8_t { Pawn, King, Knight, Rook, Bishop, Queen, Custom };

inline const char* kind_name(PieceKind k) {
    switch (k) {
        case PieceKind::Pawn: return "pawn";
        case PieceKind::King: return "king";
        case PieceKind::Knight: return "knight";
        case PieceKind::Rook: return "rook";
        case PieceKind::Bishop: return "bishop";
        case PieceKind::Queen: return "queen";
        case PieceKind::Custom: return "custom";
    }
    return "?";
}

inline char kind_char(PieceKind k) {
    switch (k) {
        case PieceKind::Pawn: return 'P';
        case PieceKind::King: return 'K';
        case PieceKind::Knight: return 'N';
        case PieceKind::Rook: return 'R';
        case PieceKind::Bishop: return 'B';
        case PieceKind::Queen: return 'Q';
        case PieceKind::Custom: return '?';
    }
    return '?';
}

/// A piece type. Built-in types are data driven: a list of single-jump
/// offsets plus a list of ray directions enumerated as full location
/// sequences of every length. Custom types (tests only) supply their own
/// enumerator.
struct PieceTypeDef {
    PieceKind kind = PieceKind::Custom;
    std::string name;
    bool symmetric = false;
    bool nonblocking = false;
    std::vector<Offset> leaps;       // two-location moves
    std::vector<Offset> slide_dirs;  // ray directions, all lengths
    std::function<std::vector<MoveSeq>(const Location&, const Region&)> custom;

    /// Every move of this type starting at `origin` whose locations all lie
    /// inside `region`. Order is fixed: leaps in declaration order, then for
    /// each ray direction the moves by increasing length.
    std::vector<MoveSeq> enumerate(const Location& origin, const Region& region) const {
        if (custom) return custom(origin, region);
        std::vector<MoveSeq> out;
        if (!region.contains(origin)) return out;
        for (const auto& o : leaps) {
            Location to = origin + o;
            if (region.contains(to)) out.push_back({origin, to});
        }
        for (const auto& d : slide_dirs) {
            MoveSeq seq{origin};
            Location cur = origin;
            while (true) {
                cur = cur + d;
                if (!region.contains(cur)) break;
                seq.push_back(cur);
                out.push_back(seq);
            }
        }
        return out;
    }
};

inline const PieceTypeDef& builtin_piece_type(PieceKind k) {
    static const std::map<PieceKind, PieceTypeDef> defs = [] {
        std::map<PieceKind, PieceTypeDef> m;
        PieceTypeDef pawn;
        pawn.kind = PieceKind::Pawn;
        pawn.name = "pawn";
        pawn.symmetric = false;
        pawn.nonblocking = true;
        pawn.leaps = {{-1, 1}, {1, 1}};  // captures upward
        m[PieceKind::Pawn] = pawn;

        PieceTypeDef king;
        king.kind = PieceKind::King;
        king.name = "king";
        king.symmetric = true;
        king.nonblocking = true;
        king.leaps = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0}, {1, 0}, {-1, 1}, {0, 1}, {1, 1}};
        m[PieceKind::King] = king;

        PieceTypeDef knight;
        knight.kind = PieceKind::Knight;
        knight.name = "knight";
        knight.symmetric = true;
        knight.nonblocking = true;
        knight.leaps = {{-2, -1}, {-1, -2}, {1, -2}, {2, -1}, {-2, 1}, {-1, 2}, {1, 2}, {2, 1}};
        m[PieceKind::Knight] = knight;

        PieceTypeDef rook;
        rook.kind = PieceKind::Rook;
        rook.name = "rook";
        rook.symmetric = true;
        rook.slide_dirs = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        m[PieceKind::Rook] = rook;

        PieceTypeDef bishop;
        bishop.kind = PieceKind::Bishop;
        bishop.name = "bishop";
        bishop.symmetric = true;
        bishop.slide_dirs = {{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
        m[PieceKind::Bishop] = bishop;

        PieceTypeDef queen;
        queen.kind = PieceKind::Queen;
        queen.name = "queen";
        queen.symmetric = true;
        queen.slide_dirs = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                            {1, 1},  {-1, 1}, {1, -1}, {-1, -1}};
        m[PieceKind::Queen] = queen;
        return m;
    }();
    auto it = defs.find(k);
    if (it == defs.end()) throw std::invalid_argument("unknown builtin piece type");
    return it->second;
}

inline const PieceTypeDef& builtin_piece_type(const std::string& name) {
    for (PieceKind k : {PieceKind::Pawn, PieceKind::King, PieceKind::Knight, PieceKind::Rook,
                        PieceKind::Bishop, PieceKind::Queen}) {
        if (name == kind_name(k)) return builtin_piece_type(k);
    }
    throw std::invalid_argument("unknown piece type name: " + name);
}

/// Break a move into the contiguous submoves between consecutive members
/// of `stops`. Both endpoints of `m` must be in `stops`.
inline std::vector<MoveSeq> split_move(const MoveSeq& m, const std::set<Location>& stops) {
    if (m.size() < 2) throw std::invalid_argument("split_move: not a move");
    if (!stops.count(m.front()) || !stops.count(m.back()))
        throw std::invalid_argument("split_move: endpoints must be in the stop set");
    std::vector<MoveSeq> out;
    std::size_t start = 0;
    for (std::size_t i = 1; i < m.size(); ++i) {
        if (stops.count(m[i])) {
            out.emplace_back(m.begin() + start, m.begin() + i + 1);
            start = i;
        }
    }
    return out;
}

/// True iff every contiguous subsequence (length >= 2) of every move the
/// type enumerates inside `region` is itself enumerated from its own origin.
inline bool check_closure(const PieceTypeDef& t, const Region& region) {
    std::map<Location, std::set<MoveSeq>> by_origin;
    std::vector<MoveSeq> all;
    for (std::int64_t x = region.min_x; x <= region.max_x; ++x) {
        for (std::int64_t y = region.min_y; y <= region.max_y; ++y) {
            Location o{x, y};
            for (auto& mv : t.enumerate(o, region)) {
                by_origin[o].insert(mv);
                all.push_back(std::move(mv));
            }
        }
    }
    for (const auto& mv : all) {
        for (std::size_t i = 0; i + 1 < mv.size(); ++i) {
            for (std::size_t j = i + 1; j < mv.size(); ++j) {
                MoveSeq sub(mv.begin() + i, mv.begin() + j + 1);
                auto it = by_origin.find(sub.front());
                if (it == by_origin.end() || !it->second.count(sub)) return false;
            }
        }
    }
    return true;
}

/// True iff the reverse of every enumerated move is also enumerated.
inline bool check_symmetric(const PieceTypeDef& t, const Region& region) {
    std::map<Location, std::set<MoveSeq>> by_origin;
    std::vector<MoveSeq> all;
    for (std::int64_t x = region.min_x; x <= region.max_x; ++x) {
        for (std::int64_t y = region.min_y; y <= region.max_y; ++y) {
            Location o{x, y};
            for (auto& mv : t.enumerate(o, region)) {
                by_origin[o].insert(mv);
                all.push_back(std::move(mv));
            }
        }
    }
    for (const auto& mv : all) {
        MoveSeq rev(mv.rbegin(), mv.rend());
        auto it = by_origin.find(rev.front());
        if (it == by_origin.end() || !it->second.count(rev)) return false;
    }
    return true;
}

/// True iff every move of `s` inside `region` is also a move of `t`.
inline bool check_subset(const PieceTypeDef& s, const PieceTypeDef& t, const Region& region) {
    for (std::int64_t x = region.min_x; x <= region.max_x; ++x) {
        for (std::int64_t y = region.min_y; y <= region.max_y; ++y) {
            Location o{x, y};
            auto t_moves = t.enumerate(o, region);
            std::set<MoveSeq> ts(t_moves.begin(), t_moves.end());
            for (const auto& mv : s.enumerate(o, region)) {
                if (!ts.count(mv)) return false;
            }
        }
    }
    return true;
}

}  // namespace solochess
