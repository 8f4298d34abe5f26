#pragma once

/// @file board.hpp
/// Boards, move validity and execution, and solution verification.
///
/// A board is a sparse map from occupied locations to pieces. Squares that
/// are empty at the start of a puzzle stay empty forever (every move is a
/// capture), so the occupied set doubles as the location set: move
/// enumeration rewrites raw geometric moves by dropping never-occupied
/// interior squares and discarding moves whose endpoints can never hold a
/// piece.

#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "solochess/geometry.hpp"
#include "solochess/piece.hpp"

namespace solochess {

struct Piece {
    PieceKind kind = PieceKind::Pawn;
    bool uncapturable = false;
};

class Board {
public:
    Board() = default;

    void put(const Location& l, Piece p) {
        auto [it, inserted] = pieces_.emplace(l, p);
        if (!inserted) throw std::invalid_argument("two pieces on one location");
    }

    const std::map<Location, Piece>& pieces() const { return pieces_; }
    std::size_t size() const { return pieces_.size(); }
    bool occupied(const Location& l) const { return pieces_.count(l) != 0; }
    const Piece* at(const Location& l) const {
        auto it = pieces_.find(l);
        return it == pieces_.end() ? nullptr : &it->second;
    }

    Region bounding_region() const {
        Region r;
        for (const auto& [loc, p] : pieces_) r.expand(loc);
        return r;
    }

    /// Number of uncapturable pieces (a valid puzzle has at most one).
    int uncapturable_count() const {
        int n = 0;
        for (const auto& [loc, p] : pieces_) n += p.uncapturable ? 1 : 0;
        return n;
    }

    std::optional<Location> uncapturable_location() const {
        for (const auto& [loc, p] : pieces_)
            if (p.uncapturable) return loc;
        return std::nullopt;
    }

    std::vector<PieceKind> kinds_present() const {
        std::vector<PieceKind> out;
        for (const auto& [loc, p] : pieces_) {
            bool seen = false;
            for (auto k : out) seen = seen || k == p.kind;
            if (!seen) out.push_back(p.kind);
        }
        return out;
    }

private:
    std::map<Location, Piece> pieces_;
};

/// Validates puzzle invariants. The sparse representation is already in
/// normalized form (only ever-occupied squares exist), so the board comes
/// back unchanged; this is the checkpoint where invariants are enforced.
inline Board normalize(const Board& b) {
    if (b.uncapturable_count() > 1)
        throw std::invalid_argument("at most one uncapturable piece per board");
    return b;
}

/// A move in a move table, with locations resolved to dense indices.
/// `interior` lists the ever-occupied squares strictly between the
/// endpoints; the move is valid when all of them are currently empty.
struct EffMove {
    int from = -1;
    int to = -1;
    std::vector<int> interior;
};

/// Per-board move tables: every effective move of every piece kind present,
/// indexed by origin square. Locations get dense ids in lexicographic order
/// so downstream searches are deterministic.
class MoveTable {
public:
    MoveTable(const Board& board, const std::vector<PieceKind>& kinds) {
        for (const auto& [loc, p] : board.pieces()) {
            id_of_[loc] = static_cast<int>(locs_.size());
            locs_.push_back(loc);
        }
        const int n = static_cast<int>(locs_.size());
        // line indexes: for each row/column/diagonal, occupied ids in ray order
        std::map<std::int64_t, std::vector<int>> rows, cols, diag, anti;
        for (int i = 0; i < n; ++i) {
            rows[locs_[i].y].push_back(i);   // sorted by x (lexicographic ids)
            cols[locs_[i].x].push_back(i);   // sorted by y
            diag[locs_[i].x - locs_[i].y].push_back(i);
            anti[locs_[i].x + locs_[i].y].push_back(i);
        }
        for (auto k : kinds) {
            auto& per_loc = moves_[k];
            per_loc.assign(n, {});
            const PieceTypeDef& def = builtin_piece_type(k);
            for (int i = 0; i < n; ++i) {
                for (const auto& o : def.leaps) {
                    auto it = id_of_.find(locs_[i] + o);
                    if (it != id_of_.end()) per_loc[i].push_back({i, it->second, {}});
                }
                for (const auto& d : def.slide_dirs) {
                    append_ray_moves(per_loc[i], i, d, rows, cols, diag, anti);
                }
            }
        }
    }

    int size() const { return static_cast<int>(locs_.size()); }
    const Location& loc(int id) const { return locs_[id]; }
    int id(const Location& l) const {
        auto it = id_of_.find(l);
        return it == id_of_.end() ? -1 : it->second;
    }
    bool has_kind(PieceKind k) const { return moves_.count(k) != 0; }
    const std::vector<EffMove>& moves_from(PieceKind k, int id) const {
        return moves_.at(k)[id];
    }

    MoveSeq to_move_seq(const EffMove& m) const {
        MoveSeq seq;
        seq.push_back(locs_[m.from]);
        for (int i : m.interior) seq.push_back(locs_[i]);
        seq.push_back(locs_[m.to]);
        return seq;
    }

private:
    void append_ray_moves(std::vector<EffMove>& out, int from, const Offset& d,
                          const std::map<std::int64_t, std::vector<int>>& rows,
                          const std::map<std::int64_t, std::vector<int>>& cols,
                          const std::map<std::int64_t, std::vector<int>>& diag,
                          const std::map<std::int64_t, std::vector<int>>& anti) const {
        const Location& o = locs_[from];
        const std::vector<int>* line = nullptr;
        bool forward;  // increasing position along the stored line order
        if (d.dy == 0) {
            line = &rows.at(o.y);
            forward = d.dx > 0;
        } else if (d.dx == 0) {
            line = &cols.at(o.x);
            forward = d.dy > 0;
        } else if (d.dx == d.dy) {
            line = &diag.at(o.x - o.y);
            forward = d.dx > 0;
        } else if (d.dx == -d.dy) {
            line = &anti.at(o.x + o.y);
            forward = d.dx > 0;
        } else {
            throw std::logic_error("slide direction must be orthogonal or diagonal");
        }
        auto pos = std::find(line->begin(), line->end(), from);
        assert(pos != line->end());
        std::vector<int> interior;
        if (forward) {
            for (auto it = pos + 1; it != line->end(); ++it) {
                out.push_back({from, *it, interior});
                interior.push_back(*it);
            }
        } else {
            for (auto it = std::make_reverse_iterator(pos); it != line->rend(); ++it) {
                out.push_back({from, *it, interior});
                interior.push_back(*it);
            }
        }
    }

    std::vector<Location> locs_;
    std::unordered_map<Location, int, LocationHash> id_of_;
    std::map<PieceKind, std::vector<std::vector<EffMove>>> moves_;
};

/// Current occupancy of a square during play.
struct Occupant {
    bool present = false;
    bool uncapturable = false;
    PieceKind kind = PieceKind::Pawn;
    std::uint8_t moves_made = 0;
};

/// A playable position: an immutable move table plus mutable occupancy.
struct Position {
    const MoveTable* table = nullptr;
    std::vector<Occupant> squares;
    int piece_count = 0;

    static Position start(const Board& board, const MoveTable& table) {
        Position p;
        p.table = &table;
        p.squares.assign(table.size(), {});
        for (const auto& [loc, piece] : board.pieces()) {
            int id = table.id(loc);
            p.squares[id] = {true, piece.uncapturable, piece.kind, 0};
        }
        p.piece_count = static_cast<int>(board.size());
        return p;
    }

    bool valid(const EffMove& m) const {
        if (!squares[m.from].present || !squares[m.to].present) return false;
        if (squares[m.to].uncapturable) return false;
        for (int i : m.interior)
            if (squares[i].present) return false;
        return true;
    }

    void apply(const EffMove& m) {
        Occupant mover = squares[m.from];
        mover.moves_made = static_cast<std::uint8_t>(mover.moves_made + 1);
        squares[m.from] = {};
        squares[m.to] = mover;
        --piece_count;
    }
};

/// Definitional validity check for a free-form move sequence (not required
/// to come from a move table). The sequence must be a move of the moving
/// piece's own type.
inline bool is_valid_move(const Board& board, const MoveSeq& m) {
    if (m.size() < 2) return false;
    const Piece* mover = board.at(m.front());
    if (!mover) return false;
    const Piece* target = board.at(m.back());
    if (!target || target->uncapturable) return false;
    for (std::size_t i = 1; i + 1 < m.size(); ++i)
        if (board.occupied(m[i])) return false;
    return true;
}

/// Executes a valid move on a board value; the piece at the source ends up
/// on the capture square.
inline Board apply_move(const Board& board, const MoveSeq& m) {
    if (!is_valid_move(board, m)) throw std::invalid_argument("apply_move: invalid move");
    Board out;
    Piece mover = *board.at(m.front());
    for (const auto& [loc, p] : board.pieces()) {
        if (loc == m.front() || loc == m.back()) continue;
        out.put(loc, p);
    }
    out.put(m.back(), mover);
    return out;
}

/// An ordered list of moves meant to reduce a board to one piece.
struct Solution {
    std::vector<MoveSeq> moves;
    std::vector<Location> hero_path;  // optional metadata for hero puzzles
};

struct VerifyResult {
    bool ok = false;
    int failed_move = -1;  // index of the first offending move, -1 if none
    std::string reason;

    explicit operator bool() const { return ok; }
};

/// Replays a solution from scratch. Checks, per move: the sequence is a
/// move of the moving piece's type, endpoints occupied, interior empty,
/// target capturable. Afterwards: exactly one piece remains, an
/// uncapturable piece (if any) is the survivor, and the move list has the
/// structure every valid solution must have: each non-final start square is
/// the source of exactly one move and chasing unique out-moves from any
/// square reaches the survivor without cycling.
inline VerifyResult verify_solution(const Board& board, const Solution& s) {
    auto fail = [](int idx, const std::string& why) {
        return VerifyResult{false, idx, why};
    };
    Board normalized = normalize(board);
    MoveTable table(normalized, normalized.kinds_present());
    Position pos = Position::start(normalized, table);

    std::map<Location, Location> out_move;  // unique move out of each square
    for (std::size_t i = 0; i < s.moves.size(); ++i) {
        const MoveSeq& m = s.moves[i];
        if (m.size() < 2) return fail(static_cast<int>(i), "move has fewer than two locations");
        int from = table.id(m.front());
        int to = table.id(m.back());
        if (from < 0) return fail(static_cast<int>(i), "source square was never occupied");
        if (to < 0) return fail(static_cast<int>(i), "target square was never occupied");
        if (!pos.squares[from].present) return fail(static_cast<int>(i), "source square empty");
        if (!pos.squares[to].present) return fail(static_cast<int>(i), "target square empty");
        if (pos.squares[to].uncapturable)
            return fail(static_cast<int>(i), "target piece is uncapturable");
        // type membership: the claimed sequence must be one of the mover's moves
        const EffMove* match = nullptr;
        for (const auto& em : table.moves_from(pos.squares[from].kind, from)) {
            if (em.to != to) continue;
            if (table.to_move_seq(em) == m) {
                match = &em;
                break;
            }
        }
        if (!match) return fail(static_cast<int>(i), "not a move of the piece's type");
        for (int mid : match->interior)
            if (pos.squares[mid].present)
                return fail(static_cast<int>(i), "move is blocked");
        if (out_move.count(m.front()))
            return fail(static_cast<int>(i), "second move out of one square");
        out_move.emplace(m.front(), m.back());
        pos.apply(*match);
    }
    if (pos.piece_count != 1) return fail(-1, "more than one piece remains");
    int survivor = -1;
    for (int i = 0; i < table.size(); ++i)
        if (pos.squares[i].present) survivor = i;
    if (board.uncapturable_count() > 0 && !pos.squares[survivor].uncapturable)
        return fail(-1, "uncapturable piece is not the survivor");
    // unique-out-move structure: chasing out-moves terminates at the survivor
    Location root = table.loc(survivor);
    if (out_move.count(root)) return fail(-1, "move out of the survivor square");
    for (const auto& [loc, piece] : board.pieces()) {
        if (loc == root && !out_move.count(loc)) continue;
        Location cur = loc;
        std::size_t steps = 0;
        while (cur != root) {
            auto it = out_move.find(cur);
            if (it == out_move.end()) return fail(-1, "square with no move out");
            cur = it->second;
            if (++steps > s.moves.size()) return fail(-1, "out-move chain cycles");
        }
    }
    return VerifyResult{true, -1, ""};
}

}  // namespace solochess
