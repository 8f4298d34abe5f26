#pragma once

// Shared test helpers: seeded randomness and slow reference
// implementations that the fast code is checked against.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "solochess/board.hpp"

namespace testsupport {

using namespace solochess;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Random board on a w x h region with `pieces` pieces of one kind, or a
/// hero of another kind when `hero_kind` is set (hero placed first).
inline Board random_board(std::mt19937_64& g, int w, int h, PieceKind kind, int pieces,
                          std::optional<PieceKind> hero_kind = std::nullopt) {
    std::vector<Location> squares;
    for (int x = 0; x < w; ++x)
        for (int y = 0; y < h; ++y) squares.push_back({x, y});
    std::shuffle(squares.begin(), squares.end(), g);
    Board b;
    for (int i = 0; i < pieces; ++i) {
        bool hero = hero_kind && i == 0;
        b.put(squares[static_cast<std::size_t>(i)], {hero ? *hero_kind : kind, hero});
    }
    return b;
}

/// Reference solver that knows nothing about move tables or normalization:
/// it walks rays cell by cell across the whole dense region, treating any
/// unoccupied cell as empty. Exponential and tiny on purpose.
inline bool solvable_dense(const Board& board, const Region& region) {
    if (board.size() == 0) return false;
    if (board.size() == 1) return board.uncapturable_count() <= 1;

    struct DensePiece {
        Location loc;
        Piece piece;
    };
    std::vector<DensePiece> pieces;
    for (const auto& [loc, p] : board.pieces()) pieces.push_back({loc, p});

    struct Rec {
        const Region& region;
        bool solve(std::vector<DensePiece>& ps) {
            if (ps.size() == 1) return true;
            for (std::size_t i = 0; i < ps.size(); ++i) {
                const PieceTypeDef& def = builtin_piece_type(ps[i].piece.kind);
                for (const MoveSeq& mv : def.enumerate(ps[i].loc, region)) {
                    bool ok = true;
                    int target = -1;
                    for (std::size_t step = 1; step < mv.size() && ok; ++step) {
                        int at = -1;
                        for (std::size_t j = 0; j < ps.size(); ++j)
                            if (ps[j].loc == mv[step]) at = static_cast<int>(j);
                        if (step + 1 < mv.size()) {
                            ok = at < 0;  // interior must be empty
                        } else {
                            ok = at >= 0 && !ps[at].piece.uncapturable;
                            target = at;
                        }
                    }
                    if (!ok) continue;
                    std::vector<DensePiece> next = ps;
                    next[static_cast<std::size_t>(target)].piece = ps[i].piece;
                    next.erase(next.begin() + static_cast<long>(i));
                    if (solve(next)) return true;
                }
            }
            return false;
        }
    } rec{region};
    return rec.solve(pieces);
}

/// Brute force: does every vertex have a directed walk to `r`?
inline bool all_reach(const std::vector<std::vector<int>>& adj, int r) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> radj(n);
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) radj[w].push_back(v);
    std::vector<bool> seen(n, false);
    std::vector<int> stack{r};
    seen[static_cast<std::size_t>(r)] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : radj[u])
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                stack.push_back(v);
            }
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

}  // namespace testsupport
