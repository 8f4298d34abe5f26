#pragma once

/// @file hero_path.hpp
/// Shared machinery for hero/villain puzzles: one uncapturable hero piece
/// among villains of a single type. A hero path is a sequence of squares
/// the hero can capture through in order, with no villain moves in
/// between; each hop's interior squares must already be vacated path
/// squares and each hop's target still holds a villain.

#include <algorithm>
#include <cassert>
#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "solochess/board.hpp"
#include "solochess/icg.hpp"

namespace solochess {

/// Validated view of a hero/villain board.
struct HeroBoard {
    const Board* board = nullptr;
    PieceKind hero_kind{};
    PieceKind villain_kind{};
    int hero_start = -1;  // square id
    MoveTable table;

    static HeroBoard make(const Board& board) {
        if (board.uncapturable_count() != 1)
            throw std::invalid_argument("hero board needs exactly one uncapturable piece");
        Location hero_loc = *board.uncapturable_location();
        PieceKind hero = board.at(hero_loc)->kind;
        std::optional<PieceKind> villain;
        for (const auto& [loc, p] : board.pieces()) {
            if (loc == hero_loc) continue;
            if (!villain) villain = p.kind;
            if (*villain != p.kind)
                throw std::invalid_argument("hero board needs a single villain type");
        }
        PieceKind vk = villain.value_or(hero);
        std::vector<PieceKind> kinds = {hero};
        if (vk != hero) kinds.push_back(vk);
        HeroBoard hb{&board, hero, vk, -1, MoveTable(board, kinds)};
        hb.hero_start = hb.table.id(hero_loc);
        return hb;
    }

    int size() const { return table.size(); }
};

/// Hero moves usable as the next hop of a path: target off-path (it still
/// holds a villain) and interior squares all previously vacated.
inline std::vector<const EffMove*> hero_hops(const HeroBoard& hb, const std::vector<int>& path,
                                             const std::vector<char>& on_path) {
    std::vector<const EffMove*> out;
    int from = path.back();
    for (const auto& m : hb.table.moves_from(hb.hero_kind, from)) {
        if (on_path[m.to]) continue;
        bool clear = true;
        for (int i : m.interior) {
            if (!on_path[i] || i == from) {
                clear = false;
                break;
            }
        }
        if (clear) out.push_back(&m);
    }
    return out;
}

/// Definitional check that a location sequence is a hero path.
inline bool is_hero_path(const Board& board, const std::vector<Location>& p) {
    HeroBoard hb = HeroBoard::make(board);
    if (p.empty() || hb.table.id(p.front()) != hb.hero_start) return false;
    std::vector<int> path{hb.hero_start};
    std::vector<char> on_path(hb.size(), 0);
    on_path[hb.hero_start] = 1;
    for (std::size_t j = 1; j < p.size(); ++j) {
        int to = hb.table.id(p[j]);
        if (to < 0) return false;
        bool found = false;
        for (const EffMove* m : hero_hops(hb, path, on_path)) {
            if (m->to == to) {
                found = true;
                break;
            }
        }
        if (!found) return false;
        // the hop's interior may use every earlier square but not the
        // hero's current one; hero_hops enforced that
        path.push_back(to);
        on_path[to] = 1;
    }
    return true;
}

/// Villain capture graph after the first i hero moves of `path`:
/// vertices are the squares not yet visited, the hero's current square
/// blocks. Returned as full-size adjacency (rows of non-vertices empty).
inline std::vector<std::vector<int>> villain_graph_after(const HeroBoard& hb,
                                                         const std::vector<int>& path,
                                                         std::size_t i, bool hero_blocks) {
    std::vector<bool> verts(hb.size(), true), blockers(hb.size(), false);
    for (std::size_t j = 0; j <= i; ++j) verts[path[j]] = false;
    if (hero_blocks) blockers[path[i]] = true;
    return icg_vb(hb.table, hb.villain_kind, verts, blockers);
}

/// Squares with a directed walk to `target` in `adj`, with the first hop
/// of a shortest such walk recorded in `next_hop`.
inline std::vector<char> reach_to(const std::vector<std::vector<int>>& adj, int target,
                                  std::vector<int>* next_hop = nullptr) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> radj(n);
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) radj[w].push_back(v);
    std::vector<char> reached(n, 0);
    if (next_hop) next_hop->assign(n, -1);
    std::deque<int> q{target};
    reached[target] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : radj[u]) {
            if (!reached[v]) {
                reached[v] = 1;
                if (next_hop) (*next_hop)[v] = u;
                q.push_back(v);
            }
        }
    }
    return reached;
}

/// Builds a full solution from a hero path under the precondition that
/// every villain can be funneled to some path square p_(i+1) through the
/// graph that exists while the hero stands at p_i. Each villain gets the
/// smallest such index as its rank; moves are emitted in reverse order,
/// highest rank first, splicing each villain's walk at the earliest square
/// already scheduled.
inline Solution reconstruct_from_path(const HeroBoard& hb, const std::vector<int>& path) {
    const int n = hb.size();
    const std::size_t k = path.size() - 1;
    std::vector<char> on_path(n, 0);
    for (int id : path) on_path[id] = 1;

    std::vector<int> rank(n, -1);
    std::vector<std::vector<int>> hops_by_rank(k);
    for (std::size_t i = 0; i < k; ++i) {
        auto adj = villain_graph_after(hb, path, i, true);
        std::vector<char> reached = reach_to(adj, path[i + 1], &hops_by_rank[i]);
        for (int v = 0; v < n; ++v) {
            if (on_path[v]) continue;
            if (reached[v] && rank[v] < 0) rank[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!on_path[v] && rank[v] < 0)
            throw std::logic_error("reconstruct_from_path: villain not capturable");
    }

    auto find_eff_move = [&](PieceKind kind, int from, int to,
                             const std::vector<char>& allowed_interior) -> const EffMove* {
        for (const auto& m : hb.table.moves_from(kind, from)) {
            if (m.to != to) continue;
            bool ok = true;
            for (int mid : m.interior) ok = ok && allowed_interior[mid];
            if (ok) return &m;
        }
        return nullptr;
    };

    std::vector<MoveSeq> out_rev;
    std::vector<char> touched(n, 0);
    for (std::size_t stage = k; stage-- > 0;) {
        // hero move p_stage -> p_stage+1; its interior lies in the squares
        // vacated before the hero reached p_stage
        std::vector<char> vacated(n, 0);
        for (std::size_t j = 0; j < stage; ++j) vacated[path[j]] = 1;
        const EffMove* hm = find_eff_move(hb.hero_kind, path[stage], path[stage + 1], vacated);
        if (!hm) throw std::logic_error("reconstruct_from_path: hero hop vanished");
        out_rev.push_back(hb.table.to_move_seq(*hm));
        touched[path[stage]] = 1;
        touched[path[stage + 1]] = 1;

        std::vector<char> walk_interior(n, 0);  // interiors valid for rank-stage walks
        for (std::size_t j = 0; j < stage; ++j) walk_interior[path[j]] = 1;
        for (int v = 0; v < n; ++v) {
            if (on_path[v] || rank[v] != static_cast<int>(stage)) continue;
            std::vector<int> walk{v};
            while (walk.back() != path[stage + 1]) {
                int nxt = hops_by_rank[stage][walk.back()];
                if (nxt < 0) throw std::logic_error("reconstruct_from_path: broken walk");
                walk.push_back(nxt);
            }
            std::size_t splice = 0;
            while (splice < walk.size() && !touched[walk[splice]]) ++splice;
            if (splice == walk.size())
                throw std::logic_error("reconstruct_from_path: no splice point");
            for (std::size_t a = splice; a-- > 0;) {
                const EffMove* vm =
                    find_eff_move(hb.villain_kind, walk[a], walk[a + 1], walk_interior);
                if (!vm) throw std::logic_error("reconstruct_from_path: villain hop vanished");
                out_rev.push_back(hb.table.to_move_seq(*vm));
            }
            for (std::size_t a = 0; a <= splice; ++a) touched[walk[a]] = 1;
        }
    }

    Solution sol;
    sol.moves.assign(out_rev.rbegin(), out_rev.rend());
    for (int id : path) sol.hero_path.push_back(hb.table.loc(id));
    VerifyResult check = verify_solution(*hb.board, sol);
    if (!check)
        throw std::logic_error("reconstruct_from_path: replay failed: " + check.reason);
    return sol;
}

}  // namespace solochess
