#pragma once

/// @file single_solver.hpp
/// Polynomial-time solver for boards holding a single capturable piece
/// type. Solvable exactly when the start-position capture graph has a
/// spanning in-arborescence; the solution peels leaves of one such
/// arborescence.

#include <deque>
#include <optional>
#include <stdexcept>

#include "solochess/icg.hpp"

namespace solochess {

inline std::optional<Solution> solve_single_type(const Board& board, PieceKind kind) {
    for (const auto& [loc, p] : board.pieces()) {
        if (p.kind != kind)
            throw std::invalid_argument("solve_single_type: board has mixed piece types");
        if (p.uncapturable)
            throw std::invalid_argument("solve_single_type: uncapturable piece present");
    }
    if (board.size() == 0) return std::nullopt;
    if (board.size() == 1) return Solution{};

    CaptureGraph g = build_icg(board, kind);
    auto root = find_in_arborescence_root(g);
    if (!root) return std::nullopt;
    const int n = static_cast<int>(g.vertices.size());
    const int r = g.index_of(*root);

    // BFS from the root over reversed edges; the discovery edge gives each
    // vertex its next hop toward the root.
    std::vector<std::vector<int>> radj(n);
    for (int v = 0; v < n; ++v)
        for (int w : g.adj[v]) radj[w].push_back(v);
    std::vector<int> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::deque<int> bfs{r};
    seen[r] = true;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop_front();
        for (int w : radj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                bfs.push_back(w);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw std::logic_error("root not reachable from every vertex");

    // leaf peeling, queue in insertion order
    std::vector<int> children(n, 0);
    for (int v = 0; v < n; ++v)
        if (parent[v] >= 0) ++children[parent[v]];
    std::deque<int> leaves;
    for (int v = 0; v < n; ++v)
        if (v != r && children[v] == 0) leaves.push_back(v);
    Solution sol;
    while (!leaves.empty()) {
        int v = leaves.front();
        leaves.pop_front();
        int p = parent[v];
        sol.moves.push_back({g.vertices[v], g.vertices[p]});
        if (--children[p] == 0 && p != r) leaves.push_back(p);
    }
    if (sol.moves.size() + 1 != board.size())
        throw std::logic_error("leaf peeling did not reach a single piece");
    return sol;
}

}  // namespace solochess
