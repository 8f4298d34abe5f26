#pragma once

/// @file icg.hpp
/// Immediate capture graphs and reachability helpers.
///
/// ICG vertices are board squares; a directed edge (a, b) means the piece
/// at `a` could capture the piece at `b` in one move under the stated
/// occupancy assumptions.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "solochess/board.hpp"

namespace solochess {

struct CaptureGraph {
    std::vector<Location> vertices;        // sorted, index = vertex id
    std::vector<std::vector<int>> adj;     // out-edges

    int index_of(const Location& l) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), l);
        if (it == vertices.end() || !(*it == l)) return -1;
        return static_cast<int>(it - vertices.begin());
    }
    bool has_edge(const Location& a, const Location& b) const {
        int ia = index_of(a), ib = index_of(b);
        if (ia < 0 || ib < 0) return false;
        return std::find(adj[ia].begin(), adj[ia].end(), ib) != adj[ia].end();
    }
    std::size_t edge_count() const {
        std::size_t n = 0;
        for (const auto& v : adj) n += v.size();
        return n;
    }
};

/// Capture graph of a single-type board in its starting position: an edge
/// per move that is valid right away. With every square occupied such moves
/// have no interior squares.
inline CaptureGraph build_icg(const Board& board, PieceKind kind) {
    for (const auto& [loc, p] : board.pieces()) {
        if (p.kind != kind) throw std::invalid_argument("build_icg: board has mixed piece types");
    }
    MoveTable table(board, {kind});
    CaptureGraph g;
    g.vertices.reserve(board.size());
    for (const auto& [loc, p] : board.pieces()) g.vertices.push_back(loc);
    g.adj.assign(g.vertices.size(), {});
    for (int i = 0; i < table.size(); ++i) {
        for (const auto& m : table.moves_from(kind, i)) {
            if (!m.interior.empty()) continue;              // blocked at start
            if (board.at(table.loc(m.to))->uncapturable) continue;
            g.adj[i].push_back(m.to);                        // table ids == sorted ids
        }
    }
    return g;
}

/// ICG(V, B): the capture graph of villains placed on V with immobile
/// blockers on B. An edge (a, b) exists for each villain move from a to b
/// whose interior squares avoid V and B entirely (interior squares outside
/// V and B are treated as vacated).
///
/// `verts` and `blockers` are square ids of `table`; they must be disjoint.
/// The returned adjacency is indexed by table id (non-vertex rows empty).
inline std::vector<std::vector<int>> icg_vb(const MoveTable& table, PieceKind villain,
                                            const std::vector<bool>& verts,
                                            const std::vector<bool>& blockers) {
    const int n = table.size();
    for (int i = 0; i < n; ++i)
        if (verts[i] && blockers[i]) throw std::invalid_argument("icg_vb: V and B overlap");
    std::vector<std::vector<int>> adj(n);
    for (int a = 0; a < n; ++a) {
        if (!verts[a]) continue;
        for (const auto& m : table.moves_from(villain, a)) {
            if (!verts[m.to]) continue;
            bool clear = true;
            for (int i : m.interior) {
                if (verts[i] || blockers[i]) {
                    clear = false;
                    break;
                }
            }
            if (clear) adj[a].push_back(m.to);
        }
    }
    return adj;
}

/// Location-level wrapper matching the abstract definition.
inline CaptureGraph icg_vb(const MoveTable& table, PieceKind villain,
                           const std::vector<Location>& V, const std::vector<Location>& B) {
    std::vector<bool> verts(table.size(), false), blockers(table.size(), false);
    for (const auto& l : V) {
        int id = table.id(l);
        if (id < 0) throw std::invalid_argument("icg_vb: vertex not on board");
        verts[id] = true;
    }
    for (const auto& l : B) {
        int id = table.id(l);
        if (id < 0) throw std::invalid_argument("icg_vb: blocker not on board");
        blockers[id] = true;
    }
    auto adj = icg_vb(table, villain, verts, blockers);
    CaptureGraph g;
    std::vector<int> compact(table.size(), -1);
    for (int i = 0; i < table.size(); ++i) {
        if (verts[i]) {
            compact[i] = static_cast<int>(g.vertices.size());
            g.vertices.push_back(table.loc(i));
        }
    }
    g.adj.assign(g.vertices.size(), {});
    for (int i = 0; i < table.size(); ++i) {
        if (!verts[i]) continue;
        for (int j : adj[i]) g.adj[compact[i]].push_back(compact[j]);
    }
    return g;
}

/// Tarjan strongly connected components, iterative. Returns the component
/// id per vertex; ids are in reverse topological order (a component's id is
/// larger than the ids of components it can reach... specifically Tarjan
/// emits sinks first).
inline std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& adj,
                                                      int* component_count = nullptr) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> comp(n, -1), low(n, 0), num(n, -1), stk;
    std::vector<bool> on_stack(n, false);
    int counter = 0, comps = 0;
    struct Frame {
        int v;
        std::size_t next_child;
    };
    std::vector<Frame> frames;
    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        frames.push_back({root, 0});
        num[root] = low[root] = counter++;
        stk.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next_child < adj[f.v].size()) {
                int w = adj[f.v][f.next_child++];
                if (num[w] == -1) {
                    num[w] = low[w] = counter++;
                    stk.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                if (low[f.v] == num[f.v]) {
                    int w;
                    do {
                        w = stk.back();
                        stk.pop_back();
                        on_stack[w] = false;
                        comp[w] = comps;
                    } while (w != f.v);
                    ++comps;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    if (component_count) *component_count = comps;
    return comp;
}

/// Some root every vertex can walk to, or nullopt. Condenses to strongly
/// connected components and demands a unique sink component; in a DAG every
/// node reaches some sink, so a unique sink is reached by all. Among valid
/// roots the lexicographically smallest location is returned.
inline std::optional<Location> find_in_arborescence_root(const CaptureGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    if (n == 0) return std::nullopt;
    int comps = 0;
    std::vector<int> comp = strongly_connected_components(g.adj, &comps);
    std::vector<bool> has_out(comps, false);
    for (int v = 0; v < n; ++v)
        for (int w : g.adj[v])
            if (comp[v] != comp[w]) has_out[comp[v]] = true;
    int sink = -1;
    for (int c = 0; c < comps; ++c) {
        if (!has_out[c]) {
            if (sink != -1) return std::nullopt;  // two sinks: not all can reach one root
            sink = c;
        }
    }
    for (int v = 0; v < n; ++v)
        if (comp[v] == sink) return g.vertices[v];  // vertices sorted: first hit is smallest
    return std::nullopt;
}

}  // namespace solochess
