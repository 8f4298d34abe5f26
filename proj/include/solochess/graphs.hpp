#pragma once

/// @file graphs.hpp
/// Input graphs for the hardness-instance generators, plus brute-force
/// Hamiltonian path checks and small-graph enumerators used by the
/// verification sweeps. The brute forcers are deliberately naive and share
/// nothing with the solvers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "solochess/geometry.hpp"

namespace solochess {

/// A graph with a designated start vertex and optional end vertex.
/// Vertices are 1-based in input order. Grid graphs carry coordinates.
struct StartEndGraph {
    int n = 0;                              // vertices 1..n
    std::vector<std::pair<int, int>> edges; // 1-based pairs, i < j
    int s = 0;
    int t = 0;                              // 0 when absent
    std::vector<Location> coords;           // per vertex, grid graphs only

    bool has_coords() const { return !coords.empty(); }

    std::vector<int> degrees() const {
        std::vector<int> deg(static_cast<std::size_t>(n) + 1, 0);
        for (auto [a, b] : edges) {
            ++deg[static_cast<std::size_t>(a)];
            ++deg[static_cast<std::size_t>(b)];
        }
        return deg;
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
        for (auto [a, b] : edges) {
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        return adj;
    }

    void validate_basic() const {
        if (n <= 0) throw std::invalid_argument("graph has no vertices");
        std::set<std::pair<int, int>> seen;
        for (auto [a, b] : edges) {
            if (a < 1 || a > n || b < 1 || b > n || a == b)
                throw std::invalid_argument("bad edge endpoints");
            auto key = std::minmax(a, b);
            if (!seen.insert({key.first, key.second}).second)
                throw std::invalid_argument("duplicate edge");
        }
        if (s < 1 || s > n) throw std::invalid_argument("bad start vertex");
        if (t != 0 && (t < 1 || t > n || t == s)) throw std::invalid_argument("bad end vertex");
        if (has_coords()) {
            if (static_cast<int>(coords.size()) != n)
                throw std::invalid_argument("coordinate count mismatch");
            std::set<Location> locs(coords.begin(), coords.end());
            if (static_cast<int>(locs.size()) != n)
                throw std::invalid_argument("duplicate vertex coordinates");
        }
    }

    /// Grid graphs must carry exactly the unit-distance edges of their
    /// vertex set (the induced lattice graph).
    void validate_grid() const {
        validate_basic();
        if (!has_coords()) throw std::invalid_argument("not a grid graph: no coordinates");
        std::set<std::pair<int, int>> given;
        for (auto [a, b] : edges) {
            auto key = std::minmax(a, b);
            given.insert({key.first, key.second});
        }
        std::set<std::pair<int, int>> induced;
        for (int a = 1; a <= n; ++a) {
            for (int b = a + 1; b <= n; ++b) {
                const Location &la = coords[static_cast<std::size_t>(a - 1)],
                               &lb = coords[static_cast<std::size_t>(b - 1)];
                std::int64_t dx = la.x - lb.x, dy = la.y - lb.y;
                if (dx * dx + dy * dy == 1) induced.insert({a, b});
            }
        }
        if (given != induced)
            throw std::invalid_argument("not a grid graph: edges are not the unit-distance pairs");
    }
};

/// Naive Hamiltonian path existence from s (to t when t != 0).
inline bool hamiltonian_path_exists(const StartEndGraph& g) {
    if (g.n == 1) return g.t == 0;
    auto adj = g.adjacency();
    std::vector<char> used(static_cast<std::size_t>(g.n) + 1, 0);
    used[static_cast<std::size_t>(g.s)] = 1;
    struct Rec {
        const StartEndGraph& g;
        const std::vector<std::vector<int>>& adj;
        std::vector<char>& used;
        bool go(int at, int visited) {
            if (visited == g.n) return g.t == 0 || at == g.t;
            for (int next : adj[static_cast<std::size_t>(at)]) {
                if (used[static_cast<std::size_t>(next)]) continue;
                used[static_cast<std::size_t>(next)] = 1;
                if (go(next, visited + 1)) return true;
                used[static_cast<std::size_t>(next)] = 0;
            }
            return false;
        }
    } rec{g, adj, used};
    return rec.go(g.s, 1);
}

/// Is `order` a Hamiltonian path of g from s (to t when given)?
inline bool is_hamiltonian_path(const StartEndGraph& g, const std::vector<int>& order) {
    if (static_cast<int>(order.size()) != g.n) return false;
    if (order.front() != g.s) return false;
    if (g.t != 0 && order.back() != g.t) return false;
    std::set<int> seen(order.begin(), order.end());
    if (static_cast<int>(seen.size()) != g.n) return false;
    std::set<std::pair<int, int>> edge_set;
    for (auto [a, b] : g.edges) {
        auto key = std::minmax(a, b);
        edge_set.insert({key.first, key.second});
    }
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        auto key = std::minmax(order[i], order[i + 1]);
        if (!edge_set.count({key.first, key.second})) return false;
    }
    return true;
}

inline nlohmann::json graph_to_json(const StartEndGraph& g) {
    nlohmann::json j;
    j["format"] = "solochess v1";
    j["kind"] = "graph";
    j["n"] = g.n;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges) edges.push_back({a, b});
    j["edges"] = edges;
    j["s"] = g.s;
    if (g.t != 0) j["t"] = g.t;
    if (g.has_coords()) {
        nlohmann::json coords = nlohmann::json::array();
        for (const auto& c : g.coords) coords.push_back({c.x, c.y});
        j["coords"] = coords;
    }
    return j;
}

inline StartEndGraph graph_from_json(const nlohmann::json& j) {
    StartEndGraph g;
    g.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges"))
        g.edges.push_back({e[0].get<int>(), e[1].get<int>()});
    g.s = j.at("s").get<int>();
    g.t = j.value("t", 0);
    if (j.contains("coords"))
        for (const auto& c : j["coords"])
            g.coords.push_back({c[0].get<std::int64_t>(), c[1].get<std::int64_t>()});
    g.validate_basic();
    return g;
}

// ---------------------------------------------------------------------------
// enumerators for the verification sweeps

/// All connected lattice point sets of the given size, one representative
/// per translation class (anchored so the lexicographically smallest point
/// is the origin), as induced grid graphs without designated vertices.
inline std::vector<std::vector<Location>> enumerate_polyomino_point_sets(int size) {
    auto canonical = [](std::vector<Location> pts) {
        std::sort(pts.begin(), pts.end());
        Location base = pts.front();
        for (auto& p : pts) p = {p.x - base.x, p.y - base.y};
        return pts;
    };
    std::set<std::vector<Location>> seen;
    std::vector<std::vector<Location>> out;
    std::vector<Location> current{{0, 0}};
    std::function<void()> grow = [&]() {
        if (static_cast<int>(current.size()) == size) {
            auto c = canonical(current);
            if (seen.insert(c).second) out.push_back(c);
            return;
        }
        std::set<Location> candidates;
        for (const auto& p : current) {
            for (const Offset& o : {Offset{1, 0}, Offset{-1, 0}, Offset{0, 1}, Offset{0, -1}}) {
                Location q = p + o;
                bool taken = false;
                for (const auto& r : current) taken = taken || r == q;
                if (!taken) candidates.insert(q);
            }
        }
        for (const auto& q : candidates) {
            current.push_back(q);
            grow();
            current.pop_back();
        }
    };
    grow();
    return out;
}

/// Grid graph from a point set (vertices in sorted order, induced edges).
inline StartEndGraph grid_graph_from_points(const std::vector<Location>& pts, int s, int t = 0) {
    StartEndGraph g;
    g.n = static_cast<int>(pts.size());
    g.coords = pts;
    std::sort(g.coords.begin(), g.coords.end());
    for (int a = 1; a <= g.n; ++a) {
        for (int b = a + 1; b <= g.n; ++b) {
            std::int64_t dx = g.coords[a - 1].x - g.coords[b - 1].x;
            std::int64_t dy = g.coords[a - 1].y - g.coords[b - 1].y;
            if (dx * dx + dy * dy == 1) g.edges.push_back({a, b});
        }
    }
    g.s = s;
    g.t = t;
    return g;
}

/// All connected graphs on labeled vertices 1..n with maximum degree 3 and
/// degree-1 designated endpoints. When `need_t` is false the end vertex is
/// left unset. Graphs are emitted once per (edge set, s[, t]) choice.
inline std::vector<StartEndGraph> enumerate_degree3_graphs(int n, bool need_t) {
    std::vector<std::pair<int, int>> all_pairs;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) all_pairs.push_back({a, b});
    const int m = static_cast<int>(all_pairs.size());
    std::vector<StartEndGraph> out;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        StartEndGraph g;
        g.n = n;
        for (int i = 0; i < m; ++i)
            if (mask & (1ull << i)) g.edges.push_back(all_pairs[static_cast<std::size_t>(i)]);
        auto deg = g.degrees();
        bool ok = true;
        for (int v = 1; v <= n; ++v) ok = ok && deg[static_cast<std::size_t>(v)] <= 3;
        if (!ok) continue;
        // connected (every vertex touched); disconnected inputs are still
        // legal generator inputs but make the sweep explode, so the suites
        // cover them separately with tiny cases
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        auto adj = g.adjacency();
        std::vector<int> stack{1};
        seen[1] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[static_cast<std::size_t>(u)])
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    ++count;
                    stack.push_back(v);
                }
        }
        if (count != n) continue;
        for (int s = 1; s <= n; ++s) {
            if (deg[static_cast<std::size_t>(s)] != 1) continue;
            if (!need_t) {
                StartEndGraph inst = g;
                inst.s = s;
                out.push_back(inst);
                continue;
            }
            for (int t = 1; t <= n; ++t) {
                if (t == s || deg[static_cast<std::size_t>(t)] != 1) continue;
                StartEndGraph inst = g;
                inst.s = s;
                inst.t = t;
                out.push_back(inst);
            }
        }
    }
    return out;
}

}  // namespace solochess
