#pragma once

/// @file hero_solver.hpp
/// Polynomial-time solver for one uncapturable hero of type S among
/// villains of a symmetric type T with S a subset of T as move sets.
///
/// The search walks the tree of hero paths. A path solves the puzzle when
/// every villain can already be funneled into it; a path stays worth
/// extending while every unfunneled villain can still reach some square
/// the hero itself can still reach; otherwise the subtree is pruned. For
/// symmetric T these extendable paths form a small tree: no two distinct
/// explored paths can share an endpoint and a witness villain, which
/// bounds the node count by |squares|^2.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "solochess/hero_path.hpp"

namespace solochess {

struct HeroSolveError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Violation of an internal invariant the theory guarantees cannot happen.
struct HeroInvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

struct HeroSolveOptions {
    /// Run the expensive recomputation checks of the structural lemmas at
    /// every node (prefix closure, hero-blocked subgraph containment,
    /// connectivity of escapable villains). For test sweeps.
    bool check_lemmas = false;
    /// Skip the move-set subset/symmetry enumeration checks when the
    /// bounding region is larger than this many squares; built-in piece
    /// type flags are trusted beyond desk scale.
    std::int64_t precondition_check_area = 4096;
};

struct HeroSolveStats {
    std::uint64_t nodes = 0;            // paths classified
    std::uint64_t extendable_nodes = 0; // paths that were neither solved nor dead
    std::uint64_t lemma_checks = 0;
};

namespace detail {

class HeroSearch {
public:
    HeroSearch(const HeroBoard& hb, const HeroSolveOptions& opt, HeroSolveStats* stats)
        : hb_(hb), opt_(opt), stats_(stats) {
        n_ = hb.size();
        budget_ = static_cast<std::uint64_t>(n_) * static_cast<std::uint64_t>(n_);
        path_.push_back(hb.hero_start);
        on_path_.assign(n_, 0);
        on_path_[hb.hero_start] = 1;
        strong_.assign(n_, 0);
    }

    std::optional<Solution> run() {
        auto res = visit();
        if (res) return reconstruct_from_path(hb_, path_);
        return std::nullopt;
    }

private:
    enum class NodeClass { Solved, Extendable, Dead };

    /// true when the current path is a full solution (search stops there)
    std::optional<bool> visit() {
        if (stats_) ++stats_->nodes;
        NodeClass cls = classify();
        if (cls == NodeClass::Solved) return true;
        if (cls == NodeClass::Dead) return std::nullopt;
        if (stats_) ++stats_->extendable_nodes;
        if (++extendable_count_ > budget_)
            throw HeroInvariantError("hero search exceeded its square node budget");
        for (const EffMove* hop : hero_hops(hb_, path_, on_path_)) {
            path_.push_back(hop->to);
            on_path_[hop->to] = 1;
            std::vector<int> strong_delta = absorb_new_strong();
            auto sub = visit();
            if (sub) return sub;  // keep path_ as the found solution path
            for (int v : strong_delta) strong_[v] = 0;
            on_path_[path_.back()] = 0;
            path_.pop_back();
        }
        return std::nullopt;
    }

    /// After appending p_(k+1): villains that can now funnel to it while
    /// the hero stands at p_k join the strong set.
    std::vector<int> absorb_new_strong() {
        const std::size_t k = path_.size() - 2;
        auto adj = villain_graph_after(hb_, path_, k, true);
        std::vector<char> reached = reach_to(adj, path_.back());
        std::vector<int> delta;
        for (int v = 0; v < n_; ++v) {
            if (reached[v] && !strong_[v]) {
                strong_[v] = 1;
                delta.push_back(v);
            }
        }
        return delta;
    }

    NodeClass classify() {
        bool all_strong = true;
        for (int v = 0; v < n_; ++v)
            if (!on_path_[v] && !strong_[v]) all_strong = false;
        if (all_strong) {
            if (opt_.check_lemmas) check_no_solved_prefix_witnesses();
            return NodeClass::Solved;
        }

        // squares the hero could still reach, following its move graph and
        // never re-entering the path
        std::vector<char> hero_reach(n_, 0);
        {
            std::deque<int> q{path_.back()};
            std::vector<char> seen(n_, 0);
            seen[path_.back()] = 1;
            while (!q.empty()) {
                int a = q.front();
                q.pop_front();
                for (const auto& m : hb_.table.moves_from(hb_.hero_kind, a)) {
                    if (on_path_[m.to] || seen[m.to]) continue;
                    seen[m.to] = 1;
                    hero_reach[m.to] = 1;
                    q.push_back(m.to);
                }
            }
        }
        const std::size_t k = path_.size() - 1;
        auto g_k = villain_graph_after(hb_, path_, k, false);
        std::vector<char> escapable = multi_source_reach_to(g_k, hero_reach);

        std::vector<int> witnesses;
        for (int v = 0; v < n_; ++v) {
            if (on_path_[v] || strong_[v]) continue;
            if (!escapable[v]) return NodeClass::Dead;
            witnesses.push_back(v);
        }
        if (opt_.check_lemmas) run_lemma_checks(witnesses);
        record_witnesses(witnesses);
        return NodeClass::Extendable;
    }

    /// Squares with a directed walk in `adj` to any seed square.
    std::vector<char> multi_source_reach_to(const std::vector<std::vector<int>>& adj,
                                            const std::vector<char>& seeds) const {
        std::vector<std::vector<int>> radj(n_);
        for (int v = 0; v < n_; ++v)
            for (int w : adj[v]) radj[w].push_back(v);
        std::vector<char> reached(n_, 0);
        std::deque<int> q;
        for (int v = 0; v < n_; ++v) {
            if (seeds[v] && !on_path_[v]) {
                reached[v] = 1;
                q.push_back(v);
            }
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : radj[u]) {
                if (!reached[v]) {
                    reached[v] = 1;
                    q.push_back(v);
                }
            }
        }
        return reached;
    }

    /// For symmetric villains, two different explored paths may never share
    /// both an endpoint and a witness villain.
    void record_witnesses(const std::vector<int>& witnesses) {
        int endpoint = path_.back();
        for (int v : witnesses) {
            auto key = std::make_pair(endpoint, v);
            auto it = witness_paths_.find(key);
            if (it == witness_paths_.end()) {
                witness_paths_.emplace(key, path_);
            } else if (it->second != path_) {
                throw HeroInvariantError(
                    "two explored paths share an endpoint and a witness villain");
            }
        }
    }

    // ---- recomputation checks, enabled by HeroSolveOptions::check_lemmas ----

    void run_lemma_checks(const std::vector<int>& witnesses) {
        if (stats_) ++stats_->lemma_checks;
        const std::size_t k = path_.size() - 1;
        // hero-blocked graph is contained in the unblocked graph, per index
        for (std::size_t i = 0; i <= k; ++i) {
            auto h_i = villain_graph_after(hb_, path_, i, true);
            auto g_i = villain_graph_after(hb_, path_, i, false);
            for (int v = 0; v < n_; ++v) {
                for (int w : h_i[v]) {
                    bool in_g = false;
                    for (int x : g_i[v]) in_g = in_g || x == w;
                    if (!in_g) throw HeroInvariantError("blocked graph not a subgraph");
                }
            }
        }
        // every witness is witness for every prefix too
        for (int v : witnesses) {
            for (std::size_t len = 1; len <= k; ++len) {
                std::vector<int> prefix(path_.begin(), path_.begin() + len + 1);
                if (recompute_strong(prefix, v))
                    throw HeroInvariantError("witness funnelable under a prefix");
                if (!recompute_escapable(prefix, v))
                    throw HeroInvariantError("witness cannot escape under a prefix");
            }
        }
        // escapable villains are connected to the hero square once the path
        // squares before it are gone (undirected view, symmetric villains)
        if (k >= 1) {
            auto g_km1 = villain_graph_after(hb_, path_, k - 1, false);
            std::vector<char> connected = multi_source_reach_from(g_km1, path_.back());
            for (int v : witnesses) {
                if (!connected[v])
                    throw HeroInvariantError("escapable villain disconnected from the hero");
            }
        }
    }

    std::vector<char> multi_source_reach_from(const std::vector<std::vector<int>>& adj,
                                              int source) const {
        // undirected reachability
        std::vector<std::vector<int>> sym(n_);
        for (int v = 0; v < n_; ++v) {
            for (int w : adj[v]) {
                sym[v].push_back(w);
                sym[w].push_back(v);
            }
        }
        std::vector<char> seen(n_, 0);
        std::deque<int> q{source};
        seen[source] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : sym[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    q.push_back(v);
                }
        }
        return seen;
    }

    bool recompute_strong(const std::vector<int>& path, int v) const {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            auto adj = villain_graph_after(hb_, path, i, true);
            if (reach_to(adj, path[i + 1])[v]) return true;
        }
        return false;
    }

    bool recompute_escapable(const std::vector<int>& path, int v) const {
        std::vector<char> on(n_, 0);
        for (int id : path) on[id] = 1;
        std::vector<char> hero_reach(n_, 0);
        std::deque<int> q{path.back()};
        std::vector<char> seen(n_, 0);
        seen[path.back()] = 1;
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            for (const auto& m : hb_.table.moves_from(hb_.hero_kind, a)) {
                if (on[m.to] || seen[m.to]) continue;
                seen[m.to] = 1;
                hero_reach[m.to] = 1;
                q.push_back(m.to);
            }
        }
        std::vector<bool> verts(n_, true), blockers(n_, false);
        for (int id : path) verts[id] = false;
        auto adj = icg_vb(hb_.table, hb_.villain_kind, verts, blockers);
        std::vector<char> fwd(n_, 0);
        std::deque<int> q2{v};
        fwd[v] = 1;
        while (!q2.empty()) {
            int u = q2.front();
            q2.pop_front();
            if (hero_reach[u] && !on[u]) return true;
            for (int w : adj[u])
                if (!fwd[w]) {
                    fwd[w] = 1;
                    q2.push_back(w);
                }
        }
        return hero_reach[v] && !on[v];
    }

    void check_no_solved_prefix_witnesses() const {
        // a found solution is minimal: no proper prefix funnels everything
        for (std::size_t len = 1; len + 1 < path_.size(); ++len) {
            std::vector<int> prefix(path_.begin(), path_.begin() + len + 1);
            bool all = true;
            for (int v = 0; v < n_ && all; ++v) {
                bool on = false;
                for (int id : prefix) on = on || id == v;
                if (!on) all = recompute_strong(prefix, v);
            }
            if (all) throw HeroInvariantError("a proper prefix already solves the board");
        }
    }

    const HeroBoard& hb_;
    HeroSolveOptions opt_;
    HeroSolveStats* stats_;
    int n_ = 0;
    std::uint64_t budget_ = 0, extendable_count_ = 0;
    std::vector<int> path_;
    std::vector<char> on_path_;
    std::vector<char> strong_;
    std::map<std::pair<int, int>, std::vector<int>> witness_paths_;
};

}  // namespace detail

/// Solves a one-hero board. `hero` and `villain` name the expected types;
/// the board contents are validated against them, as are the move-set
/// preconditions (hero moves a subset of villain moves, villains
/// symmetric).
inline std::optional<Solution> solve_hero_villain(const Board& board, PieceKind hero,
                                                  PieceKind villain,
                                                  const HeroSolveOptions& opt = {},
                                                  HeroSolveStats* stats = nullptr) {
    Board b = normalize(board);
    if (b.uncapturable_count() != 1)
        throw HeroSolveError("board must contain exactly one uncapturable hero");
    Location hero_loc = *b.uncapturable_location();
    if (b.at(hero_loc)->kind != hero) throw HeroSolveError("hero piece has the wrong type");
    for (const auto& [loc, p] : b.pieces()) {
        if (loc == hero_loc) continue;
        if (p.kind != villain) throw HeroSolveError("villain piece has the wrong type");
    }
    const PieceTypeDef& s = builtin_piece_type(hero);
    const PieceTypeDef& t = builtin_piece_type(villain);
    Region region = b.bounding_region();
    bool desk_scale = region.width() * region.height() <= opt.precondition_check_area;
    if (desk_scale ? !check_symmetric(t, region) : !t.symmetric)
        throw HeroSolveError("villain type must be symmetric");
    auto known_subset = [](PieceKind a, PieceKind bk) {
        if (a == bk) return true;
        if (bk == PieceKind::Queen)
            return a == PieceKind::Pawn || a == PieceKind::King || a == PieceKind::Rook ||
                   a == PieceKind::Bishop;
        if (bk == PieceKind::Bishop || bk == PieceKind::King) return a == PieceKind::Pawn;
        return false;
    };
    if (desk_scale ? !check_subset(s, t, region) : !known_subset(hero, villain))
        throw HeroSolveError("hero moves must be a subset of villain moves");

    HeroBoard hb = HeroBoard::make(b);
    detail::HeroSearch search(hb, opt, stats);
    return search.run();
}

}  // namespace solochess
