#pragma once

/// @file oracle.hpp
/// Ground-truth solvers for small boards.
///
/// Two engines:
///  - solve_exhaustive: depth-first search over every valid move with a
///    memo of failed states. The default, used to anchor every other
///    component.
///  - solve_by_hero_paths: for boards with one uncapturable hero among
///    single-type villains. Enumerates hero paths exhaustively and tests
///    the funnel criterion per path; equivalent to the move-level search
///    (a board is solvable exactly when some hero path lets every villain
///    funnel into it) but feasible on the larger generated instances.
///    Cross-checked against solve_exhaustive in the test suite.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "solochess/board.hpp"
#include "solochess/hero_path.hpp"

namespace solochess {

struct OracleOptions {
    int max_pieces = 8;
    std::optional<int> move_cap;  // per-piece move limit, unlimited if absent
    bool use_memo = true;
    bool use_component_prune = true;
    std::uint64_t node_limit = 0;  // 0 = unlimited
};

struct OracleBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

class ExhaustiveSearch {
public:
    ExhaustiveSearch(const Board& board, const MoveTable& table, const OracleOptions& opt)
        : table_(table), opt_(opt), pos_(Position::start(board, table)) {}

    std::optional<std::vector<EffMove>> run() {
        moves_.clear();
        if (dfs()) return moves_;
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::string state_key() const {
        std::string key;
        key.reserve(pos_.squares.size());
        for (std::size_t i = 0; i < pos_.squares.size(); ++i) {
            const Occupant& o = pos_.squares[i];
            if (!o.present) continue;
            key.push_back(static_cast<char>(i & 0xff));
            key.push_back(static_cast<char>((i >> 8) & 0xff));
            key.push_back(static_cast<char>((static_cast<int>(o.kind) << 1) |
                                            (o.uncapturable ? 1 : 0)));
            if (opt_.move_cap) key.push_back(static_cast<char>(o.moves_made));
        }
        return key;
    }

    /// Sound unsolvability test: build an over-approximate interaction
    /// graph (geometric moves of every kind a square's component could
    /// host, ignoring blockers, excluding captures of uncapturable
    /// pieces) and union endpoints. Squares never become occupied again,
    /// so components can only split as play continues and each component
    /// keeps at least one piece forever. Two components means no line of
    /// play ends with a single piece.
    bool split_into_components() const {
        const int n = table_.size();
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        std::vector<int> occ;
        for (int i = 0; i < n; ++i)
            if (pos_.squares[i].present) occ.push_back(i);
        std::vector<std::uint8_t> mask(n, 0);
        for (int i : occ) mask[i] = static_cast<std::uint8_t>(1u << static_cast<int>(pos_.squares[i].kind));
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a : occ) {
                std::uint8_t m = mask[find(a)];
                for (int kind_bit = 0; kind_bit < 6; ++kind_bit) {
                    if (!(m & (1u << kind_bit))) continue;
                    PieceKind k = static_cast<PieceKind>(kind_bit);
                    if (!table_.has_kind(k)) continue;
                    for (const auto& mv : table_.moves_from(k, a)) {
                        if (!pos_.squares[mv.to].present) continue;
                        if (pos_.squares[mv.to].uncapturable) continue;
                        int ra = find(a), rb = find(mv.to);
                        if (ra != rb) {
                            parent[ra] = rb;
                            mask[rb] |= mask[ra];
                            changed = true;
                        }
                    }
                }
            }
        }
        int root = find(occ.front());
        for (int i : occ)
            if (find(i) != root) return true;
        return false;
    }

    bool dfs() {
        if (pos_.piece_count == 1) return true;
        if (opt_.node_limit && nodes_ >= opt_.node_limit)
            throw OracleBudgetExceeded("oracle node limit exceeded");
        ++nodes_;
        std::string key;
        if (opt_.use_memo) {
            key = state_key();
            if (failed_.count(key)) return false;
        }
        if (opt_.use_component_prune && pos_.piece_count > 2 && split_into_components()) {
            if (opt_.use_memo) failed_.insert(std::move(key));
            return false;
        }
        for (int a = 0; a < table_.size(); ++a) {
            const Occupant& o = pos_.squares[a];
            if (!o.present) continue;
            if (opt_.move_cap && o.moves_made >= *opt_.move_cap) continue;
            for (const auto& m : table_.moves_from(o.kind, a)) {
                if (!pos_.valid(m)) continue;
                Occupant saved_from = pos_.squares[m.from];
                Occupant saved_to = pos_.squares[m.to];
                pos_.apply(m);
                moves_.push_back(m);
                if (dfs()) return true;
                moves_.pop_back();
                pos_.squares[m.from] = saved_from;
                pos_.squares[m.to] = saved_to;
                ++pos_.piece_count;
            }
        }
        if (opt_.use_memo) failed_.insert(std::move(key));
        return false;
    }

    const MoveTable& table_;
    OracleOptions opt_;
    Position pos_;
    std::vector<EffMove> moves_;
    std::unordered_set<std::string> failed_;
    std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Exhaustive move-level search. Returns a verified solution or nullopt.
inline std::optional<Solution> solve_exhaustive(const Board& board,
                                                const OracleOptions& opt = {}) {
    if (static_cast<int>(board.size()) > opt.max_pieces)
        throw std::invalid_argument("solve_exhaustive: piece count exceeds configured bound");
    Board b = normalize(board);
    if (b.size() == 0) return std::nullopt;
    if (b.size() == 1) return Solution{};
    MoveTable table(b, b.kinds_present());
    detail::ExhaustiveSearch search(b, table, opt);
    auto found = search.run();
    if (!found) return std::nullopt;
    Solution sol;
    for (const auto& m : *found) sol.moves.push_back(table.to_move_seq(m));
    return sol;
}

/// Exhaustive hero-path search for one-hero boards: depth-first over all
/// hero paths, extending every path that does not yet funnel all villains
/// but could still do so after an extension, pruning paths where some
/// villain can no longer reach any hero-reachable square.
inline std::optional<Solution> solve_by_hero_paths(const Board& board,
                                                   std::uint64_t node_limit = 0,
                                                   std::uint64_t* nodes_out = nullptr) {
    Board b = normalize(board);
    HeroBoard hb = HeroBoard::make(b);
    const int n = hb.size();
    if (n == 1) return Solution{{}, {hb.table.loc(hb.hero_start)}};

    std::vector<int> path{hb.hero_start};
    std::vector<char> on_path(n, 0);
    on_path[hb.hero_start] = 1;
    std::uint64_t nodes = 0;

    // plain recursive search; everything recomputed per node from scratch
    std::function<std::optional<Solution>()> visit = [&]() -> std::optional<Solution> {
        if (node_limit && nodes >= node_limit)
            throw OracleBudgetExceeded("hero path search node limit exceeded");
        ++nodes;
        const std::size_t k = path.size() - 1;
        // strongly funnelable villains: union over i of squares that can
        // walk to p_(i+1) while the hero stands at p_i
        std::vector<char> strong(n, 0);
        for (std::size_t i = 0; i < k; ++i) {
            auto adj = villain_graph_after(hb, path, i, true);
            std::vector<char> reached = reach_to(adj, path[i + 1]);
            for (int v = 0; v < n; ++v) strong[v] = strong[v] || reached[v];
        }
        bool all_strong = true;
        for (int v = 0; v < n && all_strong; ++v) all_strong = on_path[v] || strong[v];
        if (all_strong) return reconstruct_from_path(hb, path);

        // hero-reachable squares in the move graph of the hero's type,
        // never re-entering the path
        std::vector<char> hero_reach(n, 0);
        {
            std::deque<int> q{path.back()};
            std::vector<char> seen(n, 0);
            seen[path.back()] = 1;
            while (!q.empty()) {
                int a = q.front();
                q.pop_front();
                for (const auto& m : hb.table.moves_from(hb.hero_kind, a)) {
                    if (on_path[m.to] || seen[m.to]) continue;
                    seen[m.to] = 1;
                    hero_reach[m.to] = 1;
                    q.push_back(m.to);
                }
            }
        }
        auto g_k = villain_graph_after(hb, path, k, false);
        // can each still-unfunneled villain reach a hero-reachable square?
        std::vector<char> can_escape(n, 0);
        {
            std::vector<std::vector<int>> radj(n);
            for (int v = 0; v < n; ++v)
                for (int w : g_k[v]) radj[w].push_back(v);
            std::deque<int> q;
            for (int v = 0; v < n; ++v) {
                if (hero_reach[v] && !on_path[v]) {
                    can_escape[v] = 1;
                    q.push_back(v);
                }
            }
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (int v : radj[u]) {
                    if (!can_escape[v]) {
                        can_escape[v] = 1;
                        q.push_back(v);
                    }
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (!on_path[v] && !strong[v] && !can_escape[v]) return std::nullopt;  // dead
        }
        for (const EffMove* hop : hero_hops(hb, path, on_path)) {
            path.push_back(hop->to);
            on_path[hop->to] = 1;
            auto sub = visit();
            on_path[path.back()] = 0;
            path.pop_back();
            if (sub) return sub;
        }
        return std::nullopt;
    };
    auto result = visit();
    if (nodes_out) *nodes_out = nodes;
    return result;
}

/// Deterministic enumeration of all boards over a region: every nonempty
/// placement of up to `max_pieces` pieces of `kind`, optionally with each
/// piece in turn promoted to an uncapturable hero of `hero_kind`.
inline std::vector<Board> enumerate_boards(const Region& region, PieceKind kind, int max_pieces,
                                           std::optional<PieceKind> hero_kind = std::nullopt) {
    std::vector<Location> squares;
    for (std::int64_t x = region.min_x; x <= region.max_x; ++x)
        for (std::int64_t y = region.min_y; y <= region.max_y; ++y)
            squares.push_back({x, y});
    std::vector<Board> out;
    const int m = static_cast<int>(squares.size());
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (!pick.empty()) {
            if (!hero_kind) {
                Board b;
                for (int i : pick) b.put(squares[i], {kind, false});
                out.push_back(std::move(b));
            } else {
                for (std::size_t h = 0; h < pick.size(); ++h) {
                    Board b;
                    for (std::size_t j = 0; j < pick.size(); ++j) {
                        bool is_hero = j == h;
                        b.put(squares[pick[j]], {is_hero ? *hero_kind : kind, is_hero});
                    }
                    out.push_back(std::move(b));
                }
            }
        }
        if (static_cast<int>(pick.size()) == max_pieces) return;
        for (int i = start; i < m; ++i) {
            pick.push_back(i);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace solochess
