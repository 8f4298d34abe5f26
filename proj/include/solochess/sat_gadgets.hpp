#pragma once

/// @file sat_gadgets.hpp
/// Satisfiability instance generators: boards solvable exactly when a
/// monotone sided formula is satisfiable.
///
/// Shared structure across the three families: one gadget per variable is
/// stacked on a vertical spine. The hero climbs from below the bottom
/// gadget to a lone apex villain at the top, choosing a left path (sets
/// the variable true) or a right path (false) through each gadget. Some
/// path squares are ports: one per literal occurrence, isolated from
/// everything except the pieces of its clause. A clause's pieces can only
/// leave the board by funneling into one of the clause's ports before the
/// hero captures there, so the board solves exactly when the hero's side
/// choices hit at least one port of every clause. Everything that is not
/// clause-owned is wired (directly or through escape pieces) into the
/// "web": squares the hero provably visits under every choice.
///
/// Soundness rests on two checkable properties, asserted after layout:
///  - closure: a clause piece's capture geometry reaches only that
///    clause's pieces and ports, and a port's reaches only its clause
///    (captures target ever-occupied squares only, and squares never
///    become occupied again, so checking the full-board geometry covers
///    every reachable position);
///  - hero safety: from every square the hero can visit, its own move
///    geometry reaches no piece outside the visitable set, so the hero
///    can never wander off the designed paths.

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "solochess/board.hpp"
#include "solochess/cnf.hpp"
#include "solochess/io.hpp"

namespace solochess {

struct SatGenError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct SatInstance {
    std::string family;  // pawn-knight, king-knight, king-bishop, knight-queen|rook|bishop
    MonotoneCnf formula;
    Board board;
    Location hero_start{};
    // per variable (1-based): the squares whose visit means "true" / "false"
    std::vector<std::vector<Location>> left_squares, right_squares;
};

namespace satdetail {

enum class Role { Hero, Route, Port, Web, Clause, Apex };

struct Layout {
    PieceKind hero_kind{}, villain_kind{};
    Board board;
    Location hero_start{};
    std::map<Location, Role> role;
    std::map<Location, std::pair<int, int>> port_side;  // port -> (variable, 0=left 1=right)
    std::map<Location, int> clause_of;                  // clause pieces and ports -> clause index

    void put(const Location& l, PieceKind kind, bool uncap, Role r) {
        board.put(l, {kind, uncap});
        role[l] = r;
    }

    bool visitable(const Location& l) const {
        auto it = role.find(l);
        if (it == role.end()) return false;
        return it->second == Role::Hero || it->second == Role::Route ||
               it->second == Role::Port || it->second == Role::Apex;
    }
};

/// Post-layout validation of the closure and hero-safety rules plus the
/// funneling connectivity each clause and the web need.
inline void check_layout(const Layout& lay) {
    MoveTable table(lay.board, {lay.hero_kind, lay.villain_kind});
    auto role_of = [&](const Location& l) { return lay.role.at(l); };

    // hero safety: hero moves from visitable squares reach only visitable squares
    for (const auto& [from, r] : lay.role) {
        if (!lay.visitable(from)) continue;
        for (const auto& m : table.moves_from(lay.hero_kind, table.id(from))) {
            Location to = table.loc(m.to);
            if (!lay.visitable(to))
                throw std::logic_error("hero could reach a piece off the designed paths");
        }
    }

    // the final piece must be capturable by the hero alone: if any villain
    // could ever reach it, solutions could end without climbing the board
    for (const auto& [from, rf] : lay.role) {
        if (rf != Role::Apex) continue;
        if (!table.moves_from(lay.villain_kind, table.id(from)).empty())
            throw std::logic_error("the apex piece is not isolated");
    }

    // capture-closure rules over villain geometry
    for (const auto& [from, rf] : lay.role) {
        if (rf == Role::Hero) continue;
        for (const auto& m : table.moves_from(lay.villain_kind, table.id(from))) {
            Location to = table.loc(m.to);
            Role rt = role_of(to);
            if (rt == Role::Hero) continue;  // uncapturable, never a real edge
            bool from_webish = rf == Role::Route || rf == Role::Web || rf == Role::Apex;
            bool to_webish = rt == Role::Route || rt == Role::Web || rt == Role::Apex;
            if (from_webish && to_webish) continue;
            if (rf == Role::Port && rt == Role::Port) {
                if (lay.port_side.at(from) == lay.port_side.at(to)) continue;
                throw std::logic_error("ports of different sides see each other");
            }
            if ((rf == Role::Port && rt == Role::Clause) ||
                (rf == Role::Clause && rt == Role::Port)) {
                const Location& port = rf == Role::Port ? from : to;
                const Location& piece = rf == Role::Port ? to : from;
                if (lay.clause_of.at(port) == lay.clause_of.at(piece)) continue;
                throw std::logic_error("clause piece sees a foreign port");
            }
            if (rf == Role::Clause && rt == Role::Clause) {
                if (lay.clause_of.at(from) == lay.clause_of.at(to)) continue;
                throw std::logic_error("pieces of different clauses see each other");
            }
            throw std::logic_error("forbidden capture geometry between square classes");
        }
    }

    // capture edges: "initial" wants nothing between the endpoints at the
    // start, "ever" settles for line sight (captures open up as squares
    // empty and never close again)
    auto edges_from = [&](const Location& from, bool ever) {
        std::vector<Location> out;
        for (const auto& m : table.moves_from(lay.villain_kind, table.id(from))) {
            if (!ever && !m.interior.empty()) continue;
            if (role_of(table.loc(m.to)) == Role::Hero) continue;
            out.push_back(table.loc(m.to));
        }
        return out;
    };
    auto component_from = [&](const std::vector<Location>& seeds, bool ever,
                              const std::function<bool(const Location&)>& member) {
        std::set<Location> seen(seeds.begin(), seeds.end());
        std::deque<Location> q(seeds.begin(), seeds.end());
        while (!q.empty()) {
            Location u = q.front();
            q.pop_front();
            for (const Location& v : edges_from(u, ever)) {
                if (!member(v) || seen.count(v)) continue;
                seen.insert(v);
                q.push_back(v);
            }
        }
        return seen;
    };

    // each clause with its ports must be one capture component right from
    // the start position
    std::map<int, std::vector<Location>> clause_squares;
    for (const auto& [l, c] : lay.clause_of) clause_squares[c].push_back(l);
    for (const auto& [c, squares] : clause_squares) {
        auto member = [&](const Location& l) {
            auto it = lay.clause_of.find(l);
            return it != lay.clause_of.end() && it->second == c;
        };
        auto comp = component_from({squares.front()}, false, member);
        if (comp.size() != squares.size())
            throw std::logic_error("clause structure is not connected");
    }

    // every web piece must reach some route or apex square
    {
        std::vector<Location> seeds;
        for (const auto& [l, r] : lay.role)
            if (r == Role::Route || r == Role::Apex) seeds.push_back(l);
        auto member = [&](const Location& l) {
            Role r = role_of(l);
            return r == Role::Route || r == Role::Web || r == Role::Apex;
        };
        auto comp = component_from(seeds, true, member);
        for (const auto& [l, r] : lay.role) {
            if (r == Role::Web && !comp.count(l))
                throw std::logic_error("escape piece cannot reach the hero's paths");
        }
    }
}

/// Occurrence slots per (variable, side): clause index per slot, at most
/// two, ordered the way a planar drawing attaches them (arcs ending at the
/// variable innermost-first, arcs starting there outermost-first). Slot
/// order decides which port each clause gets; following the drawing keeps
/// clause chains nestable without crossings.
struct SideOccupancy {
    std::vector<int> clauses;
};

inline std::vector<std::array<SideOccupancy, 2>> occurrence_slots(const MonotoneCnf& f) {
    std::vector<std::array<SideOccupancy, 2>> occ(static_cast<std::size_t>(f.n) + 1);
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
        for (int v : f.clauses[ci].vars) {
            int side = f.clauses[ci].positive ? 0 : 1;
            occ[static_cast<std::size_t>(v)][static_cast<std::size_t>(side)].clauses.push_back(
                static_cast<int>(ci));
        }
    }
    for (int v = 1; v <= f.n; ++v) {
        for (int s = 0; s < 2; ++s) {
            auto& list = occ[static_cast<std::size_t>(v)][static_cast<std::size_t>(s)].clauses;
            if (list.size() > 2) throw SatGenError("a literal occurs more than twice");
            auto rank = [&](int ci) {
                const auto& c = f.clauses[static_cast<std::size_t>(ci)];
                int lo = c.vars.front(), hi = c.vars.back();
                int span = hi - lo;
                if (span > 0 && hi == v) return std::make_tuple(0, span, -ci);
                if (span > 0 && lo == v) return std::make_tuple(2, -span, ci);
                return std::make_tuple(1, 0, 0);
            };
            std::stable_sort(list.begin(), list.end(),
                             [&](int a, int b) { return rank(a) < rank(b); });
        }
    }
    return occ;
}

/// Chain lane per clause: clauses with others nested inside their span get
/// pushed further out, so nested chains never wall each other in.
inline std::vector<int> clause_lanes(const MonotoneCnf& f) {
    std::vector<int> lane(f.clauses.size(), 0);
    for (std::size_t a = 0; a < f.clauses.size(); ++a) {
        for (std::size_t b = 0; b < f.clauses.size(); ++b) {
            if (a == b || f.clauses[a].positive != f.clauses[b].positive) continue;
            int alo = f.clauses[a].vars.front(), ahi = f.clauses[a].vars.back();
            int blo = f.clauses[b].vars.front(), bhi = f.clauses[b].vars.back();
            bool strictly_inside = (alo < blo && bhi <= ahi) || (alo <= blo && bhi < ahi);
            if (strictly_inside) lane[a] = std::max(lane[a], lane[b] + 1);
        }
    }
    // fully resolve chains of nesting
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < f.clauses.size(); ++a) {
            for (std::size_t b = 0; b < f.clauses.size(); ++b) {
                if (a == b || f.clauses[a].positive != f.clauses[b].positive) continue;
                int alo = f.clauses[a].vars.front(), ahi = f.clauses[a].vars.back();
                int blo = f.clauses[b].vars.front(), bhi = f.clauses[b].vars.back();
                bool strictly_inside = (alo < blo && bhi <= ahi) || (alo <= blo && bhi < ahi);
                if (strictly_inside && lane[a] <= lane[b]) {
                    lane[a] = lane[b] + 1;
                    changed = true;
                }
            }
        }
    }
    return lane;
}

}  // namespace satdetail

// ---------------------------------------------------------------------------
// family: pawn or king hero among knights

namespace satdetail {

/// Deterministic knight path between two squares, restricted to a box and
/// a per-square admissibility predicate. Returns the path excluding `from`
/// and including `to`; empty optional when unreachable.
inline std::optional<std::vector<Location>> knight_path(
    const Location& from, const Location& to, const Region& box,
    const std::function<bool(const Location&)>& admissible) {
    static const Offset hops[] = {{-2, -1}, {-1, -2}, {1, -2}, {2, -1},
                                  {-2, 1},  {-1, 2},  {1, 2},  {2, 1}};
    std::map<Location, Location> parent;
    std::deque<Location> q{from};
    parent[from] = from;
    while (!q.empty()) {
        Location u = q.front();
        q.pop_front();
        if (u == to) break;
        for (const Offset& o : hops) {
            Location v = u + o;
            if (!box.contains(v) || parent.count(v)) continue;
            if (!(v == to) && !admissible(v)) continue;
            parent[v] = u;
            q.push_back(v);
        }
    }
    if (!parent.count(to)) return std::nullopt;
    std::vector<Location> path;
    for (Location at = to; !(at == from); at = parent[at]) path.push_back(at);
    std::reverse(path.begin(), path.end());
    return path;
}

inline SatInstance build_knight_family(const MonotoneCnf& f, PieceKind hero) {
    f.validate();
    auto occ = occurrence_slots(f);
    const int n = f.n;
    const std::int64_t pitch = 8;

    Layout lay;
    lay.hero_kind = hero;
    lay.villain_kind = PieceKind::Knight;
    lay.hero_start = {0, 0};
    lay.put(lay.hero_start, hero, true, Role::Hero);

    SatInstance inst;
    inst.family = hero == PieceKind::Pawn ? "pawn-knight" : "king-knight";
    inst.formula = f;
    inst.left_squares.resize(static_cast<std::size_t>(n) + 1);
    inst.right_squares.resize(static_cast<std::size_t>(n) + 1);

    // port squares per clause, filled while laying out the gadgets
    std::vector<std::vector<Location>> clause_ports(f.clauses.size());

    for (int v = 1; v <= n; ++v) {
        std::int64_t b = pitch * (v - 1);
        for (int side = 0; side < 2; ++side) {
            std::int64_t sgn = side == 0 ? -1 : 1;
            auto& squares = side == 0 ? inst.left_squares[static_cast<std::size_t>(v)]
                                      : inst.right_squares[static_cast<std::size_t>(v)];
            const auto& users = occ[static_cast<std::size_t>(v)][static_cast<std::size_t>(side)]
                                    .clauses;
            // the fixed corridor: . 1 2 3 2 3 2 1 with extremal slots at +3/+5
            const Location path[7] = {{sgn * 1, b + 1}, {sgn * 2, b + 2}, {sgn * 3, b + 3},
                                      {sgn * 2, b + 4}, {sgn * 3, b + 5}, {sgn * 2, b + 6},
                                      {sgn * 1, b + 7}};
            for (const Location& l : path) squares.push_back(l);
            for (int i = 0; i < 7; ++i) {
                bool is_slot = i == 2 || i == 4;
                const Location& l = path[i];
                std::size_t slot_index = i == 2 ? 0 : 1;
                if (is_slot && slot_index < users.size()) {
                    lay.put(l, PieceKind::Knight, false, Role::Port);
                    lay.port_side[l] = {v, side};
                    lay.clause_of[l] = users[slot_index];
                    clause_ports[static_cast<std::size_t>(users[slot_index])].push_back(l);
                } else {
                    lay.put(l, PieceKind::Knight, false, Role::Route);
                }
            }
            // escape knights wire unused extremal slots into the web
            if (users.size() < 1) lay.put({sgn * 4, b + 1}, PieceKind::Knight, false, Role::Web);
            if (users.size() < 2) lay.put({sgn * 4, b + 7}, PieceKind::Knight, false, Role::Web);
        }
        // the cross-side escape pieces for ordinary path squares
        lay.put({0, b + 3}, PieceKind::Knight, false, Role::Web);
        lay.put({0, b + 5}, PieceKind::Knight, false, Role::Web);
        // merge square
        lay.put({0, b + 8}, PieceKind::Knight, false, Role::Route);
    }
    Location apex{1, pitch * n + 1};
    lay.put(apex, PieceKind::Knight, false, Role::Apex);

    // clause chains: approach squares next to every port, joined by knight
    // paths through per-clause lanes beyond the gadget flanks. All
    // approaches are placed before any chain is routed so routes cannot
    // crowd a later clause's doorstep.
    std::vector<std::vector<Location>> clause_approaches(f.clauses.size());
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
        auto& ports = clause_ports[ci];
        if (ports.empty()) throw std::logic_error("clause lost its ports");
        std::sort(ports.begin(), ports.end(), [](const Location& a, const Location& b) {
            return a.y < b.y;
        });
        std::int64_t sgn = f.clauses[ci].positive ? -1 : 1;
        for (const Location& p : ports) {
            bool low_slot = ((p.y % pitch) + pitch) % pitch == 3;
            Location a{sgn * 5, low_slot ? p.y - 1 : p.y + 1};
            clause_approaches[ci].push_back(a);
            lay.put(a, PieceKind::Knight, false, Role::Clause);
            lay.clause_of[a] = static_cast<int>(ci);
        }
    }
    std::vector<int> lanes = clause_lanes(f);
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
        std::int64_t sgn = f.clauses[ci].positive ? -1 : 1;
        std::int64_t lane_x = sgn * (8 + 4 * lanes[ci]);

        const std::vector<Location>& approaches = clause_approaches[ci];
        std::vector<Location> chain;
        Region box;
        box.min_x = std::min<std::int64_t>(lane_x - 1, sgn * 5);
        box.max_x = std::max<std::int64_t>(lane_x + 1, sgn * 5);
        box.min_y = -2;
        box.max_y = pitch * n + 2;
        for (std::size_t a = 0; a + 1 < approaches.size(); ++a) {
            auto admissible = [&](const Location& q) {
                if (lay.board.occupied(q)) return false;
                for (const Location& c : chain)
                    if (c == q) return false;
                // the column next to the flanks is reserved for approaches
                if (std::abs(q.x) == 5) return false;
                // keep well clear of everything but this clause's pieces
                for (const auto& [l, r] : lay.role) {
                    if (chebyshev(q, l) <= 1 && lay.visitable(l)) return false;
                    std::int64_t dx = std::abs(q.x - l.x), dy = std::abs(q.y - l.y);
                    bool knight_adj = (dx == 1 && dy == 2) || (dx == 2 && dy == 1);
                    if (!knight_adj) continue;
                    bool own = lay.clause_of.count(l) &&
                               lay.clause_of.at(l) == static_cast<int>(ci);
                    if (!own) return false;
                }
                return true;
            };
            auto leg = knight_path(approaches[a], approaches[a + 1], box, admissible);
            if (!leg) throw SatGenError("could not route a clause chain");
            for (const Location& q : *leg)
                if (!(q == approaches[a + 1])) chain.push_back(q);
        }
        for (const Location& q : chain) {
            lay.put(q, PieceKind::Knight, false, Role::Clause);
            lay.clause_of[q] = static_cast<int>(ci);
        }
    }

    check_layout(lay);
    inst.board = lay.board;
    inst.hero_start = lay.hero_start;
    return inst;
}

}  // namespace satdetail

// ---------------------------------------------------------------------------
// family: king hero among bishops

namespace satdetail {

inline SatInstance build_bishop_family(const MonotoneCnf& f) {
    f.validate();
    auto occ = occurrence_slots(f);
    const int n = f.n;
    const std::int64_t pitch = 8;

    Layout lay;
    lay.hero_kind = PieceKind::King;
    lay.villain_kind = PieceKind::Bishop;
    lay.hero_start = {0, 0};
    lay.put(lay.hero_start, PieceKind::King, true, Role::Hero);

    SatInstance inst;
    inst.family = "king-bishop";
    inst.formula = f;
    inst.left_squares.resize(static_cast<std::size_t>(n) + 1);
    inst.right_squares.resize(static_cast<std::size_t>(n) + 1);

    std::vector<std::vector<Location>> clause_ports(f.clauses.size());

    for (int v = 1; v <= n; ++v) {
        std::int64_t b = pitch * (v - 1);
        for (int side = 0; side < 2; ++side) {
            std::int64_t sgn = side == 0 ? -1 : 1;
            auto& squares = side == 0 ? inst.left_squares[static_cast<std::size_t>(v)]
                                      : inst.right_squares[static_cast<std::size_t>(v)];
            const auto& users = occ[static_cast<std::size_t>(v)][static_cast<std::size_t>(side)]
                                    .clauses;
            // plain zigzag; all on one square color, so bishops along it
            // see each other and the whole side funnels into the merge
            for (int i = 1; i <= 7; ++i) {
                Location l{sgn * (i % 2 == 1 ? 1 : 2), b + i};
                lay.put(l, PieceKind::Bishop, false, Role::Route);
                squares.push_back(l);
            }
            // literal bishops on the off color, king-adjacent to the path
            for (std::size_t u = 0; u < users.size(); ++u) {
                Location port{sgn * 2, b + 1 + 2 * static_cast<std::int64_t>(u)};
                lay.put(port, PieceKind::Bishop, false, Role::Port);
                lay.port_side[port] = {v, side};
                lay.clause_of[port] = users[u];
                clause_ports[static_cast<std::size_t>(users[u])].push_back(port);
                squares.push_back(port);
            }
        }
        lay.put({0, b + 8}, PieceKind::Bishop, false, Role::Route);
    }
    Location apex{0, pitch * n + 1};
    lay.put(apex, PieceKind::Bishop, false, Role::Apex);

    // clause pieces: one bishop per port on the port's outward-downward
    // diagonal, every piece of a clause on one shared cross diagonal so
    // they all see each other. The shared diagonal's depth is searched
    // until no piece's sight lines touch anything foreign.
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
        auto& ports = clause_ports[ci];
        std::sort(ports.begin(), ports.end(), [](const Location& a, const Location& b) {
            return a.y < b.y;
        });
        std::int64_t sgn = f.clauses[ci].positive ? -1 : 1;
        std::int64_t y_min = ports.front().y;

        auto pieces_for_depth = [&](std::int64_t d) {
            // shared cross diagonal through the lowest port's piece:
            //   left side:  x + y = y_min - 2 - 2d
            //   right side: x - y = 2 - y_min + 2d
            std::vector<Location> pieces;
            for (const Location& p : ports) {
                std::int64_t t = d + (p.y - y_min) / 2;
                pieces.push_back({p.x + sgn * t, p.y - t});
            }
            return pieces;
        };
        auto lines_clean = [&](const std::vector<Location>& pieces) {
            // no candidate may share a row-free... a diagonal with any
            // square outside this clause (ports included via clause_of)
            for (const Location& q : pieces) {
                if (lay.board.occupied(q)) return false;
                for (const auto& [l, r] : lay.role) {
                    if (chebyshev(q, l) <= 1 && lay.visitable(l)) return false;
                    bool aligned = (q.x - q.y == l.x - l.y) || (q.x + q.y == l.x + l.y);
                    if (!aligned) continue;
                    auto it = lay.clause_of.find(l);
                    if (it == lay.clause_of.end() || it->second != static_cast<int>(ci))
                        return false;
                }
                for (const Location& other : pieces)
                    if (!(other == q) && chebyshev(q, other) == 0) return false;
            }
            return true;
        };

        bool placed = false;
        for (std::int64_t d = 4 + 3 * static_cast<std::int64_t>(ci); d < 60 && !placed; ++d) {
            auto pieces = pieces_for_depth(d);
            if (!lines_clean(pieces)) continue;
            for (const Location& q : pieces) {
                lay.put(q, PieceKind::Bishop, false, Role::Clause);
                lay.clause_of[q] = static_cast<int>(ci);
            }
            placed = true;
        }
        if (!placed) throw SatGenError("could not place the clause bishops");
    }

    check_layout(lay);
    inst.board = lay.board;
    inst.hero_start = lay.hero_start;
    return inst;
}

}  // namespace satdetail

// ---------------------------------------------------------------------------
// family: knight hero among queens, rooks or bishops

namespace satdetail {

inline SatInstance build_slider_family_attempt(const MonotoneCnf& f, PieceKind villain,
                                                std::int64_t bump, bool right_first) {
    f.validate();
    auto occ = occurrence_slots(f);
    const int n = f.n;
    const std::int64_t pitch = 10;
    const std::int64_t height = pitch * n + 2;
    const bool diag = villain != PieceKind::Rook;     // diagonal sight exists
    const bool ortho = villain != PieceKind::Bishop;  // row/column sight exists

    Layout lay;
    lay.hero_kind = PieceKind::Knight;
    lay.villain_kind = villain;
    lay.hero_start = {0, 0};
    lay.put(lay.hero_start, PieceKind::Knight, true, Role::Hero);

    SatInstance inst;
    inst.family = villain == PieceKind::Queen   ? "knight-queen"
                  : villain == PieceKind::Rook  ? "knight-rook"
                                                : "knight-bishop";
    inst.formula = f;
    inst.left_squares.resize(static_cast<std::size_t>(n) + 1);
    inst.right_squares.resize(static_cast<std::size_t>(n) + 1);

    std::vector<Location> spine;
    for (int v = 0; v <= n; ++v) spine.push_back({0, pitch * v});

    // ports first: unique column per gadget side and unique rows; sliders
    // with diagonal sight additionally dodge diagonal alignment with the
    // spine, the apex and every other port by sliding outward. The bishop
    // family keeps every port on odd color so one-color clause chains can
    // reach everything.
    struct PortPlan {
        Location at;
        int variable, side, clause;
    };
    std::vector<PortPlan> ports;
    for (int v = 1; v <= n; ++v) {
        std::int64_t b = pitch * (v - 1);
        for (int side = 0; side < 2; ++side) {
            const auto& users = occ[static_cast<std::size_t>(v)][static_cast<std::size_t>(side)]
                                    .clauses;
            std::int64_t sgn = side == 0 ? -1 : 1;
            for (std::size_t u = 0; u < users.size(); ++u) {
                // mid-gadget rows, pairwise non-adjacent: a knight path can
                // hop across one reserved row but never across two in a row
                std::int64_t row = side == 0 ? b + 2 + 4 * static_cast<std::int64_t>(u)
                                             : b + 4 + 4 * static_cast<std::int64_t>(u);
                if (villain == PieceKind::Bishop && (row % 2 + 2) % 2 == 0) row += 1;
                std::int64_t col = sgn * (4 + 2 * (v - 1) + 2 * bump);
                bool clean = false;
                while (!clean) {
                    clean = true;
                    if (diag) {
                        for (const Location& s : spine)
                            clean = clean && std::abs(col - s.x) != std::abs(row - s.y);
                    }
                    for (const auto& pp : ports) {
                        if (diag)
                            clean = clean && std::abs(col - pp.at.x) != std::abs(row - pp.at.y);
                        if (ortho && !(pp.variable == v && pp.side == side))
                            clean = clean && col != pp.at.x && row != pp.at.y;
                    }
                    if (!clean) col += sgn * 2;
                }
                ports.push_back({{col, row}, v, side, users[u]});
            }
        }
    }
    for (const auto& pp : ports) {
        lay.put(pp.at, villain, false, Role::Port);
        lay.port_side[pp.at] = {pp.variable, pp.side};
        lay.clause_of[pp.at] = pp.clause;
    }

    std::int64_t flank = 6 + 2 * (n - 1);
    for (const auto& pp : ports) flank = std::max(flank, std::abs(pp.at.x) + 2);

    // side paths: knight walks fork -> ports -> merge, keeping clear of
    // every reserved line and of knight range of all other gadget squares
    // so the hero can never change sides or skip between gadgets
    auto build_side = [&](int v, int side) {
        std::int64_t b = pitch * (v - 1);
        std::vector<Location> waypoints{{0, b}};
        for (const auto& pp : ports)
            if (pp.variable == v && pp.side == side) waypoints.push_back(pp.at);
        std::sort(waypoints.begin() + 1, waypoints.end(),
                  [](const Location& a, const Location& bb) { return a.y < bb.y; });
        waypoints.push_back({0, b + pitch});

        Region box;
        box.min_x = side == 0 ? -flank : 0;
        box.max_x = side == 0 ? 0 : flank;
        box.min_y = b;
        box.max_y = b + pitch;

        std::set<Location> own(waypoints.begin(), waypoints.end());
        auto knight_adj = [](const Location& a, const Location& bb) {
            std::int64_t dx = std::abs(a.x - bb.x), dy = std::abs(a.y - bb.y);
            return (dx == 1 && dy == 2) || (dx == 2 && dy == 1);
        };
        auto admissible = [&](const Location& q) {
            if (q.x == 0) return false;          // the spine belongs to the merges
            if (q.y == b + pitch) return false;  // keep the merge row clean
            if (lay.board.occupied(q) || own.count(q)) return false;
            for (const auto& pp : ports) {
                if (ortho && (q.x == pp.at.x || q.y == pp.at.y)) return false;
                if (diag && std::abs(q.x - pp.at.x) == std::abs(q.y - pp.at.y)) return false;
            }
            // never within a hop of another gadget's squares, the other
            // side or the spine: the hero stays on one side per gadget and
            // cannot re-enter spent gadgets
            for (const Location& s : spine)
                if (!own.count(s) && knight_adj(q, s)) return false;
            for (const auto& [l, r] : lay.role) {
                if (!lay.visitable(l) || own.count(l)) continue;
                if (knight_adj(q, l)) return false;
            }
            return true;
        };

        std::vector<Location> path;
        for (std::size_t w = 0; w + 1 < waypoints.size(); ++w) {
            auto leg = knight_path(waypoints[w], waypoints[w + 1], box, admissible);
            if (!leg)
                throw SatGenError("could not route a gadget side (variable " +
                                  std::to_string(v) + ", side " + std::to_string(side) + ")");
            for (const Location& q : *leg) {
                if (q == waypoints[w + 1]) continue;
                path.push_back(q);
                own.insert(q);
            }
        }
        for (const Location& q : path) lay.put(q, villain, false, Role::Route);
        auto& squares = side == 0 ? inst.left_squares[static_cast<std::size_t>(v)]
                                  : inst.right_squares[static_cast<std::size_t>(v)];
        for (const Location& q : path) squares.push_back(q);
        for (const auto& pp : ports)
            if (pp.variable == v && pp.side == side) squares.push_back(pp.at);
    };

    for (int v = 1; v <= n; ++v) {
        build_side(v, right_first ? 1 : 0);
        build_side(v, right_first ? 0 : 1);
        lay.put({0, pitch * v}, villain, false, Role::Route);
    }

    // the hero's forced finish: a tail climbing from the top merge, then
    // running right, to an apex whose sight lines meet nothing at all. Only
    // the hero can ever remove the apex, so every solution must climb the
    // whole board; climb height and run length are searched until no tail
    // square or apex shares a line with a port and the apex sees nothing.
    Location apex{0, 0};
    {
        bool placed = false;
        for (std::int64_t h = 0; h <= 20 && !placed; h += 2) {
            for (std::int64_t extra = 0; extra <= 10 && !placed; ++extra) {
                std::int64_t k = flank / 2 + 3 + extra;
                std::vector<Location> tail;
                for (std::int64_t j = 0; j < h; ++j)
                    tail.push_back({j % 2 == 0 ? 1 : 2, pitch * n + 2 + 2 * j});
                Location run_base{1, pitch * n + 2 + 2 * h};
                if (h == 0) run_base = {1, pitch * n + 2};
                tail.push_back(run_base);
                for (std::int64_t j = 1; j <= k; ++j)
                    tail.push_back({run_base.x + 2 * j, run_base.y + j});
                Location candidate{run_base.x + 2 * k + 2, run_base.y + k + 1};

                auto diag_hits_port = [&](const Location& t) {
                    if (!diag) return false;
                    for (const auto& pp : ports)
                        if (std::abs(t.x - pp.at.x) == std::abs(t.y - pp.at.y)) return true;
                    return false;
                };
                bool clean = true;
                for (const Location& t : tail) clean = clean && !diag_hits_port(t);
                auto apex_sees = [&](const Location& l) {
                    if (ortho && (l.x == candidate.x || l.y == candidate.y)) return true;
                    return diag && std::abs(l.x - candidate.x) == std::abs(l.y - candidate.y);
                };
                for (const auto& [l, r] : lay.role) clean = clean && !apex_sees(l);
                for (const Location& t : tail) clean = clean && !apex_sees(t);
                if (!clean) continue;
                for (const Location& t : tail)
                    if (!lay.board.occupied(t)) lay.put(t, villain, false, Role::Route);
                apex = candidate;
                lay.put(apex, villain, false, Role::Apex);
                placed = true;
            }
        }
        if (!placed) throw SatGenError("could not place the apex");
    }

    // clause pieces: one per port, far beyond everything on the west, on
    // the port's otherwise-empty row (sliders with rows) or diagonal
    // (bishops), the pieces of one clause mutually chained
    std::map<int, std::vector<PortPlan>> by_clause;
    for (const auto& pp : ports) by_clause[pp.clause].push_back(pp);
    for (const auto& [ci, pps] : by_clause) {
        if (ortho) {
            std::int64_t col = -(flank + (height + 6) * (ci + 1) + 10);
            auto col_clean = [&] {
                if (!diag) return true;
                for (const auto& pp : pps) {
                    Location piece{col, pp.at.y};
                    auto aligned = [&](const Location& l) {
                        return std::abs(piece.x - l.x) == std::abs(piece.y - l.y);
                    };
                    if (aligned(apex)) return false;
                    for (const auto& [l, r] : lay.role) {
                        if (r == Role::Clause) continue;  // earlier clauses are far away
                        if (aligned(l)) return false;
                    }
                }
                return true;
            };
            while (!col_clean()) --col;
            for (const auto& pp : pps) {
                Location piece{col, pp.at.y};
                lay.put(piece, villain, false, Role::Clause);
                lay.clause_of[piece] = ci;
            }
        } else {
            std::int64_t s = -(3 * (flank + height) + 20 + (height + 6) * ci);
            s -= (((s - (pps.front().at.x + pps.front().at.y)) % 2 + 2) % 2);
            for (const auto& pp : pps) {
                std::int64_t d = pp.at.x - pp.at.y;
                Location piece{(s + d) / 2, (s - d) / 2};
                lay.put(piece, villain, false, Role::Clause);
                lay.clause_of[piece] = ci;
            }
        }
    }

    // rescue pipes: far pieces every ordinary path square can see, chained
    // together and anchored at the merges the hero is forced through. The
    // pipe column is searched so no pipe piece shares a line with a port,
    // a clause piece or the apex.
    if (ortho) {
        std::set<std::int64_t> rows;
        for (const auto& [l, r] : lay.role)
            if (r == Role::Route) rows.insert(l.y);
        rows.erase(apex.y);
        std::int64_t pipe_x = flank + 2 * height + 16;
        auto pipe_clean = [&] {
            if (pipe_x == apex.x) return false;
            if (!diag) return true;
            for (std::int64_t y : rows) {
                if (std::abs(pipe_x - apex.x) == std::abs(y - apex.y)) return false;
                for (const auto& [l, r] : lay.role) {
                    if (r != Role::Port && r != Role::Clause) continue;
                    if (std::abs(pipe_x - l.x) == std::abs(y - l.y)) return false;
                }
            }
            return true;
        };
        while (!pipe_clean()) ++pipe_x;
        for (std::int64_t y : rows) lay.put({pipe_x, y}, villain, false, Role::Web);
    } else {
        std::int64_t s_base = -(flank + 2 * height + 16);
        std::set<Location> pipe;
        for (const auto& [l, r] : lay.role) {
            if (r != Role::Route) continue;
            std::int64_t s = s_base - (((s_base - (l.x + l.y)) % 2 + 2) % 2);
            std::int64_t d = l.x - l.y;
            pipe.insert({(s + d) / 2, (s - d) / 2});
        }
        for (const Location& q : pipe)
            if (!lay.board.occupied(q)) lay.put(q, villain, false, Role::Web);
    }

    check_layout(lay);
    inst.board = lay.board;
    inst.hero_start = lay.hero_start;
    return inst;
}

/// Port columns sometimes sweep a diagonal straight through the only
/// squares a side path could use; pushing every port outward a step and
/// relaying fixes that, so the build retries a few offsets.
inline SatInstance build_slider_family(const MonotoneCnf& f, PieceKind villain) {
    if (villain != PieceKind::Queen && villain != PieceKind::Rook &&
        villain != PieceKind::Bishop)
        throw SatGenError("slider family needs queen, rook or bishop villains");
    std::string last_error;
    for (std::int64_t bump = 0; bump < 16; ++bump) {
        for (bool right_first : {false, true}) {
            try {
                return build_slider_family_attempt(f, villain, bump, right_first);
            } catch (const SatGenError& e) {
                last_error = e.what();
            } catch (const std::logic_error& e) {
                last_error = e.what();
            }
        }
    }
    throw SatGenError("slider family layout failed: " + last_error);
}

}  // namespace satdetail

// ---------------------------------------------------------------------------
// entry points

inline const std::vector<std::string>& sat_family_names() {
    static const std::vector<std::string> names = {
        "pawn-knight", "king-knight", "king-bishop",
        "knight-queen", "knight-rook", "knight-bishop"};
    return names;
}

inline SatInstance generate_sat_instance(const std::string& family, const MonotoneCnf& f) {
    if (family == "pawn-knight") return satdetail::build_knight_family(f, PieceKind::Pawn);
    if (family == "king-knight") return satdetail::build_knight_family(f, PieceKind::King);
    if (family == "king-bishop") return satdetail::build_bishop_family(f);
    if (family == "knight-queen") return satdetail::build_slider_family(f, PieceKind::Queen);
    if (family == "knight-rook") return satdetail::build_slider_family(f, PieceKind::Rook);
    if (family == "knight-bishop") return satdetail::build_slider_family(f, PieceKind::Bishop);
    throw SatGenError("unknown family: " + family);
}

inline nlohmann::json sat_instance_to_json(const SatInstance& inst) {
    nlohmann::json j;
    j["format"] = kFormatVersion;
    j["kind"] = "sat-instance";
    j["family"] = inst.family;
    j["formula"] = serialize_cnf_text(inst.formula);
    j["board"] = board_to_json(inst.board);
    j["hero_start"] = location_to_json(inst.hero_start);
    auto dump_sides = [](const std::vector<std::vector<Location>>& sides) {
        nlohmann::json out = nlohmann::json::array();
        for (std::size_t v = 1; v < sides.size(); ++v) {
            nlohmann::json squares = nlohmann::json::array();
            for (const auto& l : sides[v]) squares.push_back(location_to_json(l));
            out.push_back(squares);
        }
        return out;
    };
    j["left_squares"] = dump_sides(inst.left_squares);
    j["right_squares"] = dump_sides(inst.right_squares);
    return j;
}

inline SatInstance sat_instance_from_json(const nlohmann::json& j) {
    if (j.value("kind", "") != "sat-instance") throw ParseError("not a sat instance");
    SatInstance inst;
    inst.family = j.at("family").get<std::string>();
    inst.formula = parse_cnf_text(j.at("formula").get<std::string>());
    inst.board = board_from_json(j.at("board"));
    inst.hero_start = location_from_json(j.at("hero_start"));
    auto load_sides = [](const nlohmann::json& arr) {
        std::vector<std::vector<Location>> out(1);
        for (const auto& squares : arr) {
            std::vector<Location> locs;
            for (const auto& lj : squares) locs.push_back(location_from_json(lj));
            out.push_back(std::move(locs));
        }
        return out;
    };
    inst.left_squares = load_sides(j.at("left_squares"));
    inst.right_squares = load_sides(j.at("right_squares"));
    return inst;
}

/// Reads the hero's side choices out of a solution and validates the
/// resulting assignment against the formula.
struct SatBackmapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::vector<bool> backmap_sat_solution(const SatInstance& inst, const Solution& sol) {
    if (!verify_solution(inst.board, sol))
        throw SatBackmapError("solution does not verify on the instance board");
    std::set<Location> visited;
    Location hero = inst.hero_start;
    visited.insert(hero);
    for (const auto& m : sol.moves) {
        if (m.front() == hero) {
            hero = m.back();
            visited.insert(hero);
        }
    }
    const int n = inst.formula.n;
    std::vector<bool> assignment(static_cast<std::size_t>(n), false);
    for (int v = 1; v <= n; ++v) {
        bool left = false, right = false;
        for (const auto& l : inst.left_squares[static_cast<std::size_t>(v)])
            left = left || visited.count(l);
        for (const auto& l : inst.right_squares[static_cast<std::size_t>(v)])
            right = right || visited.count(l);
        if (left && right) throw SatBackmapError("hero visited both sides of a variable");
        assignment[static_cast<std::size_t>(v - 1)] = left;
    }
    if (!satisfies(inst.formula, assignment))
        throw SatBackmapError("extracted assignment does not satisfy the formula");
    return assignment;
}

}  // namespace solochess
