#pragma once

/// @file reductions.hpp
/// Hamiltonian-path instance generators: boards that are solvable exactly
/// when the input graph has a Hamiltonian path from its start vertex (to
/// its end vertex where one is given). Each generator also emits the
/// metadata needed to read a Hamiltonian path back out of a solution.
///
/// Base constructions: a knight among frozen pawns or kings on an embedded
/// grid graph, a rook among frozen pawns over vertex rectangles and
/// half-edge columns, and a king among pawn chains. The remaining families
/// derive from the rook board by scaling and rotation plus piece
/// substitution; every family asserts after generation that its villains
/// have no moves at all.

#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "solochess/board.hpp"
#include "solochess/graphs.hpp"
#include "solochess/icg.hpp"
#include "solochess/io.hpp"

namespace solochess {

struct ReductionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Everything backmapping needs: which board squares belong to which
/// source vertex, and where the special piece starts.
struct HamInstance {
    std::string family;
    StartEndGraph graph;
    Board board;
    Location special_start{};
    std::vector<std::vector<Location>> vertex_squares;  // index 0 unused
};

// ---------------------------------------------------------------------------
// coordinate transforms

struct Transform {
    enum class Kind { ScaleX, ScaleXY, Rotate45 };
    Kind kind = Kind::ScaleX;
    std::int64_t factor = 1;

    static Transform scale_x(std::int64_t f) { return {Kind::ScaleX, f}; }
    static Transform scale_xy(std::int64_t f) { return {Kind::ScaleXY, f}; }
    static Transform rotate45() { return {Kind::Rotate45, 1}; }

    Location apply(const Location& l) const {
        auto checked_mul = [](std::int64_t a, std::int64_t f) {
            if (f <= 0) throw ReductionError("scale factor must be positive");
            if (a > std::numeric_limits<std::int64_t>::max() / f ||
                a < std::numeric_limits<std::int64_t>::min() / f)
                throw ReductionError("coordinate overflow in transform");
            return a * f;
        };
        switch (kind) {
            case Kind::ScaleX: return {checked_mul(l.x, factor), l.y};
            case Kind::ScaleXY: return {checked_mul(l.x, factor), checked_mul(l.y, factor)};
            case Kind::Rotate45: {
                if (l.x > std::numeric_limits<std::int64_t>::max() / 2 ||
                    l.x < std::numeric_limits<std::int64_t>::min() / 2 ||
                    l.y > std::numeric_limits<std::int64_t>::max() / 2 ||
                    l.y < std::numeric_limits<std::int64_t>::min() / 2)
                    throw ReductionError("coordinate overflow in transform");
                return {l.x - l.y, l.x + l.y};
            }
        }
        throw std::logic_error("bad transform");
    }
};

inline Board transform_board(const Board& b, const Transform& t) {
    Board out;
    for (const auto& [loc, p] : b.pieces()) out.put(t.apply(loc), p);
    return out;
}

inline void transform_instance(HamInstance& inst, const Transform& t) {
    inst.board = transform_board(inst.board, t);
    inst.special_start = t.apply(inst.special_start);
    for (auto& squares : inst.vertex_squares)
        for (auto& l : squares) l = t.apply(l);
}

/// Changes the type of every capturable piece.
inline void substitute_villains(Board& b, PieceKind kind) {
    Board out;
    for (const auto& [loc, p] : b.pieces())
        out.put(loc, p.uncapturable ? p : Piece{kind, false});
    b = out;
}

/// Changes the type of the uncapturable piece.
inline void substitute_special(Board& b, PieceKind kind) {
    Board out;
    for (const auto& [loc, p] : b.pieces())
        out.put(loc, p.uncapturable ? Piece{kind, true} : p);
    b = out;
}

// ---------------------------------------------------------------------------
// generation-time assertions

/// Villains must be completely immobile: not merely blocked, but with no
/// villain-to-villain move geometry at all, so no amount of play can free
/// them. (A merely blocked slider could move once blockers vacate.)
inline void assert_villains_frozen(const Board& b) {
    Board villains;
    for (const auto& [loc, p] : b.pieces())
        if (!p.uncapturable) villains.put(loc, p);
    MoveTable table(villains, villains.kinds_present());
    for (int i = 0; i < table.size(); ++i) {
        PieceKind k = villains.at(table.loc(i))->kind;
        if (!table.moves_from(k, i).empty())
            throw std::logic_error("villain has a potential move after generation");
    }
}

inline void assert_no_shared_diagonal(const Board& b) {
    std::set<std::int64_t> diag, anti;
    for (const auto& [loc, p] : b.pieces()) {
        if (!diag.insert(loc.x - loc.y).second || !anti.insert(loc.x + loc.y).second)
            throw std::logic_error("two pieces share a diagonal");
    }
}

inline void assert_no_orthogonal_alignment(const Board& b) {
    std::set<std::int64_t> rows, cols;
    for (const auto& [loc, p] : b.pieces()) {
        if (!rows.insert(loc.y).second || !cols.insert(loc.x).second)
            throw std::logic_error("two pieces share a row or column");
    }
}

inline void assert_outside_short_range(const Board& b) {
    std::vector<Location> locs;
    for (const auto& [loc, p] : b.pieces()) locs.push_back(loc);
    for (std::size_t i = 0; i < locs.size(); ++i) {
        for (std::size_t j = i + 1; j < locs.size(); ++j) {
            std::int64_t dx = std::abs(locs[i].x - locs[j].x);
            std::int64_t dy = std::abs(locs[i].y - locs[j].y);
            bool king = dx <= 1 && dy <= 1;
            bool knight = (dx == 1 && dy == 2) || (dx == 2 && dy == 1);
            if (king || knight)
                throw std::logic_error("two pieces within king or knight range");
        }
    }
}

// ---------------------------------------------------------------------------
// base constructions

/// Grid graph embedded so lattice neighbors land a knight's move apart:
/// (x, y) -> (2x + y, -x + 2y). Villains (pawns or kings) sit on every
/// vertex image and can never capture; the lone knight starts on the image
/// of the degree-1 start vertex.
inline HamInstance knight_embed(const StartEndGraph& g, PieceKind villain) {
    if (villain != PieceKind::Pawn && villain != PieceKind::King)
        throw ReductionError("knight embedding supports pawn or king villains");
    g.validate_grid();
    if (g.degrees()[static_cast<std::size_t>(g.s)] != 1)
        throw ReductionError("start vertex must have degree 1");
    HamInstance inst;
    inst.family = villain == PieceKind::Pawn ? "knight-pawn" : "knight-king";
    inst.graph = g;
    inst.vertex_squares.resize(static_cast<std::size_t>(g.n) + 1);
    for (int v = 1; v <= g.n; ++v) {
        const Location& c = g.coords[static_cast<std::size_t>(v - 1)];
        Location image{2 * c.x + c.y, -c.x + 2 * c.y};
        inst.vertex_squares[static_cast<std::size_t>(v)].push_back(image);
        if (v == g.s) {
            inst.board.put(image, {PieceKind::Knight, true});
            inst.special_start = image;
        } else {
            inst.board.put(image, {villain, false});
        }
    }
    assert_villains_frozen(inst.board);
    return inst;
}

/// Rook-and-pawn board over vertex rectangles. Vertices other than the
/// endpoints get four corner pawns at (i, 3i), (i, 3i+1), (4n+i, 3i),
/// (4n+i, 3i+1); edge k joining i and j puts pawns at (n+k, 3i) and
/// (n+k, 3j). The rook starts in the start vertex's edge column just
/// outside its half-edge pawn, and a final pawn sits just outside the end
/// vertex's half-edge pawn in its own edge column. Every column of the
/// pawn structure holds zero or two pawns, asserted before the rook and
/// the final pawn are added.
inline HamInstance rook_pawn_instance(const StartEndGraph& g) {
    g.validate_basic();
    const int n = g.n;
    if (n < 2) throw ReductionError("need at least two vertices");
    if (g.t == 0) throw ReductionError("missing end vertex");
    auto deg = g.degrees();
    for (int v = 1; v <= n; ++v)
        if (deg[static_cast<std::size_t>(v)] > 3) throw ReductionError("vertex degree exceeds 3");
    if (deg[static_cast<std::size_t>(g.s)] != 1 || deg[static_cast<std::size_t>(g.t)] != 1)
        throw ReductionError("start and end vertices must have degree 1");

    HamInstance inst;
    inst.family = "rook-pawn";
    inst.graph = g;
    inst.vertex_squares.resize(static_cast<std::size_t>(n) + 1);
    Board& b = inst.board;

    for (int i = 1; i <= n; ++i) {
        if (i == g.s || i == g.t) continue;
        for (Location corner : {Location{i, 3 * i}, Location{i, 3 * i + 1},
                                Location{4 * n + i, 3 * i}, Location{4 * n + i, 3 * i + 1}}) {
            b.put(corner, {PieceKind::Pawn, false});
            inst.vertex_squares[static_cast<std::size_t>(i)].push_back(corner);
        }
    }
    int k_s = 0, k_t = 0, s_other = 0, t_other = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [i, j] = g.edges[e];
        int k = static_cast<int>(e) + 1;
        Location half_i{n + k, 3 * i}, half_j{n + k, 3 * j};
        b.put(half_i, {PieceKind::Pawn, false});
        b.put(half_j, {PieceKind::Pawn, false});
        inst.vertex_squares[static_cast<std::size_t>(i)].push_back(half_i);
        inst.vertex_squares[static_cast<std::size_t>(j)].push_back(half_j);
        if (i == g.s || j == g.s) {
            k_s = k;
            s_other = i == g.s ? j : i;
        }
        if (i == g.t || j == g.t) {
            k_t = k;
            t_other = i == g.t ? j : i;
        }
    }

    // column parity of the pawn structure
    std::map<std::int64_t, int> per_column;
    for (const auto& [loc, p] : b.pieces()) per_column[loc.x]++;
    for (const auto& [col, count] : per_column) {
        if (count != 2) throw std::logic_error("column without exactly two pawns");
    }

    // the rook must meet its own half-edge pawn first, so it starts on
    // whichever side of (n+k_s, 3s) faces away from the neighbor's half
    Location rook{n + k_s, 3 * g.s < 3 * s_other ? 1 : 3 * g.s + 1};
    b.put(rook, {PieceKind::Rook, true});
    inst.special_start = rook;
    inst.vertex_squares[static_cast<std::size_t>(g.s)].push_back(rook);
    Location final_pawn{n + k_t, 3 * g.t < 3 * t_other ? 0 : 3 * g.t + 1};
    b.put(final_pawn, {PieceKind::Pawn, false});
    inst.vertex_squares[static_cast<std::size_t>(g.t)].push_back(final_pawn);

    assert_villains_frozen(inst.board);
    return inst;
}

/// King-and-pawn board: rotate the grid graph onto diagonals with
/// (x, y) -> (3(x-y), 3(x+y)), put a pawn on every vertex image and two
/// more along each edge, then give every vertex one pawn with no capture:
/// above the vertex when two edges rise from it, below it when one does,
/// and the vertex pawn itself when none do. The king replaces that
/// capture-less pawn at the start vertex. Pawns capture upward.
inline HamInstance king_pawn_instance(const StartEndGraph& g) {
    g.validate_grid();
    auto deg = g.degrees();
    for (int v = 1; v <= g.n; ++v)
        if (deg[static_cast<std::size_t>(v)] > 3) throw ReductionError("vertex degree exceeds 3");
    if (deg[static_cast<std::size_t>(g.s)] != 1)
        throw ReductionError("start vertex must have degree 1");

    auto image = [](const Location& c) { return Location{3 * (c.x - c.y), 3 * (c.x + c.y)}; };

    HamInstance inst;
    inst.family = "king-pawn";
    inst.graph = g;
    inst.vertex_squares.resize(static_cast<std::size_t>(g.n) + 1);
    Board& b = inst.board;

    std::vector<Location> vertex_image(static_cast<std::size_t>(g.n) + 1);
    for (int v = 1; v <= g.n; ++v) {
        Location img = image(g.coords[static_cast<std::size_t>(v - 1)]);
        vertex_image[static_cast<std::size_t>(v)] = img;
        b.put(img, {PieceKind::Pawn, false});
        inst.vertex_squares[static_cast<std::size_t>(v)].push_back(img);
    }
    for (auto [i, j] : g.edges) {
        Location a = vertex_image[static_cast<std::size_t>(i)];
        Location c = vertex_image[static_cast<std::size_t>(j)];
        Offset d{(c.x - a.x) / 3, (c.y - a.y) / 3};
        b.put(a + d, {PieceKind::Pawn, false});
        b.put(Location{a.x + 2 * d.dx, a.y + 2 * d.dy}, {PieceKind::Pawn, false});
    }
    // one capture-less pawn per vertex
    std::vector<Location> quiet_square(static_cast<std::size_t>(g.n) + 1);
    auto adj = g.adjacency();
    for (int v = 1; v <= g.n; ++v) {
        Location img = vertex_image[static_cast<std::size_t>(v)];
        int upward = 0;
        for (int w : adj[static_cast<std::size_t>(v)])
            if (vertex_image[static_cast<std::size_t>(w)].y > img.y) ++upward;
        if (upward == 0) {
            quiet_square[static_cast<std::size_t>(v)] = img;  // the vertex pawn itself
            continue;
        }
        Location green = upward == 2 ? Location{img.x, img.y + 1} : Location{img.x, img.y - 1};
        if ((green.x + green.y) % 2 == 0)
            throw std::logic_error("capture-less pawn landed on the wrong square color");
        if (b.occupied(green)) throw std::logic_error("capture-less pawn square is occupied");
        b.put(green, {PieceKind::Pawn, false});
        quiet_square[static_cast<std::size_t>(v)] = green;
        inst.vertex_squares[static_cast<std::size_t>(v)].push_back(green);
    }
    // before the king is placed: quiet pawns have no capture, all others do
    {
        MoveTable table(b, {PieceKind::Pawn});
        std::set<Location> quiet(quiet_square.begin() + 1, quiet_square.end());
        for (int i = 0; i < table.size(); ++i) {
            bool has_capture = false;
            for (const auto& m : table.moves_from(PieceKind::Pawn, i))
                has_capture = has_capture || m.interior.empty();
            bool is_quiet = quiet.count(table.loc(i)) != 0;
            if (is_quiet && has_capture)
                throw std::logic_error("capture-less pawn can capture");
            if (!is_quiet && !has_capture)
                throw std::logic_error("pawn without any capture");
        }
    }
    // the king replaces the start vertex's capture-less pawn
    Location king_at = quiet_square[static_cast<std::size_t>(g.s)];
    Board with_king;
    for (const auto& [loc, p] : b.pieces())
        if (!(loc == king_at)) with_king.put(loc, p);
    with_king.put(king_at, {PieceKind::King, true});
    inst.board = with_king;
    inst.special_start = king_at;
    return inst;
}

// ---------------------------------------------------------------------------
// derived families

inline const std::vector<std::string>& ham_family_names() {
    static const std::vector<std::string> names = {
        "knight-pawn", "knight-king", "rook-pawn", "rook-pawn-spread", "rook-king",
        "rook-knight", "queen-pawn", "queen-king", "queen-knight", "queen-bishop",
        "rook-bishop", "bishop-pawn", "bishop-king", "bishop-knight", "bishop-rook",
        "queen-rook", "king-pawn"};
    return names;
}

/// Builds the named family instance. Derived families start from the
/// rook-and-pawn board and apply the transform pipeline that freezes their
/// villains while preserving the special piece's movement structure.
inline HamInstance generate_ham_instance(const std::string& family, const StartEndGraph& g) {
    if (family == "knight-pawn") return knight_embed(g, PieceKind::Pawn);
    if (family == "knight-king") return knight_embed(g, PieceKind::King);
    if (family == "king-pawn") return king_pawn_instance(g);

    HamInstance inst = rook_pawn_instance(g);
    inst.family = family;
    std::int64_t h = inst.board.bounding_region().height();
    auto spread = [&] {  // kills all diagonal alignments
        transform_instance(inst, Transform::scale_x(h + 1));
        assert_no_shared_diagonal(inst.board);
    };
    auto rotate = [&] { transform_instance(inst, Transform::rotate45()); };
    auto grow = [&](std::int64_t f) { transform_instance(inst, Transform::scale_xy(f)); };

    if (family == "rook-pawn") {
        // the base construction itself
    } else if (family == "rook-king" || family == "rook-knight") {
        grow(4);
        assert_outside_short_range(inst.board);
        substitute_villains(inst.board,
                            family == "rook-king" ? PieceKind::King : PieceKind::Knight);
    } else if (family == "rook-pawn-spread" || family == "rook-bishop" ||
               family == "queen-pawn" || family == "queen-bishop") {
        spread();
        if (family == "rook-bishop" || family == "queen-bishop")
            substitute_villains(inst.board, PieceKind::Bishop);
        if (family == "queen-pawn" || family == "queen-bishop")
            substitute_special(inst.board, PieceKind::Queen);
    } else if (family == "queen-king" || family == "queen-knight") {
        spread();
        grow(4);
        assert_outside_short_range(inst.board);
        substitute_special(inst.board, PieceKind::Queen);
        substitute_villains(inst.board,
                            family == "queen-king" ? PieceKind::King : PieceKind::Knight);
    } else if (family == "bishop-pawn" || family == "bishop-king" ||
               family == "bishop-knight") {
        rotate();
        // rotation alone leaves former column neighbors one diagonal step
        // apart, which upward-capturing pawns could take; growing the board
        // clears pawn range (and king/knight range at factor four)
        grow(family == "bishop-pawn" ? 2 : 4);
        if (family != "bishop-pawn") assert_outside_short_range(inst.board);
        substitute_special(inst.board, PieceKind::Bishop);
        if (family == "bishop-king") substitute_villains(inst.board, PieceKind::King);
        if (family == "bishop-knight") substitute_villains(inst.board, PieceKind::Knight);
    } else if (family == "bishop-rook" || family == "queen-rook") {
        spread();
        rotate();
        assert_no_orthogonal_alignment(inst.board);
        substitute_special(inst.board,
                           family == "bishop-rook" ? PieceKind::Bishop : PieceKind::Queen);
        substitute_villains(inst.board, PieceKind::Rook);
    } else {
        throw ReductionError("unknown family: " + family);
    }
    assert_villains_frozen(inst.board);
    return inst;
}

// ---------------------------------------------------------------------------
// metadata serialization and backmapping

inline nlohmann::json ham_instance_to_json(const HamInstance& inst) {
    nlohmann::json j;
    j["format"] = kFormatVersion;
    j["kind"] = "ham-instance";
    j["family"] = inst.family;
    j["graph"] = graph_to_json(inst.graph);
    j["board"] = board_to_json(inst.board);
    j["special_start"] = location_to_json(inst.special_start);
    nlohmann::json vs = nlohmann::json::array();
    for (std::size_t v = 1; v < inst.vertex_squares.size(); ++v) {
        nlohmann::json squares = nlohmann::json::array();
        for (const auto& l : inst.vertex_squares[v]) squares.push_back(location_to_json(l));
        vs.push_back(squares);
    }
    j["vertex_squares"] = vs;
    return j;
}

inline HamInstance ham_instance_from_json(const nlohmann::json& j) {
    if (j.value("kind", "") != "ham-instance") throw ParseError("not a ham instance");
    HamInstance inst;
    inst.family = j.at("family").get<std::string>();
    inst.graph = graph_from_json(j.at("graph"));
    inst.board = board_from_json(j.at("board"));
    inst.special_start = location_from_json(j.at("special_start"));
    inst.vertex_squares.resize(1);
    for (const auto& squares : j.at("vertex_squares")) {
        std::vector<Location> locs;
        for (const auto& lj : squares) locs.push_back(location_from_json(lj));
        inst.vertex_squares.push_back(std::move(locs));
    }
    return inst;
}

struct BackmapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads the special piece's vertex visit order out of a solution and
/// validates it as a Hamiltonian path of the source graph.
inline std::vector<int> backmap_ham_solution(const HamInstance& inst, const Solution& sol) {
    if (!verify_solution(inst.board, sol))
        throw BackmapError("solution does not verify on the instance board");
    std::map<Location, int> vertex_of;
    for (std::size_t v = 1; v < inst.vertex_squares.size(); ++v)
        for (const auto& l : inst.vertex_squares[v]) vertex_of[l] = static_cast<int>(v);

    Location special = inst.special_start;
    std::vector<int> order;
    std::set<int> seen;
    auto visit = [&](const Location& l) {
        auto it = vertex_of.find(l);
        if (it == vertex_of.end()) return;
        if (seen.insert(it->second).second) order.push_back(it->second);
    };
    visit(special);
    for (const auto& m : sol.moves) {
        if (m.front() == special) {
            special = m.back();
            visit(special);
        }
    }
    if (!is_hamiltonian_path(inst.graph, order))
        throw BackmapError("solution does not induce a Hamiltonian path");
    return order;
}

}  // namespace solochess
