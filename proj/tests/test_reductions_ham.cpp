#include <doctest.h>

#include "solochess/oracle.hpp"
#include "solochess/reductions.hpp"
#include "support.hpp"

using namespace solochess;

namespace {

StartEndGraph grid_path3() {
    // straight three-vertex path, start at one end
    return grid_graph_from_points({{0, 0}, {1, 0}, {2, 0}}, 1);
}

OracleOptions big_oracle() {
    OracleOptions opt;
    opt.max_pieces = 64;
    return opt;
}

bool oracle_solvable(const Board& b) { return solve_exhaustive(b, big_oracle()).has_value(); }

}  // namespace

TEST_CASE("knight embedding turns lattice neighbors into knight moves") {
    StartEndGraph g = grid_graph_from_points({{0, 0}, {1, 0}}, 1);
    HamInstance inst = knight_embed(g, PieceKind::Pawn);
    CHECK(inst.board.size() == 2);
    CHECK(inst.board.occupied({0, 0}));
    CHECK(inst.board.occupied({2, -1}));
    CHECK(inst.board.at({0, 0})->uncapturable);  // (0,0) is the start vertex

    CHECK(oracle_solvable(inst.board));
    auto path_based = solve_by_hero_paths(inst.board);
    REQUIRE(path_based.has_value());
    auto order = backmap_ham_solution(inst, *path_based);
    CHECK(order == std::vector<int>{1, 2});
}

TEST_CASE("knight embedding solves exactly the traversable grids") {
    // path of three: Hamiltonian from the end
    HamInstance path = knight_embed(grid_path3(), PieceKind::Pawn);
    CHECK(oracle_solvable(path.board));

    // 2x2 block with a tail: Hamiltonian from the tail end
    StartEndGraph tailed =
        grid_graph_from_points({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}}, 0);
    for (int v = 1; v <= tailed.n; ++v)
        if (tailed.degrees()[static_cast<std::size_t>(v)] == 1) tailed.s = v;
    REQUIRE(tailed.s != 0);
    HamInstance sq = knight_embed(tailed, PieceKind::King);
    CHECK(oracle_solvable(sq.board));

    // plus-shape: no Hamiltonian path from any leaf
    StartEndGraph star = grid_graph_from_points({{0, 0}, {1, 0}, {-1, 0}, {0, 1}}, 0);
    for (int v = 1; v <= star.n; ++v)
        if (star.degrees()[static_cast<std::size_t>(v)] == 1) star.s = v;
    HamInstance stuck = knight_embed(star, PieceKind::Pawn);
    CHECK_FALSE(hamiltonian_path_exists(star));
    CHECK_FALSE(oracle_solvable(stuck.board));

    StartEndGraph from_middle = grid_path3();
    from_middle.s = 2;  // degree-2 start vertex
    CHECK_THROWS_AS(knight_embed(from_middle, PieceKind::Pawn), ReductionError);
}

TEST_CASE("rook board uses the quoted vertex coordinates") {
    // path 2-1-3-4: vertex 1 is internal, so it gets its corner pawns
    StartEndGraph g;
    g.n = 4;
    g.edges = {{1, 2}, {1, 3}, {3, 4}};
    g.s = 2;
    g.t = 4;
    HamInstance inst = rook_pawn_instance(g);
    for (Location l : {Location{1, 3}, Location{1, 4}, Location{17, 3}, Location{17, 4}}) {
        CAPTURE(l);
        CHECK(inst.board.occupied(l));
    }
    // start and end vertices have no rectangles
    CHECK_FALSE(inst.board.occupied({2, 6}));
    CHECK_FALSE(inst.board.occupied({4, 12}));
    CHECK(oracle_solvable(inst.board) == hamiltonian_path_exists(g));
}

TEST_CASE("rook board mechanics on tiny graphs") {
    StartEndGraph single;
    single.n = 2;
    single.edges = {{1, 2}};
    single.s = 1;
    single.t = 2;
    HamInstance inst = rook_pawn_instance(single);
    CHECK(oracle_solvable(inst.board));
    auto sol = solve_by_hero_paths(inst.board);
    REQUIRE(sol.has_value());
    CHECK(backmap_ham_solution(inst, *sol) == std::vector<int>{1, 2});

    // swapped designations still work (labels force different geometry)
    StartEndGraph rev = single;
    rev.s = 2;
    rev.t = 1;
    CHECK(oracle_solvable(rook_pawn_instance(rev).board));

    StartEndGraph path;
    path.n = 3;
    path.edges = {{1, 2}, {2, 3}};
    path.s = 1;
    path.t = 3;
    CHECK(oracle_solvable(rook_pawn_instance(path).board));

    StartEndGraph star;
    star.n = 4;
    star.edges = {{1, 2}, {1, 3}, {1, 4}};
    star.s = 1;  // degree 3: not a valid start
    star.t = 2;
    CHECK_THROWS_AS(rook_pawn_instance(star), ReductionError);

    StartEndGraph disconnected;
    disconnected.n = 4;
    disconnected.edges = {{1, 2}, {3, 4}};
    disconnected.s = 1;
    disconnected.t = 2;
    // valid input, unsolvable board: the other component's pawns survive
    CHECK_FALSE(oracle_solvable(rook_pawn_instance(disconnected).board));
    CHECK_FALSE(hamiltonian_path_exists(disconnected));
}

TEST_CASE("rotation maps orthogonal neighbors to diagonal neighbors") {
    Board b;
    b.put({1, 0}, {PieceKind::Pawn, false});
    b.put({0, 1}, {PieceKind::Pawn, false});
    Board r = transform_board(b, Transform::rotate45());
    CHECK(r.occupied({1, 1}));
    CHECK(r.occupied({-1, 1}));
}

TEST_CASE("every derived family produces a frozen-villain board with the right pieces") {
    StartEndGraph path;
    path.n = 3;
    path.edges = {{1, 2}, {2, 3}};
    path.s = 1;
    path.t = 3;
    bool expected = hamiltonian_path_exists(path);

    for (const std::string& family : ham_family_names()) {
        CAPTURE(family);
        StartEndGraph g = path;
        HamInstance inst;
        if (family == "knight-pawn" || family == "knight-king" || family == "king-pawn") {
            inst = generate_ham_instance(family, grid_path3());
        } else {
            inst = generate_ham_instance(family, g);
        }
        CHECK(inst.board.uncapturable_count() == 1);
        // villains really cannot move, even after any sequence of captures
        Board villains;
        for (const auto& [loc, p] : inst.board.pieces())
            if (!p.uncapturable) villains.put(loc, p);
        if (family != "king-pawn") {  // king-pawn villains do move
            MoveTable table(villains, villains.kinds_present());
            for (int i = 0; i < table.size(); ++i)
                CHECK(table.moves_from(villains.at(table.loc(i))->kind, i).empty());
        }
        bool solvable = solve_by_hero_paths(inst.board).has_value();
        CHECK(solvable == expected);
        if (solvable) {
            auto sol = solve_by_hero_paths(inst.board);
            auto order = backmap_ham_solution(inst, *sol);
            CHECK(is_hamiltonian_path(inst.graph, order));
        }
    }
}

TEST_CASE("king-pawn boards follow Hamiltonian reachability") {
    // single upward edge
    StartEndGraph up = grid_graph_from_points({{0, 0}, {0, 1}}, 1);
    HamInstance inst = king_pawn_instance(up);
    CHECK(oracle_solvable(inst.board));

    // plus-shape: no Hamiltonian path from any leaf
    StartEndGraph t_shape = grid_graph_from_points({{0, 0}, {1, 0}, {-1, 0}, {0, 1}}, 0);
    for (int v = 1; v <= t_shape.n; ++v)
        if (t_shape.degrees()[static_cast<std::size_t>(v)] == 1) t_shape.s = v;
    CHECK_FALSE(hamiltonian_path_exists(t_shape));
    CHECK_FALSE(oracle_solvable(king_pawn_instance(t_shape).board));

    // corner triomino: solvable from the ends
    StartEndGraph ell = grid_graph_from_points({{0, 0}, {1, 0}, {0, 1}}, 0);
    for (int v = 1; v <= ell.n; ++v)
        if (ell.degrees()[static_cast<std::size_t>(v)] == 1) ell.s = v;
    CHECK(oracle_solvable(king_pawn_instance(ell).board));
}

TEST_CASE("ham instance json round trip") {
    StartEndGraph g;
    g.n = 2;
    g.edges = {{1, 2}};
    g.s = 1;
    g.t = 2;
    HamInstance inst = rook_pawn_instance(g);
    HamInstance back = ham_instance_from_json(ham_instance_to_json(inst));
    CHECK(back.family == inst.family);
    CHECK(back.board.size() == inst.board.size());
    CHECK(back.special_start == inst.special_start);
    CHECK(back.vertex_squares.size() == inst.vertex_squares.size());
}
