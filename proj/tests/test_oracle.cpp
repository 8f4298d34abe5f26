#include <doctest.h>

#include "solochess/oracle.hpp"
#include "support.hpp"

using namespace solochess;

TEST_CASE("oracle base cases") {
    Board one;
    one.put({0, 0}, {PieceKind::Queen, false});
    auto sol = solve_exhaustive(one);
    REQUIRE(sol.has_value());
    CHECK(sol->moves.empty());

    Board apart;
    apart.put({0, 0}, {PieceKind::Knight, false});
    apart.put({1, 0}, {PieceKind::Knight, false});
    CHECK_FALSE(solve_exhaustive(apart).has_value());

    auto g = testsupport::rng(1);
    Board big = testsupport::random_board(g, 4, 4, PieceKind::Pawn, 9);
    CHECK_THROWS(solve_exhaustive(big));
}

TEST_CASE("per-piece move caps") {
    Board rooks;
    for (int x = 0; x < 3; ++x) rooks.put({x, 0}, {PieceKind::Rook, false});
    OracleOptions unlimited;
    CHECK(solve_exhaustive(rooks, unlimited).has_value());
    OracleOptions two;
    two.move_cap = 2;
    CHECK(solve_exhaustive(rooks, two).has_value());
    OracleOptions one_move;
    one_move.move_cap = 1;
    // one end rook captures the middle, the other end rook captures it
    CHECK(solve_exhaustive(rooks, one_move).has_value());

    // a pawn ladder needs the bottom pawn to move twice: dead under cap 1,
    // fine under cap 2 (pawns capture upward, so no reversed order exists)
    Board ladder;
    ladder.put({0, 0}, {PieceKind::Pawn, false});
    ladder.put({1, 1}, {PieceKind::Pawn, false});
    ladder.put({2, 2}, {PieceKind::Pawn, false});
    OracleOptions cap1;
    cap1.move_cap = 1;
    OracleOptions cap2;
    cap2.move_cap = 2;
    CHECK(solve_exhaustive(ladder, cap2).has_value());
    CHECK_FALSE(solve_exhaustive(ladder, cap1).has_value());
}

TEST_CASE("board enumeration counts") {
    CHECK(enumerate_boards(Region{0, 0, 1, 1}, PieceKind::Rook, 2).size() == 10);
    CHECK(enumerate_boards(Region{0, 0, 2, 2}, PieceKind::Rook, 3).size() == 129);

    auto all = enumerate_boards(Region{0, 0, 1, 1}, PieceKind::Rook, 2);
    std::set<std::string> keys;
    for (const Board& b : all) {
        std::string key;
        for (const auto& [loc, p] : b.pieces())
            key += std::to_string(loc.x) + "," + std::to_string(loc.y) + ";";
        keys.insert(key);
    }
    CHECK(keys.size() == all.size());  // duplicate-free
}

TEST_CASE("memo and component prune never change the answer") {
    auto g = testsupport::rng(404);
    for (int trial = 0; trial < 100; ++trial) {
        PieceKind k = static_cast<PieceKind>(g() % 6);
        Board b = testsupport::random_board(g, 4, 4, k, 2 + static_cast<int>(g() % 5));
        OracleOptions plain;
        plain.use_memo = false;
        plain.use_component_prune = false;
        OracleOptions tuned;
        bool expected = solve_exhaustive(b, plain).has_value();
        CHECK(solve_exhaustive(b, tuned).has_value() == expected);
    }
}

TEST_CASE("hero-path engine agrees with the move-level engine") {
    auto g = testsupport::rng(505);
    struct Pair {
        PieceKind hero, villain;
    };
    const Pair pairs[] = {{PieceKind::King, PieceKind::Queen},
                          {PieceKind::Pawn, PieceKind::Queen},
                          {PieceKind::Pawn, PieceKind::Bishop},
                          {PieceKind::Rook, PieceKind::Queen},
                          {PieceKind::King, PieceKind::Knight},
                          {PieceKind::Pawn, PieceKind::Knight},
                          {PieceKind::Knight, PieceKind::Queen},
                          {PieceKind::King, PieceKind::Bishop}};
    for (const Pair& pr : pairs) {
        for (int trial = 0; trial < 120; ++trial) {
            int n = 1 + static_cast<int>(g() % 6);
            Board b = testsupport::random_board(g, 4, 4, pr.villain, n, pr.hero);
            bool move_level = solve_exhaustive(b).has_value();
            auto path_level = solve_by_hero_paths(b);
            CAPTURE(static_cast<int>(pr.hero));
            CAPTURE(static_cast<int>(pr.villain));
            CAPTURE(trial);
            REQUIRE(path_level.has_value() == move_level);
            if (path_level) CHECK(verify_solution(b, *path_level));
        }
    }
}
