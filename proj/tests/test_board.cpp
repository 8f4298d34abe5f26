#include <doctest.h>

#include "solochess/board.hpp"
#include "solochess/oracle.hpp"
#include "support.hpp"

using namespace solochess;

TEST_CASE("move validity") {
    Board b;
    b.put({0, 0}, {PieceKind::Rook, false});
    b.put({2, 0}, {PieceKind::Rook, false});
    MoveSeq capture{{0, 0}, {1, 0}, {2, 0}};
    CHECK(is_valid_move(b, capture));

    Board blocked = b;
    blocked.put({1, 0}, {PieceKind::Rook, false});
    CHECK_FALSE(is_valid_move(blocked, capture));

    Board hero;
    hero.put({0, 0}, {PieceKind::King, false});
    hero.put({1, 0}, {PieceKind::King, true});
    CHECK_FALSE(is_valid_move(hero, MoveSeq{{0, 0}, {1, 0}}));
    CHECK_FALSE(is_valid_move(hero, MoveSeq{{5, 5}, {1, 0}}));  // no piece to move
}

TEST_CASE("apply_move captures and relocates") {
    Board b;
    b.put({0, 0}, {PieceKind::Rook, false});
    b.put({2, 0}, {PieceKind::Rook, false});
    Board after = apply_move(b, {{0, 0}, {1, 0}, {2, 0}});
    CHECK(after.size() == 1);
    CHECK(after.occupied({2, 0}));
    CHECK_FALSE(after.occupied({0, 0}));
    CHECK_THROWS(apply_move(after, {{2, 0}, {1, 0}}));
}

TEST_CASE("verify_solution basics") {
    Board one;
    one.put({0, 0}, {PieceKind::Rook, false});
    CHECK(verify_solution(one, Solution{}));

    Board two = one;
    two.put({3, 3}, {PieceKind::Rook, false});
    auto r = verify_solution(two, Solution{});
    CHECK_FALSE(r);
    CHECK(r.failed_move == -1);

    // wrong-type move sequences are rejected even if endpoints line up
    Board knights;
    knights.put({0, 0}, {PieceKind::Knight, false});
    knights.put({1, 0}, {PieceKind::Knight, false});
    Solution bogus;
    bogus.moves.push_back({{0, 0}, {1, 0}});
    auto wrong = verify_solution(knights, bogus);
    CHECK_FALSE(wrong);
    CHECK(wrong.failed_move == 0);
}

TEST_CASE("verify accepts oracle output on random boards") {
    auto g = testsupport::rng(7);
    int solvable_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        PieceKind k = static_cast<PieceKind>(g() % 6);
        int n = 2 + static_cast<int>(g() % 4);
        Board b = testsupport::random_board(g, 4, 4, k, n);
        auto sol = solve_exhaustive(b);
        if (sol) {
            ++solvable_seen;
            CHECK(verify_solution(b, *sol));
            CHECK(sol->moves.size() == b.size() - 1);
        }
    }
    CHECK(solvable_seen > 10);
}

TEST_CASE("sparse move semantics match a dense grid replay") {
    // skipping never-occupied squares is invisible to solvability
    auto g = testsupport::rng(99);
    Region region{0, 0, 3, 3};
    for (int trial = 0; trial < 50; ++trial) {
        PieceKind k = static_cast<PieceKind>(g() % 6);
        int n = 2 + static_cast<int>(g() % 4);
        Board b = testsupport::random_board(g, 4, 4, k, n);
        bool fast = solve_exhaustive(b).has_value();
        bool dense = testsupport::solvable_dense(b, region);
        CAPTURE(trial);
        CHECK(fast == dense);
    }
}

TEST_CASE("normalize rejects boards with two uncapturable pieces") {
    Board b;
    b.put({0, 0}, {PieceKind::King, true});
    b.put({1, 1}, {PieceKind::King, true});
    CHECK_THROWS(normalize(b));
}
