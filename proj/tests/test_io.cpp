#include <doctest.h>

#include "solochess/io.hpp"
#include "support.hpp"

using namespace solochess;

TEST_CASE("text board round trip") {
    std::string text =
        "solochess v1\n"
        "4 3\n"
        "R..q\n"
        "....\n"
        "P.N.\n";
    Board b = parse_board_text(text);
    CHECK(b.size() == 4);
    CHECK(b.at({0, 0})->kind == PieceKind::Pawn);
    CHECK(b.at({2, 0})->kind == PieceKind::Knight);
    CHECK(b.at({0, 2})->kind == PieceKind::Rook);
    REQUIRE(b.at({3, 2}) != nullptr);
    CHECK(b.at({3, 2})->kind == PieceKind::Queen);
    CHECK(b.at({3, 2})->uncapturable);
    CHECK(serialize_board_text(b) == text);
}

TEST_CASE("text parser rejects malformed input") {
    CHECK_THROWS_AS(parse_board_text("nope\n1 1\nP\n"), ParseError);
    CHECK_THROWS_AS(parse_board_text("solochess v1\n2 1\nPPP\n"), ParseError);
    CHECK_THROWS_AS(parse_board_text("solochess v1\n2 2\nkP\nPk\n"), ParseError);
    CHECK_THROWS_AS(parse_board_text("solochess v1\n2 2\nXP\nPP\n"), ParseError);
    CHECK_THROWS_AS(parse_board_text("solochess v1\n9999 1\n"), ParseError);
}

TEST_CASE("json round trips on random boards") {
    auto g = testsupport::rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        PieceKind villain = static_cast<PieceKind>(g() % 6);
        PieceKind hero = static_cast<PieceKind>(g() % 6);
        int n = 1 + static_cast<int>(g() % 6);
        Board b = testsupport::random_board(g, 5, 5, villain, n,
                                            trial % 2 ? std::optional<PieceKind>(hero)
                                                      : std::nullopt);
        Board back = board_from_json(board_to_json(b));
        REQUIRE(back.size() == b.size());
        for (const auto& [loc, p] : b.pieces()) {
            const Piece* q = back.at(loc);
            REQUIRE(q != nullptr);
            CHECK(q->kind == p.kind);
            CHECK(q->uncapturable == p.uncapturable);
        }
        // text round trip for hero-free boards too
        Board b2 = parse_board_text(serialize_board_text(b));
        CHECK(b2.size() == b.size());
    }
}

TEST_CASE("solution json carries moves and hero path") {
    Solution s;
    s.moves.push_back({{0, 0}, {1, 0}});
    s.moves.push_back({{1, 0}, {1, 5}});
    s.hero_path = {{0, 0}, {1, 0}};
    Solution back = solution_from_json(solution_to_json(s));
    CHECK(back.moves == s.moves);
    CHECK(back.hero_path == s.hero_path);
}
