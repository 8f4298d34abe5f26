#include <doctest.h>

#include "solochess/piece.hpp"
#include "support.hpp"

using namespace solochess;

namespace {
Region square_region(std::int64_t lo, std::int64_t hi) { return Region{lo, lo, hi, hi}; }
}  // namespace

TEST_CASE("builtin move counts and targets") {
    Region unbounded = square_region(-100, 100);

    auto knight = builtin_piece_type(PieceKind::Knight).enumerate({0, 0}, unbounded);
    CHECK(knight.size() == 8);

    auto pawn = builtin_piece_type(PieceKind::Pawn).enumerate({4, 4}, unbounded);
    REQUIRE(pawn.size() == 2);
    std::set<Location> targets{pawn[0].back(), pawn[1].back()};
    CHECK(targets == std::set<Location>{{3, 5}, {5, 5}});

    // rook on a 1x8 row: seven rightward moves of two..eight locations
    Region row{0, 0, 7, 0};
    auto rook = builtin_piece_type(PieceKind::Rook).enumerate({0, 0}, row);
    REQUIRE(rook.size() == 7);
    for (std::size_t i = 0; i < rook.size(); ++i) CHECK(rook[i].size() == i + 2);
}

TEST_CASE("closure under submoves for every builtin on 8x8") {
    Region r{0, 0, 7, 7};
    for (PieceKind k : {PieceKind::Pawn, PieceKind::King, PieceKind::Knight, PieceKind::Rook,
                        PieceKind::Bishop, PieceKind::Queen}) {
        CAPTURE(kind_name(k));
        CHECK(check_closure(builtin_piece_type(k), r));
    }
}

TEST_CASE("a type missing a submove fails the closure check") {
    PieceTypeDef broken;
    broken.name = "broken";
    broken.custom = [](const Location& o, const Region& reg) {
        std::vector<MoveSeq> out;
        Location b = o + Offset{1, 0}, c = o + Offset{2, 0};
        if (reg.contains(b) && reg.contains(c)) out.push_back({o, b, c});
        return out;
    };
    CHECK_FALSE(check_closure(broken, square_region(0, 3)));
}

TEST_CASE("symmetry check matches the builtin flags") {
    Region r{0, 0, 5, 5};
    CHECK(check_symmetric(builtin_piece_type(PieceKind::Rook), r));
    CHECK(check_symmetric(builtin_piece_type(PieceKind::Queen), r));
    CHECK(check_symmetric(builtin_piece_type(PieceKind::King), r));
    CHECK_FALSE(check_symmetric(builtin_piece_type(PieceKind::Pawn), r));
}

TEST_CASE("move-set subset relations") {
    Region r{0, 0, 4, 4};
    CHECK(check_subset(builtin_piece_type(PieceKind::King), builtin_piece_type(PieceKind::Queen), r));
    CHECK(check_subset(builtin_piece_type(PieceKind::Pawn), builtin_piece_type(PieceKind::Bishop), r));
    CHECK(check_subset(builtin_piece_type(PieceKind::Pawn), builtin_piece_type(PieceKind::King), r));
    CHECK(check_subset(builtin_piece_type(PieceKind::Rook), builtin_piece_type(PieceKind::Queen), r));
    CHECK_FALSE(
        check_subset(builtin_piece_type(PieceKind::King), builtin_piece_type(PieceKind::Bishop), r));
    CHECK_FALSE(
        check_subset(builtin_piece_type(PieceKind::Knight), builtin_piece_type(PieceKind::Queen), r));
}

TEST_CASE("split examples") {
    Location a{0, 0}, b{1, 0}, c{2, 0};
    MoveSeq m{a, b, c};
    auto no_interior = split_move(m, {a, c});
    REQUIRE(no_interior.size() == 1);
    CHECK(no_interior[0] == m);

    auto full = split_move(m, {a, b, c});
    REQUIRE(full.size() == 2);
    CHECK(full[0] == MoveSeq{a, b});
    CHECK(full[1] == MoveSeq{b, c});

    CHECK_THROWS(split_move(m, std::set<Location>{a, b}));
}

TEST_CASE("split pieces are contiguous submoves of the same type") {
    auto g = testsupport::rng(20240811);
    Region reg{0, 0, 9, 9};
    const PieceTypeDef& rook = builtin_piece_type(PieceKind::Rook);
    for (int trial = 0; trial < 200; ++trial) {
        // random rook move of length six
        Location origin{static_cast<std::int64_t>(g() % 4), static_cast<std::int64_t>(g() % 10)};
        MoveSeq m{origin};
        for (int i = 1; i <= 5; ++i) m.push_back(origin + Offset{i, 0});
        std::set<Location> stops{m.front(), m.back()};
        for (const auto& l : m)
            if (g() % 2) stops.insert(l);
        auto parts = split_move(m, stops);
        // concatenation reproduces the move, each part is a rook move
        std::size_t at = 0;
        for (const auto& part : parts) {
            REQUIRE(part.size() >= 2);
            for (std::size_t i = 0; i < part.size(); ++i) CHECK(part[i] == m[at + i]);
            at += part.size() - 1;
            auto from_origin = rook.enumerate(part.front(), reg);
            CHECK(std::find(from_origin.begin(), from_origin.end(), part) != from_origin.end());
        }
        CHECK(at == m.size() - 1);
    }
}
