#include <doctest.h>

#include "solochess/hero_solver.hpp"
#include "solochess/io.hpp"
#include "solochess/oracle.hpp"
#include "support.hpp"

using namespace solochess;

namespace {

Board hero_board(PieceKind hero, Location hero_at, PieceKind villain,
                 std::initializer_list<Location> villains) {
    Board b;
    b.put(hero_at, {hero, true});
    for (const Location& l : villains) b.put(l, {villain, false});
    return b;
}

}  // namespace

TEST_CASE("icg with blockers") {
    Board b;
    b.put({0, 0}, {PieceKind::Queen, false});
    b.put({1, 0}, {PieceKind::Queen, false});
    b.put({2, 0}, {PieceKind::Queen, false});
    MoveTable table(b, {PieceKind::Queen});

    CaptureGraph blocked = icg_vb(table, PieceKind::Queen, {{0, 0}, {2, 0}}, {{1, 0}});
    CHECK(blocked.edge_count() == 0);

    CaptureGraph open = icg_vb(table, PieceKind::Queen, {{0, 0}, {2, 0}}, {});
    CHECK(open.edge_count() == 2);  // the middle square counts as vacated

    CHECK_THROWS(icg_vb(table, PieceKind::Queen, {{0, 0}, {1, 0}}, {{1, 0}}));
}

TEST_CASE("icg edges persist when vertices grow and blockers shrink") {
    auto g = testsupport::rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        Board b = testsupport::random_board(g, 4, 4, PieceKind::Queen,
                                            3 + static_cast<int>(g() % 5));
        MoveTable table(b, {PieceKind::Queen});
        int n = table.size();
        std::vector<bool> verts(n, false), blockers(n, false);
        for (int i = 0; i < n; ++i) {
            switch (g() % 3) {
                case 0: verts[i] = true; break;
                case 1: blockers[i] = true; break;
                default: break;
            }
        }
        std::vector<bool> verts_big = verts, blockers_small(n, false);
        for (int i = 0; i < n; ++i)
            if (!blockers[i]) verts_big[i] = verts[i] || (g() % 2 == 0);
        auto small = icg_vb(table, PieceKind::Queen, verts, blockers);
        auto big = icg_vb(table, PieceKind::Queen, verts_big, blockers_small);
        // walks persist when vertices grow and blockers shrink: an edge may
        // split at squares that joined the vertex set, but never vanish
        auto reach_from = [n](const std::vector<std::vector<int>>& adj, int src) {
            std::vector<char> seen(n, 0);
            std::vector<int> stack{src};
            seen[src] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj[u])
                    if (!seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            return seen;
        };
        for (int v = 0; v < n; ++v) {
            if (!verts[v]) continue;
            auto small_reach = reach_from(small, v);
            auto big_reach = reach_from(big, v);
            for (int w = 0; w < n; ++w)
                if (small_reach[w]) CHECK(big_reach[w]);
        }
    }
}

TEST_CASE("hero path recognition") {
    Board lone = hero_board(PieceKind::King, {0, 0}, PieceKind::Queen, {});
    CHECK(is_hero_path(lone, {{0, 0}}));

    Board b = hero_board(PieceKind::King, {0, 0}, PieceKind::Queen, {{1, 1}, {2, 2}});
    CHECK(is_hero_path(b, {{0, 0}, {1, 1}, {2, 2}}));
    CHECK_FALSE(is_hero_path(b, {{0, 0}, {2, 2}}));         // destination not adjacent
    CHECK_FALSE(is_hero_path(b, {{0, 0}, {1, 1}, {0, 0}})); // revisits an empty square

    // a rook hero may pass back over the squares it has already emptied
    Board r = hero_board(PieceKind::Rook, {2, 0}, PieceKind::Queen,
                         {{1, 0}, {0, 0}, {3, 0}});
    CHECK(is_hero_path(r, {{2, 0}, {1, 0}, {0, 0}, {3, 0}}));
    // ...but not while a villain still blocks the way
    CHECK_FALSE(is_hero_path(r, {{2, 0}, {3, 0}, {0, 0}}));
}

TEST_CASE("hero solver examples") {
    Board lone = hero_board(PieceKind::King, {0, 0}, PieceKind::Queen, {});
    auto sol = solve_hero_villain(lone, PieceKind::King, PieceKind::Queen);
    REQUIRE(sol.has_value());
    CHECK(sol->moves.empty());

    Board diag = hero_board(PieceKind::King, {0, 0}, PieceKind::Queen, {{1, 1}, {2, 2}});
    auto sol2 = solve_hero_villain(diag, PieceKind::King, PieceKind::Queen);
    REQUIRE(sol2.has_value());
    CHECK(verify_solution(diag, *sol2));
    CHECK(sol2->moves.size() == 2);

    Board stranded = hero_board(PieceKind::Pawn, {0, 3}, PieceKind::Bishop, {{3, 0}});
    CHECK_FALSE(solve_hero_villain(stranded, PieceKind::Pawn, PieceKind::Bishop).has_value());
}

TEST_CASE("hero solver precondition errors are distinct") {
    Board b = hero_board(PieceKind::King, {0, 0}, PieceKind::Pawn, {{1, 1}});
    CHECK_THROWS_WITH_AS(solve_hero_villain(b, PieceKind::King, PieceKind::Pawn).has_value(),
                         "villain type must be symmetric", HeroSolveError);

    Board k = hero_board(PieceKind::King, {0, 0}, PieceKind::Knight, {{1, 2}});
    CHECK_THROWS_WITH_AS(solve_hero_villain(k, PieceKind::King, PieceKind::Knight).has_value(),
                         "hero moves must be a subset of villain moves", HeroSolveError);

    Board none;
    none.put({0, 0}, {PieceKind::Queen, false});
    none.put({1, 1}, {PieceKind::Queen, false});
    CHECK_THROWS_AS(solve_hero_villain(none, PieceKind::Queen, PieceKind::Queen).has_value(),
                    HeroSolveError);
}

TEST_CASE("villain chains funnel into the hero path") {
    // queens funnel along a file into the square the hero steps onto
    Board b = hero_board(PieceKind::King, {0, 0}, PieceKind::Queen,
                         {{0, 1}, {0, 2}, {0, 3}});
    auto sol = solve_hero_villain(b, PieceKind::King, PieceKind::Queen);
    REQUIRE(sol.has_value());
    CHECK(verify_solution(b, *sol));
    CHECK(sol->moves.size() == 3);
    // hero path stays short: the villains come to it
    CHECK(sol->hero_path.size() <= 3);
}

TEST_CASE("hero solver agrees with the oracle with all lemma checks on") {
    auto g = testsupport::rng(606);
    struct Pair {
        PieceKind hero, villain;
    };
    const Pair pairs[] = {{PieceKind::King, PieceKind::Queen},
                          {PieceKind::Pawn, PieceKind::Queen},
                          {PieceKind::Pawn, PieceKind::Bishop},
                          {PieceKind::Rook, PieceKind::Queen},
                          {PieceKind::Bishop, PieceKind::Queen}};
    HeroSolveOptions opt;
    opt.check_lemmas = true;
    for (const Pair& pr : pairs) {
        for (int trial = 0; trial < 60; ++trial) {
            int n = 1 + static_cast<int>(g() % 6);
            Board b = testsupport::random_board(g, 4, 4, pr.villain, n, pr.hero);
            HeroSolveStats stats;
            auto fast = solve_hero_villain(b, pr.hero, pr.villain, opt, &stats);
            auto slow = solve_exhaustive(b);
            CAPTURE(serialize_board_text(b));
            REQUIRE(fast.has_value() == slow.has_value());
            if (fast) {
                CHECK(verify_solution(b, *fast));
                CHECK(fast->moves.size() == b.size() - 1);
            }
        }
    }
}
