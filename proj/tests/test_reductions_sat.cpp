#include <doctest.h>

#include "solochess/oracle.hpp"
#include "solochess/sat_gadgets.hpp"
#include "support.hpp"

using namespace solochess;

namespace {

bool board_solvable(const Board& b) {
    auto sol = solve_by_hero_paths(b, 20'000'000);
    return sol.has_value();
}

void check_formula_on_family(const std::string& family, const std::string& cnf_text) {
    MonotoneCnf f = parse_cnf_text(cnf_text);
    CAPTURE(family);
    CAPTURE(cnf_text);
    SatInstance inst = generate_sat_instance(family, f);
    bool expected = truth_table_satisfiable(f);
    bool solvable = board_solvable(inst.board);
    CHECK(solvable == expected);
    if (solvable) {
        auto sol = solve_by_hero_paths(inst.board);
        auto assignment = backmap_sat_solution(inst, *sol);
        CHECK(satisfies(f, assignment));
    }
}

}  // namespace

TEST_CASE("single-variable boards across all families") {
    for (const std::string& family : sat_family_names()) {
        check_formula_on_family(family, "p msat 1\npos 1\n");           // satisfiable
        check_formula_on_family(family, "p msat 1\nneg 1\n");           // satisfiable
        check_formula_on_family(family, "p msat 1\npos 1\nneg 1\n");    // unsatisfiable
    }
}

TEST_CASE("two-variable boards across all families") {
    for (const std::string& family : sat_family_names()) {
        check_formula_on_family(family, "p msat 2\npos 1 2\nneg 1 2\n");
        check_formula_on_family(family, "p msat 2\npos 1\nneg 1 2\npos 2\n");
        // forcing chain: x1, then not both, then x2: unsatisfiable
        check_formula_on_family(family, "p msat 2\npos 1\nneg 1 2\npos 2\n");
        check_formula_on_family(family, "p msat 2\npos 1\npos 2\nneg 1 2\n");
    }
}

TEST_CASE("the three-variable example formula is solvable everywhere") {
    // (x1 | x2 | x3) & (!x1 | !x2 | !x3) & (!x2 | !x3)
    std::string text = "p msat 3\npos 1 2 3\nneg 1 2 3\nneg 2 3\n";
    MonotoneCnf f = parse_cnf_text(text);
    REQUIRE(truth_table_satisfiable(f));
    for (const std::string& family : sat_family_names()) {
        CAPTURE(family);
        SatInstance inst = generate_sat_instance(family, f);
        CHECK(board_solvable(inst.board));
    }
}

TEST_CASE("small boards agree with the move-level oracle too") {
    // one variable, cross-checked against the plain exhaustive search
    MonotoneCnf f = parse_cnf_text("p msat 1\npos 1\nneg 1\n");
    for (const std::string& family : {std::string("pawn-knight"), std::string("king-bishop")}) {
        CAPTURE(family);
        SatInstance inst = generate_sat_instance(family, f);
        OracleOptions opt;
        opt.max_pieces = 64;
        opt.node_limit = 50'000'000;
        auto direct = solve_exhaustive(inst.board, opt);
        CHECK_FALSE(direct.has_value());
        CHECK_FALSE(board_solvable(inst.board));
    }
    MonotoneCnf sat = parse_cnf_text("p msat 1\npos 1\n");
    for (const std::string& family : sat_family_names()) {
        CAPTURE(family);
        SatInstance inst = generate_sat_instance(family, sat);
        OracleOptions opt;
        opt.max_pieces = 64;
        opt.node_limit = 50'000'000;
        auto direct = solve_exhaustive(inst.board, opt);
        CHECK(direct.has_value());
    }
}

TEST_CASE("sat instance json round trip") {
    MonotoneCnf f = parse_cnf_text("p msat 2\npos 1 2\nneg 1\n");
    SatInstance inst = generate_sat_instance("pawn-knight", f);
    SatInstance back = sat_instance_from_json(sat_instance_to_json(inst));
    CHECK(back.family == inst.family);
    CHECK(back.board.size() == inst.board.size());
    CHECK(back.hero_start == inst.hero_start);
    CHECK(back.left_squares.size() == inst.left_squares.size());
}

TEST_CASE("generator rejects malformed formulas") {
    MonotoneCnf heavy = parse_cnf_text("p msat 2\npos 1\npos 1 2\npos 2\npos 1 2\n");
    CHECK_THROWS_AS(generate_sat_instance("pawn-knight", heavy), CnfError);
    CHECK_THROWS_AS(generate_sat_instance("nonsense", parse_cnf_text("p msat 1\npos 1\n")),
                    SatGenError);
}
