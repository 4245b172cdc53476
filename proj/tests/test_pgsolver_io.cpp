#include <random>
#include <string>

#include "doctest.h"
#include "pg/families.hpp"
#include "pg/pgsolver_io.hpp"

using namespace pg;

TEST_CASE("parse a minimal game") {
    ParityGame g = parse_pgsolver("parity 1; 0 0 0 0;");
    REQUIRE(g.num_vertices() == 1);
    CHECK(g.owner(0) == Player::even);
    CHECK(g.priority(0) == 0);
    CHECK(g.successors(0)[0] == 0);
}

TEST_CASE("header is optional") {
    CHECK(parse_pgsolver("0 0 0 0;") == parse_pgsolver("parity 0;\n0 0 0 0;"));
}

TEST_CASE("records may carry names and arrive out of order") {
    ParityGame g = parse_pgsolver(
        "parity 2;\n"
        "2 5 1 0 \"third vertex\";\n"
        "0 2 0 1,2;\n"
        "1 3 0 0;\n");
    REQUIRE(g.num_vertices() == 3);
    CHECK(g.owner(2) == Player::odd);
    CHECK(g.priority(2) == 5);
    CHECK(g.num_edges() == 4);
}

TEST_CASE("canonical form of the small solitaire game") {
    std::string text = write_pgsolver(gen_solitaire(1));
    CHECK(text ==
          "parity 2;\n"
          "0 2 0 0;\n"
          "1 3 0 0;\n"
          "2 1 0 1,2;\n");
    // Writing is a fixpoint on canonical text.
    CHECK(write_pgsolver(parse_pgsolver(text)) == text);
}

TEST_CASE("round-trip on the families") {
    for (int n = 1; n <= 50; n++) {
        for (Family family :
             {Family::weak, Family::solitaire, Family::solitaire_strong, Family::whitegame}) {
            ParityGame g = generate(FamilySpec{family, n, 0});
            CHECK(parse_pgsolver(write_pgsolver(g)) == g);
        }
    }
}

TEST_CASE("round-trip on random games") {
    std::mt19937_64 rng(89);
    for (int round = 0; round < 200; round++) {
        ParityGame g = gen_random(FamilySpec{Family::random, 1 + int(rng() % 40), rng()});
        CHECK(parse_pgsolver(write_pgsolver(g)) == g);
    }
}

TEST_CASE("writer rejects the empty game") {
    CHECK_THROWS_AS(write_pgsolver(ParityGame()), EmptyGame);
}

TEST_CASE("malformed inputs raise their designated errors") {
    // Empty successor list.
    CHECK_THROWS_AS(parse_pgsolver("0 0 0;"), TotalityError);
    CHECK_THROWS_AS(parse_pgsolver("parity 0; 0 7 1 \"stuck\";"), TotalityError);

    // Bad owner token.
    CHECK_THROWS_AS(parse_pgsolver("0 0 2 0;"), ParseError);

    // Dangling successor id.
    CHECK_THROWS_AS(parse_pgsolver("0 0 0 1;"), DanglingEdge);

    // Structural noise.
    CHECK_THROWS_AS(parse_pgsolver(""), ParseError);
    CHECK_THROWS_AS(parse_pgsolver("parity;"), ParseError);
    CHECK_THROWS_AS(parse_pgsolver("parity 1"), ParseError);
    CHECK_THROWS_AS(parse_pgsolver("0 0 0 0"), ParseError);
    CHECK_THROWS_AS(parse_pgsolver("0 0 0 0,;"), ParseError);
    CHECK_THROWS_AS(parse_pgsolver("0 0 0 0; 0 1 1 0;"), ParseError);
    CHECK_THROWS_AS(parse_pgsolver("0 0 0 0; 2 0 0 2;"), ParseError);
    CHECK_THROWS_AS(parse_pgsolver("hello"), ParseError);
    CHECK_THROWS_AS(parse_pgsolver("0 0 0 0 \"unterminated;"), ParseError);
    CHECK_THROWS_AS(parse_pgsolver("-1 0 0 0;"), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_pgsolver("parity 3;\n0 0 0 1;\n1 0 3 0;\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
}
