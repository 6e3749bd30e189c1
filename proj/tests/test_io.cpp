#include <catch2/catch_amalgamated.hpp>

#include "geoplan/io.hpp"
#include "helpers.hpp"

using namespace geoplan;
using testutil::mg;

TEST_CASE("multigraph text format") {
    Multigraph g = parse_multigraph("2 3\n0 0\n0 1\n1 1\n");
    CHECK(g.vertex_count == 2);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}});
    CHECK(format_multigraph(g) == "2 3\n0 0\n0 1\n1 1\n");
    CHECK(parse_multigraph(format_multigraph(g)).edges == g.edges);

    CHECK_THROWS_AS(parse_multigraph(""), parse_error);
    CHECK_THROWS_AS(parse_multigraph("2 1\n"), parse_error);
    CHECK_THROWS_AS(parse_multigraph("2 1\n0 2\n"), parse_error);
    try {
        parse_multigraph("2 1\n\n0 5\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("bimatrix text format") {
    Bimatrix b = parse_bimatrix("20|110\n11|020\n02|011\n");
    CHECK(b.edge_count() == 3);
    CHECK(b.n() == 2);
    CHECK(b.m() == 3);
    CHECK(format_bimatrix(b) == "20|110\n11|020\n02|011\n");
    // Whitespace inside rows is tolerated.
    CHECK(parse_bimatrix("2 0|1 1 0\n11|020\n02|011\n").g_rows == b.g_rows);

    CHECK_THROWS_AS(parse_bimatrix(""), parse_error);
    CHECK_THROWS_AS(parse_bimatrix("20 110\n"), parse_error);  // no separator
    CHECK_THROWS_AS(parse_bimatrix("20|130\n"), parse_error);  // bad digit
    CHECK_THROWS_AS(parse_bimatrix("20|100\n"), parse_error);  // row sum
    CHECK_THROWS_AS(parse_bimatrix("20|110\n1|020\n"), parse_error);  // ragged
    try {
        parse_bimatrix("20|110\n11|010\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    }
}

TEST_CASE("degree lists with power shorthand") {
    CHECK(parse_degree_list("5,3,2^4").entries ==
          std::vector<int>{5, 3, 2, 2, 2, 2});
    CHECK(parse_degree_list("4,4").entries == std::vector<int>{4, 4});
    CHECK(parse_degree_list("2^3").entries == std::vector<int>{2, 2, 2});
    CHECK(format_degree_list(DegreeSequence({5, 3, 2, 2, 2, 2})) == "5,3,2^4");
    CHECK(format_degree_list(DegreeSequence({4, 4})) == "4^2");
    CHECK(format_degree_list(DegreeSequence({2})) == "2");
    for (const char* text : {"5,3,2^4", "7,5", "3^2,1^2"}) {
        DegreeSequence d = parse_degree_list(text);
        CHECK(parse_degree_list(format_degree_list(d)) == d);
    }

    CHECK_THROWS_AS(parse_degree_list(""), parse_error);
    CHECK_THROWS_AS(parse_degree_list("a,b"), parse_error);
    CHECK_THROWS_AS(parse_degree_list("3,2"), parse_error);   // odd sum
    CHECK_THROWS_AS(parse_degree_list("2,0"), parse_error);   // nonpositive
    CHECK_THROWS_AS(parse_degree_list("2^-1"), parse_error);
}

TEST_CASE("partition text format") {
    Multigraph g = mg(2, {{0, 1}, {0, 1}});
    EulerianPartition part = parse_partition("0: 1 1\n1: 2 2\n", g);
    CHECK(part.color == std::vector<int>{0, 0, 1, 1});
    CHECK(part.color_count == 2);
    CHECK(format_partition(part) == "0: 1 1\n1: 2 2\n");

    EulerianPartition back =
        parse_partition(format_partition(part), g);
    CHECK(back.color == part.color);

    CHECK_THROWS_AS(parse_partition("0: 1 1\n", g), parse_error);  // missing edge
    CHECK_THROWS_AS(parse_partition("0: 1 1\n0: 1 1\n", g), parse_error);
    CHECK_THROWS_AS(parse_partition("0: 1 1\n1: 0 1\n", g), parse_error);
    CHECK_THROWS_AS(parse_partition("0 1 1\n1 2 2\n", g), parse_error);
}

TEST_CASE("word text format") {
    WordRepresentation w = parse_word("a b c ~a ~b\nc d e e ~d\n");
    REQUIRE(w.polygons.size() == 2);
    CHECK(w.polygons[0].size() == 5);
    CHECK(w.polygons[0][3] == Letter{0, true});
    CHECK(w.side_count() == 10);
    CHECK(w.edge_count() == 5);
    CHECK(format_word(w) == "a b c ~a ~b\nc d e e ~d\n");
    CHECK(parse_word(format_word(w)).polygons == w.polygons);

    // Numeric letters work and are used beyond the alphabet.
    WordRepresentation big = parse_word("0 ~0 30 30\n");
    CHECK(big.polygons[0][2] == Letter{30, false});
    CHECK(format_word(big) == "0 ~0 30 30\n");

    CHECK_THROWS_AS(parse_word(""), parse_error);
    CHECK_THROWS_AS(parse_word("a b !\n"), parse_error);
    CHECK_THROWS_AS(parse_word("-1 2\n"), parse_error);
}
