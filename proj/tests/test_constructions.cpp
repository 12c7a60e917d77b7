#include <doctest.h>

#include "oracles.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/io.hpp"
#include "rainbow/search.hpp"
#include "rainbow/transforms.hpp"

using namespace rainbow;

TEST_SUITE("constructions") {

TEST_CASE("cplus degrees") {
    ColoredConstruction c = build_cplus(9);
    CHECK(min_color_degree(c.graph) == 4);  // m + 1
    for (VertexId v : c.parts.members(1).to_vector()) CHECK(color_degree(c.graph, v) == 4);
    // fixed color toward the previous part
    for (VertexId v : c.parts.members(0).to_vector())
        CHECK(color_degree_into(c.graph, v, c.parts.members(2)) == 1);
    CHECK_THROWS_AS(build_cplus(2), input_error);

    // m+1 minimum across the residues
    CHECK(min_color_degree(build_cplus(10).graph) == 4);
    CHECK(min_color_degree(build_cplus(12).graph) == 5);
}

TEST_CASE("cplus avoids rainbow cycles off the 0 residue") {
    ColoredConstruction c = build_cplus(9);
    for (int ell : {4, 5, 7, 8}) CHECK(count_rainbow_cycles(c.graph, ell) == 0);
    CHECK(count_rainbow_cycles(c.graph, 6) > 0);
}

TEST_CASE("matching construction") {
    ColoredConstruction c = build_matching(8);
    const int m = 2;
    for (VertexId v = 0; v < 8; ++v) CHECK(color_degree(c.graph, v) == m + 2);

    REQUIRE(c.star.has_value());
    std::int64_t stars = 0;
    for (const auto& e : c.graph.edges())
        if (e.color == *c.star) ++stars;
    CHECK(stars == m + 1);
    CHECK(c.matching.size() == static_cast<std::size_t>(m + 1));
    for (auto [x, y] : c.matching) CHECK(c.graph.edge_color(x, y) == *c.star);

    CHECK(count_rainbow_cycles(c.graph, 4) == 0);
    CHECK_THROWS_AS(build_matching(9), input_error);
    CHECK_THROWS_AS(build_matching(5), input_error);

    ColoredConstruction c11 = build_matching(11);
    for (VertexId v = 0; v < 11; ++v) CHECK(color_degree(c11.graph, v) == 5);
}

TEST_CASE("hard construction") {
    ColoredConstruction c = build_hard(8);
    const int m = 2;
    for (VertexId v = 0; v < 8; ++v) CHECK(color_degree(c.graph, v) == m + 2);

    // differs from the complete 3-partite graph in 3m = n-2 pairs
    std::int64_t diff = 0;
    for (VertexId a = 0; a < 8; ++a)
        for (VertexId b = a + 1; b < 8; ++b) {
            bool in_k = c.parts.part_of(a) != c.parts.part_of(b);
            if (in_k != c.graph.has_edge(a, b)) ++diff;
        }
    CHECK(diff == 3 * m);

    CHECK(count_rainbow_cycles(c.graph, 5) == 0);
    CHECK_THROWS_AS(build_hard(9), input_error);

    REQUIRE(c.x.has_value());
    REQUIRE(c.y.has_value());
    CHECK(c.parts.part_of(*c.x) == 0);
    CHECK(c.parts.part_of(*c.y) == 1);
    // y lost its edges to U0
    for (VertexId v : c.parts.members(0).to_vector())
        if (v != *c.x) CHECK_FALSE(c.graph.has_edge(*c.y, v));
    CHECK(c.graph.has_edge(*c.x, *c.y));
}

TEST_CASE("blow-up construction") {
    auto b = build_blowup(3, 3, 2);
    CHECK(is_oriented(b.graph));
    CHECK(min_out_degree(b.graph) == 2);
    CHECK(count_directed_cycles(b.graph, 3) == 18);  // 3*3*2
    CHECK(count_directed_cycles(b.graph, 4) == 0);
    CHECK_THROWS_AS(build_blowup(0, 1, 1), input_error);

    auto b222 = build_blowup(2, 2, 2);
    CHECK(count_directed_cycles(b222.graph, 3) == 8);
    for (int ell : {4, 5, 7, 8}) CHECK(count_directed_cycles(b222.graph, ell) == 0);
}

TEST_CASE("appendix digraphs") {
    auto g1 = build_appendix_g1(2, 2, 2);
    auto g2 = build_appendix_g2(2, 2, 2);
    CHECK(is_oriented(g1.graph));
    CHECK(is_oriented(g2.graph));
    CHECK(g1.graph.vertex_count() == 8);

    CHECK(count_directed_cycles(g1.graph, 5) == 0);
    CHECK(count_directed_cycles(g1.graph, 8) == 0);
    CHECK(count_directed_cycles(g2.graph, 5) == 0);
    CHECK(count_directed_cycles(g2.graph, 8) == 0);
    CHECK(count_directed_cycles(g1.graph, 3) > 0);
    CHECK(count_directed_cycles(g2.graph, 3) > 0);

    // arc families as listed: U0 x U1 u ... plus the x/y attachments
    REQUIRE(g1.x.has_value());
    const VertexId x1 = *g1.x, y1 = *g1.y;
    CHECK(g1.graph.has_arc(x1, y1));
    for (VertexId u : g1.parts.members(2).to_vector())
        if (u != x1 && u != y1) {
            CHECK(g1.graph.has_arc(u, x1));
            CHECK(g1.graph.has_arc(y1, u));
        }
    const VertexId x2 = *g2.x, y2 = *g2.y;
    CHECK(g2.graph.has_arc(y2, x2));
}

TEST_CASE("canonical coloring") {
    TriPartition parts = TriPartition::index_blocks(9);
    EdgeColoredGraph identity = build_canonical(parts);
    CHECK(identity == build_cplus(9).graph);

    for (int i = 0; i < 3; ++i) {
        Bitset next = parts.members((i + 1) % 3), prev = parts.members((i + 2) % 3);
        for (VertexId v : parts.members(i).to_vector()) {
            CHECK(color_degree_into(identity, v, next) == parts.part_size((i + 1) % 3));
            CHECK(color_degree_into(identity, v, prev) == 1);
        }
    }

    // shifted color names still avoid rainbow C4 (the coloring pattern, not
    // the names, carries the argument)
    std::vector<ColorId> shifted(9);
    for (int v = 0; v < 9; ++v) shifted[v] = 100 + v;
    EdgeColoredGraph other = build_canonical(parts, shifted);
    CHECK(count_rainbow_cycles(other, 4) == 0);

    // non-injective choice within a part is rejected
    std::vector<ColorId> clash(9, 0);
    CHECK_THROWS_AS(build_canonical(parts, clash), input_error);
}

TEST_CASE("constructions are deterministic") {
    CHECK(write_json(build_cplus(10).graph) == write_json(build_cplus(10).graph));
    CHECK(write_json(build_matching(11).graph) == write_json(build_matching(11).graph));
    CHECK(write_json(build_hard(8).graph) == write_json(build_hard(8).graph));
    CHECK(write_text(build_appendix_g1(2, 2, 2).graph) ==
          write_text(build_appendix_g1(2, 2, 2).graph));
}

TEST_CASE("checklists pass on the paper instances") {
    SearchBudget budget;
    CHECK(verify_construction({"cplus", 9, {}}, {4, 5, 6, 7, 8}, budget).all_passed());
    CHECK(verify_construction({"matching", 8, {}}, {4, 7}, budget).all_passed());
    CHECK(verify_construction({"hard", 8, {}}, {5, 8}, budget).all_passed());
    CHECK(verify_construction({"blowup", 0, {2, 2, 2}}, {3, 4, 5, 6, 7, 8}, budget).all_passed());
    CHECK(verify_construction({"appendix-g1", 0, {2, 2, 2}}, {5, 8}, budget).all_passed());
    CHECK(verify_construction({"appendix-g2", 0, {2, 2, 2}}, {5, 8}, budget).all_passed());
    CHECK(verify_construction({"canonical", 9, {}}, {4, 5}, budget).all_passed());
    CHECK_THROWS_AS(verify_construction({"nonsense", 9, {}}, {4}, budget), input_error);
}

TEST_CASE("appendix union check") {
    AppendixUnionReport r = appendix_union_check(8);
    CHECK(r.union_identity);
    CHECK(r.symmetric_difference_all_star);
    CHECK(r.g1_isomorphic);
    CHECK(r.g2_isomorphic);
    CHECK(r.all_hold());
    CHECK_THROWS_AS(appendix_union_check(9), input_error);

    AppendixUnionReport r11 = appendix_union_check(11);
    CHECK(r11.all_hold());
}

TEST_CASE("determined appendix digraphs are simple colored graphs") {
    for (int s = 1; s <= 2; ++s) {
        EdgeColoredGraph d1 = determined_colored_graph(build_appendix_g1(s, s, s).graph);
        EdgeColoredGraph d2 = determined_colored_graph(build_appendix_g2(s, s, s).graph);
        CHECK(d1.edge_count() == build_appendix_g1(s, s, s).graph.arc_count());
        CHECK(d2.edge_count() == build_appendix_g2(s, s, s).graph.arc_count());
    }
}

}  // TEST_SUITE
