#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/transforms.hpp"

using namespace rainbow;

namespace {

Digraph random_oriented(int n, std::mt19937_64& rng) {
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            switch (rng() % 3) {
                case 0: arcs.emplace_back(u, v); break;
                case 1: arcs.emplace_back(v, u); break;
                default: break;
            }
        }
    return Digraph(n, arcs);
}

EdgeColoredGraph random_colored(int n, int palette, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::tuple<VertexId, VertexId, ColorId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v, static_cast<ColorId>(rng() % palette));
    return EdgeColoredGraph(n, edges);
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("associated digraph picks one representative per color class") {
    // monochromatic star: one class at the center, arc to the lowest leaf
    EdgeColoredGraph star(4, {{0, 1, 5}, {0, 2, 5}, {0, 3, 5}});
    Digraph a = associated_digraph(star);
    CHECK(out_degree(a, 0) == 1);
    CHECK(a.has_arc(0, 1));

    // rainbow triangle: two classes per vertex
    EdgeColoredGraph tri(3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}});
    Digraph at = associated_digraph(tri);
    for (VertexId v = 0; v < 3; ++v) CHECK(out_degree(at, v) == 2);

    ColoredConstruction c = build_cplus(9);
    Digraph ac = associated_digraph(c.graph);
    for (VertexId v : c.parts.members(1).to_vector()) CHECK(out_degree(ac, v) == 4);
}

TEST_CASE("associated digraph out-degrees equal color degrees") {
    std::mt19937_64 rng(101);
    for (int t = 0; t < 40; ++t) {
        EdgeColoredGraph g = random_colored(3 + static_cast<int>(rng() % 7), 4, 0.6, rng);
        for (auto mode : {RepresentativeMode::LowestNeighbor, RepresentativeMode::RandomNeighbor}) {
            Digraph a = associated_digraph(g, {mode, rng()});
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                CHECK(out_degree(a, v) == color_degree(g, v));
        }
    }
}

TEST_CASE("determined colored graph colors by head") {
    Digraph single(3, {{1, 2}});
    EdgeColoredGraph det = determined_colored_graph(single);
    CHECK(det.edge_count() == 1);
    CHECK(det.edge_color(1, 2) == 2);
    CHECK(det.palette().at(2) == "v2");

    // directed triangle becomes a rainbow triangle
    Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    EdgeColoredGraph dc3 = determined_colored_graph(c3);
    CHECK(dc3.edge_color(0, 1) == 1);
    CHECK(dc3.edge_color(1, 2) == 2);
    CHECK(dc3.edge_color(0, 2) == 0);
    CHECK(count_rainbow_cycles(dc3, 3) == 1);

    CHECK_THROWS_AS(determined_colored_graph(Digraph(2, {{0, 1}, {1, 0}})), contract_error);
}

TEST_CASE("determined colored graph degree relation") {
    // deg^c(v) = out(v) + 1 when in(v) > 0, else out(v)
    std::mt19937_64 rng(112);
    for (int t = 0; t < 40; ++t) {
        Digraph d = random_oriented(3 + static_cast<int>(rng() % 7), rng);
        EdgeColoredGraph det = determined_colored_graph(d);
        for (VertexId v = 0; v < d.vertex_count(); ++v) {
            int expected = out_degree(d, v) + (in_degree(d, v) > 0 ? 1 : 0);
            CHECK(color_degree(det, v) == expected);
        }
        // round trip: associated out-degree equals the determined color degree
        Digraph back = associated_digraph(det);
        for (VertexId v = 0; v < d.vertex_count(); ++v)
            CHECK(out_degree(back, v) == color_degree(det, v));
    }
}

TEST_CASE("Li correspondence counts") {
    Digraph c3(3, {{0, 1}, {1, 2}, {2, 0}});
    LiReport r = verify_li_correspondence(c3, 3);
    CHECK(r.directed_cycles == 1);
    CHECK(r.rainbow_cycles == 1);
    CHECK(r.properly_colored_cycles == 1);
    CHECK(r.all_hold());

    auto blow = build_blowup(2, 2, 2);
    LiReport rb = verify_li_correspondence(blow.graph, 3);
    CHECK(rb.directed_cycles == 8);
    CHECK(rb.rainbow_cycles == 8);
    CHECK(rb.properly_colored_cycles == 8);

    Digraph path(4, {{0, 1}, {1, 2}, {2, 3}});
    LiReport rp = verify_li_correspondence(path, 3);
    CHECK(rp.directed_cycles == 0);
    CHECK(rp.rainbow_cycles == 0);
    CHECK(rp.properly_colored_cycles == 0);

    CHECK_THROWS_AS(verify_li_correspondence(Digraph(2, {{0, 1}, {1, 0}}), 3), contract_error);
}

TEST_CASE("directed cycles map bijectively to rainbow cycles") {
    std::mt19937_64 rng(123);
    auto check_bijection = [](const Digraph& d, int ell) {
        EdgeColoredGraph det = determined_colored_graph(d);
        auto directed = oracle::all_directed_cycles(d, ell);
        auto rainbows = oracle::rainbow_cycles(det, ell);
        // explicit bijection: each directed cycle's undirected canon form
        // must be a distinct rainbow cycle, and nothing else is rainbow
        std::set<oracle::VertexSeq> image;
        for (const auto& c : directed) image.insert(oracle::canon_undirected(c));
        CHECK(image.size() == directed.size());
        CHECK(image == rainbows);
        CHECK(rainbows == oracle::properly_colored_cycles(det, ell));
    };
    for (int t = 0; t < 60; ++t) {
        Digraph d = random_oriented(4 + static_cast<int>(rng() % 6), rng);  // up to 9
        for (int ell = 3; ell <= 6; ++ell) check_bijection(d, ell);
    }
    // push to the stated envelope: n = 10 with l = 7
    for (int t = 0; t < 3; ++t) check_bijection(random_oriented(10, rng), 7);
}

TEST_CASE("non-rainbow directed cycle bound") {
    // rainbow K4: every associated directed cycle is rainbow
    EdgeColoredGraph k4(4, {{0, 1, 0}, {0, 2, 1}, {0, 3, 2}, {1, 2, 3}, {1, 3, 4}, {2, 3, 5}});
    NonRainbowBound r = non_rainbow_bound_check(k4, {}, 3);
    CHECK(r.non_rainbow == 0);
    CHECK(r.bound == 16);
    CHECK(r.holds);

    // monochromatic K4: the associated digraph has one arc per vertex
    EdgeColoredGraph mono(4, {{0, 1, 9}, {0, 2, 9}, {0, 3, 9}, {1, 2, 9}, {1, 3, 9}, {2, 3, 9}});
    NonRainbowBound rm = non_rainbow_bound_check(mono, {}, 3);
    CHECK(rm.holds);
    CHECK(rm.non_rainbow <= 16);

    ColoredConstruction c = build_cplus(9);
    NonRainbowBound rc = non_rainbow_bound_check(c.graph, {}, 4);
    CHECK(rc.holds);
}

TEST_CASE("non-rainbow bound over random colorings") {
    std::mt19937_64 rng(134);
    for (int t = 0; t < 50; ++t) {
        EdgeColoredGraph g = random_colored(4 + static_cast<int>(rng() % 5), 3, 0.7, rng);
        for (int ell = 3; ell <= 5; ++ell) CHECK(non_rainbow_bound_check(g, {}, ell).holds);
    }
}

TEST_CASE("random policy differs but stays degree-correct") {
    ColoredConstruction c = build_matching(8);
    Digraph lowest = associated_digraph(c.graph);
    Digraph randomized = associated_digraph(
        c.graph, {RepresentativeMode::RandomNeighbor, 99});
    for (VertexId v = 0; v < 8; ++v)
        CHECK(out_degree(lowest, v) == out_degree(randomized, v));
    // deterministic given the seed
    Digraph again = associated_digraph(c.graph, {RepresentativeMode::RandomNeighbor, 99});
    CHECK(randomized == again);
}

}  // TEST_SUITE
