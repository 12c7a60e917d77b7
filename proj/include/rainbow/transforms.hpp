#pragma once

#include <cstdint>

#include "rainbow/graph.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

// Picks the representative of each color class at a vertex.  The paper allows
// any system of representatives; lowest-neighbor makes the digraph unique and
// reproducible.  The randomized mode exists for stress exploration only.
enum class RepresentativeMode { LowestNeighbor, RandomNeighbor };

struct RepresentativePolicy {
    RepresentativeMode mode = RepresentativeMode::LowestNeighbor;
    std::uint64_t seed = 0;  // RandomNeighbor only
};

// One out-arc per color class at every vertex, so out_degree(v) equals the
// color degree of v.
Digraph associated_digraph(const EdgeColoredGraph& g, const RepresentativePolicy& policy = {});

// Edge {v,w} for every arc (v,w), colored by the head w.  Requires an
// oriented input; otherwise the result would be a multigraph.
EdgeColoredGraph determined_colored_graph(const Digraph& d);

struct LiReport {
    int length = 0;
    std::int64_t directed_cycles = 0;
    std::int64_t rainbow_cycles = 0;
    std::int64_t properly_colored_cycles = 0;
    bool directed_at_most_rainbow = false;
    bool rainbow_equals_properly_colored = false;

    bool all_hold() const { return directed_at_most_rainbow && rainbow_equals_properly_colored; }
};

// Counts directed l-cycles of d and rainbow / properly colored l-cycles of
// the determined colored graph, each side enumerated independently.
LiReport verify_li_correspondence(const Digraph& d, int length, SearchBudget* budget = nullptr);

struct NonRainbowBound {
    int length = 0;
    std::int64_t directed_cycles = 0;
    std::int64_t non_rainbow = 0;
    unsigned long long bound = 0;  // n^(l-1), saturated
    bool holds = false;
};

// Counts directed l-cycles of the associated digraph whose vertex sequence is
// not a rainbow cycle in (G,c); checks the n^(l-1) bound.
NonRainbowBound non_rainbow_bound_check(const EdgeColoredGraph& g,
                                        const RepresentativePolicy& policy, int length,
                                        SearchBudget* budget = nullptr);

}  // namespace rainbow
