#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// Node-expansion budget shared by every enumeration path.  Expansions, not
// wall time, so runs are reproducible.
struct SearchBudget {
    static constexpr std::uint64_t kDefault = 200'000'000;

    std::uint64_t limit = kDefault;
    std::uint64_t used = 0;
    std::int64_t progress = 0;  // cycles seen so far, reported on exhaustion

    SearchBudget() = default;
    explicit SearchBudget(std::uint64_t lim) : limit(lim) {}

    void charge(std::uint64_t amount = 1) {
        used += amount;
        if (used > limit) throw budget_error(limit, used, progress);
    }
};

// A found cycle.  vertices is the canonical sequence: smallest vertex first,
// then (undirected case) the smaller of the two neighbors.  colors[k] is the
// color of edge {vertices[k], vertices[k+1 mod l]}; empty for digraph cycles.
struct CycleWitness {
    std::vector<VertexId> vertices;
    std::vector<ColorId> colors;
    bool canonical = false;

    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const CycleWitness&) const = default;
};

enum class ColorConstraint { None, ProperlyColored, Rainbow };

using CycleVisitor = std::function<bool(const CycleWitness&)>;  // return false to stop

// All canonical l-cycles of g satisfying the constraint, ascending
// lexicographic order, each exactly once.  l >= 3.
void enumerate_cycles(const EdgeColoredGraph& g, int length, ColorConstraint constraint,
                      SearchBudget& budget, const CycleVisitor& visit);

// All canonical directed l-cycles (consistently oriented, rotations
// identified).  l >= 2.
void enumerate_directed_cycles(const Digraph& d, int length, SearchBudget& budget,
                               const CycleVisitor& visit);

std::optional<CycleWitness> find_rainbow_cycle(const EdgeColoredGraph& g, int length,
                                               SearchBudget* budget = nullptr);
std::int64_t count_rainbow_cycles(const EdgeColoredGraph& g, int length,
                                  SearchBudget* budget = nullptr);
std::optional<CycleWitness> find_properly_colored_cycle(const EdgeColoredGraph& g, int length,
                                                        SearchBudget* budget = nullptr);
std::int64_t count_properly_colored_cycles(const EdgeColoredGraph& g, int length,
                                           SearchBudget* budget = nullptr);
std::int64_t count_cycles(const EdgeColoredGraph& g, int length, SearchBudget* budget = nullptr);

std::optional<CycleWitness> find_directed_cycle(const Digraph& d, int length,
                                                SearchBudget* budget = nullptr);
std::int64_t count_directed_cycles(const Digraph& d, int length, SearchBudget* budget = nullptr);

// Closed directed l-walk detection via a boolean matrix squaring chain, with
// witness reconstruction from the stored chain.  l >= 1.  The witness lists
// the l visited vertices; the walk returns to vertices.front().
struct ClosedWalk {
    bool exists = false;
    std::vector<VertexId> vertices;
};

ClosedWalk has_closed_walk(const Digraph& d, int length);

// --- reversal analysis of cycles in 3-partite hosts ----------------------

enum class ReversalKind { Backward, Forward };

struct ReversalProfile {
    std::vector<int> edge_types;  // type of edge {v_k, v_{k+1}} in Z_3
    std::vector<std::pair<int, ReversalKind>> reversals;  // (k, kind) for pair (e_k, e_{k+1})
    int backward = 0;
    int forward = 0;
};

// Classifies consecutive same-type edge pairs of the cycle.  Every cycle edge
// must join two distinct parts; otherwise the edge type is undefined and an
// input error is raised.
ReversalProfile reversal_profile(const CycleWitness& cycle, const TriPartition& parts);

}  // namespace rainbow
