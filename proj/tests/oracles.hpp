#pragma once

// Brute-force reference implementations, deliberately independent of the
// library's search code: plain permutation filters and dynamic programming.
// Only usable at small n.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "rainbow/graph.hpp"

namespace oracle {

using rainbow::Bitset;
using rainbow::ColorId;
using rainbow::Digraph;
using rainbow::EdgeColoredGraph;
using rainbow::TriPartition;
using rainbow::VertexId;

using VertexSeq = std::vector<VertexId>;

// Canonical form of an undirected cycle: smallest rotation over both
// directions.
inline VertexSeq canon_undirected(VertexSeq seq) {
    VertexSeq best;
    const int l = static_cast<int>(seq.size());
    for (int dir = 0; dir < 2; ++dir) {
        for (int r = 0; r < l; ++r) {
            VertexSeq rot(seq.begin() + r, seq.end());
            rot.insert(rot.end(), seq.begin(), seq.begin() + r);
            if (best.empty() || rot < best) best = rot;
        }
        std::reverse(seq.begin(), seq.end());
    }
    return best;
}

inline VertexSeq canon_directed(const VertexSeq& seq) {
    VertexSeq best;
    const int l = static_cast<int>(seq.size());
    for (int r = 0; r < l; ++r) {
        VertexSeq rot(seq.begin() + r, seq.end());
        rot.insert(rot.end(), seq.begin(), seq.begin() + r);
        if (best.empty() || rot < best) best = rot;
    }
    return best;
}

// All l-cycles of g as canonical vertex sequences, by filtering every ordered
// tuple of distinct vertices.
std::set<VertexSeq> all_cycles(const EdgeColoredGraph& g, int length);
std::set<VertexSeq> all_directed_cycles(const Digraph& d, int length);

bool is_rainbow(const EdgeColoredGraph& g, const VertexSeq& cycle);
bool is_properly_colored(const EdgeColoredGraph& g, const VertexSeq& cycle);

std::set<VertexSeq> rainbow_cycles(const EdgeColoredGraph& g, int length);
std::set<VertexSeq> properly_colored_cycles(const EdgeColoredGraph& g, int length);

// Closed l-walk existence by length-indexed reachability DP.
bool has_closed_walk(const Digraph& d, int length);

// 3^n scan for a lambda-extremal partition (lambda as p/q), written without
// the library's incremental counting.
std::optional<std::vector<std::uint8_t>> extremal_partition_scan(const Digraph& d,
                                                                 std::int64_t lambda_num,
                                                                 std::int64_t lambda_den);

// Peels in-degree-zero vertices in the order dictated by `priority` (lower
// value peeled first among the currently deletable).
std::vector<VertexId> peel_core(const Digraph& d, const std::vector<int>& priority);

}  // namespace oracle
